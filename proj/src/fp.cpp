/*
   Copyright 2026 The sympair Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "fp.hpp"

namespace sympair {

namespace {

void check_same_field(Fp a, Fp b) {
    if (a.p != b.p) fail(Errc::modulus_mismatch, "field elements have different moduli");
}

}  // namespace

bool is_odd_prime(i64 p) {
    if (p < 3 || p % 2 == 0) return false;
    for (i64 d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

Fp::Fp(i64 value, i64 modulus) {
    if (!is_odd_prime(modulus)) fail(Errc::invalid_argument, "modulus must be an odd prime");
    p = modulus;
    v = value % p;
    if (v < 0) v += p;
}

Fp operator+(Fp a, Fp b) {
    check_same_field(a, b);
    i64 s = a.v + b.v;
    if (s >= a.p) s -= a.p;
    return Fp{s, a.p};
}

Fp operator-(Fp a, Fp b) {
    check_same_field(a, b);
    i64 s = a.v - b.v;
    if (s < 0) s += a.p;
    return Fp{s, a.p};
}

Fp operator*(Fp a, Fp b) {
    check_same_field(a, b);
    return Fp{a.v * b.v % a.p, a.p};  // p fits a machine word; product fits i64
}

Fp operator-(Fp a) { return Fp{a.v == 0 ? 0 : a.p - a.v, a.p}; }

bool operator==(Fp a, Fp b) { return a.p == b.p && a.v == b.v; }
bool operator!=(Fp a, Fp b) { return !(a == b); }

Fp pow(Fp a, i64 e) {
    if (e < 0) fail(Errc::invalid_argument, "negative exponent");
    Fp r{1, a.p};
    Fp base = a;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Fp inv(Fp a) {
    if (a.is_zero()) fail(Errc::division_by_zero, "inverse of zero");
    return pow(a, a.p - 2);
}

i64 element_order(Fp a) {
    if (a.is_zero()) fail(Errc::invalid_argument, "order of zero is undefined");
    i64 m = 1;
    Fp x = a;
    while (x.v != 1) {
        x = x * a;
        ++m;
    }
    return m;
}

Fp primitive_root_of_unity(i64 p, i64 l) {
    if (!is_odd_prime(p)) fail(Errc::invalid_argument, "modulus must be an odd prime");
    if (l < 1) fail(Errc::invalid_argument, "root order must be positive");
    if ((p - 1) % l != 0)
        fail(Errc::no_such_root,
             "no element of order " + std::to_string(l) + " in F_" + std::to_string(p) +
                 " (l does not divide p-1)");
    for (i64 a = 1; a < p; ++a) {
        Fp x{a, p};
        if (element_order(x) == l) return x;
    }
    fail(Errc::internal, "cyclic group F_p* has an element of every order dividing p-1");
}

std::string to_string(Fp a) { return std::to_string(a.v); }

}  // namespace sympair
