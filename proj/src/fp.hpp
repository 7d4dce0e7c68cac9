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

#ifndef SYMPAIR_FP_HPP
#define SYMPAIR_FP_HPP

#include <cstdint>
#include <string>

#include "error.hpp"

namespace sympair {

using i64 = std::int64_t;

// Element of the prime field F_p. The modulus travels with the value so
// codes over different primes can coexist in one process; every operation
// checks that both operands agree on p. Values are kept fully reduced.
struct Fp {
    i64 v{0};
    i64 p{0};

    Fp() = default;
    Fp(i64 value, i64 modulus);

    bool is_zero() const { return v == 0; }
};

bool is_odd_prime(i64 p);

Fp operator+(Fp a, Fp b);
Fp operator-(Fp a, Fp b);
Fp operator*(Fp a, Fp b);
Fp operator-(Fp a);
bool operator==(Fp a, Fp b);
bool operator!=(Fp a, Fp b);

Fp inv(Fp a);
Fp pow(Fp a, i64 e);  // e >= 0

// Smallest m >= 1 with a^m = 1, by exhaustive powering (a != 0).
i64 element_order(Fp a);

// The canonical primitive l-th root of unity: the smallest element of
// multiplicative order exactly l. Fails with no_such_root when l does not
// divide p-1.
Fp primitive_root_of_unity(i64 p, i64 l);

std::string to_string(Fp a);

}  // namespace sympair

#endif
