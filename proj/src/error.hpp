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

#ifndef SYMPAIR_ERROR_HPP
#define SYMPAIR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sympair {

enum class Errc {
    invalid_argument,   // precondition violated by the caller
    modulus_mismatch,   // operands live in different fields
    division_by_zero,
    no_such_root,       // l does not divide p-1
    bad_spec,           // code-construction constraint violated
    multiplicity_bound, // factor multiplicity exceeds the family bound p-1
    too_large,          // enumeration cap exceeded
    parse,              // malformed spec/report text
    internal,           // engine self-check failed; never acceptable
};

class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

   private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace sympair

#endif
