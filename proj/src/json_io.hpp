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

#ifndef SYMPAIR_JSON_IO_HPP
#define SYMPAIR_JSON_IO_HPP

#include <string>

#include "catalog.hpp"

namespace sympair {

// Code spec schema:
//   {"p":7, "l":3,
//    "factors":[{"unity_exp":0,"mult":4}, {"elem":4,"mult":1}, {"poly":[1,0,1],"mult":1}],
//    "omega":2}          // optional explicit root of unity
CodeSpec spec_from_json(const std::string& text);
std::string spec_to_json(const CodeSpec& spec, int indent = -1);

// Report schema: {"spec":{...}, "d_H", "d_p", "class", "witness_H", "witness_p",
//                 "method", "supports_examined", "elapsed_ms"}
std::string report_to_json(const DistanceReport& report, const CodeSpec& spec, int indent = -1);

std::string row_to_json(const FamilyInstance& row, const RowResult* result, int indent = -1);

// Fixed column order, kept stable so emitted tables diff cleanly.
std::string registry_csv_header();
std::string row_to_csv(const FamilyInstance& row, const RowResult* result);

}  // namespace sympair

#endif
