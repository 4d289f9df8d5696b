/*
   Copyright 2026 The weyldim Authors

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

#ifndef WEYLDIM_IO_HPP
#define WEYLDIM_IO_HPP

#include <string>
#include <string_view>

#include "weyldim/dimension.hpp"
#include "weyldim/oracle.hpp"

// JSON documents for presentations and results. All output is canonical:
// sorted keys, two-space indent, rationals as "num/den".
namespace weyldim::io {

// Throws InputError with the offending location on any schema violation.
Presentation parse_presentation(std::string_view text);
std::string render_presentation(const Presentation& pres);

std::string basis_json(const GroebnerBasis& G);
std::string report_json(const DimensionReport& report);
std::string bernstein_json(const BernsteinData& data);
std::string invariants_json(const DimensionReport& report);
std::string check_json(const oracle::CheckReport& check);

}  // namespace weyldim::io

#endif  // WEYLDIM_IO_HPP
