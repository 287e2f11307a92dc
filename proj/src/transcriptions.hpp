/*
   Copyright 2026 The wpid Authors

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

#ifndef WPID_TRANSCRIPTIONS_HPP
#define WPID_TRANSCRIPTIONS_HPP

#include <string>
#include <vector>

#include "wpid/poly.hpp"

namespace wpid::detail {

// One displayed equation, lhs = rhs, in shorthand: p123 is wp[1,2,3],
// b12 is wpB[1,2], D is the Delta combination of the same family.
struct Printed {
    const char* name;
    const char* lhs;
    const char* rhs;
};

const std::vector<Printed>& appendix1_lines();
const std::vector<Printed>& appendix2_lines();
const std::vector<Printed>& main_text_lines();
// Rows of the genus-3 A matrix and of h^B, in shorthand.
const std::vector<std::vector<const char*>>& genus3_A_rows();
const std::vector<std::vector<const char*>>& baker_h_rows();
const std::vector<const char*>& genus3_P5_lines();

Poly parse_shorthand(const std::string& s);
// lhs - rhs.
Poly relation_of(const Printed& p);

} // namespace wpid::detail

#endif
