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

#ifndef WPID_SUITE_HPP
#define WPID_SUITE_HPP

#include <string>
#include <vector>

namespace wpid {

struct SuiteCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

// Exact structural checks for one genus: sl2 relations, covariance of the
// curve, closure of the representation sets, multiplet regeneration and the
// determinant expansions.
std::vector<SuiteCheck> symbolic_suite(int g);

} // namespace wpid

#endif
