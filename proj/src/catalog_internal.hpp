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

#ifndef WPID_CATALOG_INTERNAL_HPP
#define WPID_CATALOG_INTERNAL_HPP

#include <vector>

#include "wpid/catalog.hpp"
#include "wpid/linalg.hpp"

namespace wpid::detail {

const PolyMatrix& klein(int g);
// 1-based entry of the Klein matrix.
const Poly& hk(int g, int i, int j);
Poly det2(const Poly& a, const Poly& b, const Poly& c, const Poly& d);
bool is_fourindex(Symbol s);
// Rational kernel of sum_i c_i polys[i] = 0.
std::vector<RatVec> poly_kernel(const std::vector<Poly>& polys);
// Scales p so its single four-index symbol has coefficient `target`.
Poly normalise_fourindex(const Poly& p, const Rational& target = -1);

} // namespace wpid::detail

#endif
