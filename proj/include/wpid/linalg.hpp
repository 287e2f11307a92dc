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

#ifndef WPID_LINALG_HPP
#define WPID_LINALG_HPP

#include <map>
#include <optional>
#include <vector>

#include "wpid/poly.hpp"

namespace wpid {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref(RatMat& m);
int rank(RatMat m);
// Basis of {v : m v = 0}.
std::vector<RatVec> nullspace(RatMat m, int cols);

struct LinearSolution {
    RatVec x;                   // free variables set to zero
    std::vector<RatVec> kernel; // empty iff x is unique
};
// Solves m x = b; nothing when inconsistent.
std::optional<LinearSolution> solve(const RatMat& m, const RatVec& b);

// Rational c with sum_i c_i columns[i] = target, compared monomial by monomial.
std::optional<LinearSolution> solve_combination(const std::vector<Poly>& columns, const Poly& target);

/*
 * Rational linear span of polynomials, kept in echelon form on the monomial
 * basis. Every stored row remembers how it was built from the inputs, so
 * membership tests come with a certificate.
 */
class SpanBasis {
public:
    // Returns true when p was independent of the previous inputs.
    bool add(const Poly& p);

    struct Reduction {
        Poly remainder;
        // p - remainder = sum_i certificate[i] * input_i
        std::map<int, Rational> certificate;
    };
    Reduction reduce(const Poly& p) const;
    bool contains(const Poly& p) const { return reduce(p).remainder.is_zero(); }

    std::size_t dimension() const { return rows_.size(); }
    std::size_t inputs() const { return inputs_; }

private:
    struct Row {
        Poly poly;
        std::map<int, Rational> cert;
    };
    std::map<Monomial, Row, std::greater<>> rows_; // keyed by leading monomial
    std::size_t inputs_ = 0;
};

} // namespace wpid

#endif
