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

#ifndef WPID_ORACLE_HPP
#define WPID_ORACLE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wpid/catalog.hpp"
#include "wpid/field.hpp"

namespace wpid {

struct NotASquare : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DegenerateCurve : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// y^2 = sum_i C(2g+2, i) a_i x^i with integer a_i and r^2 = a_{2g+2}.
struct CurveInstance {
    int genus = 0;
    std::vector<Integer> a;
    Integer r;
    // Integer coefficients of x^0 .. x^{2g+2}.
    std::vector<Integer> rhs() const;
};

// Throws NotASquare or DegenerateCurve. root_sign picks the branch of r.
CurveInstance make_instance(int g, const std::vector<Integer>& a, int root_sign = 1);
// Variant 0 has small coefficients; variant 1 has pairwise distinct ones and
// separates coefficient typos that variant 0 cannot see. A degenerate choice
// is bumped in a2.
CurveInstance default_instance(int g, int variant = 0);

// 64-bit linear congruential generator.
class Lcg {
public:
    explicit Lcg(std::uint64_t seed = 1) : state_(seed) {}
    std::uint64_t next();
    // Uniform-ish integer in [lo, hi].
    long range(long lo, long hi);

private:
    std::uint64_t state_;
};

struct Assignment {
    CurveInstance curve;
    std::map<Symbol, FieldElem> values;
    std::map<Symbol, std::string> provenance;
    // Symbols reached along two routes with different values.
    std::vector<std::string> integrability_failures;
};

// Solves every wp symbol of the curve's genus up to four indices.
Assignment solve_wp(const CurveInstance& c);

struct Evaluation {
    std::optional<FieldElem> value;
    std::vector<std::string> missing; // symbols with no value
};
// Numeric values for l_i, k_i go in `extra`.
Evaluation evaluate(const Poly& p, const Assignment& a, const std::map<Symbol, Rational>& extra = {});

enum class Verdict { Holds, Fails, MissingSymbol };
std::string to_string(Verdict v);

struct IdentityCheck {
    std::string set;
    std::string name;
    Source source = Source::Generated;
    Verdict verdict = Verdict::Holds;
    std::vector<std::string> missing;
    int draws = 0; // border draws for relations in l, k
    std::optional<FieldElem> residual; // first nonzero value seen
};

struct OracleReport {
    int genus = 0;
    std::vector<Integer> curve;
    Integer r;
    std::uint64_t seed = 1;
    std::vector<IdentityCheck> checks;
    std::vector<std::string> integrability_failures;
    int count(Verdict v) const;
};

// Relations involving border symbols are checked at `draws` random borders.
std::vector<IdentityCheck> verify(const IdentitySet& set, const Assignment& a, Lcg& rng, int draws = 5);
OracleReport verify_sets(const std::vector<IdentitySet>& sets, const Assignment& a, std::uint64_t seed, int draws = 5);

} // namespace wpid

#endif
