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

#ifndef WPID_CURVE_HPP
#define WPID_CURVE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wpid/matrix.hpp"
#include "wpid/poly.hpp"

namespace wpid {

struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Integer binomial(unsigned n, unsigned k);

// a(x) = sum_i C(2g+2, i) a_i x^i in the variable `x`.
Poly curve_rhs(int g, Symbol x);
// (1, x, ..., x^{g+1}).
std::vector<Poly> monomial_vector(int g, Symbol x);

struct CurveFamily {
    int genus;
    Poly v; // y^2 - a(x)
};
CurveFamily curve_poly(int g);

struct KleinMatrix {
    int genus;
    PolyMatrix h;
};
// The printed matrix; symmetry and the anti-diagonal sums are checked here.
KleinMatrix klein_matrix(int g);

struct AntidiagonalRow {
    int degree;
    Poly sum;
    Poly expected;
    bool ok() const { return sum == expected; }
};
std::vector<AntidiagonalRow> antidiagonal_check(const KleinMatrix& k);

// Component k of X^{2g+3}: numerator / (x - x_m)^{g+1}, where the numerator
// is chain_factor times the k-th raw f-chain numerator.
struct RepComponent {
    Poly numerator;
    unsigned denominator_power;
    Rational chain_factor = 1;
};
std::vector<RepComponent> build_x_rep(int g, int m = 1);

struct PolarForm {
    int genus;
    int point;
    Poly ftilde;
    std::vector<RepComponent> components;
    std::vector<Rational> coefficients; // ftilde = sum_k coefficients[k] a_k N_k
};
// Solves for the contraction; throws InvariantViolation.
PolarForm polar_form(int g, int m = 1);

struct PolarChecks {
    bool on_curve = false;     // F(x_m, x_m) = a(x_m)
    bool symmetric = false;    // x <-> x_m
    bool e_annihilates = false;
    bool f_annihilates = false;
    bool all() const { return on_curve && symmetric && e_annihilates && f_annihilates; }
};
PolarChecks check_polar_form(const PolarForm& pf);

struct TangencyReport {
    unsigned multiplicity = 0;           // of (x - x_m) in a(x)a(x_m) - F^2
    std::optional<unsigned> specialised; // order at a chosen x_m
    bool meets_bound = false;            // multiplicity >= g + 1
};
// `specialise` binds curve coefficients and optionally x_m to numbers.
TangencyReport tangency_check(const PolarForm& pf, const Bindings& specialise = {});

// Reference forms as displayed in the literature, kept for comparison.
Poly classical_polar_form_genus2(int m = 1);
Poly printed_polar_form_genus1(int m = 1);
std::vector<RepComponent> printed_x7(int m = 1);

} // namespace wpid

#endif
