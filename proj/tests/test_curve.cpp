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

#include <gtest/gtest.h>

#include "wpid/curve.hpp"
#include "wpid/sl2.hpp"

using namespace wpid;

namespace {
Poly P(const char* s) { return Poly::parse(s); }
} // namespace

TEST(Curve, Family) {
    EXPECT_EQ(curve_poly(1).v, P("y^2 - (a0 + 4*a1*x + 6*a2*x^2 + 4*a3*x^3 + a4*x^4)"));
    EXPECT_EQ(coeff_extract(curve_poly(2).v, Symbol::x(), 3), P("-20*a3"));
    EXPECT_THROW(curve_poly(0), UnsupportedGenus);
}

TEST(Klein, PrintedEntries) {
    auto k1 = klein_matrix(1).h;
    EXPECT_EQ(k1(0, 2), P("a2 - 2*wp[1,1]"));
    EXPECT_EQ(k1(1, 1), P("4*a2 + 4*wp[1,1]"));
    EXPECT_EQ(klein_matrix(2).h(1, 2), P("9*a3 + 2*wp[1,2]"));
    EXPECT_EQ(klein_matrix(3).h(1, 3), P("16*a4 - 2*wp[2,2] + 4*wp[1,3]"));
    for (int g = 1; g <= 3; ++g) EXPECT_TRUE(klein_matrix(g).h.is_symmetric());
}

TEST(Klein, Antidiagonals) {
    for (int g = 1; g <= 3; ++g) {
        auto rows = antidiagonal_check(klein_matrix(g));
        ASSERT_EQ(rows.size(), static_cast<std::size_t>(2 * g + 3));
        for (auto& r : rows) {
            EXPECT_TRUE(r.ok()) << "g=" << g << " d=" << r.degree;
            EXPECT_EQ(r.sum.degree_where([](Symbol s) { return s.is_wp(); }), 0u);
        }
    }
    auto k2 = klein_matrix(2);
    EXPECT_EQ(k2.h(3, 3), P("a6"));
    EXPECT_EQ(antidiagonal_check(k2)[4].sum, P("15*a4"));
    EXPECT_EQ(antidiagonal_check(klein_matrix(1))[2].sum, P("6*a2"));
}

TEST(XRep, Components) {
    EXPECT_EQ(build_x_rep(1).size(), 5u);
    EXPECT_EQ(build_x_rep(3).size(), 9u);
    auto x7 = build_x_rep(2);
    auto printed = printed_x7();
    ASSERT_EQ(x7.size(), 7u);
    EXPECT_EQ(x7[0].numerator, P("6"));
    EXPECT_EQ(x7[1].numerator, P("-3*(x + x1)"));
    for (int k = 0; k < 7; ++k) {
        EXPECT_EQ(x7[k].denominator_power, 3u);
        // Component 3 of the displayed list ends in x^3 where x1^3 belongs.
        if (k == 3)
            EXPECT_NE(x7[k].numerator, printed[k].numerator);
        else
            EXPECT_EQ(x7[k].numerator, printed[k].numerator) << k;
    }
    EXPECT_EQ(x7[3].numerator, P("-(x^3 + 9*x^2*x1 + 9*x1^2*x + x1^3)"));
}

TEST(XRep, EChainDuality) {
    for (int g = 1; g <= 3; ++g) {
        auto gen = make_generators(g);
        auto comps = build_x_rep(g);
        // e(x - x_m) = 0, so e acts on numerators directly.
        EXPECT_TRUE(gen.e(comps[0].numerator).is_zero());
        for (std::size_t k = 1; k < comps.size(); ++k) {
            Poly img = gen.e(comps[k].numerator);
            const Poly& prev = comps[k - 1].numerator;
            ASSERT_FALSE(img.is_zero());
            Rational c = img.leading().coeff / prev.leading().coeff;
            EXPECT_EQ(img, c * prev) << "g=" << g << " k=" << k;
        }
    }
}

TEST(Polar, Genus1) {
    auto pf = polar_form(1);
    EXPECT_EQ(pf.ftilde,
              P("a0 + 2*a1*(x+x1) + a2*(x^2 + 4*x*x1 + x1^2) + 2*a3*(x+x1)*x*x1 + a4*x^2*x1^2"));
    EXPECT_TRUE(check_polar_form(pf).all());
    // The displayed genus-1 form is not on the curve at x = x1.
    Poly printed = printed_polar_form_genus1();
    EXPECT_NE(substitute(printed, {{Symbol::x(), P("x1")}}), curve_rhs(1, Symbol::x(1)));
}

TEST(Polar, AllGenera) {
    for (int g = 1; g <= 3; ++g) {
        auto pf = polar_form(g);
        auto c = check_polar_form(pf);
        EXPECT_TRUE(c.on_curve && c.symmetric && c.e_annihilates && c.f_annihilates) << g;
        for (int k = 0; k <= 2 * g + 2; ++k) {
            Rational fact = 1;
            for (int i = 2; i <= k; ++i) fact *= i;
            EXPECT_EQ(pf.coefficients[k], 1 / fact);
        }
    }
}

TEST(Polar, Tangency) {
    auto t1 = tangency_check(polar_form(1));
    EXPECT_EQ(t1.multiplicity, 2u);
    EXPECT_TRUE(t1.meets_bound);
    Bindings special{{Symbol::a(0), 1}, {Symbol::a(1), 0}, {Symbol::a(2), 0},
                     {Symbol::a(3), 0}, {Symbol::a(4), 4}, {Symbol::x(1), 0}};
    auto t1s = tangency_check(polar_form(1), special);
    ASSERT_TRUE(t1s.specialised);
    EXPECT_EQ(*t1s.specialised, 4u);
    // Ordinary tangency in every genus: the quotient by (x - x1)^2 does not
    // vanish at x = x1, so the g + 1 bound fails from genus 2 on.
    for (int g = 2; g <= 3; ++g) {
        auto t = tangency_check(polar_form(g));
        EXPECT_EQ(t.multiplicity, 2u) << g;
        EXPECT_FALSE(t.meets_bound) << g;
    }
}

TEST(Polar, ClassicalGenus2) {
    auto pf = polar_form(2);
    Poly reduced = substitute(pf.ftilde, {{Symbol::a(6), 0}, {Symbol::a(5), Rational(2, 3)}});
    Poly diff = reduced - classical_polar_form_genus2();
    // They agree modulo (x - x1)^2, by a wp-shift term.
    Poly d = diff;
    EXPECT_GE(divide_out(d, P("x - x1")), 2u);
    EXPECT_EQ(diff, P("(x - x1)^2*(3*a2 + a3*(x + x1) + 3*a4*x*x1)"));
}
