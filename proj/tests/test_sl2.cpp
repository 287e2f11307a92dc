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

TEST(Generators, ImagesOnCoefficients) {
    auto g1 = make_generators(1);
    EXPECT_EQ(g1.e(P("a0")), P("-4*a1"));
    EXPECT_TRUE(g1.e(P("wp[1,1]")).is_zero());
    EXPECT_TRUE(g1.f(P("wp[1,1]")).is_zero());
    EXPECT_TRUE(g1.e(P("wp[1,1,1,1]")).is_zero());
    EXPECT_TRUE(g1.f(P("a0")).is_zero());
    EXPECT_EQ(g1.e(P("a0*a4")), P("-4*a1*a4"));
    EXPECT_TRUE(g1.e(P("a0*a4 - 4*a1*a3 + 3*a2^2")).is_zero());
    EXPECT_THROW(make_generators(4), UnsupportedGenus);
}

TEST(Generators, TwoIndexGenus2) {
    auto g2 = make_generators(2);
    EXPECT_EQ(g2.e(P("wp[1,1]")), P("-2*wp[1,2]"));
    EXPECT_EQ(g2.e(P("wp[1,2]")), P("-wp[2,2]"));
    EXPECT_TRUE(g2.e(P("wp[2,2]")).is_zero());
    EXPECT_EQ(g2.f(P("wp[2,2]")), P("-2*wp[1,2]"));
    EXPECT_THROW(g2.e(P("wp[1,3]")), UnsupportedSymbol);
    EXPECT_THROW(g2.e(P("wpB[1,1]")), UnsupportedSymbol);
    EXPECT_TRUE(g2.e(P("l0 + k3 + r")).is_zero());
}

TEST(Generators, Commutators) {
    for (int g = 1; g <= 3; ++g) {
        auto rep = check_commutators(g);
        EXPECT_TRUE(rep.ok()) << "genus " << g << ": " << (rep.failures.empty() ? "" : rep.failures[0]);
        EXPECT_GT(rep.checked, 0);
    }
    auto g2 = make_generators(2);
    Poly a3 = P("a3");
    EXPECT_EQ(g2.e(g2.f(a3)) - g2.f(g2.e(a3)), g2.h(a3));
    auto g3 = make_generators(3);
    Poly w = P("wp[2,3]");
    EXPECT_EQ(g3.e(g3.f(w)) - g3.f(g3.e(w)), g3.h(w));
}

TEST(Generators, CurveCovariance) {
    for (int g = 1; g <= 3; ++g) {
        auto gen = make_generators(g);
        Poly v = curve_poly(g).v;
        EXPECT_TRUE(gen.e(v).is_zero());
        EXPECT_TRUE((gen.f(v) + Rational(2 * (g + 1)) * P("x") * v).is_zero());
    }
}

TEST(Weight, Values) {
    // h = [e, f] gives a_i weight 2i - 2g - 2.
    EXPECT_EQ(weight(P("a4"), 1), 4);
    EXPECT_EQ(weight(P("a0"), 1), -4);
    EXPECT_EQ(weight(P("a0*a4 - 4*a1*a3 + 3*a2^2"), 1), 0);
    EXPECT_FALSE(weight(P("x + a0"), 1));
    EXPECT_EQ(weight(P("wp[2,2,2]"), 2), 3);
    EXPECT_EQ(weight(P("y"), 3), -4);
}

TEST(Weight, AgreesWithH) {
    for (int g = 1; g <= 3; ++g) {
        auto gen = make_generators(g);
        for (Symbol s : generator_symbols(g)) {
            Poly p(s);
            auto w = weight(p, g);
            ASSERT_TRUE(w);
            EXPECT_EQ(gen.h(p), Rational(*w) * p) << s.name();
            Poly fp = gen.f(p);
            if (!fp.is_zero() && weight(fp, g)) EXPECT_EQ(*weight(fp, g), *w - 2) << s.name();
        }
    }
}

TEST(Multiplet, CoefficientChain) {
    auto m = generate_multiplet(P("a4"), 1, 10);
    ASSERT_EQ(m.dimension(), 5);
    EXPECT_EQ(m.members[1], P("-4*a3"));
    EXPECT_EQ(m.members[2], P("12*a2"));
    EXPECT_EQ(m.members[3], P("-24*a1"));
    EXPECT_EQ(m.members[4], P("24*a0"));
    EXPECT_EQ(m.weights, (std::vector<int>{4, 2, 0, -2, -4}));
    for (auto& c : m.e_factors) EXPECT_NE(sgn(c), 0);
    EXPECT_THROW(generate_multiplet(P("a0"), 1, 10), NotHighestWeight);
    EXPECT_THROW(generate_multiplet(P("a4"), 1, 3), DimensionExceeded);
}

TEST(Multiplet, TwoIndexTriple) {
    auto m = generate_multiplet(P("wp[2,2]"), 2, 5);
    ASSERT_EQ(m.dimension(), 3);
    EXPECT_EQ(m.members[1], P("-2*wp[1,2]"));
    EXPECT_EQ(m.members[2], P("2*wp[1,1]"));
}

TEST(Closure, Checks) {
    auto g1 = make_generators(1);
    EXPECT_FALSE(closure_check({P("a0")}, g1.e).closed());
    std::vector<Poly> coeffs;
    for (int i = 0; i <= 4; ++i) coeffs.push_back(Poly(Symbol::a(i)));
    EXPECT_TRUE(closure_check(coeffs, g1.e).closed());
    EXPECT_TRUE(closure_check(coeffs, g1.f).closed());
}

TEST(Derivations, PointAndU) {
    auto d = point_d(2, 1);
    EXPECT_EQ(d(P("x1")), P("y1"));
    EXPECT_EQ(d(P("y1")), P("3*a1 + 15*a2*x1 + 30*a3*x1^2 + 30*a4*x1^3 + 15*a5*x1^4 + 3*a6*x1^5"));
    EXPECT_EQ(d(P("wp[1,2]")), P("wp[1,1,2] + x1*wp[1,2,2]"));
    EXPECT_TRUE(d(P("x2")).is_zero());
    auto u = du(3, 2);
    EXPECT_EQ(u(P("wp[1,3]")), P("wp[1,2,3]"));
    EXPECT_EQ(u(P("wp[1,1,3]^2")), P("2*wp[1,1,3]*wp[1,1,2,3]"));
    EXPECT_THROW(u(P("wp[1,1,1,1]")), UnsupportedSymbol);
    EXPECT_TRUE(u(P("a3")).is_zero());
}
