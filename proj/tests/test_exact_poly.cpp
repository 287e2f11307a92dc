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

#include <random>

#include "wpid/linalg.hpp"
#include "wpid/matrix.hpp"
#include "wpid/poly.hpp"

using namespace wpid;

namespace {

Poly P(const char* s) { return Poly::parse(s); }

struct RandomPolys {
    std::mt19937_64 rng;
    std::vector<Symbol> pool;

    explicit RandomPolys(std::uint64_t seed) : rng(seed) {
        pool = {Symbol::a(0), Symbol::a(3), Symbol::wp({1, 1}), Symbol::wp({1, 2, 3}), Symbol::wpB({1, 1}),
                Symbol::x(), Symbol::y(1), Symbol::l(2), Symbol::root()};
    }
    Rational coeff() {
        std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
        int n = 0;
        while (n == 0) n = num(rng);
        return rat(n, den(rng));
    }
    Poly poly(int max_terms, int max_deg = 3) {
        std::uniform_int_distribution<int> nt(0, max_terms), deg(0, max_deg),
            pick(0, static_cast<int>(pool.size()) - 1);
        std::vector<Term> terms;
        int n = nt(rng);
        for (int i = 0; i < n; ++i) {
            Monomial m;
            int d = deg(rng);
            for (int k = 0; k < d; ++k) m = m * Monomial(pool[pick(rng)]);
            terms.push_back({m, coeff()});
        }
        return Poly::from_terms(terms);
    }
    PolyMatrix matrix(int n) {
        std::uniform_int_distribution<int> small(-3, 3);
        PolyMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                m(i, j) = poly(2, 1);
                if (small(rng) == 0) m(i, j) = Poly(small(rng));
            }
        return m;
    }
};

} // namespace

TEST(Poly, SpecExamples) {
    EXPECT_EQ((P("x + 1") * P("x - 1")), P("x^2 - 1"));
    Poly p = P("a0 + 2*a1*x");
    EXPECT_EQ(p * p, P("a0^2 + 4*a0*a1*x + 4*a1^2*x^2"));
    EXPECT_TRUE((p + (-p)).is_zero());
    EXPECT_EQ(P("(x+1)^0"), Poly(1));
}

TEST(Poly, CanonicalText) {
    Poly p = Rational(-1, 4) * P("a0*wp[1,1,1]^2");
    EXPECT_EQ(p.to_string(), "-1/4*a0*wp[1,1,1]^2");
    EXPECT_EQ(Poly().to_string(), "0");
    EXPECT_EQ(P("3 - x").to_string(), "-x + 3");
    EXPECT_EQ(P("wp[2,1]"), Poly(Symbol::wp({1, 2})));
    EXPECT_EQ(P("wpB[1,1]").to_latex(), "\\wp^{\\mathfrak B}_{11}");
    EXPECT_THROW(P("x/y"), ParseError);
    EXPECT_THROW(P("q1"), ParseError);
    EXPECT_THROW(P("x +"), ParseError);
}

TEST(Poly, DeglexOrder) {
    // Degree first, then the later-interned symbol wins.
    Poly p = P("a0 + x + a0^2 + a1");
    ASSERT_EQ(p.size(), 4u);
    EXPECT_EQ(p.to_string(), "a0^2 + x + a1 + a0");
}

TEST(Poly, Substitute) {
    Poly b = Poly(Symbol::wpB({1, 1})) + 3 * Poly(Symbol::a(2));
    Poly r = substitute(P("wp[1,1]^2"), {{Symbol::wp({1, 1}), b}});
    EXPECT_EQ(r, b * b);
    Poly q = P("x*y + a0");
    EXPECT_EQ(substitute(q, {}), q);
    EXPECT_EQ(substitute(P("x*y"), {{Symbol::x(), Poly()}}), Poly());
    // Simultaneous, not sequential.
    EXPECT_EQ(substitute(P("x + 2*y"), {{Symbol::x(), P("y")}, {Symbol::y(), P("x")}}), P("y + 2*x"));
}

TEST(Poly, CoeffExtract) {
    EXPECT_EQ(coeff_extract(P("a0 + 3*a1*x^2"), Symbol::x(), 2), P("3*a1"));
    EXPECT_TRUE(coeff_extract(P("a0 + a1"), Symbol::x(), 1).is_zero());
    RandomPolys gen(7);
    Poly p;
    while (p.size() < 50) p += gen.poly(10, 4);
    Symbol s = Symbol::x();
    Poly back;
    for (unsigned d = 0; d <= p.degree_in(s); ++d) back += coeff_extract(p, s, d) * Poly(Symbol::x()).pow(d);
    EXPECT_EQ(back, p);
}

TEST(Poly, ExactDiv) {
    EXPECT_EQ(exact_div(P("x^2 - x1^2"), P("x - x1")), P("x + x1"));
    Poly p = P("a0*x + 7/3");
    EXPECT_EQ(exact_div(p, Poly(1)), p);
    EXPECT_THROW(exact_div(P("x + 1"), P("x")), NotDivisible);
    Poly q = P("(x - x1)^3*(a0 + y)");
    EXPECT_EQ(divide_out(q, P("x - x1")), 3u);
    EXPECT_EQ(q, P("a0 + y"));
}

TEST(Poly, Derivative) {
    EXPECT_EQ(P("x^3*y + 2*x + a0").derivative(Symbol::x()), P("3*x^2*y + 2"));
    EXPECT_TRUE(P("a0").derivative(Symbol::x()).is_zero());
}

TEST(PolyProperty, RingLaws) {
    RandomPolys gen(1);
    for (int i = 0; i < 1000; ++i) {
        Poly a = gen.poly(6), b = gen.poly(6), c = gen.poly(6);
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_TRUE((a - a).is_zero());
        ASSERT_EQ(a * Poly(1), a);
    }
}

TEST(PolyProperty, ExactDivRoundTrip) {
    RandomPolys gen(2);
    for (int i = 0; i < 300; ++i) {
        Poly p = gen.poly(6), q = gen.poly(4);
        if (q.is_zero()) continue;
        ASSERT_EQ(exact_div(p * q, q), p);
    }
}

TEST(PolyProperty, SerializeRoundTrip) {
    RandomPolys gen(3);
    for (int i = 0; i < 500; ++i) {
        Poly p = gen.poly(8);
        std::string s = p.to_string();
        Poly back = Poly::parse(s);
        ASSERT_EQ(back, p) << s;
        ASSERT_EQ(back.to_string(), s);
    }
}

TEST(PolyProperty, CanonicalForm) {
    RandomPolys gen(4);
    for (int i = 0; i < 200; ++i) {
        Poly p = gen.poly(8) * gen.poly(4);
        for (std::size_t k = 0; k < p.size(); ++k) {
            ASSERT_NE(sgn(p.terms()[k].coeff), 0);
            if (k) ASSERT_TRUE(p.terms()[k - 1].mono > p.terms()[k].mono);
        }
    }
}

TEST(Matrix, Examples) {
    PolyMatrix m{{P("x"), 1}, {1, P("x")}};
    EXPECT_EQ(determinant(m), P("x^2 - 1"));
    for (int n = 0; n <= 6; ++n) EXPECT_EQ(determinant(PolyMatrix::identity(n)), Poly(1));
    PolyMatrix id3 = PolyMatrix::identity(3);
    EXPECT_EQ(minor(id3, {1}, {1}), Poly(1));
    EXPECT_EQ(minor(m, {}, {}), determinant(m));
    EXPECT_THROW(minor(id3, {3}, {0}), IndexOutOfRange);
    EXPECT_THROW(determinant(PolyMatrix(2, 3)), NonSquare);
}

TEST(MatrixProperty, BareissMatchesCofactor) {
    RandomPolys gen(5);
    for (int n = 1; n <= 5; ++n)
        for (int i = 0; i < (n <= 3 ? 60 : 20); ++i) {
            PolyMatrix m = gen.matrix(n);
            ASSERT_EQ(bareiss_determinant(m), cofactor_determinant(m)) << "n=" << n;
        }
}

TEST(MatrixProperty, BorderedLaplaceMatchesBareiss) {
    RandomPolys gen(6);
    for (int n = 2; n <= 5; ++n)
        for (int mb = 1; mb <= 2; ++mb)
            for (int i = 0; i < 4; ++i) {
                PolyMatrix h = gen.matrix(n);
                std::vector<std::vector<Poly>> r(mb), b(mb);
                for (int k = 0; k < mb; ++k)
                    for (int j = 0; j < n; ++j) {
                        r[k].push_back(gen.poly(2, 1));
                        b[k].push_back(gen.poly(2, 1));
                    }
                ASSERT_EQ(bordered_determinant(h, r, b), bareiss_determinant(bordered_matrix(h, r, b)))
                    << "n=" << n << " m=" << mb;
            }
}

TEST(Linalg, SolveAndSpan) {
    RatMat a{{1, 2}, {3, 4}};
    auto s = solve(a, {5, 6});
    ASSERT_TRUE(s);
    EXPECT_TRUE(s->kernel.empty());
    EXPECT_EQ(s->x[0], -4);
    EXPECT_EQ(s->x[1], Rational(9, 2));
    EXPECT_FALSE(solve(RatMat{{1, 1}, {1, 1}}, {0, 1}));
    EXPECT_EQ(nullspace(RatMat{{1, 1}}, 2).size(), 1u);

    SpanBasis sb;
    EXPECT_TRUE(sb.add(P("x + y")));
    EXPECT_TRUE(sb.add(P("x - y")));
    EXPECT_FALSE(sb.add(P("x")));
    auto red = sb.reduce(P("3*x + y + a0"));
    EXPECT_EQ(red.remainder, P("a0"));
    EXPECT_EQ(red.certificate[0], 2);
    EXPECT_EQ(red.certificate[1], 1);
}
