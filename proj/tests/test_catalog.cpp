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

#include <algorithm>
#include <set>

#include "wpid/catalog.hpp"
#include "wpid/curve.hpp"
#include "wpid/linalg.hpp"

using namespace wpid;

namespace {

Poly P(const char* s) { return Poly::parse(s); }

const Identity& member(const IdentitySet& s, const std::string& name) {
    for (auto& m : s.members)
        if (m.name == name) return m;
    throw std::out_of_range(name);
}

bool proportional(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return false;
    return p * q.leading().coeff == q * p.leading().coeff;
}

bool has_border(const Poly& p) {
    for (auto s : p.symbols())
        if (s.kind() == SymKind::BorderL || s.kind() == SymKind::BorderK) return true;
    return false;
}

bool in_span(const std::vector<Poly>& basis, const Poly& p) {
    SpanBasis b;
    for (auto& q : basis) b.add(q);
    return b.reduce(p).remainder.is_zero();
}

int span_dim(const std::vector<Poly>& v) {
    SpanBasis b;
    for (auto& q : v) b.add(q);
    return static_cast<int>(b.dimension());
}

} // namespace

TEST(Catalog, Genus1) {
    EXPECT_EQ(genus1_ode().relation, P("wp[1,1,1]^2 - 4*wp[1,1]^3 + (a0*a4 - 4*a1*a3 + 3*a2^2)*wp[1,1]"
                                       " + a0*a2*a4 - a0*a3^2 + 2*a1*a2*a3 - a2^3 - a1^2*a4"));
    EXPECT_EQ(*genus1_ode().weight, 0);
    auto so = genus1_second_order();
    EXPECT_EQ(so.factor, 2);
    EXPECT_EQ(so.identity.relation, P("wp[1,1,1,1] - 6*wp[1,1]^2 + 1/2*(a0*a4 - 4*a1*a3 + 3*a2^2)"));
}

TEST(Catalog, Genus2Quadratic) {
    auto prods = genus2_quadratic_products();
    ASSERT_EQ(prods.members.size(), 10u);
    std::vector<int> weights;
    for (auto& m : prods.members) weights.push_back(*m.weight);
    std::sort(weights.begin(), weights.end());
    EXPECT_EQ(weights.front(), -6);
    EXPECT_EQ(weights.back(), 6);
    // -4 wp222^2 = |h22..h44| is the l0^2 coefficient.
    Poly lead = P("4*wp[2,2,2]^2") + minor(klein_matrix(2).h, {0}, {0});
    bool found = false;
    for (auto& m : prods.members) found = found || proportional(m.relation, lead);
    EXPECT_TRUE(found);
    // The displayed sign does not give that coefficient.
    EXPECT_NE(genus2_quadratic().relation, genus2_quadratic_as_printed().relation);
    auto l0 = split_by(genus2_quadratic_as_printed().relation, [](Symbol s) { return s.kind() == SymKind::BorderL; });
    EXPECT_FALSE(proportional(l0.at(Monomial(Symbol::l(0), 2)), lead));
}

TEST(Catalog, Genus2Bilinear) {
    // The four column relations follow from the products with l = column of h.
    auto bil = genus2_bilinear().relations();
    auto h = klein_matrix(2).h;
    Poly form = genus2_linear_form();
    for (int j = 0; j < 4; ++j) {
        Bindings b;
        for (int i = 0; i < 4; ++i) b[Symbol::l(i)] = h(i, j);
        EXPECT_TRUE(in_span(bil, substitute(form, b))) << j;
    }
    auto ls = genus2_lambda();
    EXPECT_TRUE(ls.unique);
    EXPECT_EQ(ls.lambda, P("wp[1,1,1]"));
}

TEST(Catalog, Genus2FourIndex) {
    auto fi = genus2_fourindex();
    ASSERT_EQ(fi.members.size(), 5u);
    EXPECT_EQ(member(fi, "wp2222").relation,
              P("6*wp[2,2]^2 - 3*a4*wp[2,2] + 6*a5*wp[1,2] - 3*a6*wp[1,1] - 3*a2*a6 + 12*a3*a5 - 9*a4^2 - wp[2,2,2,2]"));
    EXPECT_EQ(member(fi, "wp1111").relation,
              P("-3*a0*wp[2,2] + 6*a1*wp[1,2] + 6*wp[1,1]^2 - 3*a2*wp[1,1] - 3*a0*a4 + 12*a1*a3 - 9*a2^2 - wp[1,1,1,1]"));
    // The displayed highest weight is -1/6 of the derived one.
    auto d = derive_fourindex(2, {0}, 2, "hw");
    EXPECT_TRUE(d.y_unique);
    EXPECT_EQ(d.chain.size(), 5u);
    EXPECT_EQ(d.highest.relation, -6 * genus2_baker_highest_weight());
    EXPECT_TRUE(make_generators(2).e(genus2_baker_highest_weight()).is_zero());
}

TEST(Catalog, Genus3P5AndA) {
    auto gen = genus3_P5().relations();
    auto printed = genus3_P5_printed().relations();
    const Rational factors[] = {1, 1, rat(1, 2), rat(1, 6), rat(1, 24)};
    for (int k = 0; k < 5; ++k) EXPECT_EQ(printed[k], factors[k] * gen[k]) << k;

    auto a = genus3_A();
    for (int i = 0; i < 5; ++i) {
        EXPECT_EQ(a(i, i), Poly());
        for (int j = 0; j < 5; ++j) EXPECT_EQ(a(i, j), -a(j, i));
    }
    auto mf = genus3_minor_factorization();
    EXPECT_TRUE(mf.all_four_by_four());
    for (auto& row : mf.sign)
        for (int s : row) EXPECT_EQ(s, 1);
    EXPECT_EQ(mf.three_by_three_checked, 100);
    EXPECT_EQ(mf.three_by_three_divisible, 70);
    EXPECT_EQ(mf.three_by_three_in_ideal, 100);
    EXPECT_EQ(mf.rank_witnesses.size(), 100u);
}

TEST(Catalog, Genus3Linear) {
    auto lin = genus3_linear();
    ASSERT_EQ(lin.members.size(), 25u);
    auto rels = lin.relations();
    // tr(hA) = 0 identically since h is symmetric and A antisymmetric.
    Poly trace;
    for (int i = 0; i < 5; ++i) trace += rels[static_cast<std::size_t>(6 * i)];
    EXPECT_TRUE(trace.is_zero());
    EXPECT_EQ(span_dim(rels), 24);
    std::map<int, int> count;
    for (int w = -8; w <= 8; w += 2) count[w] = static_cast<int>(genus3_linear_highest_weights(w).size());
    EXPECT_EQ(count[8], 1);
    EXPECT_EQ(count[6], 1);
    EXPECT_EQ(count[4], 1);
    EXPECT_EQ(count[2], 1);
    EXPECT_EQ(count[0], 0);
    EXPECT_THROW(named_multiplet(3, "P1"), std::runtime_error);

    for (const Poly& p : {genus3_P9_highest(), genus3_base_first(), genus3_P9_last_printed(),
                          genus3_P7_highest_printed()})
        EXPECT_TRUE(in_span(rels, p));
    EXPECT_TRUE(make_generators(3).e(genus3_P7_highest_printed()).is_zero());
    auto p9 = named_multiplet(3, "P9").multiplet;
    ASSERT_EQ(p9.dimension(), 9);
    EXPECT_EQ(genus3_P9_last_printed(), rat(1, 40320) * p9.members[8]);

    auto ls = genus3_lambda();
    EXPECT_TRUE(ls.unique);
    EXPECT_EQ(ls.lambda, P("wp[2,2,2] - 2*wp[1,2,3]"));
}

TEST(Catalog, Genus3Quadratic) {
    EXPECT_EQ(genus3_quadratic_leading().relation.size(), 21u);
    EXPECT_EQ(genus3_quadratic_leading().relation,
              P("wp[3,3,3]^2") + rat(1, 4) * minor(klein_matrix(3).h, {0, 1}, {0, 1}));
    EXPECT_EQ(genus3_quadratic_family().members.size(), 95u);
    // Specialising the borders to e1, e2 gives the leading identity.
    std::vector<Rational> l(5, 0), k(5, 0);
    l[0] = 1;
    k[1] = 1;
    EXPECT_EQ(genus3_quadratic_with(l, k).relation, genus3_quadratic_leading().relation);
}

TEST(Catalog, Genus3FourIndex) {
    auto fi = genus3_fourindex();
    ASSERT_EQ(fi.members.size(), 15u);
    for (auto& m : fi.members) {
        auto s = single_fourindex(m.relation);
        ASSERT_TRUE(s);
        EXPECT_EQ(s->second, -1);
        EXPECT_EQ("wp" + m.name.substr(2), m.name);
    }
    EXPECT_EQ(member(fi, "wp3333").relation,
              P("6*wp[3,3]^2 - 8*a6*wp[3,3] + 8*a7*wp[2,3] - 3*a8*wp[2,2] + 4*a8*wp[1,3] - 10*a4*a8 + 40*a5*a7"
                " - 30*a6^2 - wp[3,3,3,3]"));
    EXPECT_EQ(member(fi, "wp2222").relation,
              P("-12*wp[1,1]*wp[3,3] - 48*a2*wp[3,3] + 12*wp[1,2]*wp[2,3] + 32*a3*wp[2,3] + 6*wp[2,2]^2"
                " - 12*wp[1,3]*wp[2,2] - 32*a4*wp[2,2] + 12*wp[1,3]^2 + 96*a4*wp[1,3] + 32*a5*wp[1,2]"
                " - 48*a6*wp[1,1] - a0*a8 - 24*a1*a7 + 4*a2*a6 + 216*a3*a5 - 195*a4^2 - wp[2,2,2,2]"));
    EXPECT_EQ(member(fi, "wp1223").relation,
              P("2*wp[1,1]*wp[3,3] - 6*a2*wp[3,3] + 2*wp[1,2]*wp[2,3] - 4*a3*wp[2,3] + 4*wp[1,3]*wp[2,2]"
                " - 2*a4*wp[2,2] - 2*wp[1,3]^2 + 36*a4*wp[1,3] - 4*a5*wp[1,2] - 6*a6*wp[1,1] - 1/2*a0*a8"
                " - 8*a1*a7 + 18*a2*a6 + 8*a3*a5 - 35/2*a4^2 - wp[1,2,2,3]"));

    auto d9 = derive_fourindex(3, {0, 1}, 3, "nine");
    EXPECT_TRUE(d9.y_unique);
    EXPECT_EQ(d9.chain.size(), 9u);
    EXPECT_EQ(d9.highest.relation, 2 * member(fi, "wp3333").relation);
    auto d7 = derive_fourindex(3, {0, 1}, 1, "seven");
    EXPECT_TRUE(d7.y_unique);
    EXPECT_EQ(d7.chain.size(), 7u);
    auto d5 = derive_fourindex(3, {1, 2}, 1, "five");
    EXPECT_TRUE(d5.y_unique);
    EXPECT_EQ(d5.chain.size(), 5u);
}

TEST(Catalog, PrintedFourIndexAgainstGenerated) {
    auto a1 = appendix1();
    auto gen = genus3_fourindex();
    std::set<std::string> differ;
    for (auto& m : a1.members)
        if (m.relation != member(gen, m.name).relation) differ.insert(m.name);
    EXPECT_EQ(differ, (std::set<std::string>{"wp2222", "wp1133"}));
    EXPECT_EQ(member(a1, "wp2222").relation - member(gen, "wp2222").relation, P("48*(a2 - a3)*wp[3,3]"));
    EXPECT_EQ(member(a1, "wp1133").relation - member(gen, "wp1133").relation, P("-24*a4*wp[1,3]"));
}

TEST(Catalog, MainText) {
    auto gen = genus3_fourindex().relations();
    for (auto& p : genus3_quadratic_family().relations()) gen.push_back(p);
    std::set<std::string> outside;
    for (auto& m : genus3_main_text().members)
        if (!in_span(gen, m.relation)) outside.insert(m.name);
    EXPECT_EQ(outside, (std::set<std::string>{"nine-2", "nine-3", "seven-4", "seven-5", "five-3", "quad-133"}));
    for (auto& m : identity_set(2, "main-text").members) EXPECT_TRUE(in_span(genus2_fourindex().relations(), m.relation) ||
                                                           in_span(genus2_quadratic_products().relations(), m.relation))
                                                   << m.name;
}

TEST(Catalog, Baker) {
    auto rep = baker_transform_report();
    ASSERT_EQ(rep.pairs.size(), 15u);
    std::set<std::string> match;
    for (auto& p : rep.pairs) {
        EXPECT_EQ(p.appendix1_match, p.generated_match) << p.symbol;
        if (p.appendix1_match) match.insert(p.symbol);
    }
    EXPECT_EQ(match, (std::set<std::string>{"wpB3333", "wpB2233", "wpB1233", "wpB1223", "wpB1123", "wpB1122",
                                            "wpB1113", "wpB1112"}));
    EXPECT_TRUE(rep.h_mismatches.empty());
    auto b = baker_transformation().to_covariant();
    EXPECT_EQ(b.at(Symbol::wpB({1, 1})), P("wp[1,1] - 3*a2"));
    EXPECT_EQ(b.at(Symbol::wpB({2, 2})), P("wp[2,2] - 9*a4"));
    EXPECT_EQ(b.at(Symbol::wpB({1, 3})), P("wp[1,3] - 1/2*a4"));
    // Round trip.
    auto back = baker_transformation().to_baker();
    for (auto& m : genus3_fourindex().members)
        EXPECT_EQ(substitute(substitute(m.relation, back), b), m.relation);
}

TEST(Catalog, Discrepancies) {
    auto d = discrepancy_report();
    auto has = [&](const std::string& topic) {
        return std::any_of(d.begin(), d.end(), [&](auto& x) { return x.topic == topic; });
    };
    EXPECT_TRUE(has("appendix-2 wpB2223"));
    EXPECT_TRUE(has("appendix-1 wp1133"));
    EXPECT_TRUE(has("genus-3 hA span"));
    EXPECT_FALSE(has("appendix-2 wpB1123"));
}

// Invariants over every catalogued set.
TEST(CatalogProperties, WeightsAndChains) {
    // Bordered identities are generating functions; only their coefficients
    // are covariant. Printed lines without a weight are typos.
    std::set<std::string> inhomogeneous;
    for (int g = 1; g <= 3; ++g)
        for (auto& name : set_names(g)) {
            auto s = identity_set(g, name);
            EXPECT_FALSE(s.members.empty()) << name;
            for (auto& m : s.members) {
                EXPECT_EQ(m.genus, g);
                EXPECT_FALSE(m.relation.is_zero());
                if (has_border(m.relation)) continue;
                if (m.source == Source::PaperAsPrinted) {
                    if (!m.weight) inhomogeneous.insert(name + " " + m.name);
                    continue;
                }
                EXPECT_TRUE(m.weight.has_value()) << g << " " << name << " " << m.name;
            }
        }
    EXPECT_EQ(inhomogeneous,
              (std::set<std::string>{"appendix1 wp2222", "main-text nine-2", "main-text seven-4", "main-text seven-5",
                                     "main-text five-3", "main-text quad-133", "appendix2-as-printed wpB1133",
                                     "appendix2-as-printed wpB1333", "appendix2-as-printed wpB2223",
                                     "appendix2-transformed wpB1133", "appendix2-transformed wpB1333",
                                     "appendix2-transformed wpB2223"}));
    for (int g = 2; g <= 3; ++g)
        for (auto& hw : highest_weight_names(g)) {
            auto m = named_multiplet(g, hw).multiplet;
            auto top = weight(m.members[0], g);
            ASSERT_TRUE(top);
            for (int i = 0; i < m.dimension(); ++i) EXPECT_EQ(weight(m.members[i], g), *top - 2 * i) << hw;
            EXPECT_EQ(*top, m.dimension() - 1) << hw;
        }
}

TEST(CatalogProperties, Deterministic) {
    for (int g = 1; g <= 3; ++g)
        for (auto& name : set_names(g)) EXPECT_EQ(identity_set(g, name).relations(), identity_set(g, name).relations());
    EXPECT_THROW(identity_set(2, "appendix1"), std::invalid_argument);
}
