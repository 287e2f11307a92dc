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

#include "wpid/suite.hpp"

#include "catalog_internal.hpp"
#include "wpid/catalog.hpp"
#include "wpid/curve.hpp"

namespace wpid {

namespace {

using detail::klein;

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (auto& x : v) s += (s.empty() ? "" : ", ") + x;
    return s;
}

bool is_wp(Symbol s) { return s.kind() == SymKind::Wp; }

bool is_border(Symbol s) { return s.kind() == SymKind::BorderL || s.kind() == SymKind::BorderK; }

// q == c * p for some rational c; returns c.
std::optional<Rational> ratio(const Poly& q, const Poly& p) {
    if (p.is_zero() || q.is_zero()) return std::nullopt;
    Rational c = q.leading().coeff / p.leading().coeff;
    if (q != c * p) return std::nullopt;
    return c;
}

int rank(const std::vector<Poly>& v) {
    return static_cast<int>(v.size()) - static_cast<int>(detail::poly_kernel(v).size());
}

void common(int g, std::vector<SuiteCheck>& out) {
    auto cr = check_commutators(g);
    out.push_back({"commutators", cr.ok(), std::to_string(cr.checked) + " generator images" +
                                               (cr.ok() ? "" : "; failing: " + join(cr.failures))});

    auto gen = make_generators(g);
    auto v = curve_poly(g).v;
    bool ev = gen.e(v).is_zero();
    bool fv = (gen.f(v) + 2 * (g + 1) * Poly(Symbol::x()) * v).is_zero();
    out.push_back({"curve covariance", ev && fv, std::string("e(v) ") + (ev ? "= 0" : "!= 0") +
                                                     ", f(v) + 2(g+1)xv " + (fv ? "= 0" : "!= 0")});

    bool anti = true;
    for (auto& row : antidiagonal_check(klein_matrix(g))) anti = anti && row.ok();
    out.push_back({"Klein anti-diagonal sums", anti, ""});

    auto pf = polar_form(g);
    auto pc = check_polar_form(pf);
    out.push_back({"polar form", pc.all(),
                   std::string("on curve ") + (pc.on_curve ? "yes" : "no") + ", symmetric " +
                       (pc.symmetric ? "yes" : "no") + ", e/f annihilate " +
                       (pc.e_annihilates && pc.f_annihilates ? "yes" : "no")});

    for (auto& name : set_names(g)) {
        auto set = identity_set(g, name);
        if (!set.representation || !set.expect_vanish) continue;
        auto rels = set.relations();
        auto ce = closure_check(rels, gen.e), cf = closure_check(rels, gen.f);
        out.push_back({"closure " + name, ce.closed() && cf.closed(),
                       std::to_string(rels.size()) + " relations, escaping e: " +
                           std::to_string(ce.escaping.size()) + ", f: " + std::to_string(cf.escaping.size())});
    }
}

void genus1(std::vector<SuiteCheck>& out) {
    Poly w11(Symbol::wp({1, 1})), w111(Symbol::wp({1, 1, 1}));
    Poly I = genus1_invariant_I(), J = genus1_invariant_J();
    Poly expect = w111 * w111 - 4 * w11.pow(3) + I * w11 + J;
    out.push_back({"ODE from the Klein determinant", genus1_ode().relation == expect,
                   "wp111^2 - 4wp11^3 + I wp11 + J"});

    auto gen = make_generators(1);
    bool inv = gen.e(I).is_zero() && gen.f(I).is_zero() && gen.e(J).is_zero() && gen.f(J).is_zero();
    out.push_back({"invariants I, J", inv, "annihilated by e and f"});

    Bindings nf{{Symbol::a(4), Poly()}, {Symbol::a(2), Poly()}, {Symbol::a(3), Poly(1)}};
    Poly weier = w111 * w111 - 4 * w11.pow(3) - 4 * Poly(Symbol::a(1)) * w11 - Poly(Symbol::a(0));
    out.push_back({"Weierstrass normal form", substitute(genus1_ode().relation, nf) == weier,
                   "a4 = a2 = 0, a3 = 1"});

    auto so = genus1_second_order();
    out.push_back({"second-order identity", so.factor == 2, "quotient = " + to_string(so.factor) + " x relation"});
}

void genus2(std::vector<SuiteCheck>& out) {
    auto gen = make_generators(2);
    auto hw = genus2_baker_highest_weight();
    auto m = named_multiplet(2, "baker4").multiplet;
    out.push_back({"baker4 multiplet", gen.e(hw).is_zero() && m.dimension() == 5,
                   "dimension " + std::to_string(m.dimension())});

    auto b = named_multiplet(2, "bilinear").multiplet;
    out.push_back({"bilinear multiplet", b.dimension() == 4, "dimension " + std::to_string(b.dimension())});

    Poly k = genus2_kummer().relation;
    unsigned deg = k.degree_where(is_wp);
    out.push_back({"Kummer quartic", deg == 4, "degree " + std::to_string(deg) + " in wp_ij"});

    auto prods = genus2_quadratic_products();
    Poly w222(Symbol::wp({2, 2, 2}));
    Poly lead = 4 * w222 * w222 + minor(klein(2), {0}, {0});
    bool found = false;
    for (auto& id : prods.members) found = found || ratio(id.relation, lead).has_value();
    out.push_back({"quadratic products", prods.members.size() == 10 && found,
                   std::to_string(prods.members.size()) + " identities, -4wp222^2 = |h22..h44| " +
                       (found ? "present" : "absent")});

    Poly detH = determinant(genus2_bordered_H());
    auto parts = split_by(detH, is_border);
    bool lfree = !parts.count(Monomial()) || parts.at(Monomial()).is_zero();
    out.push_back({"bordered determinant has no l-free part", lfree, ""});

    auto ls = genus2_lambda();
    out.push_back({"lambda search", ls.unique && ls.lambda == Poly(Symbol::wp({1, 1, 1})), ls.lambda.to_string()});

    auto fi = genus2_fourindex();
    out.push_back({"four-index identities", fi.members.size() == 5, std::to_string(fi.members.size()) + " members"});
}

void genus3(std::vector<SuiteCheck>& out) {
    auto gen = make_generators(3);
    auto generated = genus3_P5().relations();
    auto printed = genus3_P5_printed().relations();
    bool p5 = generated.size() == 5 && printed.size() == 5;
    std::string factors;
    for (std::size_t i = 0; p5 && i < 5; ++i) {
        auto c = ratio(printed[i], generated[i]);
        p5 = p5 && c.has_value();
        factors += (i ? ", " : "") + (c ? to_string(*c) : std::string("none"));
    }
    out.push_back({"P5 regenerates the printed chain", p5, "factors " + factors});

    for (auto [name, dim] : {std::pair{"P9", 9}, {"P7", 7}, {"P3", 3}}) {
        auto m = named_multiplet(3, name).multiplet;
        out.push_back({std::string(name) + " multiplet", m.dimension() == dim && gen.e(m.members[0]).is_zero(),
                       "dimension " + std::to_string(m.dimension())});
    }

    auto lin = genus3_linear().relations();
    int r = rank(lin);
    out.push_back({"hA span dimension 25", r == 25, "dimension " + std::to_string(r)});

    auto mf = genus3_minor_factorization();
    std::string table;
    for (auto& row : mf.sign)
        for (int s : row) table += s > 0 ? '+' : s < 0 ? '-' : '0';
    out.push_back({"4x4 minors of A", mf.all_four_by_four(), "sign table " + table});
    out.push_back({"some 2x2 minor of A survives", !mf.rank_witnesses.empty(),
                   std::to_string(mf.rank_witnesses.size()) + " witnesses"});

    auto ls = genus3_lambda();
    out.push_back({"lambda search", ls.unique && ls.lambda == Poly::parse("wp[2,2,2] - 2*wp[1,2,3]"),
                   ls.lambda.to_string()});

    auto fi = genus3_fourindex();
    out.push_back({"four-index identities", fi.members.size() == 15, std::to_string(fi.members.size()) + " members"});
}

} // namespace

std::vector<SuiteCheck> symbolic_suite(int g) {
    require_genus(g);
    std::vector<SuiteCheck> out;
    common(g, out);
    if (g == 1) genus1(out);
    if (g == 2) genus2(out);
    if (g == 3) genus3(out);
    return out;
}

} // namespace wpid
