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

// Prints one line per acceptance criterion. With --expect-fail N,M the exit
// status is 0 exactly when the failing criteria are N, M; otherwise it is 0
// exactly when everything passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wpid/catalog.hpp"
#include "wpid/curve.hpp"
#include "wpid/linalg.hpp"
#include "wpid/oracle.hpp"

using namespace wpid;

namespace {

Poly P(const char* s) { return Poly::parse(s); }

// Collects failed sub-checks of one criterion.
struct Result {
    std::vector<std::string> failed;
    void check(bool ok, const std::string& what) {
        if (!ok) failed.push_back(what);
    }
};

bool vanishes(const Assignment& a, const Poly& p) {
    auto ev = evaluate(p, a);
    return ev.value && ev.value->is_zero();
}

bool all_hold(const IdentitySet& s, const Assignment& a, int draws = 5) {
    Lcg rng(1);
    for (auto& c : verify(s, a, rng, draws))
        if (c.verdict != Verdict::Holds) return false;
    return true;
}

bool is_wp(Symbol s) { return s.kind() == SymKind::Wp; }

void criterion1(Result& r) {
    for (int g = 1; g <= 3; ++g) {
        auto gen = make_generators(g);
        auto v = curve_poly(g).v;
        r.check(check_commutators(g).ok(), "commutators g=" + std::to_string(g));
        r.check(gen.e(v).is_zero(), "e(v) g=" + std::to_string(g));
        r.check((gen.f(v) + 2 * (g + 1) * Poly(Symbol::x()) * v).is_zero(), "f(v) g=" + std::to_string(g));
    }
}

void criterion2(Result& r) {
    Poly I = genus1_invariant_I(), J = genus1_invariant_J();
    r.check(I == P("a0*a4 - 4*a1*a3 + 3*a2^2"), "I");
    r.check(J == P("a0*a2*a4 - a0*a3^2 + 2*a1*a2*a3 - a2^3 - a1^2*a4"), "J");
    Poly w11(Symbol::wp({1, 1}));
    Poly expanded = rat(-1, 4) * determinant(klein_matrix(1).h);
    r.check(expanded == 4 * w11.pow(3) - I * w11 - J, "-1/4 det h");
    auto gen = make_generators(1);
    for (auto& p : {I, J}) r.check(gen.e(p).is_zero() && gen.f(p).is_zero(), "invariants");
    Bindings nf{{Symbol::a(4), Poly()}, {Symbol::a(2), Poly()}, {Symbol::a(3), Poly(1)}};
    r.check(substitute(expanded, nf) == P("4*wp[1,1]^3 + 4*a1*wp[1,1] + a0"), "normal form");
    auto so = genus1_second_order();
    r.check(so.quotient == so.factor * so.identity.relation && so.factor == 2, "second order");
}

void criterion3(Result& r) {
    auto a = solve_wp(make_instance(1, {1, 0, 0, 0, 4}));
    auto w11 = evaluate(P("wp[1,1] - (2*x1^2 - y1)"), a);
    auto w111 = evaluate(P("wp[1,1,1] - (4*x1*y1 - 8*x1^3)"), a);
    r.check(w11.value && w11.value->is_zero(), "wp11 on (1,0,0,0,4)");
    r.check(w111.value && w111.value->is_zero(), "wp111 on (1,0,0,0,4)");
    r.check(vanishes(a, genus1_ode().relation), "ODE on (1,0,0,0,4)");
    for (int v = 0; v < 2; ++v) {
        auto b = solve_wp(default_instance(1, v));
        r.check(vanishes(b, genus1_ode().relation), "ODE on curve " + std::to_string(v));
        r.check(vanishes(b, genus1_second_order().identity.relation), "second order on curve " + std::to_string(v));
    }
}

void criterion4(Result& r) {
    auto hw = genus2_baker_highest_weight();
    r.check(make_generators(2).e(hw).is_zero(), "e(hw)");
    r.check(generate_multiplet(hw, 2, 9).dimension() == 5, "multiplet dimension");
    Poly k = genus2_kummer().relation;
    r.check(k.degree_where(is_wp) == 4, "det h quartic");
    r.check(genus2_quadratic_products().members.size() == 10, "10 products");
    auto parts = split_by(genus2_quadratic().relation, [](Symbol s) { return s.kind() == SymKind::BorderL; });
    Poly l00 = parts.count(Monomial(Symbol::l(0), 2)) ? parts.at(Monomial(Symbol::l(0), 2)) : Poly();
    Poly h234 = minor(klein_matrix(2).h, {0}, {0});
    r.check(4 * l00 == P("4*wp[2,2,2]^2") + h234, "-4 wp222^2 = |h22..h44|");
    bool in_products = false;
    for (auto& m : genus2_quadratic_products().members)
        in_products = in_products || m.relation * l00.leading().coeff == l00 * m.relation.leading().coeff;
    r.check(in_products, "l0^2 coefficient among the products");
    auto dh = split_by(determinant(genus2_bordered_H()), [](Symbol s) { return s.kind() == SymKind::BorderL; });
    r.check(!dh.count(Monomial()), "l-free part of det H");
}

void criterion5(Result& r) {
    for (int v = 0; v < 2; ++v) {
        auto a = solve_wp(default_instance(2, v));
        std::string c = " on curve " + std::to_string(v);
        auto bil = genus2_bilinear();
        r.check(vanishes(a, bil.members[0].relation) && vanishes(a, bil.members[1].relation), "rows 1, 2" + c);
        r.check(all_hold(bil, a), "bilinear" + c);
        r.check(vanishes(a, genus2_kummer().relation), "Kummer" + c);
        r.check(all_hold(genus2_quadratic_products(), a), "products" + c);
        r.check(all_hold(genus2_fourindex(), a), "four-index" + c);
        r.check(a.integrability_failures.empty(), "integrability" + c);
    }
}

void criterion6(Result& r) {
    auto gen = genus3_P5().relations();
    auto printed = genus3_P5_printed().relations();
    for (std::size_t k = 1; k < 5; ++k) {
        Rational c = printed[k].leading().coeff / gen[k].leading().coeff;
        r.check(printed[k] == c * gen[k], "P5(" + std::to_string(k) + ")");
    }
    auto lin = genus3_linear().relations();
    auto g3 = make_generators(3);
    r.check(closure_check(lin, g3.e).closed() && closure_check(lin, g3.f).closed(), "hA closure");
    SpanBasis span;
    for (auto& p : lin) span.add(p);
    r.check(span.dimension() == 25, "hA span dimension " + std::to_string(span.dimension()) + " (25 claimed)");
    auto mf = genus3_minor_factorization();
    r.check(mf.all_four_by_four(), "4x4 minors of A");
    r.check(!mf.rank_witnesses.empty(), "nonzero 2x2 minor of A");
    auto ls = genus3_lambda();
    r.check(ls.unique && ls.lambda == P("wp[2,2,2] - 2*wp[1,2,3]"), "lambda");
    auto a = solve_wp(default_instance(3, 0));
    r.check(vanishes(a, genus3_quadratic_leading().relation), "leading-term identity in the oracle");
}

void criterion7(Result& r) {
    for (int v = 0; v < 2; ++v) {
        auto a = solve_wp(default_instance(3, v));
        std::string c = " on curve " + std::to_string(v);
        r.check(all_hold(genus3_linear(), a), "hA" + c);
        r.check(all_hold(genus3_P5(), a), "P5" + c);
        r.check(all_hold(identity_set(3, "h-minors"), a), "det h and 4x4 minors" + c);
        r.check(!vanishes(a, minor(klein_matrix(3).h, {0, 1}, {0, 1})), "a 3x3 minor survives" + c);
        r.check(all_hold(identity_set(3, "quadratic"), a, 5), "bordered identity, 5 draws" + c);
        r.check(all_hold(genus3_fourindex(), a), "15 four-index" + c);
        r.check(a.integrability_failures.empty(), "integrability" + c);
    }
}

void criterion8(Result& r) {
    auto rep = baker_transform_report();
    // Lines the oracle certifies on both curves.
    std::set<std::string> certified, rejected;
    for (int v = 0; v < 2; ++v) {
        Lcg rng(1);
        for (auto& c : verify(appendix2(), solve_wp(default_instance(3, v)), rng))
            (c.verdict == Verdict::Holds ? certified : rejected).insert(c.name);
    }
    for (auto& n : rejected) certified.erase(n);
    auto disc = discrepancy_report();
    auto listed = [&](const std::string& topic) {
        for (auto& d : disc)
            if (d.topic == topic && d.residual) return true;
        return false;
    };
    for (auto& p : rep.pairs) {
        if (certified.count(p.symbol)) r.check(p.appendix1_match, p.symbol + " certified but unmatched");
        if (!p.appendix1_match) r.check(listed("appendix-2 " + p.symbol + " vs appendix-1"), p.symbol + " unlisted");
    }
    bool b2223 = !certified.count("wpB2223");
    for (auto& p : rep.pairs)
        if (p.symbol == "wpB2223") b2223 = b2223 || !p.appendix1_match;
    r.check(b2223, "wpB2223 line");
    r.check(!disc.empty(), "report non-empty");
}

void criterion9(Result& r) {
    for (int g = 1; g <= 3; ++g) {
        auto pf = polar_form(g);
        auto pc = check_polar_form(pf);
        std::string s = " g=" + std::to_string(g);
        r.check(pc.on_curve, "F(x_m, x_m) = a(x_m)" + s);
        r.check(pc.symmetric, "symmetry" + s);
        r.check(pc.e_annihilates && pc.f_annihilates, "e/f annihilation" + s);
        auto t = tangency_check(pf);
        r.check(t.meets_bound, "tangency " + std::to_string(t.multiplicity) + " < " + std::to_string(g + 1) + s);
        if (g == 1) r.check(t.multiplicity == 2, "tangency exactly 2 for g=1");
    }
    Poly reduced = substitute(polar_form(2).ftilde, {{Symbol::a(6), Poly()}, {Symbol::a(5), Poly(rat(2, 3))}});
    r.check(reduced == classical_polar_form_genus2(), "classical genus-2 form at a6 = 0, a5 = 2/3");
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (auto& x : v) s += (s.empty() ? "" : "; ") + x;
    return s;
}

} // namespace

int main(int argc, char** argv) {
    std::set<int> expect;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--expect-fail" && i + 1 < argc) {
            std::stringstream ss(argv[++i]);
            std::string n;
            while (std::getline(ss, n, ',')) expect.insert(std::stoi(n));
        } else {
            std::fprintf(stderr, "usage: acceptance [--expect-fail N,M,...]\n");
            return 2;
        }
    }
    const std::vector<std::pair<const char*, std::function<void(Result&)>>> criteria = {
        {"sl2 structure and curve covariance", criterion1},
        {"genus-1 symbolic", criterion2},
        {"genus-1 oracle", criterion3},
        {"genus-2 symbolic", criterion4},
        {"genus-2 oracle", criterion5},
        {"genus-3 symbolic", criterion6},
        {"genus-3 oracle", criterion7},
        {"Baker equivalence", criterion8},
        {"polar forms", criterion9},
    };
    std::set<int> failed;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Result r;
        auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(r);
        } catch (const std::exception& e) {
            r.failed.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        int n = static_cast<int>(i + 1);
        if (!r.failed.empty()) failed.insert(n);
        std::printf("criterion %d: %s  %s (%.2fs)%s%s\n", n, r.failed.empty() ? "PASS" : "FAIL", criteria[i].first,
                    secs, r.failed.empty() ? "" : "  failing: ", join(r.failed).c_str());
        std::fflush(stdout);
    }
    return failed == expect ? 0 : 1;
}
