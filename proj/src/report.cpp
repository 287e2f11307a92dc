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

#include "catalog_internal.hpp"
#include "wpid/catalog.hpp"
#include "wpid/curve.hpp"
#include "wpid/linalg.hpp"

namespace wpid {

using namespace detail;

namespace {

void polar_items(std::vector<Discrepancy>& out) {
    Poly derived = polar_form(1).ftilde;
    Poly printed = printed_polar_form_genus1();
    if (derived != printed)
        out.push_back({"genus-1 polar form", "displayed form differs from the invariant solution", printed - derived});

    auto built = build_x_rep(2);
    auto shown = printed_x7();
    for (std::size_t k = 0; k < built.size() && k < shown.size(); ++k)
        if (built[k].numerator != shown[k].numerator)
            out.push_back({"genus-2 X7 component " + std::to_string(k), "displayed numerator differs from the f-chain",
                           shown[k].numerator - built[k].numerator});

    Bindings normal{{Symbol::a(6), Poly(0)}, {Symbol::a(5), Poly(rat(2, 3))}};
    Poly diff = substitute(polar_form(2).ftilde, normal) - classical_polar_form_genus2();
    if (!diff.is_zero())
        out.push_back({"genus-2 classical polar form",
                       "invariant form at a6 = 0, a5 = 2/3 differs from the classical one", diff});
}

void genus2_items(std::vector<Discrepancy>& out) {
    Poly d = genus2_quadratic_as_printed().relation - genus2_quadratic().relation;
    out.push_back({"genus-2 bordered identity", "displayed sign of the determinant term is reversed", d});

    SpanBasis span;
    for (auto& m : genus2_fourindex().members) span.add(m.relation);
    for (auto& m : identity_set(2, "main-text").members) {
        if (!single_fourindex(m.relation) && m.relation.degree_where(is_fourindex) == 0) {
            // Quadratic three-index relation: compare with the bordered family.
            SpanBasis q;
            for (auto& p : genus2_quadratic_products().members) q.add(p.relation);
            auto r = q.reduce(m.relation).remainder;
            if (!r.is_zero()) out.push_back({"genus-2 " + m.name, "not in the span of the bordered products", r});
            continue;
        }
        auto r = span.reduce(m.relation).remainder;
        if (!r.is_zero()) out.push_back({"genus-2 " + m.name, "not in the span of the generated four-index set", r});
    }
}

void genus3_items(std::vector<Discrepancy>& out) {
    SpanBasis lin;
    for (auto& m : genus3_linear().members) lin.add(m.relation);
    if (lin.dimension() != 25) {
        Poly tr;
        auto ms = genus3_linear().members;
        for (int i = 0; i < 5; ++i) tr += ms[static_cast<std::size_t>(6 * i)].relation;
        out.push_back({"genus-3 hA span", "span of the 25 entries has dimension " + std::to_string(lin.dimension()) +
                                              "; the singlet is the trace, which is identically " + tr.to_string(),
                       std::nullopt});
    }
    auto mf = genus3_minor_factorization();
    if (mf.three_by_three_divisible != mf.three_by_three_checked)
        out.push_back({"genus-3 3x3 minors of A",
                       std::to_string(mf.three_by_three_checked - mf.three_by_three_divisible) +
                           " minors are not divisible by a single P5 member; " +
                           std::to_string(mf.three_by_three_in_ideal) + " of " +
                           std::to_string(mf.three_by_three_checked) + " lie in the P5 ideal",
                       std::nullopt});

    auto gen = genus3_fourindex().members;
    auto a1 = appendix1().members;
    for (std::size_t i = 0; i < a1.size(); ++i)
        for (auto& g : gen)
            if (g.name == a1[i].name && g.relation != a1[i].relation)
                out.push_back({"appendix-1 " + a1[i].name, "differs from the generated relation",
                               a1[i].relation - g.relation});

    SpanBasis span;
    for (auto& g : gen) span.add(g.relation);
    for (auto& m : genus3_main_text().members) {
        if (m.name == "quad-133") {
            std::vector<Poly> e2(5, Poly()), e3(5, Poly());
            e2[1] = 1;
            e3[2] = 1;
            Poly w133(Symbol::wp({1, 3, 3}));
            Poly fixed = -w133 * w133 - rat(1, 4) * bordered_determinant(klein(3), {e2, e3}, {e2, e3});
            if (fixed != m.relation)
                out.push_back({"main-text quad-133", "displayed minor differs from the bordered determinant",
                               m.relation - fixed});
            continue;
        }
        auto r = span.reduce(m.relation).remainder;
        if (!r.is_zero())
            out.push_back({"main-text " + m.name, "not in the span of the generated four-index set", r});
    }

    auto rep = baker_transform_report();
    for (auto& p : rep.pairs) {
        if (!p.from_appendix2) {
            out.push_back({"appendix-2 " + p.symbol, "not solvable for a single four-index symbol", std::nullopt});
            continue;
        }
        if (!p.generated_match && p.from_generated)
            out.push_back({"appendix-2 " + p.symbol, "differs from the transformed generated relation",
                           *p.from_appendix2 - *p.from_generated});
        if (!p.appendix1_match && p.from_appendix1)
            out.push_back({"appendix-2 " + p.symbol + " vs appendix-1", "transformed appendix-1 relation differs",
                           p.difference});
    }
    for (auto& e : rep.h_mismatches)
        out.push_back({"Baker h entry " + e, "differs from the transformed Klein matrix", std::nullopt});
}

} // namespace

std::vector<Discrepancy> discrepancy_report() {
    std::vector<Discrepancy> out;
    polar_items(out);
    genus2_items(out);
    genus3_items(out);
    return out;
}

} // namespace wpid
