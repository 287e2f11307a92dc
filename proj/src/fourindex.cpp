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

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "catalog_internal.hpp"
#include "transcriptions.hpp"
#include "wpid/catalog.hpp"
#include "wpid/linalg.hpp"

namespace wpid {

using namespace detail;

std::optional<std::pair<Symbol, Rational>> single_fourindex(const Poly& p) {
    std::optional<std::pair<Symbol, Rational>> found;
    for (auto& [mono, c] : split_by(p, is_fourindex)) {
        if (mono.is_one()) continue;
        if (found || mono.degree() != 1 || !c.is_constant()) return std::nullopt;
        found.emplace(mono.factors()[0].first, c.constant_term());
    }
    return found;
}

std::optional<std::pair<Symbol, Poly>> solve_fourindex(const Poly& p) {
    auto s = single_fourindex(p);
    if (!s) return std::nullopt;
    Poly rest = p - s->second * Poly(s->first);
    return std::make_pair(s->first, rest * Rational(-1 / s->second));
}

namespace {

// Symbols of grading two: curve coefficients and two-index wp.
std::vector<Symbol> degree_two_symbols(int g) {
    std::vector<Symbol> out;
    for (int i = 0; i <= 2 * g + 2; ++i) out.push_back(Symbol::a(i));
    for (auto s : wp_symbols(g, 2)) out.push_back(s);
    return out;
}

std::vector<Poly> module_generators(int g) {
    if (g == 2) return genus2_bilinear().relations();
    if (g == 3) return genus3_linear().relations();
    throw UnsupportedGenus("four-index derivation needs genus 2 or 3");
}

Poly border_form(int g, const std::vector<std::vector<Poly>>& b) {
    if (g == 2) {
        auto p = genus2_three_index_vector();
        Poly out;
        for (int i = 0; i < 4; ++i) out += b[0][i] * p[i];
        return out;
    }
    auto a = genus3_A();
    Poly out;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) out += b[0][i] * a(i, j) * b[1][j];
    return out;
}

std::string fourindex_name(Symbol s) {
    std::string n = "wp";
    for (int i : s.wp_indices()) n += std::to_string(i);
    return n;
}

} // namespace

FourIndexDerivation derive_fourindex(int g, const std::vector<int>& border_rows, int dir, const std::string& name) {
    require_genus(g);
    int n = g + 2;
    int m = static_cast<int>(border_rows.size());
    if (m != g - 1) throw std::invalid_argument("genus " + std::to_string(g) + " needs " + std::to_string(g - 1) + " borders");
    std::vector<std::vector<Poly>> b;
    for (int r : border_rows) {
        std::vector<Poly> v(static_cast<std::size_t>(n), Poly());
        v.at(static_cast<std::size_t>(r)) = 1;
        b.push_back(v);
    }
    Poly form = border_form(g, b);
    if (form.is_zero()) throw std::invalid_argument("border choice gives a zero form");
    Poly det = bordered_determinant(klein(g), b, b);
    Rational sign = (m % 2) ? rat(-1, 4) : rat(1, 4);
    auto d = du(g, dir);
    Poly target = sign * d(det);
    int wt = *weight(target, g);
    int wf = *weight(form, g);

    // target = form * Y + (module element), Y quadratic in grading-two symbols.
    SpanBasis span;
    int count = 0;
    auto syms = degree_two_symbols(g);
    for (auto& gen : module_generators(g)) {
        int wg = *weight(gen, g);
        for (auto s : syms)
            if (wg + *symbol_weight(s, g) == wt) {
                span.add(gen * Poly(s));
                ++count;
            }
    }
    std::vector<Poly> ymonos;
    for (std::size_t i = 0; i < syms.size(); ++i)
        for (std::size_t j = i; j < syms.size(); ++j)
            if (wf + *symbol_weight(syms[i], g) + *symbol_weight(syms[j], g) == wt)
                ymonos.push_back(Poly(syms[i]) * Poly(syms[j]));
    FourIndexDerivation out;
    out.y_unique = true;
    for (auto& y : ymonos)
        if (!span.add(form * y)) out.y_unique = false;
    auto red = span.reduce(target);
    if (!red.remainder.is_zero()) throw std::runtime_error("bordered derivative does not factor through the form");
    Poly y;
    for (auto& [i, c] : red.certificate)
        if (i >= count) y += c * ymonos[static_cast<std::size_t>(i - count)];

    Poly rel = 2 * d(form) + y;
    out.highest = make_identity(name, g, rel, Source::Generated, "derivative of a bordered identity", name);
    auto f = make_generators(g).f;
    for (Poly p = rel; !p.is_zero(); p = f(p)) {
        int k = static_cast<int>(out.chain.size());
        out.chain.push_back(make_identity(name + "(" + std::to_string(k) + ")", g, p, Source::Generated,
                                          "derivative of a bordered identity", name));
        if (k > 2 * g + 4) throw std::logic_error("f-chain does not terminate");
    }
    return out;
}

namespace {

// Row reduction on the four-index part; every output row has coefficient -1
// on exactly one four-index symbol. Rows come out in descending symbol order.
std::vector<Poly> baker_friendly(int g, const std::vector<Poly>& rels) {
    auto cols = wp_symbols(g, 4);
    std::reverse(cols.begin(), cols.end());
    std::vector<Poly> rows = rels;
    std::vector<Poly> out;
    std::size_t next = 0;
    for (auto s : cols) {
        Monomial ms(s);
        std::size_t piv = rows.size();
        for (std::size_t r = next; r < rows.size(); ++r)
            if (sgn(rows[r].coeff(ms))) {
                piv = r;
                break;
            }
        if (piv == rows.size()) throw std::runtime_error("four-index identities do not determine " + s.name());
        std::swap(rows[next], rows[piv]);
        rows[next] *= Rational(-1 / rows[next].coeff(ms));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next) continue;
            Rational c = rows[r].coeff(ms);
            if (sgn(c)) rows[r] += c * rows[next];
        }
        ++next;
    }
    for (std::size_t r = next; r < rows.size(); ++r)
        if (!rows[r].is_zero()) throw std::runtime_error("four-index identities are inconsistent");
    out.assign(rows.begin(), rows.begin() + static_cast<long>(next));
    return out;
}

} // namespace

IdentitySet genus2_fourindex() {
    static const IdentitySet s = [] {
        IdentitySet out{"fourindex", 2, {}, true, true};
        auto d = derive_fourindex(2, {0}, 2, "baker4");
        for (auto& id : d.chain) {
            Poly p = normalise_fourindex(id.relation);
            auto sym = single_fourindex(p)->first;
            out.members.push_back(make_identity(fourindex_name(sym), 2, p, Source::Generated,
                                                "derivative of the bordered identity", "baker4"));
        }
        return out;
    }();
    return s;
}

IdentitySet genus3_fourindex() {
    static const IdentitySet s = [] {
        std::vector<Poly> all;
        for (auto& [rows, dir, name] : std::vector<std::tuple<std::vector<int>, int, std::string>>{
                 {{0, 1}, 3, "chain9"}, {{0, 1}, 1, "chain7"}, {{1, 2}, 1, "chain5"}}) {
            for (auto& id : derive_fourindex(3, rows, dir, name).chain) all.push_back(id.relation);
        }
        IdentitySet out{"fourindex", 3, {}, false, true};
        for (auto& p : baker_friendly(3, all)) {
            auto sym = single_fourindex(p)->first;
            out.members.push_back(make_identity(fourindex_name(sym), 3, p, Source::Generated,
                                                "derivatives of the bordered identities"));
        }
        return out;
    }();
    return s;
}

IdentitySet appendix1() {
    IdentitySet out{"appendix1", 3, {}, false, false};
    for (auto& line : appendix1_lines())
        out.members.push_back(make_identity(line.name, 3, relation_of(line), Source::PaperAsPrinted,
                                            "four-index list, covariant form"));
    return out;
}

namespace {

std::vector<Identity> determinant_forms() {
    auto H = [](int i, int j) { return hk(3, i, j); };
    Poly w3333(Symbol::wp({3, 3, 3, 3})), w1333(Symbol::wp({1, 3, 3, 3})), w1133(Symbol::wp({1, 1, 3, 3}));
    std::vector<Identity> v;
    v.push_back(make_identity("hw-3333", 3,
                              -2 * w3333 - (-det2(H(2, 4), H(2, 5), H(5, 4), H(5, 5)) + det2(H(3, 3), H(3, 5), H(5, 3), H(5, 5)) -
                                            det2(H(3, 4), H(3, 5), H(4, 4), H(4, 5))),
                              Source::PaperAsPrinted, "determinant form of the wp3333 identity"));
    v.push_back(make_identity("hw-1333", 3,
                              -2 * w1333 - (-det2(H(1, 4), H(1, 5), H(4, 4), H(4, 5)) + det2(H(1, 3), H(5, 3), H(1, 5), H(5, 5))),
                              Source::PaperAsPrinted, "determinant form of the wp1333 identity"));
    v.push_back(make_identity("hw-1133", 3,
                              -2 * w1133 - (det2(H(1, 1), H(1, 5), H(5, 1), H(5, 5)) - det2(H(1, 4), H(1, 5), H(2, 4), H(2, 5))),
                              Source::PaperAsPrinted, "determinant form of the wp1133 identity"));
    PolyMatrix m{{H(1, 1), H(1, 4), H(1, 5)}, {H(4, 1), H(4, 4), H(5, 5)}, {H(5, 1), H(5, 4), H(5, 5)}};
    Poly w133(Symbol::wp({1, 3, 3}));
    v.push_back(make_identity("quad-133", 3, -w133 * w133 - rat(1, 4) * determinant(m), Source::PaperAsPrinted,
                              "bordered identity for wp133"));
    return v;
}

} // namespace

IdentitySet genus3_main_text() {
    IdentitySet out{"main-text", 3, {}, false, false};
    for (auto& line : main_text_lines())
        out.members.push_back(
            make_identity(line.name, 3, relation_of(line), Source::PaperAsPrinted, "four-index lists, running text"));
    for (auto& id : determinant_forms()) out.members.push_back(id);
    return out;
}

namespace {

IdentitySet genus2_main_text() {
    auto H = [](int i, int j) { return hk(2, i, j); };
    IdentitySet out{"main-text", 2, {}, false, false};
    Poly rhs = rat(1, 2) * (-det2(H(2, 3), H(2, 4), H(3, 3), H(3, 4)) + det2(H(2, 2), H(2, 4), H(4, 2), H(4, 4)) -
                           det2(H(3, 1), H(3, 4), H(4, 1), H(4, 4)));
    out.members.push_back(make_identity("hw-2222", 2, -Poly(Symbol::wp({2, 2, 2, 2})) - rhs, Source::PaperAsPrinted,
                                        "determinant form of the wp2222 identity"));
    Poly w222(Symbol::wp({2, 2, 2}));
    out.members.push_back(make_identity("square-222", 2, -4 * w222 * w222 - minor(klein(2), {0}, {0}),
                                        Source::PaperAsPrinted, "wp222 squared as a minor"));
    out.members.push_back(make_identity("baker4-hw", 2, genus2_baker_highest_weight(), Source::PaperAsPrinted,
                                        "displayed highest-weight four-index identity", "baker4"));
    return out;
}

} // namespace

// ------------------------------------------------------------ Baker's set

TransformationTable baker_transformation() {
    TransformationTable t;
    auto put = [&](int i, int j, const char* shift) {
        t.baker_of_wp[Symbol::wpB({i, j})] = Poly(Symbol::wp({i, j})) - Poly::parse(shift);
    };
    put(1, 1, "3*a2");
    put(1, 2, "2*a3");
    put(1, 3, "1/2*a4");
    put(2, 2, "9*a4");
    put(2, 3, "2*a5");
    put(3, 3, "3*a6");
    return t;
}

Bindings TransformationTable::to_covariant() const {
    Bindings b = baker_of_wp;
    for (auto s : wp_symbols(3, 4)) b[*Symbol::find_wpB(s.wp_indices())] = Poly(s);
    return b;
}

Bindings TransformationTable::to_baker() const {
    Bindings b;
    for (auto& [sb, expr] : baker_of_wp) {
        // expr = wp - shift, so wp = wpB + shift.
        Symbol w = *Symbol::find_wp(sb.wp_indices());
        b[w] = Poly(sb) + (Poly(w) - expr);
    }
    for (auto s : wp_symbols(3, 4)) b[s] = Poly(*Symbol::find_wpB(s.wp_indices()));
    return b;
}

IdentitySet appendix2() {
    IdentitySet out{"appendix2-as-printed", 3, {}, false, false};
    for (auto& line : appendix2_lines())
        out.members.push_back(make_identity(line.name, 3, relation_of(line), Source::PaperAsPrinted,
                                            "four-index list, Baker's variables"));
    return out;
}

IdentitySet appendix2_transformed() {
    IdentitySet out{"appendix2-transformed", 3, {}, false, false};
    auto b = baker_transformation().to_covariant();
    for (auto& m : appendix2().members) {
        Identity id = m;
        id.relation = substitute(m.relation, b);
        id.weight = weight(id.relation, 3);
        id.ref = "Baker's list rewritten in covariant variables";
        out.members.push_back(id);
    }
    return out;
}

IdentitySet baker_from_generated() {
    IdentitySet out{"appendix2-corrected", 3, {}, false, true};
    auto b = baker_transformation().to_baker();
    for (auto& m : genus3_fourindex().members) {
        Poly p = normalise_fourindex(substitute(m.relation, b), 1);
        Identity id;
        id.name = "wpB" + m.name.substr(2);
        id.genus = 3;
        id.relation = p;
        id.weight = weight(p, 3);
        id.source = Source::OracleCorrected;
        id.ref = "generated list in Baker's variables";
        out.members.push_back(id);
    }
    return out;
}

PolyMatrix baker_h_printed() {
    auto& rows = baker_h_rows();
    PolyMatrix m(5, 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) m(i, j) = parse_shorthand(rows[i][j]);
    return m;
}

TransformReport baker_transform_report() {
    TransformReport rep;
    auto tb = baker_transformation().to_baker();
    auto a1 = appendix1().members;
    auto gen = genus3_fourindex().members;
    auto find = [](const std::vector<Identity>& v, Symbol s) -> std::optional<Poly> {
        for (auto& id : v) {
            auto sol = solve_fourindex(id.relation);
            if (sol && sol->first == s) return sol->second;
        }
        return std::nullopt;
    };
    std::vector<Identity> a1b, genb;
    for (auto id : a1) {
        id.relation = substitute(id.relation, tb);
        a1b.push_back(id);
    }
    for (auto id : gen) {
        id.relation = substitute(id.relation, tb);
        genb.push_back(id);
    }
    for (auto& id : appendix2().members) {
        TransformPair p;
        p.symbol = id.name;
        auto sol = solve_fourindex(id.relation);
        if (sol) {
            p.from_appendix2 = sol->second;
            p.from_appendix1 = find(a1b, sol->first);
            p.from_generated = find(genb, sol->first);
        }
        if (p.from_appendix2 && p.from_appendix1) {
            p.difference = *p.from_appendix2 - *p.from_appendix1;
            p.appendix1_match = p.difference.is_zero();
        }
        if (p.from_appendix2 && p.from_generated) p.generated_match = *p.from_appendix2 == *p.from_generated;
        rep.pairs.push_back(p);
    }
    auto hb = baker_h_printed();
    auto& h = klein(3);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (substitute(h(i, j), tb) != hb(i, j))
                rep.h_mismatches.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    return rep;
}

// --------------------------------------------------------------- lookup

namespace {

IdentitySet from_multiplet(int g, const std::string& name) {
    auto rec = named_multiplet(g, name);
    IdentitySet out{name, g, {}, true, true};
    for (int i = 0; i < rec.multiplet.dimension(); ++i)
        out.members.push_back(make_identity(name + "(" + std::to_string(i) + ")", g, rec.multiplet.members[i],
                                            Source::Generated, "highest weight and its f-images", name));
    return out;
}

IdentitySet single(const Identity& id) {
    IdentitySet s{id.name, id.genus, {id}, false, id.source != Source::PaperAsPrinted};
    return s;
}

IdentitySet h_minors(int g) {
    IdentitySet out{"h-minors", g, {}, false, true};
    auto& h = klein(g);
    int n = g + 2;
    out.members.push_back(make_identity("det", g, determinant(h), Source::Generated, "Klein determinant"));
    if (g == 3)
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                out.members.push_back(make_identity("minor[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]",
                                                    g, minor(h, {i}, {j}), Source::Generated, "Klein 4x4 minor"));
    return out;
}

} // namespace

std::vector<std::string> set_names(int g) {
    require_genus(g);
    if (g == 1) return {"ode", "second-order"};
    if (g == 2)
        return {"bilinear",           "kummer", "quadratic", "quadratic-as-printed", "quadratic-products",
                "fourindex",          "main-text", "baker4"};
    return {"P5",       "P5-printed", "linear",    "P9",        "P7",        "P3",
            "h-minors", "quadratic",  "quadratic-leading",       "quadratic-family",     "fourindex",
            "appendix1", "main-text", "appendix2-as-printed", "appendix2-transformed", "appendix2-corrected"};
}

IdentitySet identity_set(int g, const std::string& name) {
    require_genus(g);
    if (g == 1) {
        if (name == "ode") return single(genus1_ode());
        if (name == "second-order") return single(genus1_second_order().identity);
    } else if (g == 2) {
        if (name == "bilinear") return genus2_bilinear();
        if (name == "kummer") return single(genus2_kummer());
        if (name == "quadratic") return single(genus2_quadratic());
        if (name == "quadratic-as-printed") return single(genus2_quadratic_as_printed());
        if (name == "quadratic-products") return genus2_quadratic_products();
        if (name == "fourindex") return genus2_fourindex();
        if (name == "main-text") return genus2_main_text();
        if (name == "baker4") return from_multiplet(2, "baker4");
    } else {
        if (name == "P5") return genus3_P5();
        if (name == "P5-printed") return genus3_P5_printed();
        if (name == "linear") return genus3_linear();
        if (name == "P9" || name == "P7" || name == "P3" || name == "P1") return from_multiplet(3, name);
        if (name == "h-minors") return h_minors(3);
        if (name == "quadratic") return single(genus3_quadratic());
        if (name == "quadratic-leading") return single(genus3_quadratic_leading());
        if (name == "quadratic-family") return genus3_quadratic_family();
        if (name == "fourindex") return genus3_fourindex();
        if (name == "appendix1") return appendix1();
        if (name == "main-text") return genus3_main_text();
        if (name == "appendix2-as-printed") return appendix2();
        if (name == "appendix2-transformed") return appendix2_transformed();
        if (name == "appendix2-corrected") return baker_from_generated();
    }
    throw std::invalid_argument("no identity set " + name + " in genus " + std::to_string(g));
}

} // namespace wpid
