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

#include "wpid/catalog.hpp"

#include <algorithm>
#include <stdexcept>

#include "catalog_internal.hpp"
#include "transcriptions.hpp"
#include "wpid/curve.hpp"
#include "wpid/linalg.hpp"

namespace wpid {

namespace detail {

const PolyMatrix& klein(int g) {
    require_genus(g);
    static const std::vector<PolyMatrix> hs = {klein_matrix(1).h, klein_matrix(2).h, klein_matrix(3).h};
    return hs[g - 1];
}

const Poly& hk(int g, int i, int j) { return klein(g)(i - 1, j - 1); }

Poly det2(const Poly& a, const Poly& b, const Poly& c, const Poly& d) { return a * d - b * c; }

bool is_fourindex(Symbol s) {
    return (s.kind() == SymKind::Wp || s.kind() == SymKind::WpB) && s.wp_indices().size() == 4;
}

std::vector<RatVec> poly_kernel(const std::vector<Poly>& polys) {
    std::map<Monomial, int, std::greater<>> index;
    for (auto& p : polys)
        for (auto& t : p.terms()) index.emplace(t.mono, 0);
    int r = 0;
    for (auto& [m, i] : index) i = r++;
    RatMat m(static_cast<std::size_t>(r), RatVec(polys.size()));
    for (std::size_t c = 0; c < polys.size(); ++c)
        for (auto& t : polys[c].terms()) m[static_cast<std::size_t>(index[t.mono])][c] = t.coeff;
    return nullspace(m, static_cast<int>(polys.size()));
}

Poly normalise_fourindex(const Poly& p, const Rational& target) {
    auto s = single_fourindex(p);
    if (!s) throw std::invalid_argument("relation is not linear in a single four-index symbol");
    return p * Rational(target / s->second);
}

} // namespace detail

using namespace detail;

std::string to_string(Source s) {
    switch (s) {
    case Source::PaperAsPrinted: return "paper-as-printed";
    case Source::Generated: return "generated";
    case Source::OracleCorrected: return "oracle-corrected";
    }
    return "?";
}

Identity make_identity(std::string name, int genus, Poly relation, Source source, std::string ref,
                       std::string multiplet) {
    if (relation.is_zero()) throw std::invalid_argument("identity " + name + " has a zero relation");
    Identity id;
    id.name = std::move(name);
    id.genus = genus;
    id.weight = weight(relation, genus);
    id.relation = std::move(relation);
    id.multiplet = std::move(multiplet);
    id.source = source;
    id.ref = std::move(ref);
    return id;
}

std::vector<Poly> IdentitySet::relations() const {
    std::vector<Poly> out;
    for (auto& m : members) out.push_back(m.relation);
    return out;
}

// ------------------------------------------------------------------ genus 1

Poly genus1_invariant_I() { return Poly::parse("a0*a4 - 4*a1*a3 + 3*a2^2"); }
Poly genus1_invariant_J() { return Poly::parse("a0*a2*a4 - a0*a3^2 + 2*a1*a2*a3 - a2^3 - a1^2*a4"); }

Identity genus1_ode() {
    Poly w111(Symbol::wp({1, 1, 1}));
    return make_identity("ode", 1, w111 * w111 + rat(1, 4) * determinant(klein(1)), Source::Generated,
                         "genus-1 Klein determinant");
}

SecondOrder genus1_second_order() {
    SecondOrder out;
    Poly rel = genus1_ode().relation;
    out.derivative = du(1, 1)(rel);
    out.quotient = exact_div(out.derivative, Poly(Symbol::wp({1, 1, 1})));
    Poly w11(Symbol::wp({1, 1}));
    Poly second = Poly(Symbol::wp({1, 1, 1, 1})) - 6 * w11 * w11 + rat(1, 2) * genus1_invariant_I();
    out.factor = out.quotient.leading().coeff / second.coeff(out.quotient.leading().mono);
    if (out.quotient != out.factor * second) throw std::logic_error("second-order quotient is not a multiple");
    out.identity = make_identity("second-order", 1, second, Source::Generated, "derivative of the genus-1 ODE");
    return out;
}

// ------------------------------------------------------------------ genus 2

std::vector<Poly> genus2_three_index_vector() {
    return {Poly(Symbol::wp({2, 2, 2})), -Poly(Symbol::wp({1, 2, 2})), Poly(Symbol::wp({1, 1, 2})),
            -Poly(Symbol::wp({1, 1, 1}))};
}

IdentitySet genus2_bilinear() {
    IdentitySet s{"bilinear", 2, {}, true, true};
    auto p = genus2_three_index_vector();
    auto& h = klein(2);
    for (int i = 0; i < 4; ++i) {
        Poly row;
        for (int j = 0; j < 4; ++j) row += h(i, j) * p[j];
        s.members.push_back(make_identity("row" + std::to_string(i + 1), 2, row, Source::Generated,
                                          "Klein matrix times the three-index vector", "bilinear"));
    }
    return s;
}

Identity genus2_kummer() {
    return make_identity("kummer", 2, determinant(klein(2)), Source::Generated, "genus-2 Kummer surface");
}

Poly genus2_linear_form() {
    auto p = genus2_three_index_vector();
    Poly out;
    for (int i = 0; i < 4; ++i) out += Poly(Symbol::l(i)) * p[i];
    return out;
}

namespace {

std::vector<Poly> border(Symbol (*make)(int), int n) {
    std::vector<Poly> v;
    for (int i = 0; i < n; ++i) v.push_back(Poly(make(i)));
    return v;
}

std::vector<Poly> unit(int n, int i) {
    std::vector<Poly> v(static_cast<std::size_t>(n), Poly());
    v[static_cast<std::size_t>(i)] = 1;
    return v;
}

std::vector<Poly> numeric(const std::vector<Rational>& v) {
    std::vector<Poly> out;
    for (auto& q : v) out.push_back(Poly(q));
    return out;
}

Poly genus2_quadratic_relation(const std::vector<Poly>& l, int sign) {
    auto p = genus2_three_index_vector();
    Poly form;
    for (int i = 0; i < 4; ++i) form += l[i] * p[i];
    return form * form + Rational(rat(sign, 4)) * bordered_determinant(klein(2), {l}, {l});
}

Poly genus3_bilinear_form(const std::vector<Poly>& l, const std::vector<Poly>& k) {
    auto a = genus3_A();
    Poly out;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (!a(i, j).is_zero()) out += l[i] * a(i, j) * k[j];
    return out;
}

Poly genus3_quadratic_relation(const std::vector<Poly>& l, const std::vector<Poly>& k) {
    Poly form = genus3_bilinear_form(l, k);
    return form * form + rat(1, 4) * bordered_determinant(klein(3), {l, k}, {l, k});
}

bool is_border(Symbol s) { return s.kind() == SymKind::BorderL || s.kind() == SymKind::BorderK; }

std::string monomial_name(const Monomial& m) {
    std::string s;
    for (auto& [sym, e] : m.factors()) {
        if (!s.empty()) s += "*";
        s += sym.name();
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

IdentitySet coefficient_family(const std::string& name, int g, const Poly& rel, const std::string& ref) {
    IdentitySet s{name, g, {}, false, true};
    std::vector<Poly> seen;
    for (auto& [mono, c] : split_by(rel, is_border)) {
        if (c.is_zero() || std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
        seen.push_back(c);
        s.members.push_back(make_identity(monomial_name(mono), g, c, Source::Generated, ref));
    }
    return s;
}

} // namespace

PolyMatrix genus2_bordered_H() {
    auto l = border(&Symbol::l, 4);
    return bordered_matrix(klein(2), {l}, {l});
}

Identity genus2_quadratic() {
    static const Identity id = make_identity("quadratic", 2, genus2_quadratic_relation(border(&Symbol::l, 4), -1),
                                             Source::OracleCorrected, "single-bordered Klein determinant");
    return id;
}

Identity genus2_quadratic_as_printed() {
    return make_identity("quadratic-as-printed", 2, genus2_quadratic_relation(border(&Symbol::l, 4), 1),
                         Source::PaperAsPrinted, "single-bordered Klein determinant, displayed sign");
}

Identity genus2_quadratic_with(const std::vector<Rational>& l) {
    if (l.size() != 4) throw std::invalid_argument("genus-2 border has four entries");
    return make_identity("quadratic", 2, genus2_quadratic_relation(numeric(l), -1), Source::OracleCorrected,
                         "single-bordered Klein determinant");
}

IdentitySet genus2_quadratic_products() {
    return coefficient_family("quadratic-products", 2, genus2_quadratic().relation,
                              "coefficient of the bordered identity");
}

Poly genus2_baker_highest_weight() {
    return Poly::parse("1/3*(-wp[2,2,2,2] + 6*wp[2,2]^2) - (a2*a6 - 4*a3*a5 + 3*a4^2 + a6*wp[1,1] - 2*a5*wp[1,2] + "
                       "a4*wp[2,2])");
}

// ------------------------------------------------------------------ genus 3

PolyMatrix genus3_A() {
    static const PolyMatrix a = [] {
        PolyMatrix m(5, 5);
        auto& rows = genus3_A_rows();
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) m(i, j) = parse_shorthand(rows[i][j]);
        return m;
    }();
    return a;
}

IdentitySet genus3_P5() {
    static const IdentitySet s = [] {
        IdentitySet out{"P5", 3, {}, true, true};
        auto mp = generate_multiplet(parse_shorthand(genus3_P5_lines()[0]), 3, 5);
        for (int i = 0; i < mp.dimension(); ++i)
            out.members.push_back(make_identity("P5(" + std::to_string(i) + ")", 3, mp.members[i], Source::Generated,
                                                "quadratic three-index relations", "P5"));
        return out;
    }();
    return s;
}

IdentitySet genus3_P5_printed() {
    IdentitySet out{"P5-printed", 3, {}, true, false};
    auto& lines = genus3_P5_lines();
    for (std::size_t i = 0; i < lines.size(); ++i)
        out.members.push_back(make_identity("P5(" + std::to_string(i) + ")", 3, parse_shorthand(lines[i]),
                                            Source::PaperAsPrinted, "quadratic three-index relations", "P5"));
    return out;
}

IdentitySet genus3_linear() {
    static const IdentitySet s = [] {
        IdentitySet out{"linear", 3, {}, true, true};
        PolyMatrix ha = klein(3) * genus3_A();
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                out.members.push_back(make_identity("hA[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]",
                                                    3, ha(i, j), Source::Generated,
                                                    "Klein matrix times the three-index matrix"));
        return out;
    }();
    return s;
}

namespace {

Poly lin(const char* s) { return parse_shorthand(s); }

} // namespace

Poly genus3_P9_highest() {
    return hk(3, 2, 5) * lin("p333") - hk(3, 3, 5) * lin("p233") + hk(3, 4, 5) * lin("p223 - p133") -
           hk(3, 5, 5) * lin("p222 - 2*p123");
}

Poly genus3_base_first() {
    return hk(3, 2, 4) * lin("p333") - hk(3, 3, 4) * lin("p233") + hk(3, 4, 4) * lin("p223 - p133") -
           hk(3, 5, 4) * lin("p222 - 2*p123");
}

Poly genus3_P9_last_printed() {
    return hk(3, 1, 1) * lin("p222 - 2*p123") - hk(3, 1, 2) * lin("p122 - p113") + hk(3, 1, 3) * lin("p112") -
           hk(3, 1, 4) * lin("p111");
}

Poly genus3_P7_highest_printed() {
    return -4 * hk(3, 1, 5) * lin("p333") + 4 * hk(3, 3, 5) * lin("p133") - hk(3, 4, 5) * lin("2*p123 + p222") +
           4 * hk(3, 5, 5) * lin("p122 - p113") - hk(3, 3, 4) * lin("p233") + hk(3, 2, 4) * lin("p333") -
           hk(3, 4, 4) * lin("p133 - p223");
}

Identity genus3_quadratic() {
    static const Identity id =
        make_identity("quadratic", 3, genus3_quadratic_relation(border(&Symbol::l, 5), border(&Symbol::k, 5)),
                      Source::Generated, "doubly bordered Klein determinant");
    return id;
}

IdentitySet genus3_quadratic_family() {
    static const IdentitySet s =
        coefficient_family("quadratic-family", 3, genus3_quadratic().relation, "coefficient of the bordered identity");
    return s;
}

Identity genus3_quadratic_leading() {
    return make_identity("quadratic-leading", 3, genus3_quadratic_relation(unit(5, 0), unit(5, 1)), Source::Generated,
                         "doubly bordered Klein determinant, first two unit borders");
}

Identity genus3_quadratic_with(const std::vector<Rational>& l, const std::vector<Rational>& k) {
    if (l.size() != 5 || k.size() != 5) throw std::invalid_argument("genus-3 borders have five entries");
    Poly rel = genus3_quadratic_relation(numeric(l), numeric(k));
    Identity id;
    id.name = "quadratic";
    id.genus = 3;
    id.relation = rel;
    id.weight = weight(rel, 3);
    id.source = Source::Generated;
    id.ref = "doubly bordered Klein determinant";
    return id;
}

// ---------------------------------------------------------- sl2 structure

std::vector<Poly> genus3_linear_highest_weights(int w) {
    auto e = make_generators(3).e;
    std::vector<Poly> basis;
    for (auto& m : genus3_linear().members)
        if (m.weight && *m.weight == w) basis.push_back(m.relation);
    std::vector<Poly> images;
    for (auto& b : basis) images.push_back(e(b));
    std::vector<Poly> out;
    for (auto& v : poly_kernel(images)) {
        Poly p;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (sgn(v[i])) p += v[i] * basis[i];
        if (!p.is_zero()) out.push_back(p * Rational(1 / p.leading().coeff));
    }
    return out;
}

std::vector<std::string> highest_weight_names(int g) {
    require_genus(g);
    if (g == 3) return {"P5", "P9", "P7", "P3"};
    if (g == 2) return {"baker4", "bilinear"};
    return {};
}

MultipletRecord named_multiplet(int g, const std::string& name) {
    require_genus(g);
    auto only = [&](int w) {
        auto v = genus3_linear_highest_weights(w);
        if (v.size() != 1) throw std::runtime_error("expected one highest weight of weight " + std::to_string(w));
        return v[0];
    };
    if (g == 3) {
        if (name == "P5") return {name, g, generate_multiplet(parse_shorthand(genus3_P5_lines()[0]), 3, 5)};
        if (name == "P9") return {name, g, generate_multiplet(genus3_P9_highest(), 3, 9)};
        if (name == "P7") {
            Poly hw = genus3_P7_highest_printed();
            if (!make_generators(3).e(hw).is_zero()) hw = only(6);
            return {name, g, generate_multiplet(hw, 3, 7)};
        }
        if (name == "P3") return {name, g, generate_multiplet(only(2), 3, 3)};
        if (name == "P1") return {name, g, generate_multiplet(only(0), 3, 1)};
    }
    if (g == 2) {
        if (name == "baker4") return {name, g, generate_multiplet(genus2_baker_highest_weight(), 2, 5)};
        if (name == "bilinear") return {name, g, generate_multiplet(genus2_bilinear().members[3].relation, 2, 4)};
    }
    throw std::invalid_argument("no multiplet named " + name + " in genus " + std::to_string(g));
}

LambdaSearch lambda_search(int g, const Poly& p0, const Poly& q, const Derivation& d) {
    auto wp0 = weight(p0, g), wq = weight(q, g);
    if (!wp0 || !wq) throw std::invalid_argument("lambda search needs weight-homogeneous input");
    LambdaSearch out;
    for (auto s : wp_symbols(g, 3))
        if (*symbol_weight(s, g) + *wq == *wp0) out.candidates.push_back(s);
    std::vector<Poly> cols;
    for (auto s : out.candidates) cols.push_back(d(q * Poly(s)));
    auto sol = solve_combination(cols, -d(p0));
    if (!sol) return out;
    out.unique = sol->kernel.empty();
    for (std::size_t i = 0; i < out.candidates.size(); ++i) out.lambda += sol->x[i] * Poly(out.candidates[i]);
    return out;
}

LambdaSearch genus3_lambda() {
    Poly p0 = hk(3, 2, 5) * lin("p333") - hk(3, 3, 5) * lin("p233") + hk(3, 4, 5) * lin("p223 - p133");
    return lambda_search(3, p0, -hk(3, 5, 5), make_generators(3).e);
}

LambdaSearch genus2_lambda() {
    Poly p0 = hk(2, 4, 1) * lin("p222") - hk(2, 4, 2) * lin("p122") + hk(2, 4, 3) * lin("p112");
    return lambda_search(2, p0, -hk(2, 4, 4), make_generators(2).e);
}

bool MinorFactorization::all_four_by_four() const {
    for (auto& r : sign)
        for (int s : r)
            if (s == 0) return false;
    return true;
}

MinorFactorization genus3_minor_factorization() {
    MinorFactorization out;
    auto a = genus3_A();
    auto p5 = genus3_P5_printed().relations();
    out.sign.assign(5, std::vector<int>(5, 0));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            Poly m = minor(a, {i}, {j});
            Poly prod = p5[4 - i] * p5[4 - j];
            if (m == prod)
                out.sign[i][j] = 1;
            else if (m == -prod)
                out.sign[i][j] = -1;
        }
    // Degree-three part of the ideal: three-index symbols times P5 members.
    SpanBasis ideal3;
    for (auto s : wp_symbols(3, 3))
        for (auto& p : p5) ideal3.add(Poly(s) * p);
    auto pairs = subsets(5, 2);
    for (auto& r : pairs)
        for (auto& c : pairs) {
            Poly m = minor(a, r, c);
            ++out.three_by_three_checked;
            if (ideal3.contains(m)) ++out.three_by_three_in_ideal;
            if (m.is_zero()) {
                ++out.three_by_three_divisible;
                continue;
            }
            for (auto& p : p5) {
                try {
                    exact_div(m, p);
                    ++out.three_by_three_divisible;
                    break;
                } catch (const NotDivisible&) {
                }
            }
        }
    // In degree two the ideal of the quadratic P5 relations is their span.
    SpanBasis span;
    for (auto& p : p5) span.add(p);
    auto triples = subsets(5, 3);
    for (auto& r : triples)
        for (auto& c : triples) {
            Poly m = minor(a, r, c);
            if (!m.is_zero() && !span.contains(m)) {
                std::string name = "rows";
                for (int i = 0; i < 5; ++i)
                    if (std::find(r.begin(), r.end(), i) == r.end()) name += " " + std::to_string(i + 1);
                name += " cols";
                for (int j = 0; j < 5; ++j)
                    if (std::find(c.begin(), c.end(), j) == c.end()) name += " " + std::to_string(j + 1);
                out.rank_witnesses.push_back(name);
            }
        }
    return out;
}

} // namespace wpid
