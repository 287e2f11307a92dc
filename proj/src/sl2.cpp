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

#include "wpid/sl2.hpp"

#include "wpid/curve.hpp"
#include "wpid/linalg.hpp"

namespace wpid {

void require_genus(int g) {
    if (g < 1 || g > kMaxGenus) throw UnsupportedGenus("unsupported genus " + std::to_string(g));
}

Derivation::Derivation(std::string name, int genus, int weight_shift)
    : name_(std::move(name)), genus_(genus), shift_(weight_shift), images_(symbol_count()),
      active_(symbol_count(), false), unsupported_(symbol_count(), false) {}

void Derivation::set_image(Symbol s, Poly image) {
    images_[s.id()] = std::move(image);
    active_[s.id()] = !images_[s.id()].is_zero();
    unsupported_[s.id()] = false;
}

void Derivation::set_unsupported(Symbol s) {
    unsupported_[s.id()] = true;
    active_[s.id()] = false;
}

const Poly& Derivation::image(Symbol s) const {
    if (unsupported_[s.id()]) throw UnsupportedSymbol(name_ + " is not defined on " + s.name());
    return images_[s.id()];
}

Poly Derivation::apply(const Poly& p) const {
    PolyAccumulator acc(p.size() * 2);
    for (auto& t : p.terms()) {
        for (auto& [s, e] : t.mono.factors()) {
            if (unsupported_[s.id()]) throw UnsupportedSymbol(name_ + " is not defined on " + s.name());
            if (!active_[s.id()]) continue;
            acc.add_scaled(t.coeff * e, t.mono.with_exponent(s, e - 1), images_[s.id()]);
        }
    }
    return acc.finish();
}

namespace {

bool wp_in_genus(Symbol s, int g) {
    for (int i : s.wp_indices())
        if (i > g) return false;
    return true;
}

// Sum over index positions of `factor(i) * wp_{S with i -> i + step}`.
template <class Factor>
Poly shift_indices(Symbol s, int g, int step, Factor factor) {
    const auto& idx = s.wp_indices();
    Poly out;
    for (std::size_t p = 0; p < idx.size(); ++p) {
        int ni = idx[p] + step;
        if (ni < 1 || ni > g) continue;
        auto moved = idx;
        moved[p] = ni;
        out += factor(idx[p]) * Poly(Symbol::wp(moved));
    }
    return out;
}

// Non-generator symbols of genus g that every derivation rejects.
void mark_foreign(Derivation& d, int g) {
    for (int id = 0; id < symbol_count(); ++id) {
        Symbol s = symbol_by_id(id);
        bool foreign = false;
        switch (s.kind()) {
        case SymKind::Coeff: foreign = s.index() > 2 * g + 2; break;
        case SymKind::Wp: foreign = !wp_in_genus(s, g); break;
        case SymKind::WpB: foreign = true; break;
        case SymKind::PointX:
        case SymKind::PointY: foreign = s.index() > g; break;
        default: break;
        }
        if (foreign) d.set_unsupported(s);
    }
}

} // namespace

std::optional<int> symbol_weight(Symbol s, int g) {
    switch (s.kind()) {
    case SymKind::Coeff:
        if (s.index() > 2 * g + 2) return std::nullopt;
        return 2 * s.index() - 2 * g - 2;
    case SymKind::Wp: {
        if (!wp_in_genus(s, g)) return std::nullopt;
        int w = 0;
        for (int i : s.wp_indices()) w += 2 * i - g - 1;
        return w;
    }
    case SymKind::WpB: {
        // The Baker shifts wpB_ij = wp_ij - c a_k preserve weight.
        int w = 0;
        for (int i : s.wp_indices()) {
            if (i > g) return std::nullopt;
            w += 2 * i - g - 1;
        }
        return w;
    }
    case SymKind::PointX: return s.index() > g ? std::nullopt : std::optional<int>(-2);
    case SymKind::PointY: return s.index() > g ? std::nullopt : std::optional<int>(-(g + 1));
    default: return 0;
    }
}

Generators make_generators(int g) {
    require_genus(g);
    Generators gen{Derivation("e", g, 2), Derivation("f", g, -2), Derivation("h", g, 0)};
    for (auto* d : {&gen.e, &gen.f, &gen.h}) mark_foreign(*d, g);
    int n = 2 * g + 2;
    for (int i = 0; i <= n; ++i) {
        Symbol a = Symbol::a(i);
        if (i < n) gen.e.set_image(a, Rational(-(n - i)) * Poly(Symbol::a(i + 1)));
        if (i > 0) gen.f.set_image(a, Rational(-i) * Poly(Symbol::a(i - 1)));
        gen.h.set_image(a, Rational(2 * i - n) * Poly(a));
    }
    for (int m = 0; m <= g; ++m) {
        Poly x(Symbol::x(m)), y(Symbol::y(m));
        gen.e.set_image(Symbol::x(m), 1);
        gen.f.set_image(Symbol::x(m), -(x * x));
        gen.f.set_image(Symbol::y(m), Rational(-(g + 1)) * (x * y));
        gen.h.set_image(Symbol::x(m), Rational(-2) * x);
        gen.h.set_image(Symbol::y(m), Rational(-(g + 1)) * y);
    }
    for (int order = 2; order <= 4; ++order)
        for (Symbol s : wp_symbols(g, order)) {
            gen.e.set_image(s, shift_indices(s, g, +1, [](int i) { return Rational(-i); }));
            gen.f.set_image(s, shift_indices(s, g, -1, [g](int i) { return Rational(-(g - i + 1)); }));
            gen.h.set_image(s, Rational(*symbol_weight(s, g)) * Poly(s));
        }
    return gen;
}

Derivation du(int g, int k) {
    require_genus(g);
    if (k < 1 || k > g) throw std::out_of_range("du index");
    Derivation d("du" + std::to_string(k), g, 0);
    mark_foreign(d, g);
    for (int m = 0; m <= g; ++m) {
        d.set_unsupported(Symbol::x(m));
        d.set_unsupported(Symbol::y(m));
    }
    for (Symbol s : wp_symbols(g, 4)) d.set_unsupported(s);
    for (int order = 2; order <= 3; ++order)
        for (Symbol s : wp_symbols(g, order)) {
            auto idx = s.wp_indices();
            idx.push_back(k);
            d.set_image(s, Poly(Symbol::wp(idx)));
        }
    return d;
}

Derivation point_d(int g, int m) {
    require_genus(g);
    if (m < 1 || m > g) throw std::out_of_range("point index");
    Derivation d("D" + std::to_string(m), g, 0);
    mark_foreign(d, g);
    Symbol xm = Symbol::x(m), ym = Symbol::y(m);
    d.set_image(xm, Poly(ym));
    d.set_image(ym, Rational(1, 2) * curve_rhs(g, xm).derivative(xm));
    for (Symbol s : wp_symbols(g, 4)) d.set_unsupported(s);
    for (int order = 2; order <= 3; ++order)
        for (Symbol s : wp_symbols(g, order)) {
            Poly img;
            for (int k = 1; k <= g; ++k) {
                auto idx = s.wp_indices();
                idx.push_back(k);
                img += Poly(xm).pow(k - 1) * Poly(Symbol::wp(idx));
            }
            d.set_image(s, img);
        }
    return d;
}

std::optional<int> weight(const Poly& p, int g) {
    if (p.is_zero()) return std::nullopt;
    std::optional<int> w;
    for (auto& t : p.terms()) {
        int tw = 0;
        for (auto& [s, e] : t.mono.factors()) {
            auto sw = symbol_weight(s, g);
            if (!sw) return std::nullopt;
            tw += *sw * static_cast<int>(e);
        }
        if (w && *w != tw) return std::nullopt;
        w = tw;
    }
    return w;
}

std::vector<Symbol> generator_symbols(int g) {
    require_genus(g);
    std::vector<Symbol> out;
    for (int i = 0; i <= 2 * g + 2; ++i) out.push_back(Symbol::a(i));
    for (int order = 2; order <= 4; ++order)
        for (Symbol s : wp_symbols(g, order)) out.push_back(s);
    for (int m = 0; m <= g; ++m) {
        out.push_back(Symbol::x(m));
        out.push_back(Symbol::y(m));
    }
    return out;
}

CommutatorReport check_commutators(int g) {
    auto gen = make_generators(g);
    CommutatorReport rep;
    for (Symbol s : generator_symbols(g)) {
        Poly p(s);
        Poly ep = gen.e(p), fp = gen.f(p), hp = gen.h(p);
        if (gen.h(ep) - gen.e(hp) != 2 * ep) rep.failures.push_back("[h,e] on " + s.name());
        if (gen.h(fp) - gen.f(hp) != -2 * fp) rep.failures.push_back("[h,f] on " + s.name());
        if (gen.e(fp) - gen.f(ep) != hp) rep.failures.push_back("[e,f] on " + s.name());
        rep.checked += 3;
    }
    return rep;
}

Multiplet generate_multiplet(const Poly& hw, int g, int max_dim) {
    auto gen = make_generators(g);
    if (!gen.e(hw).is_zero()) throw NotHighestWeight("e does not annihilate the highest weight");
    Multiplet m;
    Poly cur = hw;
    while (!cur.is_zero()) {
        if (m.dimension() == max_dim) throw DimensionExceeded("f-chain longer than " + std::to_string(max_dim));
        auto w = weight(cur, g);
        m.weights.push_back(w ? *w : 0);
        m.members.push_back(cur);
        cur = gen.f(cur);
    }
    for (int i = 1; i < m.dimension(); ++i) {
        Poly img = gen.e(m.members[i]);
        if (img.is_zero()) throw std::logic_error("e annihilates a lower member");
        const Poly& prev = m.members[i - 1];
        Rational c = img.leading().coeff / prev.leading().coeff;
        if (img != c * prev) throw std::logic_error("e-chain is not dual to the f-chain");
        m.e_factors.push_back(c);
    }
    return m;
}

ClosureReport closure_check(const std::vector<Poly>& set, const Derivation& d) {
    SpanBasis span;
    for (auto& p : set) span.add(p);
    ClosureReport rep;
    for (std::size_t i = 0; i < set.size(); ++i)
        if (!span.contains(d(set[i]))) rep.escaping.push_back(static_cast<int>(i));
    return rep;
}

} // namespace wpid
