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

#include "wpid/oracle.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "wpid/curve.hpp"
#include "wpid/sl2.hpp"

namespace wpid {

// ------------------------------------------------------------------ curves

std::vector<Integer> CurveInstance::rhs() const {
    std::vector<Integer> out;
    unsigned n = static_cast<unsigned>(2 * genus + 2);
    for (unsigned i = 0; i <= n; ++i) out.push_back(binomial(n, i) * a[i]);
    return out;
}

namespace {

using UPoly = std::vector<Rational>; // ascending coefficients

void trim(UPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

UPoly urem(UPoly a, const UPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        trim(a);
    }
    return a;
}

std::size_t gcd_degree(UPoly a, UPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = urem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? 0 : a.size() - 1;
}

} // namespace

CurveInstance make_instance(int g, const std::vector<Integer>& a, int root_sign) {
    require_genus(g);
    if (a.size() != static_cast<std::size_t>(2 * g + 3))
        throw std::invalid_argument("genus " + std::to_string(g) + " needs " + std::to_string(2 * g + 3) +
                                    " curve coefficients");
    const Integer& top = a.back();
    if (sgn(top) == 0) throw DegenerateCurve("top coefficient is zero");
    if (sgn(top) < 0 || !mpz_perfect_square_p(top.get_mpz_t()))
        throw NotASquare("top coefficient " + top.get_str() + " is not a square");
    CurveInstance c;
    c.genus = g;
    c.a = a;
    mpz_sqrt(c.r.get_mpz_t(), top.get_mpz_t());
    if (root_sign < 0) c.r = -c.r;
    UPoly p, dp;
    for (auto& v : c.rhs()) p.push_back(Rational(v));
    for (std::size_t i = 1; i < p.size(); ++i) dp.push_back(p[i] * static_cast<long>(i));
    if (gcd_degree(p, dp) > 0) throw DegenerateCurve("curve polynomial has a repeated root");
    return c;
}

CurveInstance default_instance(int g, int variant) {
    require_genus(g);
    static const std::vector<std::vector<long>> base[2] = {
        {{1, 1, 2, 1, 4}, {1, 1, 1, 2, 1, 1, 4}, {1, 1, 1, 1, 2, 1, 1, 1, 4}},
        {{2, -3, 5, 7, 9}, {2, -3, 5, 7, -2, 6, 9}, {2, -3, 5, 7, -2, 6, 3, -4, 9}},
    };
    if (variant < 0 || variant > 1) throw std::out_of_range("curve variant");
    auto& row = base[variant][static_cast<std::size_t>(g - 1)];
    std::vector<Integer> a(row.begin(), row.end());
    for (int tries = 0; tries < 64; ++tries) {
        try {
            return make_instance(g, a);
        } catch (const DegenerateCurve&) {
            a[2] += 1;
        }
    }
    throw DegenerateCurve("no nondegenerate default curve");
}

// --------------------------------------------------------------------- Lcg

std::uint64_t Lcg::next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
}

long Lcg::range(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>((next() >> 33) % span);
}

// -------------------------------------------------------------- evaluation

namespace {

class Evaluator {
public:
    explicit Evaluator(const Assignment& a) : a_(a), ops_(a.curve.genus, a.curve.rhs()) {
        for (int i = 0; i <= 2 * a.curve.genus + 2; ++i) numeric_[Symbol::a(i)] = Poly(Rational(a.curve.a[i]));
        for (int i = 2 * a.curve.genus + 3; i <= kMaxCoeff; ++i) numeric_[Symbol::a(i)] = Poly();
        numeric_[Symbol::root()] = Poly(Rational(a.curve.r));
        // Baker symbols through the transformation table.
        auto table = baker_transformation();
        for (auto& [sb, expr] : table.to_covariant()) baker_[sb] = substitute(expr, numeric_);
    }

    const FieldOps& ops() const { return ops_; }

    Evaluation run(const Poly& p, const std::map<Symbol, Rational>& extra = {}) {
        Evaluation out;
        Poly q = substitute(p, numeric_);
        if (!extra.empty()) {
            Bindings b;
            for (auto& [s, v] : extra) b[s] = Poly(v);
            q = substitute(q, b);
        }
        std::set<std::string> missing;
        for (auto s : q.symbols())
            if (!value(s)) missing.insert(s.name());
        if (!missing.empty()) {
            out.missing.assign(missing.begin(), missing.end());
            return out;
        }
        FieldElem sum;
        for (auto& t : q.terms()) {
            FieldElem term = monomial(t.mono);
            term *= t.coeff;
            sum += term;
        }
        sum.normalize();
        out.value = std::move(sum);
        return out;
    }

private:
    const FieldElem* value(Symbol s) {
        auto it = a_.values.find(s);
        if (it != a_.values.end()) return &it->second;
        auto c = derived_.find(s);
        if (c != derived_.end()) return &c->second;
        int g = a_.curve.genus;
        if ((s.kind() == SymKind::PointX || s.kind() == SymKind::PointY) && s.index() >= 1 && s.index() <= g) {
            auto v = s.kind() == SymKind::PointX ? FieldElem::x(s.index()) : FieldElem::y(s.index());
            return &derived_.emplace(s, v).first->second;
        }
        auto b = baker_.find(s);
        if (b != baker_.end()) {
            auto ev = run(b->second);
            if (!ev.value) return nullptr;
            return &derived_.emplace(s, *ev.value).first->second;
        }
        return nullptr;
    }

    // Products are memoised by monomial, built from the prefix without the
    // highest symbol, so terms sharing a prefix share the work.
    const FieldElem& monomial(const Monomial& m) {
        auto it = monomials_.find(m);
        if (it != monomials_.end()) return it->second;
        if (m.is_one()) return monomials_.emplace(m, FieldElem(Rational(1))).first->second;
        auto fs = m.factors();
        Symbol top = fs.back().first;
        Monomial rest = m.with_exponent(top, fs.back().second - 1);
        FieldElem v = ops_.mul(monomial(rest), *value(top));
        return monomials_.emplace(m, std::move(v)).first->second;
    }

    const Assignment& a_;
    FieldOps ops_;
    Bindings numeric_;
    std::map<Symbol, Poly> baker_;
    std::map<Symbol, FieldElem> derived_;
    std::unordered_map<Monomial, FieldElem, Monomial::Hash> monomials_;
};

} // namespace

Evaluation evaluate(const Poly& p, const Assignment& a, const std::map<Symbol, Rational>& extra) {
    Evaluator ev(a);
    return ev.run(p, extra);
}

// ------------------------------------------------------------------ solving

namespace {

using XMat = std::vector<std::vector<XPoly>>;

// Determinant of the rows `rows` and columns `cols` by expansion over
// column subsets.
XPoly det_sub(const XMat& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    int n = static_cast<int>(rows.size());
    if (n == 0) return XPoly(1);
    // dp[mask] = determinant of the first popcount(mask) rows on columns `mask`.
    std::vector<XPoly> dp(std::size_t(1) << n);
    dp[0] = XPoly(1);
    for (unsigned mask = 1; mask < dp.size(); ++mask) {
        int r = __builtin_popcount(mask) - 1;
        XPoly acc;
        // Expansion along row r; the sign counts the mask columns right of c.
        for (int c = 0; c < n; ++c) {
            if (!(mask & (1u << c))) continue;
            const XPoly& entry = m[static_cast<std::size_t>(rows[static_cast<std::size_t>(r)])]
                                  [static_cast<std::size_t>(cols[static_cast<std::size_t>(c)])];
            const XPoly& sub = dp[mask & ~(1u << c)];
            if (entry.is_zero() || sub.is_zero()) continue;
            XPoly t = entry * sub;
            if ((__builtin_popcount(mask >> (c + 1))) % 2)
                acc -= t;
            else
                acc += t;
        }
        dp[mask] = std::move(acc);
    }
    return dp.back();
}

class Solver {
public:
    explicit Solver(const CurveInstance& c) : ops_(c.genus, c.rhs()) { out_.curve = c; }

    Assignment run() {
        int g = out_.curve.genus;
        residues(g);
        cross_self(g);
        if (g == 1) {
            extend_all(g);
            return out_;
        }
        if (g == 2) {
            extend(Symbol::wp({2, 2, 2}), "extension of wp[2,2,2]");
            from_identity(2, "wp2222", Symbol::wp({1, 1}));
        } else {
            extend(Symbol::wp({3, 3, 3}), "extension of wp[3,3,3]");
            extend(Symbol::wp({2, 3, 3}), "extension of wp[2,3,3]");
            from_identity(3, "wp3333", Symbol::wp({2, 2}));
            from_identity(3, "wp2333", Symbol::wp({1, 2}));
            from_identity(3, "wp2233", Symbol::wp({1, 1}));
        }
        extend_all(g);
        return out_;
    }

private:
    Poly residue(int g, int m) {
        int n = g + 2;
        const auto h = klein_matrix(g).h;
        Poly rel = Poly(Symbol::root()) * Poly(Symbol::y(m));
        Poly xm(Symbol::x(m));
        Poly pw = 1;
        for (int j = 0; j < n; ++j) {
            rel -= h(n - 1, j) * pw;
            pw = pw * xm;
        }
        return rel;
    }

    void residues(int g) {
        std::vector<Poly> rels;
        for (int m = 1; m <= g; ++m) rels.push_back(residue(g, m));
        std::vector<Symbol> unknowns;
        for (int i = 1; i <= g; ++i) unknowns.push_back(Symbol::wp({i, g}));
        solve(rels, unknowns, "residue relations");
    }

    void cross_self(int g) {
        std::vector<Poly> rels;
        // Self-derivatives first, then cross-derivatives.
        for (int m = 1; m <= g; ++m) rels.push_back(point_d(g, m)(residue(g, m)));
        for (int n = 1; n <= g; ++n)
            for (int m = 1; m <= g; ++m)
                if (n != m) rels.push_back(point_d(g, n)(residue(g, m)));
        std::vector<Symbol> unknowns;
        for (auto s : wp_symbols(g, 3))
            if (s.wp_indices().back() == g) unknowns.push_back(s);
        if (g == 1) rels.resize(1);
        solve(rels, unknowns, "derivatives of the residue relations");
    }

    void from_identity(int g, const std::string& name, Symbol unknown) {
        for (auto& id : identity_set(g, "fourindex").members)
            if (id.name == name) {
                solve({id.relation}, {unknown}, "four-index identity " + name);
                return;
            }
        throw std::logic_error("missing generated identity " + name);
    }

    void extend(Symbol s, const std::string& why) {
        int g = out_.curve.genus;
        auto& v = out_.values.at(s);
        XMat mat;
        std::vector<FieldElem> rhs;
        for (int m = 1; m <= g; ++m) {
            std::vector<XPoly> row;
            for (int k = 0; k < g; ++k) row.push_back(XPoly::var(m).pow(static_cast<unsigned>(k)));
            mat.push_back(row);
            rhs.push_back(ops_.derive(v, m));
        }
        std::vector<Symbol> targets;
        for (int k = 1; k <= g; ++k) {
            auto idx = s.wp_indices();
            idx.push_back(k);
            targets.push_back(Symbol::wp(idx));
        }
        auto sol = cramer(mat, rhs);
        for (std::size_t k = 0; k < targets.size(); ++k) record(targets[k], sol[k], why);
    }

    void extend_all(int g) {
        for (int order = 2; order <= 3; ++order)
            for (auto s : wp_symbols(g, order)) extend(s, "extension of " + s.name());
    }

    void record(Symbol s, FieldElem v, const std::string& why) {
        auto it = out_.values.find(s);
        if (it != out_.values.end()) {
            if (!(it->second - v).is_zero()) out_.integrability_failures.push_back(s.name() + " via " + why);
            return;
        }
        out_.values.emplace(s, std::move(v));
        out_.provenance[s] = why;
    }

    std::vector<FieldElem> cramer(const XMat& m, const std::vector<FieldElem>& rhs) {
        int n = static_cast<int>(m.size());
        std::vector<int> idx(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
        XPoly det = det_sub(m, idx, idx);
        if (det.is_zero()) throw DegenerateCurve("singular system while solving for wp");
        std::vector<FieldElem> out;
        for (int j = 0; j < n; ++j) {
            FieldElem acc;
            for (int i = 0; i < n; ++i) {
                std::vector<int> rows, cols;
                for (int k = 0; k < n; ++k) {
                    if (k != i) rows.push_back(k);
                    if (k != j) cols.push_back(k);
                }
                XPoly cof = det_sub(m, rows, cols);
                if (cof.is_zero() || rhs[static_cast<std::size_t>(i)].is_zero()) continue;
                FieldElem t = ops_.mul(FieldElem(cof), rhs[static_cast<std::size_t>(i)]);
                if ((i + j) % 2) t = -t;
                acc += t;
            }
            FieldElem v = acc.divide(det);
            v.normalize();
            out.push_back(std::move(v));
        }
        return out;
    }

    // Linear relations in `unknowns`; extra relations are checked afterwards.
    void solve(const std::vector<Poly>& rels, const std::vector<Symbol>& unknowns, const std::string& why) {
        Assignment known = out_;
        std::size_t n = unknowns.size();
        XMat mat;
        std::vector<FieldElem> rhs;
        for (auto& rel : rels) {
            Bindings zero;
            for (auto u : unknowns) zero[u] = Poly();
            Poly constant = substitute(rel, zero);
            std::vector<FieldElem> coeffs;
            Integer lcm = 1;
            for (auto u : unknowns) {
                Poly c = coeff_extract(rel, u, 1);
                for (auto w : unknowns)
                    if (c.contains(w)) throw std::logic_error("nonlinear relation in " + why);
                auto ev = evaluate(c, known);
                if (!ev.value) throw std::logic_error("unresolved coefficient in " + why);
                if (!ev.value->is_polynomial()) throw std::logic_error("non-polynomial coefficient in " + why);
                Integer d = ev.value->scale().get_den();
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
                coeffs.push_back(*ev.value);
            }
            std::vector<XPoly> row;
            for (auto& c : coeffs) {
                if (c.is_zero()) {
                    row.emplace_back();
                    continue;
                }
                Rational f = c.scale() * Rational(lcm);
                row.push_back(c.num(0) * f.get_num());
            }
            auto ev = evaluate(constant, known);
            if (!ev.value) throw std::logic_error("unresolved constant in " + why);
            FieldElem r = -*ev.value;
            r *= Rational(lcm);
            mat.push_back(row);
            rhs.push_back(r);
        }
        // First nonsingular square subset of the relations.
        std::vector<int> pick;
        std::vector<int> cols(n);
        for (std::size_t j = 0; j < n; ++j) cols[j] = static_cast<int>(j);
        auto combos = subsets(static_cast<int>(rels.size()), static_cast<int>(n));
        for (auto& c : combos)
            if (!det_sub(mat, c, cols).is_zero()) {
                pick = c;
                break;
            }
        if (pick.empty()) throw DegenerateCurve("singular system in " + why);
        XMat sq;
        std::vector<FieldElem> sr;
        for (int i : pick) {
            sq.push_back(mat[static_cast<std::size_t>(i)]);
            sr.push_back(rhs[static_cast<std::size_t>(i)]);
        }
        auto sol = cramer(sq, sr);
        for (std::size_t j = 0; j < n; ++j) record(unknowns[j], sol[j], why);
        // Remaining relations must hold.
        for (std::size_t i = 0; i < rels.size(); ++i) {
            if (std::find(pick.begin(), pick.end(), static_cast<int>(i)) != pick.end()) continue;
            auto ev = evaluate(rels[i], out_);
            if (!ev.value || !ev.value->is_zero())
                out_.integrability_failures.push_back("relation " + std::to_string(i) + " of " + why);
        }
    }

    FieldOps ops_;
    Assignment out_;
};

} // namespace

Assignment solve_wp(const CurveInstance& c) { return Solver(c).run(); }

// ---------------------------------------------------------------- verifying

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::MissingSymbol: return "missing-symbol";
    }
    return "?";
}

int OracleReport::count(Verdict v) const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [&](auto& c) { return c.verdict == v; }));
}

std::vector<IdentityCheck> verify(const IdentitySet& set, const Assignment& a, Lcg& rng, int draws) {
    std::vector<IdentityCheck> out;
    Evaluator plain(a);
    for (auto& id : set.members) {
        IdentityCheck c;
        c.set = set.name;
        c.name = id.name;
        c.source = id.source;
        std::vector<Symbol> borders;
        for (auto s : id.relation.symbols())
            if (s.kind() == SymKind::BorderL || s.kind() == SymKind::BorderK) borders.push_back(s);
        if (borders.empty()) {
            auto ev = plain.run(id.relation);
            if (!ev.value) {
                c.verdict = Verdict::MissingSymbol;
                c.missing = ev.missing;
            } else {
                if (!ev.value->is_zero()) {
                    c.verdict = Verdict::Fails;
                    c.residual = ev.value;
                }
            }
        } else {
            c.draws = draws;
            for (int d = 0; d < draws && c.verdict == Verdict::Holds; ++d) {
                std::map<Symbol, Rational> extra;
                for (auto s : borders) extra[s] = Rational(rng.range(-9, 9));
                auto ev = plain.run(id.relation, extra);
                if (!ev.value) {
                    c.verdict = Verdict::MissingSymbol;
                    c.missing = ev.missing;
                } else if (!ev.value->is_zero()) {
                    c.verdict = Verdict::Fails;
                    c.residual = ev.value;
                }
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

OracleReport verify_sets(const std::vector<IdentitySet>& sets, const Assignment& a, std::uint64_t seed, int draws) {
    OracleReport rep;
    rep.genus = a.curve.genus;
    rep.curve = a.curve.a;
    rep.r = a.curve.r;
    rep.seed = seed;
    rep.integrability_failures = a.integrability_failures;
    Lcg rng(seed);
    for (auto& s : sets) {
        auto v = verify(s, a, rng, draws);
        rep.checks.insert(rep.checks.end(), v.begin(), v.end());
    }
    return rep;
}

} // namespace wpid
