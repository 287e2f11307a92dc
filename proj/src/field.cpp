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

#include "wpid/field.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace wpid {

// ------------------------------------------------------------------ XPoly

namespace {

constexpr XPoly::Key kDegOne = XPoly::Key(1) << 48;

XPoly::Key unit_key(int m) { return kDegOne | (XPoly::Key(1) << (16 * (m - 1))); }

bool key_divides(XPoly::Key d, XPoly::Key k) {
    for (int m = 1; m <= 3; ++m)
        if (XPoly::exponent(d, m) > XPoly::exponent(k, m)) return false;
    return true;
}

} // namespace

XPoly::XPoly(const Integer& c) {
    if (sgn(c)) terms_.push_back({0, c});
}

XPoly XPoly::var(int m) {
    if (m < 1 || m > 3) throw std::out_of_range("point index");
    XPoly p;
    p.terms_.push_back({unit_key(m), 1});
    return p;
}

XPoly::Key XPoly::make_key(unsigned e1, unsigned e2, unsigned e3) {
    return (Key(e1 + e2 + e3) << 48) | (Key(e3) << 32) | (Key(e2) << 16) | Key(e1);
}

XPoly XPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.key > b.key; });
    XPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().key == t.key)
            p.terms_.back().coeff += t.coeff;
        else
            p.terms_.push_back(std::move(t));
    }
    std::erase_if(p.terms_, [](const Term& t) { return sgn(t.coeff) == 0; });
    return p;
}

XPoly XPoly::operator-() const {
    XPoly p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

namespace {

std::vector<XPoly::Term> merge(const std::vector<XPoly::Term>& a, const std::vector<XPoly::Term>& b, int sign) {
    std::vector<XPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].key > b[j].key)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].key > a[i].key) {
            out.push_back({b[j].key, sign > 0 ? b[j].coeff : Integer(-b[j].coeff)});
            ++j;
        } else {
            Integer c = sign > 0 ? Integer(a[i].coeff + b[j].coeff) : Integer(a[i].coeff - b[j].coeff);
            if (sgn(c)) out.push_back({a[i].key, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

XPoly& XPoly::operator+=(const XPoly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge(terms_, o.terms_, 1);
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge(terms_, o.terms_, -1);
    return *this;
}

XPoly& XPoly::operator*=(const Integer& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() == 1 || b.size() == 1) {
        const XPoly& big = a.size() == 1 ? b : a;
        const XPoly::Term& t = a.size() == 1 ? a.terms_[0] : b.terms_[0];
        XPoly out;
        out.terms_.reserve(big.size());
        for (auto& u : big.terms_) out.terms_.push_back({u.key + t.key, u.coeff * t.coeff});
        return out; // shifting by a monomial keeps the order
    }
    std::unordered_map<XPoly::Key, Integer> acc;
    acc.reserve(a.size() * b.size());
    Integer tmp;
    for (auto& s : a.terms_)
        for (auto& t : b.terms_) {
            mpz_mul(tmp.get_mpz_t(), s.coeff.get_mpz_t(), t.coeff.get_mpz_t());
            auto& slot = acc[s.key + t.key];
            slot += tmp;
        }
    std::vector<XPoly::Term> terms;
    terms.reserve(acc.size());
    for (auto& [k, c] : acc)
        if (sgn(c)) terms.push_back({k, std::move(c)});
    std::sort(terms.begin(), terms.end(), [](const XPoly::Term& x, const XPoly::Term& y) { return x.key > y.key; });
    XPoly out;
    out.terms_ = std::move(terms);
    return out;
}

bool operator==(const XPoly& a, const XPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
}

XPoly XPoly::pow(unsigned n) const {
    XPoly result(1), base = *this;
    while (n) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

XPoly XPoly::derivative(int m) const {
    std::vector<Term> out;
    for (auto& t : terms_) {
        unsigned e = exponent(t.key, m);
        if (e) out.push_back({t.key - unit_key(m), t.coeff * e});
    }
    return from_terms(std::move(out));
}

Integer XPoly::content() const {
    Integer g = 0;
    for (auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void XPoly::divide_exact(const Integer& c) {
    for (auto& t : terms_) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
}

namespace {

// Key of the monomial with x_i replaced by x_j.
XPoly::Key merge_var(XPoly::Key k, int i, int j) {
    unsigned ei = XPoly::exponent(k, i);
    k &= ~(XPoly::Key(0xffff) << (16 * (i - 1)));
    return k + (XPoly::Key(ei) << (16 * (j - 1)));
}

} // namespace

bool XPoly::divisible_by_difference(int i, int j) const {
    if (terms_.empty()) return true;
    std::unordered_map<Key, Integer> acc;
    acc.reserve(terms_.size());
    for (auto& t : terms_) acc[merge_var(t.key, i, j)] += t.coeff;
    for (auto& [k, c] : acc)
        if (sgn(c)) return false;
    return true;
}

XPoly XPoly::divide_by_difference(int i, int j) const {
    XPoly d = var(i) - var(j);
    return exact_div(d);
}

XPoly XPoly::exact_div(const XPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    std::map<Key, Integer, std::greater<>> rem;
    for (auto& t : terms_) rem.emplace(t.key, t.coeff);
    const Term& lead = d.terms_.front();
    std::vector<Term> q;
    Integer qc, prod;
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!key_divides(lead.key, it->first) || !mpz_divisible_p(it->second.get_mpz_t(), lead.coeff.get_mpz_t()))
            throw NotDivisible("polynomial in x is not divisible");
        mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), lead.coeff.get_mpz_t());
        Key qk = it->first - lead.key;
        for (auto& t : d.terms_) {
            mpz_mul(prod.get_mpz_t(), qc.get_mpz_t(), t.coeff.get_mpz_t());
            auto [slot, fresh] = rem.try_emplace(t.key + qk);
            slot->second -= prod;
            if (sgn(slot->second) == 0) rem.erase(slot);
        }
        q.push_back({qk, qc});
    }
    XPoly out;
    out.terms_ = std::move(q); // produced in descending order
    return out;
}

XPoly XPoly::univariate(const std::vector<Integer>& coeffs, int m) {
    std::vector<Term> t;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (sgn(coeffs[i])) t.push_back({static_cast<Key>(i) * unit_key(m), coeffs[i]});
    return from_terms(std::move(t));
}

std::string XPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& t : terms_) {
        std::string c = t.coeff.get_str();
        if (!s.empty() && c[0] != '-') s += " + ";
        else if (!s.empty()) { s += " - "; c = c.substr(1); }
        std::string mono;
        for (int m = 1; m <= 3; ++m) {
            unsigned e = exponent(t.key, m);
            if (!e) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(m);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty())
            s += c;
        else if (c == "1")
            s += mono;
        else if (c == "-1")
            s += "-" + mono;
        else
            s += c + "*" + mono;
    }
    return s;
}

// -------------------------------------------------------------- FieldElem

namespace {

const XPoly& pair_poly(int p) {
    static const std::array<XPoly, 3> d = {XPoly::var(1) - XPoly::var(2), XPoly::var(1) - XPoly::var(3),
                                           XPoly::var(2) - XPoly::var(3)};
    return d[static_cast<std::size_t>(p)];
}

} // namespace

int FieldElem::pair_index(int i, int j) {
    if (i > j) std::swap(i, j);
    if (i == 1 && j == 2) return 0;
    if (i == 1 && j == 3) return 1;
    if (i == 2 && j == 3) return 2;
    throw std::out_of_range("point pair");
}

std::pair<int, int> FieldElem::pair_points(int p) {
    static const std::pair<int, int> pts[] = {{1, 2}, {1, 3}, {2, 3}};
    return pts[p];
}

FieldElem::FieldElem(const Rational& c) {
    if (sgn(c)) {
        scale_ = c;
        num_[0] = XPoly(1);
    }
}

FieldElem::FieldElem(const XPoly& p) {
    if (!p.is_zero()) {
        scale_ = 1;
        num_[0] = p;
    }
}

FieldElem FieldElem::x(int m) { return FieldElem(XPoly::var(m)); }

FieldElem FieldElem::y(int m) {
    if (m < 1 || m > 3) throw std::out_of_range("point index");
    FieldElem f;
    f.scale_ = 1;
    f.num_[static_cast<std::size_t>(1 << (m - 1))] = XPoly(1);
    return f;
}

bool FieldElem::is_zero() const {
    if (sgn(scale_) == 0) return true;
    for (auto& n : num_)
        if (!n.is_zero()) return false;
    return true;
}

bool FieldElem::is_polynomial() const {
    for (int s = 1; s < kMasks; ++s)
        if (!num_[static_cast<std::size_t>(s)].is_zero()) return false;
    for (auto d : den_)
        if (d) return false;
    return true;
}

std::size_t FieldElem::terms() const {
    std::size_t n = 0;
    for (auto& p : num_) n += p.size();
    return n;
}

FieldElem FieldElem::operator-() const {
    FieldElem f = *this;
    f.scale_ = -f.scale_;
    return f;
}

FieldElem& FieldElem::operator*=(const Rational& c) {
    if (sgn(c) == 0) return *this = FieldElem();
    scale_ *= c;
    return *this;
}

namespace {

XPoly pair_power(int p, unsigned e) {
    static thread_local std::array<std::vector<XPoly>, 3> cache;
    auto& v = cache[static_cast<std::size_t>(p)];
    if (v.empty()) v.push_back(XPoly(1));
    while (v.size() <= e) v.push_back(v.back() * pair_poly(p));
    return v[e];
}

} // namespace

FieldElem& FieldElem::operator+=(const FieldElem& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    // Common denominator, then integer multipliers for the two scales.
    XPoly ma(1), mb(1);
    std::array<unsigned, kPairs> den{};
    for (int p = 0; p < kPairs; ++p) {
        den[p] = std::max(den_[p], o.den_[p]);
        if (den[p] > den_[p]) ma = ma * pair_power(p, den[p] - den_[p]);
        if (den[p] > o.den_[p]) mb = mb * pair_power(p, den[p] - o.den_[p]);
    }
    Integer na = scale_.get_num(), da = scale_.get_den(), nb = o.scale_.get_num(), db = o.scale_.get_den();
    Integer g, l;
    mpz_gcd(g.get_mpz_t(), na.get_mpz_t(), nb.get_mpz_t());
    mpz_lcm(l.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
    Integer fa = na / g * (l / da), fb = nb / g * (l / db);
    ma *= fa;
    mb *= fb;
    for (int s = 0; s < kMasks; ++s) {
        auto& x = num_[static_cast<std::size_t>(s)];
        auto& y = o.num_[static_cast<std::size_t>(s)];
        if (x.is_zero() && y.is_zero()) continue;
        XPoly sum = x.is_zero() ? XPoly() : x * ma;
        if (!y.is_zero()) sum += y * mb;
        x = std::move(sum);
    }
    den_ = den;
    scale_ = Rational(g) / Rational(l);
    if (is_zero()) *this = FieldElem();
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) { return *this += -o; }

void FieldElem::normalize() {
    if (is_zero()) {
        *this = FieldElem();
        return;
    }
    Integer g = 0;
    for (auto& n : num_) {
        Integer c = n.content();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (g != 1) {
        for (auto& n : num_) n.divide_exact(g);
        scale_ *= Rational(g);
    }
    for (int p = 0; p < kPairs; ++p) {
        auto [i, j] = pair_points(p);
        while (den_[p] > 0) {
            bool all = true;
            for (auto& n : num_)
                if (!n.divisible_by_difference(i, j)) {
                    all = false;
                    break;
                }
            if (!all) break;
            for (auto& n : num_)
                if (!n.is_zero()) n = n.divide_by_difference(i, j);
            --den_[p];
        }
    }
}

FieldElem FieldElem::divide(const XPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero in the function field");
    XPoly rest = d;
    std::array<unsigned, kPairs> extra{};
    for (int p = 0; p < kPairs; ++p) {
        auto [i, j] = pair_points(p);
        while (!rest.is_constant() && rest.divisible_by_difference(i, j)) {
            rest = rest.divide_by_difference(i, j);
            ++extra[p];
        }
    }
    Integer c = rest.content();
    if (sgn(rest.terms().front().coeff) < 0) c = -c;
    rest.divide_exact(c);
    FieldElem out = *this;
    if (out.is_zero()) return out;
    if (!rest.is_constant())
        for (auto& n : out.num_)
            if (!n.is_zero()) n = n.exact_div(rest);
    for (int p = 0; p < kPairs; ++p) out.den_[p] += extra[p];
    out.scale_ /= Rational(c);
    return out;
}

std::string FieldElem::to_string() const {
    if (is_zero()) return "0";
    std::string s = "(" + wpid::to_string(scale_) + ") * [";
    bool first = true;
    for (int m = 0; m < kMasks; ++m) {
        auto& n = num_[static_cast<std::size_t>(m)];
        if (n.is_zero()) continue;
        if (!first) s += " + ";
        first = false;
        s += "(" + n.to_string() + ")";
        for (int b = 0; b < 3; ++b)
            if (m & (1 << b)) s += "*y" + std::to_string(b + 1);
    }
    s += "]";
    for (int p = 0; p < kPairs; ++p)
        if (den_[p]) {
            auto [i, j] = pair_points(p);
            s += " / (x" + std::to_string(i) + "-x" + std::to_string(j) + ")^" + std::to_string(den_[p]);
        }
    return s;
}

// ---------------------------------------------------------------- FieldOps

FieldOps::FieldOps(int genus, const std::vector<Integer>& a) : genus_(genus) {
    for (int m = 1; m <= 3; ++m) {
        A_.push_back(XPoly::univariate(a, m));
        dA_.push_back(A_.back().derivative(m));
    }
}

FieldElem FieldOps::mul(const FieldElem& a, const FieldElem& b) const {
    if (a.is_zero() || b.is_zero()) return {};
    FieldElem out;
    out.scale_ = a.scale_ * b.scale_;
    for (int p = 0; p < FieldElem::kPairs; ++p) out.den_[p] = a.den_[p] + b.den_[p];
    for (int s = 0; s < FieldElem::kMasks; ++s) {
        auto& x = a.num_[static_cast<std::size_t>(s)];
        if (x.is_zero()) continue;
        for (int t = 0; t < FieldElem::kMasks; ++t) {
            auto& y = b.num_[static_cast<std::size_t>(t)];
            if (y.is_zero()) continue;
            XPoly prod = x * y;
            int common = s & t;
            for (int m = 1; m <= 3; ++m)
                if (common & (1 << (m - 1))) prod = prod * A_[static_cast<std::size_t>(m - 1)];
            out.num_[static_cast<std::size_t>(s ^ t)] += prod;
        }
    }
    if (out.is_zero()) return {};
    return out;
}

FieldElem FieldOps::pow(const FieldElem& a, unsigned n) const {
    FieldElem result(Rational(1)), base = a;
    while (n) {
        if (n & 1) result = mul(result, base);
        n >>= 1;
        if (n) base = mul(base, base);
    }
    return result;
}

FieldElem FieldOps::derive(const FieldElem& f, int m) const {
    if (f.is_zero()) return {};
    // P = product of the pair factors through m; W = sum_p e_p sigma_p P / d_p.
    XPoly P(1), W;
    std::vector<int> through;
    for (int p = 0; p < FieldElem::kPairs; ++p) {
        auto [i, j] = FieldElem::pair_points(p);
        if (j > genus_) continue;
        if (i == m || j == m) through.push_back(p);
    }
    for (int p : through) P = P * pair_poly(p);
    for (int p : through) {
        if (!f.den_[p]) continue;
        XPoly others(1);
        for (int q : through)
            if (q != p) others = others * pair_poly(q);
        int sigma = FieldElem::pair_points(p).first == m ? 1 : -1;
        others *= Integer(sigma * static_cast<long>(f.den_[p]));
        W += others;
    }
    const XPoly& A = A_[static_cast<std::size_t>(m - 1)];
    const XPoly& dA = dA_[static_cast<std::size_t>(m - 1)];
    int bit = 1 << (m - 1);
    FieldElem out;
    out.scale_ = f.scale_ / 2;
    out.den_ = f.den_;
    for (int p : through) ++out.den_[p];
    for (int s = 0; s < FieldElem::kMasks; ++s) {
        auto& N = f.num_[static_cast<std::size_t>(s)];
        if (N.is_zero()) continue;
        XPoly Q = P * N.derivative(m) * Integer(2);
        if (!W.is_zero()) Q -= N * W * Integer(2);
        auto& slot = out.num_[static_cast<std::size_t>(s ^ bit)];
        if (s & bit)
            slot += Q * A + P * N * dA;
        else
            slot += Q;
    }
    if (out.is_zero()) return {};
    out.normalize();
    return out;
}

} // namespace wpid
