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

#include "wpid/poly.hpp"

#include <algorithm>
#include <cctype>

namespace wpid {

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- Monomial

std::uint64_t Monomial::weight(int slot) {
    static const auto table = [] {
        std::array<std::uint64_t, kSlots> w{};
        std::uint64_t z = 0x9e3779b97f4a7c15ULL;
        for (auto& v : w) {
            z += 0x9e3779b97f4a7c15ULL;
            std::uint64_t t = z;
            t = (t ^ (t >> 30)) * 0xbf58476d1ce4e5b9ULL;
            t = (t ^ (t >> 27)) * 0x94d049bb133111ebULL;
            v = t ^ (t >> 31);
        }
        return w;
    }();
    return table[slot];
}

Monomial::Monomial(Symbol s, unsigned e) {
    exps_.fill(0);
    if (e > 255) throw std::overflow_error("exponent overflow");
    exps_[slot(s)] = static_cast<std::uint8_t>(e);
    degree_ = static_cast<std::uint16_t>(e);
    hash_ = weight(slot(s)) * e;
}

std::vector<std::pair<Symbol, unsigned>> Monomial::factors() const {
    std::vector<std::pair<Symbol, unsigned>> out;
    if (degree_ == 0) return out;
    for (int s = kSlots - 1; s >= 0; --s)
        if (exps_[s]) out.emplace_back(Symbol(static_cast<std::uint8_t>(kSlots - 1 - s)), exps_[s]);
    return out;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    unsigned over = 0;
    for (int i = 0; i < kSlots; ++i) {
        unsigned s = unsigned(exps_[i]) + o.exps_[i];
        r.exps_[i] = static_cast<std::uint8_t>(s);
        over |= s;
    }
    if (over >> 8) throw std::overflow_error("exponent overflow");
    r.degree_ = static_cast<std::uint16_t>(degree_ + o.degree_);
    r.hash_ = hash_ + o.hash_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (degree_ > o.degree_) return false;
    for (int i = 0; i < kSlots; ++i)
        if (exps_[i] > o.exps_[i]) return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kSlots; ++i) r.exps_[i] = static_cast<std::uint8_t>(exps_[i] - o.exps_[i]);
    r.degree_ = static_cast<std::uint16_t>(degree_ - o.degree_);
    r.hash_ = hash_ - o.hash_;
    return r;
}

Monomial Monomial::with_exponent(Symbol s, unsigned e) const {
    if (e > 255) throw std::overflow_error("exponent overflow");
    Monomial r = *this;
    int sl = slot(s);
    r.degree_ = static_cast<std::uint16_t>(r.degree_ - r.exps_[sl] + e);
    r.hash_ = r.hash_ - weight(sl) * r.exps_[sl] + weight(sl) * e;
    r.exps_[sl] = static_cast<std::uint8_t>(e);
    return r;
}

// --------------------------------------------------------- PolyAccumulator

void PolyAccumulator::add(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = map_.try_emplace(m, c);
    if (!fresh) it->second += c;
}

void PolyAccumulator::add_scaled(const Rational& c, const Monomial& m, const Poly& p) {
    if (sgn(c) == 0) return;
    for (auto& t : p.terms_) {
        mpq_mul(tmp_.get_mpq_t(), c.get_mpq_t(), t.coeff.get_mpq_t());
        auto [it, fresh] = map_.try_emplace(m * t.mono);
        if (fresh)
            it->second = tmp_;
        else
            it->second += tmp_;
    }
}

void PolyAccumulator::add(const Poly& p) {
    for (auto& t : p.terms_) add(t.mono, t.coeff);
}

Poly PolyAccumulator::finish() {
    Poly out;
    out.terms_.reserve(map_.size());
    for (auto& [m, c] : map_)
        if (sgn(c) != 0) out.terms_.push_back({m, std::move(c)});
    map_.clear();
    std::sort(out.terms_.begin(), out.terms_.end(),
              [](const Term& a, const Term& b) { return a.mono > b.mono; });
    return out;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(const Rational& c) {
    if (sgn(c) != 0) terms_.push_back({Monomial(), c});
}

Poly::Poly(Symbol s) { terms_.push_back({Monomial(s), Rational(1)}); }

Poly::Poly(const Monomial& m, const Rational& c) {
    if (sgn(c) != 0) terms_.push_back({m, c});
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
    Poly out;
    for (auto& t : terms) {
        if (!out.terms_.empty() && out.terms_.back().mono == t.mono)
            out.terms_.back().coeff += t.coeff;
        else
            out.terms_.push_back(std::move(t));
    }
    std::erase_if(out.terms_, [](const Term& t) { return sgn(t.coeff) == 0; });
    return out;
}

Rational Poly::constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return 0;
}

Rational Poly::coeff(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& k) { return t.mono > k; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return 0;
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

unsigned Poly::degree_in(Symbol s) const {
    unsigned d = 0;
    for (auto& t : terms_) d = std::max(d, t.mono.exponent(s));
    return d;
}

std::vector<Symbol> Poly::symbols() const {
    std::vector<bool> seen(symbol_count(), false);
    for (auto& t : terms_)
        for (auto& [s, e] : t.mono.factors()) seen[s.id()] = true;
    std::vector<Symbol> out;
    for (int i = 0; i < symbol_count(); ++i)
        if (seen[i]) out.push_back(symbol_by_id(i));
    return out;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

namespace {

// Merge of two sorted term lists: a + sign*b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].mono > a[i].mono) {
            out.push_back({b[j].mono, sign > 0 ? b[j].coeff : Rational(-b[j].coeff)});
            ++j;
        } else {
            Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
            if (sgn(c) != 0) out.push_back({a[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

Poly& Poly::operator+=(const Poly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge(terms_, o.terms_, +1);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge(terms_, o.terms_, -1);
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly Poly::mul_monomial(const Monomial& m, const Rational& c) const {
    Poly r;
    if (sgn(c) == 0) return r;
    r.terms_.reserve(terms_.size());
    // Multiplying by a monomial preserves the order.
    for (auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    if (a.size() == 1) return b.mul_monomial(a.terms_[0].mono, a.terms_[0].coeff);
    if (b.size() == 1) return a.mul_monomial(b.terms_[0].mono, b.terms_[0].coeff);
    const Poly& small = a.size() <= b.size() ? a : b;
    const Poly& big = a.size() <= b.size() ? b : a;
    PolyAccumulator acc(std::min<std::size_t>(small.size() * big.size(), 1u << 20));
    for (auto& t : small.terms_) acc.add_scaled(t.coeff, t.mono, big);
    return acc.finish();
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
}

Poly Poly::pow(unsigned n) const {
    Poly result(1), base = *this;
    while (n) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

Poly pow(const Poly& p, unsigned n) { return p.pow(n); }

Poly Poly::derivative(Symbol s) const {
    std::vector<Term> out;
    for (auto& t : terms_) {
        unsigned e = t.mono.exponent(s);
        if (!e) continue;
        out.push_back({t.mono.with_exponent(s, e - 1), t.coeff * e});
    }
    return Poly::from_terms(std::move(out));
}

namespace {

void append_coeff(std::string& out, const Rational& c, bool constant) {
    if (constant || c != 1) {
        out += c.get_str();
        if (!constant) out += "*";
    }
}

} // namespace

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        first = false;
        c = abs(c);
        append_coeff(out, c, t.mono.is_one());
        bool firstf = true;
        for (auto& [s, e] : t.mono.factors()) {
            if (!firstf) out += "*";
            firstf = false;
            out += s.name();
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

std::string Poly::to_latex() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        first = false;
        c = abs(c);
        bool constant = t.mono.is_one();
        if (constant || c != 1) {
            if (c.get_den() == 1)
                out += c.get_num().get_str();
            else
                out += "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
            if (!constant) out += " ";
        }
        bool firstf = true;
        for (auto& [s, e] : t.mono.factors()) {
            if (!firstf) out += " ";
            firstf = false;
            out += s.latex();
            if (e > 1) out += "^{" + std::to_string(e) + "}";
        }
    }
    return out;
}

// ------------------------------------------------------------ substitution

Poly substitute(const Poly& p, const Bindings& b) {
    if (b.empty()) return p;
    bool all_constant = true;
    for (auto& [s, v] : b)
        if (!v.is_constant()) all_constant = false;
    // Cache of powers per bound symbol.
    std::map<std::pair<int, unsigned>, Poly> powers;
    auto power = [&](Symbol s, unsigned e) -> const Poly& {
        auto key = std::make_pair(int(s.id()), e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        return powers.emplace(key, b.at(s).pow(e)).first->second;
    };
    PolyAccumulator acc(p.size());
    for (auto& t : p.terms()) {
        Monomial rest;
        Rational c = t.coeff;
        Poly bound(1);
        bool zero = false;
        for (auto& [s, e] : t.mono.factors()) {
            auto it = b.find(s);
            if (it == b.end()) {
                rest = rest * Monomial(s, e);
            } else if (all_constant) {
                Rational v = it->second.constant_term();
                if (sgn(v) == 0) {
                    zero = true;
                    break;
                }
                Rational pw;
                mpz_pow_ui(pw.get_num_mpz_t(), v.get_num_mpz_t(), e);
                mpz_pow_ui(pw.get_den_mpz_t(), v.get_den_mpz_t(), e);
                c *= pw;
            } else {
                bound = bound * power(s, e);
            }
        }
        if (zero) continue;
        if (all_constant)
            acc.add(rest, c);
        else
            acc.add_scaled(c, rest, bound);
    }
    return acc.finish();
}

Poly coeff_extract(const Poly& p, Symbol s, unsigned d) {
    std::vector<Term> out;
    for (auto& t : p.terms())
        if (t.mono.exponent(s) == d) out.push_back({t.mono.with_exponent(s, 0), t.coeff});
    return Poly::from_terms(std::move(out));
}

// ---------------------------------------------------------------- division

Poly exact_div(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw std::domain_error("division by zero polynomial");
    if (q.size() == 1) {
        const Term& lt = q.leading();
        Rational inv = 1 / lt.coeff;
        std::vector<Term> out;
        out.reserve(p.size());
        for (auto& t : p.terms()) {
            if (!lt.mono.divides(t.mono)) throw NotDivisible("monomial does not divide");
            out.push_back({t.mono / lt.mono, t.coeff * inv});
        }
        return Poly::from_terms(std::move(out));
    }
    // Classical division by leading terms; the remainder lives in an ordered map.
    std::map<Monomial, Rational, std::greater<>> rem;
    for (auto& t : p.terms()) rem.emplace(t.mono, t.coeff);
    const Term& lt = q.leading();
    Rational inv = 1 / lt.coeff;
    std::vector<Term> quot;
    Rational tmp;
    while (!rem.empty()) {
        auto top = rem.begin();
        if (!lt.mono.divides(top->first)) throw NotDivisible("remainder is nonzero");
        Monomial m = top->first / lt.mono;
        Rational c = top->second * inv;
        quot.push_back({m, c});
        for (auto& t : q.terms()) {
            Monomial mm = t.mono * m;
            tmp = c * t.coeff;
            auto [it, fresh] = rem.try_emplace(mm);
            if (fresh)
                it->second = -tmp;
            else {
                it->second -= tmp;
                if (sgn(it->second) == 0) rem.erase(it);
            }
        }
    }
    return Poly::from_terms(std::move(quot));
}

unsigned divide_out(Poly& p, const Poly& q) {
    unsigned n = 0;
    while (true) {
        try {
            p = exact_div(p, q);
            ++n;
        } catch (const NotDivisible&) {
            return n;
        }
    }
}

// ------------------------------------------------------------------ parser

namespace {

/*
 * Grammar (whitespace ignored):
 *   expr    := ['+'|'-'] product (('+'|'-') product)*
 *   product := power (('*'|'/') power)*        division only by constants
 *   power   := atom ['^' integer]
 *   atom    := integer | symbol | '(' expr ')'
 *   symbol  := name ['[' integer (',' integer)* ']']
 */
class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Poly parse() {
        Poly p = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Poly expr() {
        Poly acc;
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Poly t = product();
        acc = neg ? -t : t;
        while (true) {
            if (eat('+'))
                acc += product();
            else if (eat('-'))
                acc -= product();
            else
                break;
        }
        return acc;
    }

    Poly product() {
        Poly acc = power();
        while (true) {
            if (eat('*')) {
                acc = acc * power();
            } else if (eat('/')) {
                Poly d = power();
                if (!d.is_constant() || d.is_zero()) fail("division by a non-constant");
                acc *= Rational(1 / d.constant_term());
            } else {
                break;
            }
        }
        return acc;
    }

    Poly power() {
        Poly base = atom();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
        }
        return base;
    }

    Poly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Poly(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (pos_ < s_.size() && s_[pos_] == '[') {
                std::size_t close = s_.find(']', pos_);
                if (close == std::string_view::npos) fail("expected ']'");
                std::string idx(s_.substr(pos_, close - pos_ + 1));
                idx.erase(std::remove_if(idx.begin(), idx.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); }),
                          idx.end());
                // Accept indices in any order; the interned symbol is sorted.
                std::vector<int> ix;
                std::size_t p = 1;
                while (p < idx.size() - 1) {
                    std::size_t q = idx.find_first_of(",]", p);
                    ix.push_back(std::stoi(idx.substr(p, q - p)));
                    p = q + 1;
                }
                pos_ = close + 1;
                std::optional<Symbol> s;
                if (name == "wp")
                    s = Symbol::find_wp(ix);
                else if (name == "wpB")
                    s = Symbol::find_wpB(ix);
                if (!s) fail("unknown indexed symbol " + name + idx);
                return Poly(*s);
            }
            auto s = symbol_from_name(name);
            if (!s) fail("unknown symbol " + name);
            return Poly(*s);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

Poly Poly::parse(std::string_view text) { return Parser(text).parse(); }

} // namespace wpid
