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

#ifndef WPID_POLY_HPP
#define WPID_POLY_HPP

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <cstring>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wpid/symbol.hpp"

namespace wpid {

// GMP keeps mpq_class canonical: gcd(num, den) = 1, den > 0, zero is 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);
// n/d in canonical form (mpq_class(n, d) alone does not reduce).
inline Rational rat(long n, long d = 1) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

struct NotDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/*
 * Dense exponent vector over all interned symbols. Slot s holds the exponent
 * of symbol (kSlots-1-s), so a byte-wise comparison of the slots is a
 * lexicographic comparison starting from the last interned symbol. Together
 * with the total degree in front this gives degree-lexicographic order.
 *
 * The hash is linear in the exponents, which makes the hash of a product the
 * sum of the hashes.
 */
class Monomial {
public:
    static constexpr int kSlots = 88;

    Monomial() { exps_.fill(0); }
    explicit Monomial(Symbol s, unsigned e = 1);

    unsigned degree() const { return degree_; }
    unsigned exponent(Symbol s) const { return exps_[slot(s)]; }
    std::uint64_t hash() const { return hash_; }
    bool is_one() const { return degree_ == 0; }

    // Symbols with nonzero exponent, ascending id.
    std::vector<std::pair<Symbol, unsigned>> factors() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    // Requires divides(o, *this).
    Monomial operator/(const Monomial& o) const;
    Monomial with_exponent(Symbol s, unsigned e) const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.hash_ == b.hash_ && a.degree_ == b.degree_ &&
               std::memcmp(a.exps_.data(), b.exps_.data(), kSlots) == 0;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    // Degree-lexicographic.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
        return std::memcmp(a.exps_.data(), b.exps_.data(), kSlots) < 0;
    }
    friend bool operator>(const Monomial& a, const Monomial& b) { return b < a; }

    struct Hash {
        std::size_t operator()(const Monomial& m) const { return static_cast<std::size_t>(m.hash_); }
    };

private:
    static int slot(Symbol s) { return kSlots - 1 - s.id(); }
    static std::uint64_t weight(int slot);

    std::array<std::uint8_t, kSlots> exps_;
    std::uint16_t degree_ = 0;
    std::uint64_t hash_ = 0;
};

struct Term {
    Monomial mono;
    Rational coeff;
};

class Poly;

/*
 * Unordered accumulation of terms; `finish` produces the canonical Poly.
 */
class PolyAccumulator {
public:
    PolyAccumulator() = default;
    explicit PolyAccumulator(std::size_t reserve) { map_.reserve(reserve); }

    void add(const Monomial& m, const Rational& c);
    // Adds c * m * p.
    void add_scaled(const Rational& c, const Monomial& m, const Poly& p);
    void add(const Poly& p);
    Poly finish();

private:
    std::unordered_map<Monomial, Rational, Monomial::Hash> map_;
    Rational tmp_;
};

/*
 * Sparse polynomial with rational coefficients. Terms are kept sorted in
 * descending monomial order with no zero coefficients, so equal polynomials
 * have identical term vectors.
 */
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);
    Poly(long c) : Poly(Rational(c)) {}
    Poly(int c) : Poly(Rational(c)) {}
    Poly(Symbol s);
    Poly(const Monomial& m, const Rational& c);

    // Takes terms in any order; merges duplicates and drops zeros.
    static Poly from_terms(std::vector<Term> terms);
    static Poly parse(std::string_view text);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    Rational constant_term() const;
    // Coefficient of a given monomial (zero when absent).
    Rational coeff(const Monomial& m) const;
    const Term& leading() const { return terms_.front(); }

    unsigned total_degree() const;
    unsigned degree_in(Symbol s) const;
    // Total degree in the symbols accepted by `pred`.
    template <class Pred>
    unsigned degree_where(Pred pred) const {
        unsigned best = 0;
        for (auto& t : terms_) {
            unsigned d = 0;
            for (auto& [s, e] : t.mono.factors())
                if (pred(s)) d += e;
            best = std::max(best, d);
        }
        return best;
    }
    std::vector<Symbol> symbols() const;
    bool contains(Symbol s) const { return degree_in(s) > 0; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator*(Poly a, int c) { return a *= Rational(c); }
    friend Poly operator*(int c, Poly a) { return a *= Rational(c); }
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned n) const;
    Poly mul_monomial(const Monomial& m, const Rational& c) const;
    Poly derivative(Symbol s) const;

    std::string to_string() const;
    std::string to_latex() const;

private:
    friend class PolyAccumulator;
    std::vector<Term> terms_;
};

Poly pow(const Poly& p, unsigned n);
inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

// Simultaneous substitution; symbols not bound are left alone.
using Bindings = std::map<Symbol, Poly>;
Poly substitute(const Poly& p, const Bindings& b);

// Coefficient of s^d, so p = sum_d coeff_extract(p, s, d) s^d.
Poly coeff_extract(const Poly& p, Symbol s, unsigned d);

// Coefficients of every monomial in the symbols accepted by `pred`; the map
// key is the monomial in those symbols, the value its coefficient polynomial.
template <class Pred>
std::map<Monomial, Poly, std::greater<>> split_by(const Poly& p, Pred pred) {
    std::map<Monomial, std::vector<Term>, std::greater<>> parts;
    for (auto& t : p.terms()) {
        Monomial key, rest;
        for (auto& [s, e] : t.mono.factors()) {
            if (pred(s))
                key = key * Monomial(s, e);
            else
                rest = rest * Monomial(s, e);
        }
        parts[key].push_back({rest, t.coeff});
    }
    std::map<Monomial, Poly, std::greater<>> out;
    for (auto& [k, v] : parts) out.emplace(k, Poly::from_terms(std::move(v)));
    return out;
}

// Exact quotient p / q; throws NotDivisible.
Poly exact_div(const Poly& p, const Poly& q);
// Largest n with q^n | p, dividing it out; p must be nonzero.
unsigned divide_out(Poly& p, const Poly& q);

} // namespace wpid

#endif
