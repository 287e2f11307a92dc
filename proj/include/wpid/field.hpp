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

#ifndef WPID_FIELD_HPP
#define WPID_FIELD_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wpid/poly.hpp"

namespace wpid {

/*
 * Integer polynomial in x1, x2, x3. Exponents are packed into one word,
 *
 *   bits 48..63 total degree, 32..47 x3, 16..31 x2, 0..15 x1,
 *
 * so comparing keys is a graded lexicographic comparison.
 */
class XPoly {
public:
    using Key = std::uint64_t;
    struct Term {
        Key key;
        Integer coeff;
    };

    XPoly() = default;
    XPoly(const Integer& c);
    XPoly(long c) : XPoly(Integer(c)) {}
    static XPoly var(int m); // x_m, m in 1..3
    static Key make_key(unsigned e1, unsigned e2, unsigned e3);
    static unsigned exponent(Key k, int m) { return static_cast<unsigned>((k >> (16 * (m - 1))) & 0xffff); }
    static unsigned degree(Key k) { return static_cast<unsigned>(k >> 48); }

    static XPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].key == 0); }

    XPoly operator-() const;
    XPoly& operator+=(const XPoly& o);
    XPoly& operator-=(const XPoly& o);
    XPoly& operator*=(const Integer& c);
    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    friend XPoly operator*(XPoly a, const Integer& c) { return a *= c; }
    friend bool operator==(const XPoly& a, const XPoly& b);
    friend bool operator!=(const XPoly& a, const XPoly& b) { return !(a == b); }

    XPoly pow(unsigned n) const;
    XPoly derivative(int m) const;
    Integer content() const;
    // Exact division by an integer.
    void divide_exact(const Integer& c);
    // Divisibility by and exact division by x_i - x_j.
    bool divisible_by_difference(int i, int j) const;
    XPoly divide_by_difference(int i, int j) const;
    // Exact quotient; throws NotDivisible.
    XPoly exact_div(const XPoly& d) const;

    // Univariate a(x_m) from integer coefficients of x^0, x^1, ...
    static XPoly univariate(const std::vector<Integer>& coeffs, int m);

    std::string to_string() const;

private:
    std::vector<Term> terms_; // descending keys, no zero coefficients
};

/*
 * Element of the function field of the g-fold product of the curve
 * y^2 = A(x) with A integral, written as
 *
 *   scale * sum_S num[S] y^S / prod_{i<j} (x_i - x_j)^den_ij
 *
 * where S runs over subsets of the points (bit m-1 for y_m).
 */
class FieldElem {
public:
    static constexpr int kMasks = 8;
    static constexpr int kPairs = 3;

    FieldElem() = default;
    FieldElem(const Rational& c);
    FieldElem(const XPoly& p);
    static FieldElem x(int m);
    static FieldElem y(int m);

    bool is_zero() const;
    // True when the element is scale * num[0] with no denominator.
    bool is_polynomial() const;
    const Rational& scale() const { return scale_; }
    const XPoly& num(int mask) const { return num_[static_cast<std::size_t>(mask)]; }
    unsigned den(int pair) const { return den_[static_cast<std::size_t>(pair)]; }
    std::size_t terms() const;

    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    FieldElem& operator*=(const Rational& c);

    // Removes integer content and common (x_i - x_j) factors.
    void normalize();
    // Divides by a nonzero polynomial that must divide after the
    // (x_i - x_j) factors are moved to the denominator.
    FieldElem divide(const XPoly& d) const;

    static int pair_index(int i, int j); // 1 <= i < j <= 3
    static std::pair<int, int> pair_points(int p);

    std::string to_string() const;

private:
    friend class FieldOps;
    Rational scale_ = 0;
    std::array<XPoly, kMasks> num_;
    std::array<unsigned, kPairs> den_{};
};

/*
 * Multiplication and differentiation need the curve: y_m^2 = A(x_m).
 */
class FieldOps {
public:
    // a: integer coefficients of A(x) = sum a[i] x^i.
    FieldOps(int genus, const std::vector<Integer>& a);

    int genus() const { return genus_; }
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem pow(const FieldElem& a, unsigned n) const;
    // y_m d/dx_m.
    FieldElem derive(const FieldElem& f, int m) const;
    const XPoly& curve(int m) const { return A_[static_cast<std::size_t>(m - 1)]; }

private:
    int genus_;
    std::vector<XPoly> A_, dA_;
};

} // namespace wpid

#endif
