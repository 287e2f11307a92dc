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

#ifndef WPID_SL2_HPP
#define WPID_SL2_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wpid/poly.hpp"

namespace wpid {

struct UnsupportedGenus : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotHighestWeight : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Raised when a derivation meets a symbol it has no image for.
struct UnsupportedSymbol : std::domain_error {
    using std::domain_error::domain_error;
};

void require_genus(int g);

/*
 * A derivation of the symbol algebra, fixed by its images on generators and
 * extended by the Leibniz rule. Symbols without an image are constants.
 */
class Derivation {
public:
    Derivation(std::string name, int genus, int weight_shift);

    const std::string& name() const { return name_; }
    int genus() const { return genus_; }
    int weight_shift() const { return shift_; }

    void set_image(Symbol s, Poly image);
    void set_unsupported(Symbol s);
    // Throws UnsupportedSymbol for symbols marked unsupported.
    const Poly& image(Symbol s) const;

    Poly apply(const Poly& p) const;
    Poly operator()(const Poly& p) const { return apply(p); }

private:
    std::string name_;
    int genus_;
    int shift_;
    std::vector<Poly> images_;
    std::vector<bool> active_, unsupported_;
};

struct Generators {
    Derivation e, f, h;
};

Generators make_generators(int g);
// d/du_k acting on wp symbols; curve coefficients and borders are constants.
Derivation du(int g, int k);
// y_m d/dx_m written through the u-derivatives, so it also acts on wp symbols.
Derivation point_d(int g, int m);

inline Poly apply(const Derivation& d, const Poly& p) { return d.apply(p); }

// h-eigenvalue of a symbol; nothing for symbols outside genus g.
std::optional<int> symbol_weight(Symbol s, int g);
// Some w with h(p) = w p; nothing when p is zero or mixed.
std::optional<int> weight(const Poly& p, int g);

struct CommutatorReport {
    int checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};
CommutatorReport check_commutators(int g);

// Generator symbols of genus g (coefficients, wp up to four indices, points).
std::vector<Symbol> generator_symbols(int g);

struct Multiplet {
    std::vector<Poly> members;     // members[i+1] = f(members[i])
    std::vector<int> weights;
    std::vector<Rational> e_factors; // e(members[i+1]) = e_factors[i] * members[i]
    int dimension() const { return static_cast<int>(members.size()); }
};
Multiplet generate_multiplet(const Poly& hw, int g, int max_dim);

struct ClosureReport {
    std::vector<int> escaping; // indices whose image leaves the span
    bool closed() const { return escaping.empty(); }
};
ClosureReport closure_check(const std::vector<Poly>& set, const Derivation& d);

} // namespace wpid

#endif
