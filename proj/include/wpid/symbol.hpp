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

#ifndef WPID_SYMBOL_HPP
#define WPID_SYMBOL_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wpid {

/*
 * Interned symbols. The id order is the global variable order used by the
 * monomial ordering:
 *
 *   a0 < ... < a8 < wp (2, 3, 4 indices) < wpB (2, 4 indices)
 *      < x < y < x1 < y1 < x2 < y2 < x3 < y3 < l0..l4 < k0..k4 < r
 *
 * The table is fixed at compile time and shared by all genera; a genus is a
 * property of the operations, never of a symbol.
 */
enum class SymKind : std::uint8_t {
    Coeff,   // a_i
    Wp,      // wp_{i..}, 2 to 4 sorted indices
    WpB,     // Baker's wp^B_{i..}
    PointX,  // x (m = 0) or x_m
    PointY,  // y (m = 0) or y_m
    BorderL, // l_i
    BorderK, // k_i
    Root     // r, the fixed square root of the top curve coefficient
};

constexpr int kMaxCoeff = 8;
constexpr int kMaxGenus = 3;
constexpr int kBorderLen = 5;

class Symbol {
public:
    constexpr Symbol() = default;
    constexpr explicit Symbol(std::uint8_t id) : id_(id) {}

    static Symbol a(int i);
    static Symbol wp(std::initializer_list<int> idx);
    static Symbol wp(const std::vector<int>& idx);
    static Symbol wpB(std::initializer_list<int> idx);
    static Symbol wpB(const std::vector<int>& idx);
    static Symbol x(int m = 0);
    static Symbol y(int m = 0);
    static Symbol l(int i);
    static Symbol k(int i);
    static Symbol root();

    // Returns nothing when the index tuple has no interned symbol.
    static std::optional<Symbol> find_wp(std::vector<int> idx);
    static std::optional<Symbol> find_wpB(std::vector<int> idx);

    constexpr std::uint8_t id() const { return id_; }
    SymKind kind() const;
    // a_i -> i; x_m, y_m -> m; l_i, k_i -> i.
    int index() const;
    // Sorted wp indices (empty for other kinds).
    const std::vector<int>& wp_indices() const;
    const std::string& name() const;
    const std::string& latex() const;

    bool is_wp() const { return kind() == SymKind::Wp; }
    int wp_order() const { return static_cast<int>(wp_indices().size()); }

    friend constexpr bool operator==(Symbol a, Symbol b) { return a.id_ == b.id_; }
    friend constexpr bool operator!=(Symbol a, Symbol b) { return a.id_ != b.id_; }
    friend constexpr bool operator<(Symbol a, Symbol b) { return a.id_ < b.id_; }

private:
    std::uint8_t id_ = 0;
};

int symbol_count();
Symbol symbol_by_id(int id);
// Parses the canonical text name (a3, wp[1,2,3], wpB[1,1], x, y2, l0, r).
std::optional<Symbol> symbol_from_name(std::string_view name);

// All wp symbols with `order` indices drawn from 1..g, in interning order.
std::vector<Symbol> wp_symbols(int g, int order);

} // namespace wpid

#endif
