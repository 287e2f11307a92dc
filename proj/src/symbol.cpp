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

#include "wpid/symbol.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wpid {

namespace {

struct Info {
    SymKind kind;
    int index = 0;
    std::vector<int> idx;
    std::string name;
    std::string latex;
};

std::string join_indices(const std::vector<int>& idx, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(idx[i]);
    }
    return s;
}

// Non-decreasing index tuples of the given length over 1..3, lexicographic.
void tuples(int len, int lo, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == len) {
        out.push_back(cur);
        return;
    }
    for (int i = lo; i <= kMaxGenus; ++i) {
        cur.push_back(i);
        tuples(len, i, cur, out);
        cur.pop_back();
    }
}

struct Table {
    std::vector<Info> info;
    std::map<std::string, int, std::less<>> by_name;
    std::map<std::vector<int>, int> wp_by_idx;
    std::map<std::vector<int>, int> wpB_by_idx;
    int x_base = 0, l_base = 0, k_base = 0, root_id = 0;

    void add(Info i) {
        by_name[i.name] = static_cast<int>(info.size());
        info.push_back(std::move(i));
    }

    Table() {
        for (int i = 0; i <= kMaxCoeff; ++i)
            add({SymKind::Coeff, i, {}, "a" + std::to_string(i), "a_{" + std::to_string(i) + "}"});
        for (int len = 2; len <= 4; ++len) {
            std::vector<std::vector<int>> ts;
            std::vector<int> cur;
            tuples(len, 1, cur, ts);
            for (auto& t : ts) {
                wp_by_idx[t] = static_cast<int>(info.size());
                add({SymKind::Wp, 0, t, "wp[" + join_indices(t, ",") + "]",
                     "\\wp_{" + join_indices(t, "") + "}"});
            }
        }
        // Baker symbols: the six two-index ones, the out-of-range wpB[1,4]
        // that occurs in the printed Baker list, then the four-index ones.
        {
            std::vector<std::vector<int>> ts;
            std::vector<int> cur;
            tuples(2, 1, cur, ts);
            ts.push_back({1, 4});
            std::vector<std::vector<int>> t4;
            tuples(4, 1, cur, t4);
            ts.insert(ts.end(), t4.begin(), t4.end());
            for (auto& t : ts) {
                wpB_by_idx[t] = static_cast<int>(info.size());
                add({SymKind::WpB, 0, t, "wpB[" + join_indices(t, ",") + "]",
                     "\\wp^{\\mathfrak B}_{" + join_indices(t, "") + "}"});
            }
        }
        x_base = static_cast<int>(info.size());
        for (int m = 0; m <= kMaxGenus; ++m) {
            std::string sfx = m ? std::to_string(m) : "";
            std::string lsfx = m ? "_{" + std::to_string(m) + "}" : "";
            add({SymKind::PointX, m, {}, "x" + sfx, "x" + lsfx});
            add({SymKind::PointY, m, {}, "y" + sfx, "y" + lsfx});
        }
        l_base = static_cast<int>(info.size());
        for (int i = 0; i < kBorderLen; ++i)
            add({SymKind::BorderL, i, {}, "l" + std::to_string(i), "l_{" + std::to_string(i) + "}"});
        k_base = static_cast<int>(info.size());
        for (int i = 0; i < kBorderLen; ++i)
            add({SymKind::BorderK, i, {}, "k" + std::to_string(i), "k_{" + std::to_string(i) + "}"});
        root_id = static_cast<int>(info.size());
        add({SymKind::Root, 0, {}, "r", "r"});
    }
};

const Table& table() {
    static const Table t;
    return t;
}

Symbol from_int(int id) { return Symbol(static_cast<std::uint8_t>(id)); }

} // namespace

Symbol Symbol::a(int i) {
    if (i < 0 || i > kMaxCoeff) throw std::out_of_range("curve coefficient index " + std::to_string(i));
    return from_int(i);
}

std::optional<Symbol> Symbol::find_wp(std::vector<int> idx) {
    std::sort(idx.begin(), idx.end());
    auto& t = table().wp_by_idx;
    auto it = t.find(idx);
    if (it == t.end()) return std::nullopt;
    return from_int(it->second);
}

std::optional<Symbol> Symbol::find_wpB(std::vector<int> idx) {
    std::sort(idx.begin(), idx.end());
    auto& t = table().wpB_by_idx;
    auto it = t.find(idx);
    if (it == t.end()) return std::nullopt;
    return from_int(it->second);
}

Symbol Symbol::wp(const std::vector<int>& idx) {
    auto s = find_wp(idx);
    if (!s) throw std::out_of_range("no wp symbol with these indices");
    return *s;
}

Symbol Symbol::wp(std::initializer_list<int> idx) { return wp(std::vector<int>(idx)); }

Symbol Symbol::wpB(const std::vector<int>& idx) {
    auto s = find_wpB(idx);
    if (!s) throw std::out_of_range("no Baker wp symbol with these indices");
    return *s;
}

Symbol Symbol::wpB(std::initializer_list<int> idx) { return wpB(std::vector<int>(idx)); }

Symbol Symbol::x(int m) {
    if (m < 0 || m > kMaxGenus) throw std::out_of_range("point index");
    return from_int(table().x_base + 2 * m);
}

Symbol Symbol::y(int m) {
    if (m < 0 || m > kMaxGenus) throw std::out_of_range("point index");
    return from_int(table().x_base + 2 * m + 1);
}

Symbol Symbol::l(int i) {
    if (i < 0 || i >= kBorderLen) throw std::out_of_range("border index");
    return from_int(table().l_base + i);
}

Symbol Symbol::k(int i) {
    if (i < 0 || i >= kBorderLen) throw std::out_of_range("border index");
    return from_int(table().k_base + i);
}

Symbol Symbol::root() { return from_int(table().root_id); }

SymKind Symbol::kind() const { return table().info[id_].kind; }
int Symbol::index() const { return table().info[id_].index; }
const std::vector<int>& Symbol::wp_indices() const { return table().info[id_].idx; }
const std::string& Symbol::name() const { return table().info[id_].name; }
const std::string& Symbol::latex() const { return table().info[id_].latex; }

int symbol_count() { return static_cast<int>(table().info.size()); }

Symbol symbol_by_id(int id) {
    if (id < 0 || id >= symbol_count()) throw std::out_of_range("symbol id");
    return from_int(id);
}

std::optional<Symbol> symbol_from_name(std::string_view name) {
    auto& t = table().by_name;
    auto it = t.find(name);
    if (it == t.end()) return std::nullopt;
    return from_int(it->second);
}

std::vector<Symbol> wp_symbols(int g, int order) {
    std::vector<Symbol> out;
    for (int id = 0; id < symbol_count(); ++id) {
        Symbol s = from_int(id);
        if (s.kind() != SymKind::Wp || s.wp_order() != order) continue;
        auto& ix = s.wp_indices();
        if (ix.back() <= g) out.push_back(s);
    }
    return out;
}

} // namespace wpid
