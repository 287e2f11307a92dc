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

#include "wpid/linalg.hpp"

#include <stdexcept>

namespace wpid {

std::vector<int> rref(RatMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (sgn(m[i][c]) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        Rational inv = 1 / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || sgn(m[i][c]) == 0) continue;
            Rational f = m[i][c];
            for (int j = c; j < cols; ++j)
                if (sgn(m[r][j]) != 0) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(RatMat m) { return static_cast<int>(rref(m).size()); }

std::vector<RatVec> nullspace(RatMat m, int cols) {
    auto piv = rref(m);
    std::vector<bool> is_piv(cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<RatVec> out;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        RatVec v(cols, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<LinearSolution> solve(const RatMat& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("solve: row count mismatch");
    int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
    RatMat aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == cols) return std::nullopt;
    LinearSolution s;
    s.x.assign(cols, 0);
    for (std::size_t r = 0; r < piv.size(); ++r) s.x[piv[r]] = aug[r][cols];
    for (auto& row : aug) row.pop_back();
    s.kernel = nullspace(std::move(aug), cols);
    return s;
}

std::optional<LinearSolution> solve_combination(const std::vector<Poly>& columns, const Poly& target) {
    std::map<Monomial, int, std::greater<>> row_of;
    auto row = [&](const Monomial& m) {
        auto [it, fresh] = row_of.try_emplace(m, static_cast<int>(row_of.size()));
        return it->second;
    };
    for (auto& c : columns)
        for (auto& t : c.terms()) row(t.mono);
    for (auto& t : target.terms()) row(t.mono);
    RatMat a(row_of.size(), RatVec(columns.size(), 0));
    RatVec b(row_of.size(), 0);
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (auto& t : columns[j].terms()) a[row_of[t.mono]][j] = t.coeff;
    for (auto& t : target.terms()) b[row_of[t.mono]] = t.coeff;
    if (row_of.empty()) {
        LinearSolution s;
        s.x.assign(columns.size(), 0);
        for (std::size_t j = 0; j < columns.size(); ++j) {
            RatVec v(columns.size(), 0);
            v[j] = 1;
            s.kernel.push_back(v);
        }
        return s;
    }
    return solve(a, b);
}

// ------------------------------------------------------------------- span

SpanBasis::Reduction SpanBasis::reduce(const Poly& p) const {
    std::map<Monomial, Rational, std::greater<>> rem;
    for (auto& t : p.terms()) rem.emplace(t.mono, t.coeff);
    Reduction out;
    auto it = rem.begin();
    while (it != rem.end()) {
        auto row = rows_.find(it->first);
        if (row == rows_.end()) {
            ++it;
            continue;
        }
        // Rows are monic in their leading monomial.
        Rational f = it->second;
        Monomial key = it->first;
        for (auto& t : row->second.poly.terms()) {
            auto [r, fresh] = rem.try_emplace(t.mono);
            r->second -= f * t.coeff;
            if (sgn(r->second) == 0) rem.erase(r);
        }
        for (auto& [i, c] : row->second.cert) {
            auto& slot = out.certificate[i];
            slot += f * c;
            if (sgn(slot) == 0) out.certificate.erase(i);
        }
        it = rem.upper_bound(key);
    }
    std::vector<Term> terms;
    for (auto& [m, c] : rem) terms.push_back({m, c});
    out.remainder = Poly::from_terms(std::move(terms));
    return out;
}

bool SpanBasis::add(const Poly& p) {
    int idx = static_cast<int>(inputs_++);
    auto red = reduce(p);
    if (red.remainder.is_zero()) return false;
    // remainder = p - sum cert_i input_i
    std::map<int, Rational> cert;
    for (auto& [i, c] : red.certificate) cert[i] = -c;
    cert[idx] = 1;
    Rational inv = 1 / red.remainder.leading().coeff;
    Row row{red.remainder * inv, {}};
    for (auto& [i, c] : cert) row.cert[i] = c * inv;
    rows_.emplace(row.poly.leading().mono, std::move(row));
    return true;
}

} // namespace wpid
