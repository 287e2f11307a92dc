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

#include "wpid/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace wpid {

PolyMatrix::PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
    data_.resize(static_cast<std::size_t>(rows) * cols);
}

PolyMatrix::PolyMatrix(std::initializer_list<std::initializer_list<Poly>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    for (auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged matrix");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

PolyMatrix PolyMatrix::column(const std::vector<Poly>& v) {
    PolyMatrix m(static_cast<int>(v.size()), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(static_cast<int>(i), 0) = v[i];
    return m;
}

const Poly& PolyMatrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw IndexOutOfRange("matrix index (" + std::to_string(i) + "," + std::to_string(j) + ")");
    return (*this)(i, j);
}

std::vector<Poly> PolyMatrix::row(int i) const {
    std::vector<Poly> r;
    for (int j = 0; j < cols_; ++j) r.push_back(at(i, j));
    return r;
}

std::vector<Poly> PolyMatrix::col(int j) const {
    std::vector<Poly> c;
    for (int i = 0; i < rows_; ++i) c.push_back(at(i, j));
    return c;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    PolyMatrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
    return s;
}

PolyMatrix PolyMatrix::map(const std::function<Poly(const Poly&)>& fn) const {
    PolyMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = fn(data_[i]);
    return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shapes do not match");
    PolyMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) {
            PolyAccumulator acc;
            for (int k = 0; k < a.cols_; ++k) {
                const Poly& x = a(i, k);
                if (x.is_zero()) continue;
                for (auto& t : x.terms()) acc.add_scaled(t.coeff, t.mono, b(k, j));
            }
            out(i, j) = acc.finish();
        }
    return out;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shapes do not match");
    PolyMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shapes do not match");
    PolyMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool PolyMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool PolyMatrix::is_symmetric() const {
    if (!square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

// ------------------------------------------------------------ determinants

namespace {

Poly cofactor_rec(const PolyMatrix& m, std::vector<int>& cols, int row) {
    int n = m.rows();
    if (row == n) return 1;
    if (n - row == 1) return m(row, cols[0]);
    if (n - row == 2) return m(row, cols[0]) * m(row + 1, cols[1]) - m(row, cols[1]) * m(row + 1, cols[0]);
    Poly det;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Poly& e = m(row, cols[c]);
        if (e.is_zero()) continue;
        int col = cols[c];
        cols.erase(cols.begin() + static_cast<long>(c));
        Poly sub = cofactor_rec(m, cols, row + 1);
        cols.insert(cols.begin() + static_cast<long>(c), col);
        if (c % 2)
            det -= e * sub;
        else
            det += e * sub;
    }
    return det;
}

} // namespace

Poly cofactor_determinant(const PolyMatrix& m) {
    if (!m.square()) throw NonSquare("determinant of a non-square matrix");
    std::vector<int> cols(m.cols());
    std::iota(cols.begin(), cols.end(), 0);
    return cofactor_rec(m, cols, 0);
}

Poly bareiss_determinant(const PolyMatrix& in) {
    if (!in.square()) throw NonSquare("determinant of a non-square matrix");
    int n = in.rows();
    if (n == 0) return 1;
    PolyMatrix m = in;
    int sign = 1;
    Poly prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k).is_zero()) {
            // Prefer the sparsest nonzero pivot.
            int best = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m(i, k).is_zero() && (best < 0 || m(i, k).size() < m(best, k).size())) best = i;
            if (best < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(best, j));
            sign = -sign;
        }
        const Poly& piv = m(k, k);
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Poly v = piv * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = exact_div(v, prev);
            }
            m(i, k) = Poly();
        }
        prev = piv;
    }
    Poly d = m(n - 1, n - 1);
    return sign > 0 ? d : -d;
}

Poly determinant(const PolyMatrix& m) {
    if (!m.square()) throw NonSquare("determinant of a non-square matrix");
    if (m.rows() < 4) return cofactor_determinant(m);
    return bareiss_determinant(m);
}

Poly minor(const PolyMatrix& m, const std::vector<int>& delete_rows, const std::vector<int>& delete_cols) {
    if (delete_rows.size() != delete_cols.size()) throw NonSquare("minor deletes unequal row and column counts");
    std::vector<bool> dr(m.rows(), false), dc(m.cols(), false);
    for (int r : delete_rows) {
        if (r < 0 || r >= m.rows()) throw IndexOutOfRange("minor row " + std::to_string(r));
        dr[r] = true;
    }
    for (int c : delete_cols) {
        if (c < 0 || c >= m.cols()) throw IndexOutOfRange("minor column " + std::to_string(c));
        dc[c] = true;
    }
    std::vector<int> rows, cols;
    for (int i = 0; i < m.rows(); ++i)
        if (!dr[i]) rows.push_back(i);
    for (int j = 0; j < m.cols(); ++j)
        if (!dc[j]) cols.push_back(j);
    return determinant(m.submatrix(rows, cols));
}

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

namespace {

void check_borders(const PolyMatrix& h, const std::vector<std::vector<Poly>>& right,
                   const std::vector<std::vector<Poly>>& bottom) {
    if (!h.square()) throw NonSquare("bordered determinant of a non-square core");
    if (right.size() != bottom.size()) throw NonSquare("border counts differ");
    for (auto* side : {&right, &bottom})
        for (auto& v : *side)
            if (static_cast<int>(v.size()) != h.rows()) throw std::invalid_argument("border length mismatch");
}

std::vector<int> complement(int n, const std::vector<int>& s) {
    std::vector<int> out;
    std::size_t p = 0;
    for (int i = 0; i < n; ++i) {
        if (p < s.size() && s[p] == i)
            ++p;
        else
            out.push_back(i);
    }
    return out;
}

} // namespace

PolyMatrix bordered_matrix(const PolyMatrix& h, const std::vector<std::vector<Poly>>& right,
                           const std::vector<std::vector<Poly>>& bottom) {
    check_borders(h, right, bottom);
    int n = h.rows(), mb = static_cast<int>(right.size());
    PolyMatrix out(n + mb, n + mb);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = h(i, j);
    for (int b = 0; b < mb; ++b)
        for (int i = 0; i < n; ++i) {
            out(i, n + b) = right[b][i];
            out(n + b, i) = bottom[b][i];
        }
    return out;
}

Poly bordered_determinant(const PolyMatrix& h, const std::vector<std::vector<Poly>>& right,
                          const std::vector<std::vector<Poly>>& bottom) {
    check_borders(h, right, bottom);
    int n = h.rows(), mb = static_cast<int>(right.size());
    if (mb == 0) return determinant(h);
    if (mb > n) return 0;
    auto border_minor = [&](const std::vector<std::vector<Poly>>& side, const std::vector<int>& rows) {
        PolyMatrix s(mb, mb);
        for (int i = 0; i < mb; ++i)
            for (int j = 0; j < mb; ++j) s(i, j) = side[j][rows[i]];
        return determinant(s);
    };
    auto sets = subsets(n, mb);
    std::vector<Poly> rminors, bminors;
    for (auto& s : sets) {
        rminors.push_back(border_minor(right, s));
        bminors.push_back(border_minor(bottom, s));
    }
    PolyAccumulator acc;
    for (std::size_t a = 0; a < sets.size(); ++a) {
        if (rminors[a].is_zero()) continue;
        int sa = std::accumulate(sets[a].begin(), sets[a].end(), 0);
        auto rows = complement(n, sets[a]);
        for (std::size_t b = 0; b < sets.size(); ++b) {
            if (bminors[b].is_zero()) continue;
            int sb = std::accumulate(sets[b].begin(), sets[b].end(), 0);
            Poly core = determinant(h.submatrix(rows, complement(n, sets[b])));
            if (core.is_zero()) continue;
            Poly term = rminors[a] * bminors[b] * core;
            Rational sign = ((sa + sb + mb) % 2) ? -1 : 1;
            for (auto& t : term.terms()) acc.add(t.mono, sign * t.coeff);
        }
    }
    return acc.finish();
}

} // namespace wpid
