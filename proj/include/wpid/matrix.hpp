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

#ifndef WPID_MATRIX_HPP
#define WPID_MATRIX_HPP

#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "wpid/poly.hpp"

namespace wpid {

struct NonSquare : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Dense row-major matrix of polynomials. Indices are 0-based.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols);
    PolyMatrix(std::initializer_list<std::initializer_list<Poly>> rows);

    static PolyMatrix identity(int n);
    static PolyMatrix column(const std::vector<Poly>& v);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Poly& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Poly& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Poly& at(int i, int j) const;

    std::vector<Poly> row(int i) const;
    std::vector<Poly> col(int j) const;

    PolyMatrix transpose() const;
    // Rows and columns kept, in the given order.
    PolyMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
    PolyMatrix map(const std::function<Poly(const Poly&)>& fn) const;

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

    bool is_zero() const;
    bool is_symmetric() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Poly> data_;
};

// Bareiss for n >= 4, cofactor expansion below.
Poly determinant(const PolyMatrix& m);
Poly cofactor_determinant(const PolyMatrix& m);
Poly bareiss_determinant(const PolyMatrix& m);

// Unsigned minor: determinant after deleting the given rows and columns.
Poly minor(const PolyMatrix& m, const std::vector<int>& delete_rows, const std::vector<int>& delete_cols);

/*
 * Determinant of the bordered matrix
 *
 *     | h    R |
 *     | B^T  0 |
 *
 * where R and B are n x m (columns are the border vectors). Computed by
 * Laplace expansion over the border rows and columns:
 *
 *   (-1)^m sum_{I,J} (-1)^{|I|+|J|} det R[I,:] det B[J,:] det h[~I,~J].
 */
Poly bordered_determinant(const PolyMatrix& h, const std::vector<std::vector<Poly>>& right,
                          const std::vector<std::vector<Poly>>& bottom);
// The explicit (n+m) x (n+m) matrix.
PolyMatrix bordered_matrix(const PolyMatrix& h, const std::vector<std::vector<Poly>>& right,
                           const std::vector<std::vector<Poly>>& bottom);

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k);

} // namespace wpid

#endif
