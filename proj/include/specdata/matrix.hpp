#ifndef SPECDATA_MATRIX_HPP
#define SPECDATA_MATRIX_HPP

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "specdata/errors.hpp"
#include "specdata/unipoly.hpp"

namespace specdata {

template <class K>
using DenseMatrix = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;

template <class K>
using DenseVector = Eigen::Matrix<K, Eigen::Dynamic, 1>;

template <class K>
bool is_zero_matrix(const DenseMatrix<K>& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) return false;
    return true;
}

template <class K>
bool matrices_equal(const DenseMatrix<K>& a, const DenseMatrix<K>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

/// Reduced row echelon form, in place; returns the pivot column of each
/// nonzero row.
template <class K>
std::vector<Eigen::Index> rref_inplace(DenseMatrix<K>& m) {
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = row; i < m.rows(); ++i)
            if (!m(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row) m.row(pivot).swap(m.row(row));
        const K inv = field_inverse(m(row, col));
        for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const K f = m(i, col);
            for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class K>
struct RankKernel {
    Eigen::Index rank;
    DenseMatrix<K> kernel_basis;  // one basis vector per column
};

/// Exact rank and null-space basis. The basis follows the standard
/// free-column construction: the free coordinate is 1, pivot coordinates are
/// the negated reduced entries.
template <class K>
RankKernel<K> rank_kernel(DenseMatrix<K> m) {
    const Eigen::Index cols = m.cols();
    const std::vector<Eigen::Index> pivots = rref_inplace(m);
    const Eigen::Index rank = static_cast<Eigen::Index>(pivots.size());

    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (Eigen::Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

    DenseMatrix<K> kernel(cols, cols - rank);
    kernel.setConstant(K(0));
    Eigen::Index k = 0;
    for (Eigen::Index f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        for (Eigen::Index r = 0; r < rank; ++r) kernel(pivots[static_cast<std::size_t>(r)], k) = -m(r, f);
        kernel(f, k) = K(1);
        ++k;
    }
    return {rank, std::move(kernel)};
}

template <class K>
Eigen::Index rank_of(const DenseMatrix<K>& m) {
    DenseMatrix<K> c = m;
    return static_cast<Eigen::Index>(rref_inplace(c).size());
}

/// Solve A X = B exactly; empty when inconsistent. A need not be square;
/// free variables are set to zero.
template <class K>
std::optional<DenseMatrix<K>> solve_columns(const DenseMatrix<K>& a, const DenseMatrix<K>& b) {
    if (a.rows() != b.rows()) throw BadInputError("solve_columns: row mismatch");
    DenseMatrix<K> aug(a.rows(), a.cols() + b.cols());
    aug << a, b;
    const std::vector<Eigen::Index> pivots = rref_inplace(aug);
    for (Eigen::Index p : pivots)
        if (p >= a.cols()) return std::nullopt;  // pivot in the augmented block
    DenseMatrix<K> x(a.cols(), b.cols());
    x.setConstant(K(0));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (Eigen::Index j = 0; j < b.cols(); ++j)
            x(pivots[r], j) = aug(static_cast<Eigen::Index>(r), a.cols() + j);
    return x;
}

template <class K>
std::optional<DenseMatrix<K>> inverse(const DenseMatrix<K>& m) {
    if (m.rows() != m.cols()) throw BadInputError("inverse: matrix not square");
    DenseMatrix<K> id = DenseMatrix<K>::Identity(m.rows(), m.cols());
    return solve_columns(m, id);  // consistent iff m has full rank
}

template <class K>
DenseMatrix<K> mat_pow(const DenseMatrix<K>& m, int e) {
    DenseMatrix<K> acc = DenseMatrix<K>::Identity(m.rows(), m.cols());
    for (int i = 0; i < e; ++i) acc = (acc * m).eval();
    return acc;
}

template <class K>
K trace_of(const DenseMatrix<K>& m) {
    K t(0);
    for (Eigen::Index i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

/// Characteristic polynomial det(sI - m), monic of degree n, by the
/// division-free-in-spirit Faddeev-LeVerrier recurrence (the divisions run
/// over 1..n only, legal in characteristic 0 or p > n).
template <class K>
UniPoly<K> char_poly(const DenseMatrix<K>& m) {
    if (m.rows() != m.cols()) throw BadInputError("char_poly: matrix not square");
    const Eigen::Index n = m.rows();
    std::vector<K> c(static_cast<std::size_t>(n) + 1, K(0));
    c[static_cast<std::size_t>(n)] = K(1);
    if (n == 0) return UniPoly<K>(std::move(c));
    DenseMatrix<K> acc = m;
    c[static_cast<std::size_t>(n - 1)] = -trace_of(acc);
    for (Eigen::Index k = 2; k <= n; ++k) {
        DenseMatrix<K> shifted = acc;
        const K diag = c[static_cast<std::size_t>(n - k + 1)];
        for (Eigen::Index i = 0; i < n; ++i) shifted(i, i) += diag;
        acc = (m * shifted).eval();
        c[static_cast<std::size_t>(n - k)] = div_by_small_int(-trace_of(acc), static_cast<long long>(k));
    }
    return UniPoly<K>(std::move(c));
}

}  // namespace specdata

#endif
