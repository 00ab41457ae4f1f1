#ifndef SPECDATA_SMITH_HPP
#define SPECDATA_SMITH_HPP

#include <utility>

#include "specdata/matrix.hpp"
#include "specdata/unipoly.hpp"

namespace specdata {

template <class K>
using PolyMatrix = DenseMatrix<UniPoly<K>>;

template <class K>
struct SmithResult {
    PolyMatrix<K> U, D, V;  // U*m*V = D, U and V unimodular, D diagonal with d_i | d_{i+1}
};

/// Determinant over the polynomial ring by fraction-free (Bareiss)
/// elimination; all interior divisions are exact.
template <class K>
UniPoly<K> poly_det(PolyMatrix<K> m) {
    if (m.rows() != m.cols()) throw BadInputError("poly_det: matrix not square");
    const Eigen::Index n = m.rows();
    if (n == 0) return UniPoly<K>(1);
    UniPoly<K> prev(1);
    bool negate = false;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            Eigen::Index pivot = -1;
            for (Eigen::Index i = k + 1; i < n; ++i)
                if (!m(i, k).is_zero()) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return UniPoly<K>();
            m.row(k).swap(m.row(pivot));
            negate = !negate;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                auto [q, r] = divmod(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
                if (!r.is_zero()) throw BadInputError("poly_det: inexact Bareiss division");
                m(i, j) = q;
            }
            m(i, k) = UniPoly<K>();
        }
        prev = m(k, k);
    }
    UniPoly<K> det = m(n - 1, n - 1);
    return negate ? -det : det;
}

/// Smith normal form over k[s]. Pivoting is by minimal degree with ties
/// broken by lowest (row, col), which makes the reduction deterministic.
/// Nonzero invariant factors are normalized monic.
template <class K>
SmithResult<K> smith_normal_form(const PolyMatrix<K>& m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    PolyMatrix<K> a = m;
    PolyMatrix<K> u = PolyMatrix<K>::Identity(rows, rows);
    PolyMatrix<K> v = PolyMatrix<K>::Identity(cols, cols);

    const Eigen::Index steps = std::min(rows, cols);
    for (Eigen::Index t = 0; t < steps; ++t) {
        for (;;) {
            // Minimal-degree pivot in the trailing submatrix.
            Eigen::Index pr = -1, pc = -1;
            int best = -1;
            for (Eigen::Index i = t; i < rows; ++i)
                for (Eigen::Index j = t; j < cols; ++j)
                    if (!a(i, j).is_zero() && (best < 0 || a(i, j).degree() < best)) {
                        best = a(i, j).degree();
                        pr = i;
                        pc = j;
                    }
            if (pr < 0) goto done;  // submatrix is zero
            if (pr != t) {
                a.row(pr).swap(a.row(t));
                u.row(pr).swap(u.row(t));
            }
            if (pc != t) {
                a.col(pc).swap(a.col(t));
                v.col(pc).swap(v.col(t));
            }

            bool clean = true;
            for (Eigen::Index i = t + 1; i < rows; ++i) {
                if (a(i, t).is_zero()) continue;
                auto [q, r] = divmod(a(i, t), a(t, t));
                for (Eigen::Index j = 0; j < cols; ++j) a(i, j) -= q * a(t, j);
                for (Eigen::Index j = 0; j < rows; ++j) u(i, j) -= q * u(t, j);
                if (!r.is_zero()) clean = false;
            }
            for (Eigen::Index j = t + 1; j < cols; ++j) {
                if (a(t, j).is_zero()) continue;
                auto [q, r] = divmod(a(t, j), a(t, t));
                for (Eigen::Index i = 0; i < rows; ++i) a(i, j) -= a(i, t) * q;
                for (Eigen::Index i = 0; i < cols; ++i) v(i, j) -= v(i, t) * q;
                if (!r.is_zero()) clean = false;
            }
            if (!clean) continue;  // remainders became new, smaller entries

            bool row_col_clear = true;
            for (Eigen::Index i = t + 1; i < rows && row_col_clear; ++i)
                if (!a(i, t).is_zero()) row_col_clear = false;
            for (Eigen::Index j = t + 1; j < cols && row_col_clear; ++j)
                if (!a(t, j).is_zero()) row_col_clear = false;
            if (!row_col_clear) continue;

            // Divisibility fix-up: pivot must divide the whole submatrix.
            Eigen::Index bad_row = -1;
            for (Eigen::Index i = t + 1; i < rows && bad_row < 0; ++i)
                for (Eigen::Index j = t + 1; j < cols; ++j) {
                    auto [q, r] = divmod(a(i, j), a(t, t));
                    (void)q;
                    if (!r.is_zero()) {
                        bad_row = i;
                        break;
                    }
                }
            if (bad_row < 0) break;
            for (Eigen::Index j = 0; j < cols; ++j) a(t, j) += a(bad_row, j);
            for (Eigen::Index j = 0; j < rows; ++j) u(t, j) += u(bad_row, j);
        }
    }
done:
    // Monic normalization of the nonzero diagonal.
    for (Eigen::Index t = 0; t < steps; ++t) {
        if (a(t, t).is_zero()) continue;
        const UniPoly<K> unit(field_inverse(a(t, t).leading()));
        for (Eigen::Index j = 0; j < cols; ++j) a(t, j) = unit * a(t, j);
        for (Eigen::Index j = 0; j < rows; ++j) u(t, j) = unit * u(t, j);
    }
    return {std::move(u), std::move(a), std::move(v)};
}

}  // namespace specdata

#endif
