#ifndef SPECDATA_TUPLES_HPP
#define SPECDATA_TUPLES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specdata/errors.hpp"
#include "specdata/matrix.hpp"
#include "specdata/numutil.hpp"
#include "specdata/rng.hpp"
#include "specdata/roots.hpp"
#include "specdata/symtensor.hpp"
#include "specdata/zero_cycle.hpp"

namespace specdata {

template <class K>
struct CommuteWitness {
    bool ok = true;
    std::size_t i = 0, j = 0;       // offending pair, 0-based
    Eigen::Index row = 0, col = 0;  // first nonzero commutator entry
    K value = K(0);
};

/// True iff all pairwise commutators vanish; on failure reports the offending
/// pair and the first nonzero commutator entry.
template <class K>
CommuteWitness<K> check_commuting(const std::vector<DenseMatrix<K>>& thetas) {
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        if (thetas[i].rows() != thetas[i].cols()) throw BadInputError("matrices must be square");
        if (thetas[i].rows() != thetas.front().rows()) throw BadInputError("matrices must have equal size");
    }
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        for (std::size_t j = i + 1; j < thetas.size(); ++j) {
            const DenseMatrix<K> comm = thetas[i] * thetas[j] - thetas[j] * thetas[i];
            for (Eigen::Index c = 0; c < comm.cols(); ++c)
                for (Eigen::Index r = 0; r < comm.rows(); ++r)
                    if (!comm(r, c).is_zero()) return {false, i, j, r, c, comm(r, c)};
        }
    }
    return {};
}

/// d pairwise-commuting n x n matrices; commutation is enforced at
/// construction.
template <class K>
struct MatrixTuple {
    int n = 0;
    int d = 0;
    std::vector<DenseMatrix<K>> thetas;

    MatrixTuple(int n_, int d_, std::vector<DenseMatrix<K>> thetas_)
        : n(n_), d(d_), thetas(std::move(thetas_)) {
        if (d < 1 || static_cast<int>(thetas.size()) != d) throw BadInputError("tuple needs d >= 1 matrices");
        for (const auto& m : thetas)
            if (m.rows() != n || m.cols() != n) throw BadInputError("tuple matrices must be n x n");
        const CommuteWitness<K> w = check_commuting(thetas);
        if (!w.ok)
            throw NotCommutingError(w.i, w.j,
                                    "matrices " + std::to_string(w.i + 1) + " and " + std::to_string(w.j + 1) +
                                        " do not commute; commutator entry (" + std::to_string(w.row + 1) + "," +
                                        std::to_string(w.col + 1) + ") = " + to_string_adl(w.value));
    }
};

/// The action of the coordinates on one primary summand, translated to the
/// origin: commuting nilpotents on a length-dimensional space.
template <class K>
struct LocalModule {
    std::vector<K> point;
    int length = 0;
    std::vector<DenseMatrix<K>> nilpotents;
};

namespace detail {

template <class K>
struct DecomposeState {
    std::vector<K> point;
    std::vector<DenseMatrix<K>> actions;
    DenseMatrix<K> basis;  // n x m, columns span the invariant subspace
};

/// Successively split along each coordinate action into generalized
/// eigenspaces ker((theta_j - lambda I)^m) and restrict the other actions.
template <class K>
std::vector<DecomposeState<K>> joint_decompose(const MatrixTuple<K>& t) {
    std::vector<DecomposeState<K>> blocks;
    blocks.push_back({{}, t.thetas, DenseMatrix<K>::Identity(t.n, t.n)});
    for (int j = 0; j < t.d; ++j) {
        std::vector<DecomposeState<K>> next;
        for (const auto& blk : blocks) {
            const DenseMatrix<K>& action = blk.actions[static_cast<std::size_t>(j)];
            const auto split = roots_with_multiplicity(char_poly(action));
            if (!split.fully_split()) throw UnsplitError(split.remainder.to_string());
            for (const auto& [lambda, mult] : split.roots) {
                const Eigen::Index m = action.rows();
                DenseMatrix<K> shifted = action;
                for (Eigen::Index i = 0; i < m; ++i) shifted(i, i) -= lambda;
                const auto kr = rank_kernel(mat_pow(shifted, static_cast<int>(m)));
                if (kr.kernel_basis.cols() != mult)
                    throw BadInputError("generalized eigenspace dimension does not match multiplicity");
                DecomposeState<K> child;
                child.point = blk.point;
                child.point.push_back(lambda);
                child.basis = (blk.basis * kr.kernel_basis).eval();
                for (const auto& act : blk.actions) {
                    const auto restricted = solve_columns<K>(kr.kernel_basis, (act * kr.kernel_basis).eval());
                    if (!restricted) throw BadInputError("subspace is not invariant; tuple is inconsistent");
                    child.actions.push_back(*restricted);
                }
                next.push_back(std::move(child));
            }
        }
        blocks = std::move(next);
    }
    return blocks;
}

}  // namespace detail

/// The joint spectrum with multiplicities: dimensions of the joint
/// generalized eigenspaces.
template <class K>
ZeroCycle<K> spectral_datum(const MatrixTuple<K>& t) {
    std::vector<CyclePoint<K>> entries;
    for (const auto& blk : detail::joint_decompose(t))
        entries.push_back({blk.point, static_cast<int>(blk.basis.cols())});
    return ZeroCycle<K>::collect(entries);
}

/// One local module per spectrum point: the restricted actions minus the
/// point coordinates, which are commuting nilpotents.
template <class K>
std::vector<LocalModule<K>> local_modules(const MatrixTuple<K>& t) {
    std::vector<LocalModule<K>> out;
    for (const auto& blk : detail::joint_decompose(t)) {
        LocalModule<K> lm;
        lm.point = blk.point;
        lm.length = static_cast<int>(blk.basis.cols());
        for (int j = 0; j < t.d; ++j) {
            DenseMatrix<K> nil = blk.actions[static_cast<std::size_t>(j)];
            for (Eigen::Index i = 0; i < nil.rows(); ++i) nil(i, i) -= blk.point[static_cast<std::size_t>(j)];
            if (!is_zero_matrix(mat_pow(nil, lm.length)))
                throw BadInputError("local action is not nilpotent after translation");
            lm.nilpotents.push_back(std::move(nil));
        }
        out.push_back(std::move(lm));
    }
    std::sort(out.begin(), out.end(), [](const LocalModule<K>& a, const LocalModule<K>& b) {
        return detail::point_less(a.point, b.point);
    });
    return out;
}

/// Hitchin coordinates b_i = tr(theta^i): the z^e coefficient of b_i is
/// multinomial(i; e) * tr(theta^e). Purely trace-based, no splitting needed.
template <class R>
HitchinCoords<R> trace_coords(const std::vector<DenseMatrix<R>>& thetas, int n, int d) {
    std::vector<std::vector<DenseMatrix<R>>> powers(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        powers[static_cast<std::size_t>(j)].push_back(DenseMatrix<R>::Identity(n, n));
        for (int k = 1; k <= n; ++k)
            powers[static_cast<std::size_t>(j)].push_back(
                (powers[static_cast<std::size_t>(j)].back() * thetas[static_cast<std::size_t>(j)]).eval());
    }
    HitchinCoords<R> out;
    out.n = n;
    out.dim = d;
    for (int i = 1; i <= n; ++i) {
        SymTensor<R> b(d, i);
        for (const auto& e : exponent_vectors(d, i)) {
            DenseMatrix<R> prod = DenseMatrix<R>::Identity(n, n);
            for (int j = 0; j < d; ++j)
                if (e[static_cast<std::size_t>(j)] > 0)
                    prod = (prod * powers[static_cast<std::size_t>(j)][static_cast<std::size_t>(
                                       e[static_cast<std::size_t>(j)])]).eval();
            const R coeff = R(multinomial(e)) * trace_of(prod);
            if (!coeff.is_zero()) b.add_term(e, coeff);
        }
        out.tensors.push_back(std::move(b));
    }
    return out;
}

template <class K>
HitchinCoords<K> trace_powers(const MatrixTuple<K>& t) {
    return trace_coords(t.thetas, t.n, t.d);
}

template <class K>
struct CayleyCheck {
    bool ok = true;
    std::vector<K> failing_form;
};

/// Generalized Cayley-Hamilton: for a linear form l, the module with spectral
/// datum a is annihilated by prod_i (l(theta) - l(x_i))^{n_i}. Checks the d
/// coordinate forms plus `trials` seeded pseudorandom forms.
template <class K>
CayleyCheck<K> cayley_hamilton_check(const MatrixTuple<K>& t, const ZeroCycle<K>& a, int trials,
                                     std::uint64_t seed) {
    std::vector<std::vector<K>> forms;
    for (int j = 0; j < t.d; ++j) {
        std::vector<K> form(static_cast<std::size_t>(t.d), K(0));
        form[static_cast<std::size_t>(j)] = K(1);
        forms.push_back(std::move(form));
    }
    SeededRng rng = SeededRng::for_stream(seed, 0x1fUL);
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<K> form;
        bool nonzero = false;
        for (int j = 0; j < t.d; ++j) {
            const K c = K(rng.uniform(-3, 3));
            nonzero = nonzero || !c.is_zero();
            form.push_back(c);
        }
        if (!nonzero) form[static_cast<std::size_t>(rng.uniform(0, t.d - 1))] = K(1);
        forms.push_back(std::move(form));
    }

    for (const auto& form : forms) {
        DenseMatrix<K> ltheta(t.n, t.n);
        ltheta.setConstant(K(0));
        for (int j = 0; j < t.d; ++j)
            ltheta += form[static_cast<std::size_t>(j)] * t.thetas[static_cast<std::size_t>(j)];
        DenseMatrix<K> prod = DenseMatrix<K>::Identity(t.n, t.n);
        for (const auto& entry : a.entries()) {
            K value(0);
            for (int j = 0; j < t.d; ++j)
                value += form[static_cast<std::size_t>(j)] * entry.point[static_cast<std::size_t>(j)];
            DenseMatrix<K> factor = ltheta;
            for (Eigen::Index i = 0; i < factor.rows(); ++i) factor(i, i) -= value;
            prod = (prod * mat_pow(factor, entry.mult)).eval();
        }
        if (!is_zero_matrix(prod)) return {false, form};
    }
    return {};
}

/// Realize a cycle as a commuting tuple: each point x with multiplicity m
/// contributes theta_j = x_j I_m + (j == 1 ? J : 0) with J one nilpotent
/// Jordan block; the blocks are direct-summed.
template <class K>
MatrixTuple<K> cycle_to_tuple(const ZeroCycle<K>& a) {
    const int n = a.n();
    const int d = a.dim();
    std::vector<DenseMatrix<K>> thetas;
    for (int j = 0; j < d; ++j) {
        DenseMatrix<K> m(n, n);
        m.setConstant(K(0));
        thetas.push_back(std::move(m));
    }
    int offset = 0;
    for (const auto& entry : a.entries()) {
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < entry.mult; ++i)
                thetas[static_cast<std::size_t>(j)](offset + i, offset + i) = entry.point[static_cast<std::size_t>(j)];
        for (int i = 0; i + 1 < entry.mult; ++i) thetas[0](offset + i, offset + i + 1) = K(1);
        offset += entry.mult;
    }
    return MatrixTuple<K>(n, d, std::move(thetas));
}

/// Simultaneous conjugation by an invertible matrix.
template <class K>
MatrixTuple<K> conjugate(const MatrixTuple<K>& t, const DenseMatrix<K>& p) {
    const auto pinv = inverse(p);
    if (!pinv) throw BadInputError("conjugator is singular");
    std::vector<DenseMatrix<K>> thetas;
    for (const auto& m : t.thetas) thetas.push_back((p * m * (*pinv)).eval());
    return MatrixTuple<K>(t.n, t.d, std::move(thetas));
}

}  // namespace specdata

#endif
