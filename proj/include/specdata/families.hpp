#ifndef SPECDATA_FAMILIES_HPP
#define SPECDATA_FAMILIES_HPP

#include <string>
#include <utility>
#include <vector>

#include "specdata/errors.hpp"
#include "specdata/smith.hpp"
#include "specdata/symtensor.hpp"
#include "specdata/tuples.hpp"

namespace specdata {

/// Commuting matrix tuple over the polynomial ring k[s]: a one-parameter
/// family of Higgs data along a base line.
template <class K>
struct PolyMatrixTuple {
    int n = 0;
    int d = 0;
    std::vector<PolyMatrix<K>> thetas;

    PolyMatrixTuple(int n_, int d_, std::vector<PolyMatrix<K>> thetas_)
        : n(n_), d(d_), thetas(std::move(thetas_)) {
        if (d < 1 || static_cast<int>(thetas.size()) != d) throw BadInputError("family needs d >= 1 matrices");
        for (const auto& m : thetas)
            if (m.rows() != n || m.cols() != n) throw BadInputError("family matrices must be n x n");
        for (std::size_t i = 0; i < thetas.size(); ++i)
            for (std::size_t j = i + 1; j < thetas.size(); ++j) {
                const PolyMatrix<K> comm =
                    (thetas[i] * thetas[j] - thetas[j] * thetas[i]).eval();
                if (!is_zero_matrix(comm))
                    throw NotCommutingError(i, j,
                                            "family matrices " + std::to_string(i + 1) + " and " +
                                                std::to_string(j + 1) + " do not commute as polynomial matrices");
            }
    }

    /// Specialize the parameter: evaluate every entry at s = c.
    MatrixTuple<K> at(const K& c) const {
        std::vector<DenseMatrix<K>> mats;
        for (const auto& m : thetas) {
            DenseMatrix<K> e(n, n);
            for (Eigen::Index i = 0; i < m.rows(); ++i)
                for (Eigen::Index j = 0; j < m.cols(); ++j) e(i, j) = m(i, j).evaluate(c);
            mats.push_back(std::move(e));
        }
        return MatrixTuple<K>(n, d, std::move(mats));
    }
};

/// Family-level spectral coordinates: Hitchin traces b_i(s) computed over
/// k[s], then Newton-converted to the Chow coordinates a_i(s). Every tensor
/// coefficient is a polynomial in s.
template <class K>
ChowCoords<UniPoly<K>> family_spectral_coords(const PolyMatrixTuple<K>& t) {
    const HitchinCoords<UniPoly<K>> b = trace_coords(t.thetas, t.n, t.d);
    return newton_p_to_e(b);
}

/// Specialize coordinate tensors at s = c.
template <class K>
ChowCoords<K> specialize(const ChowCoords<UniPoly<K>>& coords, const K& c) {
    ChowCoords<K> out;
    out.n = coords.n;
    out.dim = coords.dim;
    for (const auto& t : coords.tensors) {
        SymTensor<K> st(t.dim(), t.degree());
        for (const auto& [e, v] : t.terms()) st.add_term(e, v.evaluate(c));
        out.tensors.push_back(std::move(st));
    }
    return out;
}

/// The n = 2 discriminant a_1^2 - 4 a_2; its zero locus is where the two
/// spectral sheets collide.
template <class K>
UniPoly<K> discriminant_n2(const UniPoly<K>& a1, const UniPoly<K>& a2) {
    return a1 * a1 - UniPoly<K>(4) * a2;
}

/// Finitely presented module over k[s]: generators and a relation matrix
/// whose columns are relations.
template <class K>
struct ModulePresentation {
    int generators = 0;
    PolyMatrix<K> relations;  // generators rows, one column per relation
};

/// Free rank and torsion invariant factors of a presented module, from the
/// Smith normal form of its relation matrix.
template <class K>
struct TorsionReport {
    int free_rank = 0;
    std::vector<UniPoly<K>> invariant_factors;  // nonconstant, monic, divisibility chain

    bool torsion_free() const { return invariant_factors.empty(); }
};

template <class K>
struct TorsionFreeQuotient {
    ModulePresentation<K> quotient;
    TorsionReport<K> report;
};

/// Cohen-Macaulayfication engine over the PID k[s]: split off the torsion
/// part. The quotient keeps the generator count and replaces every
/// nonconstant invariant factor by a unit (the torsion generators become
/// redundant), so re-running the quotient finds nothing left to remove.
template <class K>
TorsionFreeQuotient<K> torsion_free_quotient(const ModulePresentation<K>& m) {
    if (m.relations.rows() != m.generators) throw BadInputError("relation matrix has wrong row count");
    const SmithResult<K> snf = smith_normal_form(m.relations);
    TorsionReport<K> report;
    int nonzero = 0;
    const Eigen::Index k = std::min(snf.D.rows(), snf.D.cols());
    PolyMatrix<K> unitized = snf.D;
    for (Eigen::Index i = 0; i < k; ++i) {
        const UniPoly<K>& di = snf.D(i, i);
        if (di.is_zero()) continue;
        ++nonzero;
        if (!di.is_constant()) {
            report.invariant_factors.push_back(di);
            unitized(i, i) = UniPoly<K>(1);
        }
    }
    report.free_rank = m.generators - nonzero;
    ModulePresentation<K> quotient;
    quotient.generators = m.generators;
    quotient.relations = std::move(unitized);
    return {std::move(quotient), std::move(report)};
}

/// Dimension of the module fiber at s = c: generators minus the rank of the
/// evaluated relation matrix.
template <class K>
int fiber_dimension(const ModulePresentation<K>& m, const K& c) {
    DenseMatrix<K> rel(m.relations.rows(), m.relations.cols());
    for (Eigen::Index i = 0; i < rel.rows(); ++i)
        for (Eigen::Index j = 0; j < rel.cols(); ++j) rel(i, j) = m.relations(i, j).evaluate(c);
    return m.generators - static_cast<int>(rank_of(rel));
}

/// The explicit rank-2 ruled-surface family: the surface algebra on
/// generators (1, t1, t2) cut out by
///     t1^2 + a1 t1 + a2 = 0,   t2 (2 t1 + a1) = 0,   t2^2 = 0.
/// Reducing those equations (char != 2) leaves the single module relation
///     (a1^2 - 4 a2) * t2 = 0,
/// so the torsion is k[s]/(a1^2 - 4 a2) and the torsion-free quotient is the
/// plane spectral-curve algebra k[s][t]/(t^2 + a1 t + a2), free of rank 2.
template <class K>
struct RuledExample {
    UniPoly<K> discriminant;
    ModulePresentation<K> presentation;
    TorsionReport<K> report;
    ModulePresentation<K> quotient;
    std::pair<UniPoly<K>, UniPoly<K>> quotient_char_poly;  // t^2 + a1 t + a2

    /// Fiber length of the full (non-flattened) algebra at s = c.
    int fiber_length(const K& c) const { return fiber_dimension(presentation, c); }
};

template <class K>
RuledExample<K> ruled_example(const UniPoly<K>& a1, const UniPoly<K>& a2) {
    const UniPoly<K> disc = discriminant_n2(a1, a2);
    if (disc.is_zero())
        throw IdenticallyDegenerateError("discriminant a1^2 - 4*a2 vanishes identically; family lies outside the generically multiplicity-free locus");

    RuledExample<K> out;
    out.discriminant = disc;
    out.presentation.generators = 3;
    out.presentation.relations = PolyMatrix<K>(3, 1);
    out.presentation.relations(0, 0) = UniPoly<K>();
    out.presentation.relations(1, 0) = UniPoly<K>();
    out.presentation.relations(2, 0) = disc;

    auto tfq = torsion_free_quotient(out.presentation);
    out.report = std::move(tfq.report);
    out.quotient = std::move(tfq.quotient);
    out.quotient_char_poly = {a1, a2};
    return out;
}

}  // namespace specdata

#endif
