#ifndef SPECDATA_GEN_HPP
#define SPECDATA_GEN_HPP

#include <utility>
#include <vector>

#include "specdata/field.hpp"
#include "specdata/rng.hpp"
#include "specdata/tuples.hpp"
#include "specdata/zero_cycle.hpp"

namespace specdata {

/// Small-range scalar sampling: integer coordinates in [-4, 4] over Q,
/// uniform residues over F_p.
template <class K>
K random_coordinate(SeededRng& rng, const FieldDesc& field) {
    if (field.rational) return scalar_from_int<K>(rng.uniform(-4, 4), field);
    return scalar_from_int<K>(rng.uniform(0, field.p - 1), field);
}

/// Random cycle with distinct points and multiplicities summing to n.
template <class K>
ZeroCycle<K> random_cycle(SeededRng& rng, int n, int d, const FieldDesc& field) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::vector<CyclePoint<K>> entries;
        int left = n;
        while (left > 0) {
            std::vector<K> point;
            for (int k = 0; k < d; ++k) point.push_back(random_coordinate<K>(rng, field));
            const int mult = 1 + static_cast<int>(rng.uniform(0, left - 1));
            entries.push_back({std::move(point), mult});
            left -= mult;
        }
        try {
            return ZeroCycle<K>(std::move(entries));
        } catch (const BadInputError&) {
            continue;  // sampled a duplicate point
        }
    }
    throw BadInputError("could not sample distinct points; field too small for the requested cycle");
}

/// Invertible conjugator with entries in {-3..3} (residues over F_p),
/// resampled until the determinant is nonzero.
template <class K>
DenseMatrix<K> random_invertible(SeededRng& rng, int n, const FieldDesc& field) {
    DenseMatrix<K> p(n, n);
    do {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                p(i, j) = field.rational ? scalar_from_int<K>(rng.uniform(-3, 3), field)
                                         : scalar_from_int<K>(rng.uniform(0, field.p - 1), field);
    } while (rank_of(p) < n);
    return p;
}

template <class K>
struct SampledInstance {
    ZeroCycle<K> cycle;
    MatrixTuple<K> tuple;
};

/// Block spectrum with small-integer coordinates, hidden by conjugation.
/// The sampled cycle is the known-good answer for every cross-check.
template <class K>
SampledInstance<K> random_instance(SeededRng& rng, int nmax, int dmax, const FieldDesc& field) {
    const int n = 1 + static_cast<int>(rng.uniform(0, nmax - 1));
    const int d = 1 + static_cast<int>(rng.uniform(0, dmax - 1));
    ZeroCycle<K> cycle = random_cycle<K>(rng, n, d, field);
    MatrixTuple<K> tuple = conjugate(cycle_to_tuple(cycle), random_invertible<K>(rng, n, field));
    return {std::move(cycle), std::move(tuple)};
}

}  // namespace specdata

#endif
