#ifndef SPECDATA_CHOW_HPP
#define SPECDATA_CHOW_HPP

#include <vector>

#include "specdata/numutil.hpp"
#include "specdata/symtensor.hpp"
#include "specdata/zero_cycle.hpp"

namespace specdata {

/// The closed embedding of length-n cycles: expand the cycle and take the
/// elementary symmetric tensors of its points.
template <class K>
ChowCoords<K> iota(const ZeroCycle<K>& a) {
    return elementary_from_points(a.expand());
}

/// Injectivity probe: distinct cycles must have distinct coordinates. A
/// property-test helper, not a decision procedure.
template <class K>
bool iota_injectivity_probe(const ZeroCycle<K>& a1, const ZeroCycle<K>& a2) {
    if (a1 == a2) return true;
    return !(iota(a1) == iota(a2));
}

/// Membership test for the degree-2 cycles in the plane as a hypersurface in
/// the 5-dimensional coordinate space: with v = (x, y) and
/// w = w1 z1^2 + w2 z1 z2 + w3 z2^2,
///     (x y - 2 w2)^2 = (x^2 - 4 w1) (y^2 - 4 w3).
/// The monomial-coefficient convention for w2 is validated against
/// exhaustively enumerated cycle images in the test suite.
template <class K>
bool chow2_membership(const std::vector<K>& v, const SymTensor<K>& w) {
    if (v.size() != 2 || w.dim() != 2 || w.degree() != 2) throw BadInputError("chow2_membership needs n=2, d=2 data");
    const K x = v[0], y = v[1];
    const K w1 = w.coeff({2, 0}), w2 = w.coeff({1, 1}), w3 = w.coeff({0, 2});
    const K lhs = (x * y - K(2) * w2) * (x * y - K(2) * w2);
    const K rhs = (x * x - K(4) * w1) * (y * y - K(4) * w3);
    return lhs == rhs;
}

template <class K>
bool chow2_membership(const ChowCoords<K>& coords) {
    if (coords.n != 2 || coords.dim != 2) throw BadInputError("chow2_membership needs n=2, d=2 coordinates");
    const SymTensor<K>& a1 = coords.tensors[0];
    return chow2_membership(std::vector<K>{a1.coeff({1, 0}), a1.coeff({0, 1})}, coords.tensors[1]);
}

/// Fiber of the universal spectral cover over a cycle: the disjoint union of
/// the infinitesimal neighborhoods Spec(O/m^{n_i}); the local length at a
/// point of multiplicity m is binomial(m-1+d, d).
template <class K>
struct CayleyFiberEntry {
    std::vector<K> point;
    int mult = 1;
    long long local_length = 1;
};

template <class K>
struct CayleyFiber {
    std::vector<CayleyFiberEntry<K>> entries;
    long long total_length = 0;
    bool jumping = false;  // total_length > n, the non-flat locus
};

template <class K>
CayleyFiber<K> cayley_fiber(const ZeroCycle<K>& a) {
    const int d = a.dim();
    CayleyFiber<K> out;
    for (const auto& e : a.entries()) {
        const long long len = binomial(e.mult - 1 + d, d);
        out.entries.push_back({e.point, e.mult, len});
        out.total_length += len;
    }
    out.jumping = out.total_length > a.n();
    return out;
}

template <class K>
bool is_multiplicity_free(const ZeroCycle<K>& a) {
    return a.multiplicity_free();
}

}  // namespace specdata

#endif
