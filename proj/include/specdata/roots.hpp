#ifndef SPECDATA_ROOTS_HPP
#define SPECDATA_ROOTS_HPP

#include <gmpxx.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "specdata/errors.hpp"
#include "specdata/fp.hpp"
#include "specdata/rational.hpp"
#include "specdata/unipoly.hpp"

namespace specdata {

/// Outcome of root extraction. `remainder` is the monic factor that could not
/// be split over the base field (constant when the polynomial splits fully).
template <class K>
struct RootSplit {
    std::vector<std::pair<K, int>> roots;  // (root, multiplicity), sorted
    UniPoly<K> remainder;
    bool fully_split() const { return remainder.is_constant(); }
};

namespace detail {

/// Peel the factor (s - r)^m off p; returns the multiplicity m.
template <class K>
int peel_root(UniPoly<K>& p, const K& r) {
    const UniPoly<K> linear(std::vector<K>{-r, K(1)});
    int mult = 0;
    while (p.degree() >= 1) {
        auto [q, rem] = divmod(p, linear);
        if (!rem.is_zero()) break;
        p = q;
        ++mult;
    }
    return mult;
}

inline std::vector<mpz_class> positive_divisors(mpz_class n) {
    if (n < 0) n = -n;
    std::vector<mpz_class> divs{1};
    mpz_class f = 2;
    while (f * f <= n) {
        if (n % f == 0) {
            int e = 0;
            while (n % f == 0) {
                n /= f;
                ++e;
            }
            const std::size_t base = divs.size();
            mpz_class fp = 1;
            for (int i = 1; i <= e; ++i) {
                fp *= f;
                for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * fp);
            }
        }
        f += (f == 2) ? 1 : 2;
    }
    if (n > 1) {
        const std::size_t base = divs.size();
        for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * n);
    }
    return divs;
}

}  // namespace detail

/// Rational-root extraction repeated to saturation. Full irreducible
/// factorization is deliberately out of scope: a non-constant factor with no
/// rational root comes back as the (monic) remainder, never approximated.
inline RootSplit<Rational> roots_with_multiplicity(const UniPoly<Rational>& p) {
    if (p.is_zero()) throw BadInputError("roots of the zero polynomial");
    RootSplit<Rational> out;
    UniPoly<Rational> rem = p;

    if (int m = detail::peel_root(rem, Rational(0)); m > 0) out.roots.emplace_back(Rational(0), m);

    if (rem.degree() >= 1) {
        // Clear denominators: candidates are +-(divisor of trailing)/(divisor of leading).
        mpz_class lcm_den = 1;
        for (const Rational& c : rem.coeffs()) lcm_den = lcm(lcm_den, c.raw().get_den());
        std::vector<mpz_class> zc;
        for (const Rational& c : rem.coeffs()) zc.push_back(mpz_class(c.raw().get_num() * (lcm_den / c.raw().get_den())));
        const std::vector<mpz_class> num_divs = detail::positive_divisors(zc.front());
        const std::vector<mpz_class> den_divs = detail::positive_divisors(zc.back());
        for (const mpz_class& r : num_divs) {
            for (const mpz_class& s : den_divs) {
                for (int sign : {1, -1}) {
                    const Rational cand(mpq_class(sign > 0 ? r : mpz_class(-r), s));
                    if (!rem.evaluate(cand).is_zero()) continue;
                    if (int m = detail::peel_root(rem, cand); m > 0) out.roots.emplace_back(cand, m);
                }
                if (rem.degree() < 1) break;
            }
            if (rem.degree() < 1) break;
        }
    }

    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return field_less(a.first, b.first); });
    out.remainder = rem.monic();
    return out;
}

/// Exhaustive search over the p residues; always splits or reports the
/// non-linear remainder.
inline RootSplit<Fp> roots_with_multiplicity(const UniPoly<Fp>& p) {
    if (p.is_zero()) throw BadInputError("roots of the zero polynomial");
    long long mod = 0;
    for (const Fp& c : p.coeffs())
        if (c.attached()) {
            mod = c.modulus();
            break;
        }
    if (mod == 0) throw BadInputError("polynomial carries no modulus; cannot enumerate roots");

    RootSplit<Fp> out;
    UniPoly<Fp> rem = p;
    for (long long v = 0; v < mod && rem.degree() >= 1; ++v) {
        const Fp cand = Fp::make(v, mod);
        if (!rem.evaluate(cand).is_zero()) continue;
        if (int m = detail::peel_root(rem, cand); m > 0) out.roots.emplace_back(cand, m);
    }
    out.remainder = rem.monic();
    return out;
}

}  // namespace specdata

#endif
