#ifndef SPECDATA_UNIPOLY_HPP
#define SPECDATA_UNIPOLY_HPP

#include <Eigen/Core>
#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "specdata/errors.hpp"

namespace specdata {

/// to_string via argument-dependent lookup, so generic code can print any scalar.
template <class K>
std::string to_string_adl(const K& x) {
    return to_string(x);
}

/// Dense univariate polynomial over an exact field K, coefficients indexed by
/// degree. The zero polynomial has an empty coefficient vector; otherwise the
/// leading coefficient is nonzero.
template <class K>
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(long long c) {  // NOLINT: implicit by design, ring literals
        if (c != 0) c_.push_back(K(c));
    }
    UniPoly(const K& c) {  // NOLINT: implicit by design
        if (!c.is_zero()) c_.push_back(c);
    }
    explicit UniPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly variable() { return UniPoly(std::vector<K>{K(0), K(1)}); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return K(0);
        return c_[static_cast<std::size_t>(i)];
    }
    const std::vector<K>& coeffs() const { return c_; }

    K leading() const {
        if (is_zero()) throw BadInputError("zero polynomial has no leading coefficient");
        return c_.back();
    }

    K evaluate(const K& x) const {
        K acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return *this * UniPoly(field_inverse(leading()));
    }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return UniPoly(std::move(c));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<K> c(a.c_.size() + b.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(c));
    }

    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    /// Exact Euclidean division; divisor must be nonzero.
    friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero()) throw BadInputError("polynomial division by zero");
        UniPoly rem = a;
        std::vector<K> q;
        const int db = b.degree();
        const K lead_inv = field_inverse(b.leading());
        while (!rem.is_zero() && rem.degree() >= db) {
            const int shift = rem.degree() - db;
            const K factor = rem.leading() * lead_inv;
            if (static_cast<int>(q.size()) < shift + 1) q.resize(static_cast<std::size_t>(shift) + 1, K(0));
            q[static_cast<std::size_t>(shift)] += factor;
            std::vector<K> sub(static_cast<std::size_t>(shift), K(0));
            for (const K& c : b.c_) sub.push_back(c * factor);
            rem = rem - UniPoly(std::move(sub));
        }
        return {UniPoly(std::move(q)), rem};
    }

    std::string to_string(const std::string& var = "s") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<K> c_;
};

template <class K>
std::string to_string(const UniPoly<K>& p) {
    return p.to_string();
}

template <class K>
UniPoly<K> div_by_small_int(const UniPoly<K>& a, long long i) {
    std::vector<K> c;
    c.reserve(a.coeffs().size());
    for (const K& x : a.coeffs()) c.push_back(div_by_small_int(x, i));
    return UniPoly<K>(std::move(c));
}

template <class K>
std::string UniPoly<K>::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const K c = coeff(i);
        if (c.is_zero()) continue;
        std::string cs = to_string_adl(c);
        const bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (i == 0) {
            out += cs;
        } else {
            if (cs != "1") out += cs + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace specdata

namespace Eigen {
template <class K>
struct NumTraits<specdata::UniPoly<K>> : GenericNumTraits<specdata::UniPoly<K>> {
    typedef specdata::UniPoly<K> Real;
    typedef specdata::UniPoly<K> NonInteger;
    typedef specdata::UniPoly<K> Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 60,
        MulCost = 120,
    };
    static inline Real epsilon() { return specdata::UniPoly<K>(); }
    static inline Real dummy_precision() { return specdata::UniPoly<K>(); }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen

#endif
