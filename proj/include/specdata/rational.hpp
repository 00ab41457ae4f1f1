#ifndef SPECDATA_RATIONAL_HPP
#define SPECDATA_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>

#include "specdata/errors.hpp"

namespace specdata {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (gmp keeps the canonical form once established).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}  // NOLINT: implicit by design, scalar literals
    Rational(long long num, long long den) : v_(static_cast<long>(num), static_cast<long>(den)) {
        if (den == 0) throw BadInputError("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Accepts "n" or "n/d" in base 10.
    static Rational from_string(const std::string& s) {
        if (s.empty()) throw BadInputError("empty rational literal");
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw BadInputError("bad rational literal: '" + s + "'");
        if (v.get_den() == 0) throw BadInputError("rational with zero denominator: '" + s + "'");
        v.canonicalize();
        return Rational(v);
    }

    const mpq_class& raw() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    std::string to_string() const { return v_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw BadInputError("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

private:
    mpq_class v_;
};

inline bool field_less(const Rational& a, const Rational& b) { return a < b; }
inline Rational field_inverse(const Rational& a) { return Rational(1) / a; }

/// Exact division by a small machine integer (used by the Newton recurrences
/// and Faddeev-LeVerrier, where divisors run over 1..n).
inline Rational div_by_small_int(const Rational& a, long long i) { return a / Rational(i); }

inline std::string to_string(const Rational& a) { return a.to_string(); }

}  // namespace specdata

namespace Eigen {
template <>
struct NumTraits<specdata::Rational> : GenericNumTraits<specdata::Rational> {
    typedef specdata::Rational Real;
    typedef specdata::Rational NonInteger;
    typedef specdata::Rational Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 30,
        MulCost = 30,
    };
    static inline Real epsilon() { return specdata::Rational(0); }
    static inline Real dummy_precision() { return specdata::Rational(0); }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen

#endif
