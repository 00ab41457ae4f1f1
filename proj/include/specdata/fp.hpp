#ifndef SPECDATA_FP_HPP
#define SPECDATA_FP_HPP

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <utility>

#include "specdata/errors.hpp"

namespace specdata {

/// Prime-field scalar. Each value carries its modulus so matrices of mixed
/// provenance stay coherent; a value built from a bare integer literal has
/// modulus 0 ("unattached") and adopts the modulus of the first attached
/// operand it meets. Binary operations reject mismatched attached moduli.
class Fp {
public:
    Fp() = default;
    Fp(long long v) : r_(v) {}  // NOLINT: implicit by design, scalar literals

    static Fp make(long long v, long long p) {
        if (p < 2) throw BadInputError("prime modulus must be >= 2");
        Fp x;
        x.p_ = p;
        x.r_ = reduce(v, p);
        return x;
    }

    long long residue() const { return r_; }
    long long modulus() const { return p_; }
    bool attached() const { return p_ != 0; }
    bool is_zero() const { return r_ == 0; }

    std::string to_string() const { return std::to_string(r_); }

    Fp operator-() const {
        Fp x = *this;
        x.r_ = x.p_ == 0 ? -x.r_ : reduce(-x.r_, x.p_);
        return x;
    }

    friend Fp operator+(Fp a, Fp b) {
        unify(a, b);
        return raw(a.r_ + b.r_, a.p_);
    }
    friend Fp operator-(Fp a, Fp b) {
        unify(a, b);
        return raw(a.r_ - b.r_, a.p_);
    }
    friend Fp operator*(Fp a, Fp b) {
        unify(a, b);
        if (a.p_ == 0) return raw(a.r_ * b.r_, 0);
        return raw(static_cast<long long>(static_cast<__int128>(a.r_) * b.r_ % a.p_), a.p_);
    }
    friend Fp operator/(Fp a, Fp b) {
        unify(a, b);
        if (b.is_zero()) throw BadInputError("division by zero in F_p");
        if (a.p_ == 0) {
            if (a.r_ % b.r_ != 0) throw BadInputError("inexact integer division without a modulus");
            return raw(a.r_ / b.r_, 0);
        }
        return a * inverse_mod(b.r_, a.p_);
    }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    friend bool operator==(Fp a, Fp b) {
        unify(a, b);
        return a.r_ == b.r_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
    friend bool operator<(Fp a, Fp b) {
        unify(a, b);
        return a.r_ < b.r_;
    }

    static Fp inverse_mod(long long a, long long p) {
        long long t = 0, new_t = 1, r = p, new_r = reduce(a, p);
        while (new_r != 0) {
            const long long q = r / new_r;
            t = std::exchange(new_t, t - q * new_t);
            r = std::exchange(new_r, r - q * new_r);
        }
        if (r != 1) throw BadInputError("not invertible mod " + std::to_string(p));
        return make(t, p);
    }

private:
    static long long reduce(long long v, long long p) {
        long long r = v % p;
        return r < 0 ? r + p : r;
    }
    static Fp raw(long long v, long long p) {
        Fp x;
        x.p_ = p;
        x.r_ = p == 0 ? v : reduce(v, p);
        return x;
    }
    static void unify(Fp& a, Fp& b) {
        if (a.p_ == b.p_) return;
        if (a.p_ == 0) {
            a.r_ = reduce(a.r_, b.p_);
            a.p_ = b.p_;
        } else if (b.p_ == 0) {
            b.r_ = reduce(b.r_, a.p_);
            b.p_ = a.p_;
        } else {
            throw BadInputError("mixed prime moduli " + std::to_string(a.p_) + " and " + std::to_string(b.p_));
        }
    }

    long long r_ = 0;
    long long p_ = 0;
};

inline bool field_less(const Fp& a, const Fp& b) { return a < b; }

inline Fp field_inverse(const Fp& a) {
    if (!a.attached()) {
        if (a.residue() == 1 || a.residue() == -1) return a;  // self-inverse as integers
        throw BadInputError("cannot invert an unattached F_p literal");
    }
    return Fp::inverse_mod(a.residue(), a.modulus());
}

inline Fp div_by_small_int(const Fp& a, long long i) {
    if (a.is_zero()) return a;
    if (!a.attached()) throw BadInputError("cannot divide an unattached F_p literal");
    if (i % a.modulus() == 0)
        throw BadInputError("division by " + std::to_string(i) + " impossible: modulus " +
                            std::to_string(a.modulus()) + " divides it (requires p > n)");
    return a * Fp::inverse_mod(i, a.modulus());
}

inline std::string to_string(const Fp& a) { return a.to_string(); }

}  // namespace specdata

namespace Eigen {
template <>
struct NumTraits<specdata::Fp> : GenericNumTraits<specdata::Fp> {
    typedef specdata::Fp Real;
    typedef specdata::Fp NonInteger;
    typedef specdata::Fp Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 0,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 4,
        MulCost = 6,
    };
    static inline Real epsilon() { return specdata::Fp(0); }
    static inline Real dummy_precision() { return specdata::Fp(0); }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen

#endif
