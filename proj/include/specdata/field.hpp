#ifndef SPECDATA_FIELD_HPP
#define SPECDATA_FIELD_HPP

#include <string>

#include "specdata/errors.hpp"
#include "specdata/fp.hpp"
#include "specdata/rational.hpp"

namespace specdata {

/// Runtime description of the base field, as it appears in files and on the
/// command line ("Q" or "Fp:<p>").
struct FieldDesc {
    bool rational = true;
    long long p = 0;

    static FieldDesc Q() { return FieldDesc{}; }
    static FieldDesc prime(long long p) {
        if (p < 2) throw BadInputError("prime modulus must be >= 2");
        for (long long q = 2; q * q <= p; ++q)
            if (p % q == 0) throw BadInputError(std::to_string(p) + " is not prime");
        return FieldDesc{false, p};
    }

    static FieldDesc parse(const std::string& s) {
        if (s == "Q" || s == "q") return Q();
        if (s.rfind("Fp:", 0) == 0 || s.rfind("fp:", 0) == 0) return prime(std::stoll(s.substr(3)));
        throw BadInputError("unknown field descriptor '" + s + "' (expected Q or Fp:<p>)");
    }

    std::string to_string() const { return rational ? "Q" : "Fp:" + std::to_string(p); }
};

template <class K>
K parse_scalar(const std::string& s, const FieldDesc& field);

template <>
inline Rational parse_scalar<Rational>(const std::string& s, const FieldDesc&) {
    return Rational::from_string(s);
}

template <>
inline Fp parse_scalar<Fp>(const std::string& s, const FieldDesc& field) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw BadInputError("bad residue literal: '" + s + "'");
    }
    if (pos != s.size()) throw BadInputError("bad residue literal: '" + s + "'");
    return Fp::make(v, field.p);
}

template <class K>
K scalar_from_int(long long v, const FieldDesc& field);

template <>
inline Rational scalar_from_int<Rational>(long long v, const FieldDesc&) {
    return Rational(v);
}

template <>
inline Fp scalar_from_int<Fp>(long long v, const FieldDesc& field) {
    return Fp::make(v, field.p);
}

}  // namespace specdata

#endif
