#ifndef SPECDATA_MPOLY_HPP
#define SPECDATA_MPOLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "specdata/errors.hpp"
#include "specdata/unipoly.hpp"

namespace specdata {

/// Sparse multivariate polynomial over K: exponent vector -> coefficient,
/// zero coefficients pruned. The fixed variable count makes term maps
/// directly comparable.
template <class K>
class MPoly {
public:
    using Exponents = std::vector<int>;

    MPoly() : nvars_(0) {}
    explicit MPoly(int nvars) : nvars_(nvars) {}

    static MPoly constant(int nvars, const K& c) {
        MPoly p(nvars);
        p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
        return p;
    }
    static MPoly variable(int nvars, int index) {
        MPoly p(nvars);
        Exponents e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(index)] = 1;
        p.add_term(e, K(1));
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, K>& terms() const { return terms_; }

    void add_term(const Exponents& e, const K& v) {
        if (static_cast<int>(e.size()) != nvars_) throw BadInputError("MPoly term has wrong variable count");
        if (v.is_zero()) return;
        auto [it, inserted] = terms_.emplace(e, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    K coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? K(0) : it->second;
    }

    int total_degree() const {
        int deg = 0;
        for (const auto& [e, v] : terms_) {
            int t = 0;
            for (int x : e) t += x;
            if (t > deg) deg = t;
        }
        return deg;
    }

    bool is_homogeneous(int degree) const {
        for (const auto& [e, v] : terms_) {
            int t = 0;
            for (int x : e) t += x;
            if (t != degree) return false;
        }
        return true;
    }

    /// The sum of terms with total degree exactly `degree`.
    MPoly homogeneous_component(int degree) const {
        MPoly out(nvars_);
        for (const auto& [e, v] : terms_) {
            int t = 0;
            for (int x : e) t += x;
            if (t == degree) out.add_term(e, v);
        }
        return out;
    }

    MPoly operator-() const {
        MPoly r(nvars_);
        for (const auto& [e, v] : terms_) r.terms_.emplace(e, -v);
        return r;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        a.check(b);
        MPoly r = a;
        for (const auto& [e, v] : b.terms_) r.add_term(e, v);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check(b);
        MPoly r(a.nvars_);
        for (const auto& [ea, va] : a.terms_)
            for (const auto& [eb, vb] : b.terms_) {
                Exponents e = ea;
                for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
                r.add_term(e, va * vb);
            }
        return r;
    }
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly scaled(const K& f) const {
        MPoly r(nvars_);
        for (const auto& [e, v] : terms_) {
            const K w = v * f;
            if (!w.is_zero()) r.terms_.emplace(e, w);
        }
        return r;
    }

    MPoly pow(int e) const {
        MPoly acc = constant(nvars_, K(1));
        for (int i = 0; i < e; ++i) acc *= *this;
        return acc;
    }

    /// Remap variable indices: new exponent of variable perm[k] is the old
    /// exponent of variable k.
    MPoly permuted(const std::vector<int>& perm) const {
        MPoly r(nvars_);
        for (const auto& [e, v] : terms_) {
            Exponents ne(static_cast<std::size_t>(nvars_), 0);
            for (std::size_t k = 0; k < e.size(); ++k) ne[static_cast<std::size_t>(perm[k])] = e[k];
            r.add_term(ne, v);
        }
        return r;
    }

    /// Substitute each variable by a polynomial in another variable set.
    friend MPoly compose(const MPoly& p, const std::vector<MPoly>& images) {
        if (static_cast<int>(images.size()) != p.nvars_) throw BadInputError("compose: wrong image count");
        const int target_vars = images.empty() ? 0 : images.front().nvars();
        MPoly out(target_vars);
        for (const auto& [e, v] : p.terms_) {
            MPoly term = constant(target_vars, v);
            for (std::size_t k = 0; k < e.size(); ++k)
                if (e[k] > 0) term *= images[k].pow(e[k]);
            out += term;
        }
        return out;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    /// Renders with a caller-supplied variable namer.
    template <class Namer>
    std::string to_string(Namer&& name) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, v] : terms_) {
            std::string mono;
            for (std::size_t k = 0; k < e.size(); ++k) {
                if (e[k] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += name(static_cast<int>(k));
                if (e[k] > 1) mono += "^" + std::to_string(e[k]);
            }
            std::string cs = to_string_adl(v);
            const bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs = cs.substr(1);
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            if (mono.empty()) {
                out += cs;
            } else if (cs == "1") {
                out += mono;
            } else {
                out += cs + "*" + mono;
            }
        }
        return out;
    }

private:
    void check(const MPoly& o) const {
        if (nvars_ != o.nvars_) throw BadInputError("MPoly operation on mismatched variable counts");
    }

    int nvars_;
    std::map<Exponents, K> terms_;
};

}  // namespace specdata

#endif
