#ifndef SPECDATA_SYMTENSOR_HPP
#define SPECDATA_SYMTENSOR_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "specdata/errors.hpp"
#include "specdata/numutil.hpp"
#include "specdata/unipoly.hpp"

namespace specdata {

/// Element of Sym^degree of a dim-dimensional space in the monomial basis:
/// a sparse map from exponent vectors e (|e| = degree) to coefficients.
/// Exponent vectors are kept in lexicographic order, which fixes the
/// serialization. R may be a field or a univariate polynomial ring.
template <class R>
class SymTensor {
public:
    using Exponents = std::vector<int>;

    SymTensor() : dim_(1), degree_(0) {}
    SymTensor(int dim, int degree) : dim_(dim), degree_(degree) {
        if (dim < 1 || degree < 0) throw BadInputError("SymTensor needs dim >= 1, degree >= 0");
    }

    static SymTensor unit(int dim) {
        SymTensor t(dim, 0);
        t.add_term(Exponents(static_cast<std::size_t>(dim), 0), R(1));
        return t;
    }

    static SymTensor linear_form(const std::vector<R>& point) {
        SymTensor t(static_cast<int>(point.size()), 1);
        for (std::size_t k = 0; k < point.size(); ++k) {
            Exponents e(point.size(), 0);
            e[k] = 1;
            t.add_term(e, point[k]);
        }
        return t;
    }

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<Exponents, R>& terms() const { return c_; }

    R coeff(const Exponents& e) const {
        auto it = c_.find(e);
        return it == c_.end() ? R(0) : it->second;
    }

    void add_term(const Exponents& e, const R& v) {
        if (static_cast<int>(e.size()) != dim_) throw BadInputError("exponent vector has wrong dimension");
        int total = 0;
        for (int x : e) total += x;
        if (total != degree_) throw BadInputError("exponent vector has wrong total degree");
        auto [it, inserted] = c_.emplace(e, v);
        if (!inserted) it->second += v;
        if (it->second.is_zero()) c_.erase(it);
    }

    SymTensor operator-() const {
        SymTensor r(dim_, degree_);
        for (const auto& [e, v] : c_) r.c_.emplace(e, -v);
        return r;
    }

    friend SymTensor operator+(const SymTensor& a, const SymTensor& b) {
        a.check_compatible(b);
        SymTensor r = a;
        for (const auto& [e, v] : b.c_) r.add_term(e, v);
        return r;
    }
    friend SymTensor operator-(const SymTensor& a, const SymTensor& b) { return a + (-b); }

    /// Degrees add; coefficients convolve over exponent vectors.
    friend SymTensor operator*(const SymTensor& a, const SymTensor& b) {
        if (a.dim_ != b.dim_) throw BadInputError("SymTensor product: dimension mismatch");
        SymTensor r(a.dim_, a.degree_ + b.degree_);
        for (const auto& [ea, va] : a.c_) {
            for (const auto& [eb, vb] : b.c_) {
                Exponents e(ea);
                for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
                r.add_term(e, va * vb);
            }
        }
        return r;
    }

    SymTensor scaled(const R& f) const {
        SymTensor r(dim_, degree_);
        for (const auto& [e, v] : c_) {
            const R w = v * f;
            if (!w.is_zero()) r.c_.emplace(e, w);
        }
        return r;
    }

    friend bool operator==(const SymTensor& a, const SymTensor& b) {
        return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.c_ == b.c_;
    }
    friend bool operator!=(const SymTensor& a, const SymTensor& b) { return !(a == b); }

    std::string to_string(const std::string& var = "z") const {
        if (c_.empty()) return "0";
        std::string out;
        for (const auto& [e, v] : c_) {
            if (!out.empty()) out += " + ";
            out += "(" + to_string_adl(v) + ")";
            for (std::size_t k = 0; k < e.size(); ++k) {
                if (e[k] == 0) continue;
                out += "*" + var + std::to_string(k + 1);
                if (e[k] > 1) out += "^" + std::to_string(e[k]);
            }
        }
        return out;
    }

private:
    void check_compatible(const SymTensor& o) const {
        if (dim_ != o.dim_ || degree_ != o.degree_)
            throw BadInputError("SymTensor sum: dimension or degree mismatch");
    }

    int dim_;
    int degree_;
    std::map<Exponents, R> c_;
};

/// The tuple (a_1, ..., a_n) of elementary symmetric tensors: the coordinates
/// of the affine embedding of length-n zero-cycles.
template <class R>
struct ChowCoords {
    int n = 0;
    int dim = 1;
    std::vector<SymTensor<R>> tensors;  // tensors[i-1] has degree i

    friend bool operator==(const ChowCoords& a, const ChowCoords& b) {
        return a.n == b.n && a.dim == b.dim && a.tensors == b.tensors;
    }
};

/// The tuple (b_1, ..., b_n) of power-sum tensors (traces of Higgs-field
/// iterates on the matrix side).
template <class R>
struct HitchinCoords {
    int n = 0;
    int dim = 1;
    std::vector<SymTensor<R>> tensors;

    friend bool operator==(const HitchinCoords& a, const HitchinCoords& b) {
        return a.n == b.n && a.dim == b.dim && a.tensors == b.tensors;
    }
};

/// a_i as coefficients of prod_j (1 + L_j t) where L_j is the linear form of
/// point j; invariant under permutation of the input list.
template <class R>
ChowCoords<R> elementary_from_points(const std::vector<std::vector<R>>& points) {
    if (points.empty()) throw BadInputError("elementary_from_points: empty point list");
    const int d = static_cast<int>(points.front().size());
    const int n = static_cast<int>(points.size());
    ChowCoords<R> out;
    out.n = n;
    out.dim = d;
    for (int i = 1; i <= n; ++i) out.tensors.emplace_back(d, i);
    std::vector<SymTensor<R>> e;  // e[i] of degree i+1, running elementary tensors
    for (const auto& pt : points) {
        if (static_cast<int>(pt.size()) != d) throw BadInputError("points of mixed dimension");
        const SymTensor<R> form = SymTensor<R>::linear_form(pt);
        e.push_back(SymTensor<R>(d, static_cast<int>(e.size()) + 1));
        for (std::size_t i = e.size() - 1; i > 0; --i) e[i] = e[i] + e[i - 1] * form;
        e[0] = e[0] + form;
    }
    for (int i = 0; i < n; ++i) out.tensors[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)];
    return out;
}

/// b_i = sum_j (linear form of v_j)^i.
template <class R>
HitchinCoords<R> power_sums_from_points(const std::vector<std::vector<R>>& points) {
    if (points.empty()) throw BadInputError("power_sums_from_points: empty point list");
    const int d = static_cast<int>(points.front().size());
    const int n = static_cast<int>(points.size());
    HitchinCoords<R> out;
    out.n = n;
    out.dim = d;
    for (int i = 1; i <= n; ++i) out.tensors.emplace_back(d, i);
    for (const auto& pt : points) {
        const SymTensor<R> form = SymTensor<R>::linear_form(pt);
        SymTensor<R> power = form;
        for (int i = 1; i <= n; ++i) {
            out.tensors[static_cast<std::size_t>(i - 1)] = out.tensors[static_cast<std::size_t>(i - 1)] + power;
            if (i < n) power = power * form;
        }
    }
    return out;
}

/// Newton identities, elementary -> power sums:
/// p_i = e_1 p_{i-1} - e_2 p_{i-2} + ... + (-1)^i i e_i  (sign folded in).
template <class R>
HitchinCoords<R> newton_e_to_p(const ChowCoords<R>& a) {
    HitchinCoords<R> out;
    out.n = a.n;
    out.dim = a.dim;
    for (int i = 1; i <= a.n; ++i) {
        SymTensor<R> p(a.dim, i);
        for (int r = 1; r < i; ++r) {
            const SymTensor<R> term = a.tensors[static_cast<std::size_t>(r - 1)] *
                                      out.tensors[static_cast<std::size_t>(i - r - 1)];
            p = (r % 2 == 1) ? p + term : p - term;
        }
        const SymTensor<R> last = a.tensors[static_cast<std::size_t>(i - 1)].scaled(R(i));
        p = (i % 2 == 1) ? p + last : p - last;
        out.tensors.push_back(std::move(p));
    }
    return out;
}

/// Newton identities, power sums -> elementary:
/// i e_i = sum_{r=1..i} (-1)^{r-1} e_{i-r} p_r; needs 1..n invertible.
template <class R>
ChowCoords<R> newton_p_to_e(const HitchinCoords<R>& b) {
    ChowCoords<R> out;
    out.n = b.n;
    out.dim = b.dim;
    for (int i = 1; i <= b.n; ++i) {
        SymTensor<R> acc(b.dim, i);
        for (int r = 1; r <= i; ++r) {
            SymTensor<R> term = b.tensors[static_cast<std::size_t>(r - 1)];
            if (i - r > 0) term = out.tensors[static_cast<std::size_t>(i - r - 1)] * term;
            acc = (r % 2 == 1) ? acc + term : acc - term;
        }
        SymTensor<R> e(b.dim, i);
        for (const auto& [exp, v] : acc.terms()) e.add_term(exp, div_by_small_int(v, i));
        out.tensors.push_back(std::move(e));
    }
    return out;
}

/// The display convention a_i = (-1)^i e_i; applying it twice is the identity.
template <class Coords>
Coords apply_sign_convention(const Coords& c) {
    Coords out = c;
    for (int i = 1; i <= c.n; ++i)
        if (i % 2 == 1)
            out.tensors[static_cast<std::size_t>(i - 1)] = -out.tensors[static_cast<std::size_t>(i - 1)];
    return out;
}

}  // namespace specdata

#endif
