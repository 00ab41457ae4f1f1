#ifndef SPECDATA_MULTISYM_HPP
#define SPECDATA_MULTISYM_HPP

#include <algorithm>
#include <bitset>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specdata/errors.hpp"
#include "specdata/matrix.hpp"
#include "specdata/fp.hpp"
#include "specdata/mpoly.hpp"
#include "specdata/numutil.hpp"
#include "specdata/rational.hpp"
#include "specdata/symtensor.hpp"

namespace specdata {

/// Orbit of a multidegree vector in N^n under the symmetric group, written in
/// partition form [mu_1^{m_1}, ..., mu_e^{m_e}] with mu strictly decreasing
/// and zero parts dropped.
class MultiPartition {
public:
    MultiPartition() = default;

    static MultiPartition from_multidegree(std::vector<int> nu) {
        std::sort(nu.begin(), nu.end(), std::greater<int>());
        MultiPartition p;
        for (int part : nu) {
            if (part == 0) break;
            if (part < 0) throw BadInputError("negative part in a multidegree");
            if (!p.pairs_.empty() && p.pairs_.back().first == part)
                ++p.pairs_.back().second;
            else
                p.pairs_.emplace_back(part, 1);
        }
        return p;
    }

    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

    int degree() const {
        int deg = 0;
        for (const auto& [mu, m] : pairs_) deg += mu * m;
        return deg;
    }
    int length() const {
        int len = 0;
        for (const auto& [mu, m] : pairs_) len += m;
        return len;
    }

    /// Parts in weakly decreasing order, padded with zeros to length n.
    std::vector<int> expanded(int n) const {
        std::vector<int> parts;
        for (const auto& [mu, m] : pairs_)
            for (int i = 0; i < m; ++i) parts.push_back(mu);
        if (static_cast<int>(parts.size()) > n) throw BadInputError("partition longer than n");
        parts.resize(static_cast<std::size_t>(n), 0);
        return parts;
    }

    /// [nu + 1^i]: add one to the i largest parts (zero parts included).
    MultiPartition plus_ones(int i, int n) const {
        std::vector<int> parts = expanded(n);
        if (i > n) throw BadInputError("plus_ones: i exceeds n");
        for (int k = 0; k < i; ++k) ++parts[static_cast<std::size_t>(k)];
        return from_multidegree(std::move(parts));
    }

    /// Dominance order on partitions of equal degree.
    bool dominated_by(const MultiPartition& other, int n) const {
        if (degree() != other.degree()) return false;
        const std::vector<int> a = expanded(n), b = other.expanded(n);
        int pa = 0, pb = 0;
        for (int k = 0; k < n; ++k) {
            pa += a[static_cast<std::size_t>(k)];
            pb += b[static_cast<std::size_t>(k)];
            if (pa > pb) return false;
        }
        return true;
    }

    friend bool operator==(const MultiPartition& a, const MultiPartition& b) { return a.pairs_ == b.pairs_; }
    friend bool operator!=(const MultiPartition& a, const MultiPartition& b) { return !(a == b); }
    friend bool operator<(const MultiPartition& a, const MultiPartition& b) {
        // Iteration order only: by degree, then lexicographically on parts.
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.pairs_ < b.pairs_;
    }

    std::string to_string() const {
        if (pairs_.empty()) return "[0]";
        std::string out = "[";
        for (std::size_t k = 0; k < pairs_.size(); ++k) {
            if (k) out += ",";
            out += std::to_string(pairs_[k].first);
            if (pairs_[k].second > 1) out += "^" + std::to_string(pairs_[k].second);
        }
        return out + "]";
    }

private:
    std::vector<std::pair<int, int>> pairs_;  // (part, multiplicity), parts strictly decreasing
};

/// S_n-invariant polynomial in n vector variables of dimension d; variable
/// (point j, coordinate k) sits at index j*d + k. Invariance is verified at
/// construction by checking the adjacent transpositions.
template <class K>
class MultiSymInvariant {
public:
    MultiSymInvariant() : n_(1), d_(1), poly_(1) {}
    MultiSymInvariant(int n, int d, MPoly<K> poly) : n_(n), d_(d), poly_(std::move(poly)) {
        if (n < 1 || d < 1) throw BadInputError("invariant needs n >= 1, d >= 1");
        if (poly_.nvars() != n * d) throw BadInputError("invariant polynomial has wrong variable count");
        for (int j = 0; j + 1 < n_; ++j) {
            if (poly_.permuted(transposition(j)) != poly_)
                throw NotInvariantError("polynomial is not symmetric under swapping points " +
                                        std::to_string(j + 1) + " and " + std::to_string(j + 2));
        }
    }

    int n() const { return n_; }
    int d() const { return d_; }
    const MPoly<K>& poly() const { return poly_; }
    int var_index(int j, int k) const { return j * d_ + k; }

    /// Orbit sum of a monomial: each distinct image once, coefficient 1.
    static MultiSymInvariant symmetrize_monomial(int n, int d, const std::vector<int>& exponents) {
        if (static_cast<int>(exponents.size()) != n * d) throw BadInputError("monomial has wrong variable count");
        std::vector<int> order(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) order[static_cast<std::size_t>(j)] = j;
        std::map<std::vector<int>, bool> seen;
        MPoly<K> poly(n * d);
        do {
            std::vector<int> image(static_cast<std::size_t>(n * d));
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < d; ++k)
                    image[static_cast<std::size_t>(order[static_cast<std::size_t>(j)] * d + k)] =
                        exponents[static_cast<std::size_t>(j * d + k)];
            if (!seen.emplace(image, true).second) continue;
            poly.add_term(image, K(1));
        } while (std::next_permutation(order.begin(), order.end()));
        return MultiSymInvariant(n, d, std::move(poly));
    }

    friend bool operator==(const MultiSymInvariant& a, const MultiSymInvariant& b) {
        return a.n_ == b.n_ && a.d_ == b.d_ && a.poly_ == b.poly_;
    }

private:
    std::vector<int> transposition(int j) const {
        std::vector<int> perm(static_cast<std::size_t>(n_ * d_));
        for (int p = 0; p < n_; ++p)
            for (int k = 0; k < d_; ++k) {
                int target = p;
                if (p == j) target = j + 1;
                if (p == j + 1) target = j;
                perm[static_cast<std::size_t>(p * d_ + k)] = target * d_ + k;
            }
        return perm;
    }

    int n_, d_;
    MPoly<K> poly_;
};

/// Multidegree of a term: total degree in each point's variable block.
inline std::vector<int> term_multidegree(const std::vector<int>& exponents, int n, int d) {
    std::vector<int> nu(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < d; ++k) nu[static_cast<std::size_t>(j)] += exponents[static_cast<std::size_t>(j * d + k)];
    return nu;
}

/// Split an invariant along the partition grading; the components are
/// themselves invariant and sum back to the input.
template <class K>
std::map<MultiPartition, MultiSymInvariant<K>> graded_decompose(const MultiSymInvariant<K>& p) {
    std::map<MultiPartition, MPoly<K>> buckets;
    for (const auto& [e, v] : p.poly().terms()) {
        const MultiPartition key = MultiPartition::from_multidegree(term_multidegree(e, p.n(), p.d()));
        auto [it, inserted] = buckets.emplace(key, MPoly<K>(p.n() * p.d()));
        it->second.add_term(e, v);
    }
    std::map<MultiPartition, MultiSymInvariant<K>> out;
    for (auto& [key, poly] : buckets) out.emplace(key, MultiSymInvariant<K>(p.n(), p.d(), std::move(poly)));
    return out;
}

/// A formal variable A_{i,e}: the z^e coordinate of the degree-i elementary
/// symmetric tensor; carries weight i.
struct ChowVar {
    int i;
    std::vector<int> e;
};

/// Polynomial in the coordinates A_{i,e} of the Chow embedding, with the
/// weighted-degree bookkeeping (weight of A_{i,e} is i).
template <class K>
class ChowPolynomial {
public:
    ChowPolynomial(int n, int d) : n_(n), d_(d), vars_(variable_table(n, d)), poly_(static_cast<int>(vars_.size())) {}

    static std::vector<ChowVar> variable_table(int n, int d) {
        std::vector<ChowVar> vars;
        for (int i = 1; i <= n; ++i)
            for (const auto& e : exponent_vectors(d, i)) vars.push_back({i, e});
        return vars;
    }

    int n() const { return n_; }
    int d() const { return d_; }
    const std::vector<ChowVar>& vars() const { return vars_; }
    const MPoly<K>& poly() const { return poly_; }
    MPoly<K>& poly() { return poly_; }

    int weighted_degree() const {
        int deg = 0;
        for (const auto& [e, v] : poly_.terms()) {
            int w = 0;
            for (std::size_t k = 0; k < e.size(); ++k) w += e[k] * vars_[k].i;
            if (w > deg) deg = w;
        }
        return deg;
    }

    std::string to_string() const {
        return poly_.to_string([this](int k) {
            const ChowVar& v = vars_[static_cast<std::size_t>(k)];
            std::string name = "a[" + std::to_string(v.i) + "][(";
            for (std::size_t t = 0; t < v.e.size(); ++t) {
                if (t) name += ",";
                name += std::to_string(v.e[t]);
            }
            return name + ")]";
        });
    }

private:
    int n_, d_;
    std::vector<ChowVar> vars_;
    MPoly<K> poly_;
};

namespace detail {

inline long long mod_inverse(long long a, long long p) {
    long long t = 0, new_t = 1, r = p, new_r = ((a % p) + p) % p;
    while (new_r != 0) {
        const long long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return ((t % p) + p) % p;
}

/// Reduction mod a filter prime for the subset-search prefilter. Degenerate
/// reductions only cost pruning accuracy, never correctness.
inline long long residue_mod(const Rational& x, long long p) {
    const long long num = static_cast<long long>(mpz_fdiv_ui(x.raw().get_num().get_mpz_t(), static_cast<unsigned long>(p)));
    const long long den = static_cast<long long>(mpz_fdiv_ui(x.raw().get_den().get_mpz_t(), static_cast<unsigned long>(p)));
    if (den == 0) return 0;
    return num * mod_inverse(den, p) % p;
}

inline long long residue_mod(const Fp& x, long long p) { return ((x.residue() % p) + p) % p; }

/// The z^e coordinates of a_i for generic points: polynomials in the n*d
/// point variables, computed once from the elementary tensors.
template <class K>
std::vector<MPoly<K>> chow_var_images(int n, int d, const std::vector<ChowVar>& vars) {
    std::vector<std::vector<MPoly<K>>> points;
    for (int j = 0; j < n; ++j) {
        std::vector<MPoly<K>> pt;
        for (int k = 0; k < d; ++k) pt.push_back(MPoly<K>::variable(n * d, j * d + k));
        points.push_back(std::move(pt));
    }
    const ChowCoords<MPoly<K>> coords = elementary_from_points(points);
    std::vector<MPoly<K>> images;
    for (const auto& var : vars) {
        MPoly<K> img = coords.tensors[static_cast<std::size_t>(var.i - 1)].coeff(var.e);
        if (img.nvars() == 0) img = MPoly<K>(n * d);  // absent coefficient
        images.push_back(std::move(img));
    }
    return images;
}

/// Monomials in the A-variables of the given weighted degree, as exponent
/// vectors in canonical (lexicographic) order.
inline std::vector<std::vector<int>> weighted_monomials(const std::vector<ChowVar>& vars, int weight) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(vars.size(), 0);
    auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (pos == vars.size()) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        const int w = vars[pos].i;
        for (int e = 0; e * w <= remaining; ++e) {
            cur[pos] = e;
            self(self, pos + 1, remaining - e * w);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, weight);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

/// Rewrite an invariant P as a polynomial Q in the Chow coordinates with
/// Q o iota = P as an exact symbolic identity. Per weighted degree the
/// candidate monomials are expanded symbolically and an exact linear system
/// is solved; among the solutions the one with the fewest monomials wins
/// (iterative-deepening subset search, lexicographically-least tie-break),
/// falling back to the echelon particular solution beyond support size 6.
template <class K>
ChowPolynomial<K> rewrite_in_chow(const MultiSymInvariant<K>& p, int max_degree = 6) {
    const int n = p.n(), d = p.d();
    ChowPolynomial<K> q(n, d);
    const std::vector<ChowVar>& vars = q.vars();
    const std::vector<MPoly<K>> images = detail::chow_var_images<K>(n, d, vars);

    const int top = p.poly().total_degree();
    if (top > max_degree)
        throw DegreeBoundError("invariant degree " + std::to_string(top) + " exceeds the bound " +
                               std::to_string(max_degree));

    for (int delta = 0; delta <= top; ++delta) {
        const MPoly<K> piece = p.poly().homogeneous_component(delta);
        if (piece.is_zero()) continue;
        if (delta == 0) {
            q.poly().add_term(std::vector<int>(vars.size(), 0), piece.coeff(std::vector<int>(n * d, 0)));
            continue;
        }

        const std::vector<std::vector<int>> candidates = detail::weighted_monomials(vars, delta);

        // Expand each candidate monomial through the embedding.
        std::vector<MPoly<K>> expansions;
        expansions.reserve(candidates.size());
        for (const auto& mono : candidates) {
            MPoly<K> e = MPoly<K>::constant(n * d, K(1));
            for (std::size_t k = 0; k < mono.size(); ++k)
                if (mono[k] > 0) e *= images[k].pow(mono[k]);
            expansions.push_back(std::move(e));
        }

        // Row space: every point monomial seen in the target or an expansion.
        std::map<std::vector<int>, Eigen::Index> row_of;
        auto note_rows = [&](const MPoly<K>& poly) {
            for (const auto& [e, v] : poly.terms())
                row_of.emplace(e, static_cast<Eigen::Index>(row_of.size()));
        };
        note_rows(piece);
        for (const auto& e : expansions) note_rows(e);

        const Eigen::Index rows = static_cast<Eigen::Index>(row_of.size());
        const Eigen::Index cols = static_cast<Eigen::Index>(candidates.size());
        DenseMatrix<K> system(rows, cols);
        system.setConstant(K(0));
        DenseMatrix<K> rhs(rows, 1);
        rhs.setConstant(K(0));
        for (Eigen::Index c = 0; c < cols; ++c)
            for (const auto& [e, v] : expansions[static_cast<std::size_t>(c)].terms())
                system(row_of.at(e), c) = v;
        for (const auto& [e, v] : piece.terms()) rhs(row_of.at(e), 0) = v;

        const auto particular = solve_columns(system, rhs);
        if (!particular)
            throw BadInputError("invariant of degree " + std::to_string(delta) +
                                " is not in the image of the embedding (should be impossible)");

        std::vector<std::size_t> support;
        for (Eigen::Index c = 0; c < cols; ++c)
            if (!(*particular)(c, 0).is_zero()) support.push_back(static_cast<std::size_t>(c));

        // Coverage masks make the subset search cheap: a subset can only work
        // if its expansions cover every monomial of the target.
        constexpr std::size_t MaskBits = 1024;
        std::vector<std::bitset<MaskBits>> col_mask(static_cast<std::size_t>(cols));
        std::bitset<MaskBits> target_mask;
        if (rows <= static_cast<Eigen::Index>(MaskBits)) {
            for (Eigen::Index c = 0; c < cols; ++c)
                for (const auto& [e, v] : expansions[static_cast<std::size_t>(c)].terms())
                    col_mask[static_cast<std::size_t>(c)].set(static_cast<std::size_t>(row_of.at(e)));
            for (const auto& [e, v] : piece.terms()) target_mask.set(static_cast<std::size_t>(row_of.at(e)));
        }

        // Residues mod a large prime prune the subset search: only subsets
        // consistent mod P get the exact solve. The prefilter is
        // deterministic, and a (never observed) modular false negative could
        // only cost minimality, not correctness.
        constexpr long long P = 1'000'000'007;
        constexpr bool prefilter_active = std::is_same_v<K, Rational>;
        std::vector<std::vector<long long>> col_res(static_cast<std::size_t>(cols),
                                                    std::vector<long long>(static_cast<std::size_t>(rows), 0));
        std::vector<long long> rhs_res(static_cast<std::size_t>(rows), 0);
        if (prefilter_active) {
            for (Eigen::Index r = 0; r < rows; ++r) {
                for (Eigen::Index c = 0; c < cols; ++c)
                    col_res[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] =
                        detail::residue_mod(system(r, c), P);
                rhs_res[static_cast<std::size_t>(r)] = detail::residue_mod(rhs(r, 0), P);
            }
        }
        auto consistent_mod_p = [&](const std::vector<std::size_t>& idx,
                                    const std::bitset<MaskBits>& cover) -> bool {
            std::vector<Eigen::Index> live;
            for (Eigen::Index r = 0; r < rows; ++r)
                if (cover.test(static_cast<std::size_t>(r)) || rhs_res[static_cast<std::size_t>(r)] != 0)
                    live.push_back(r);
            const std::size_t k = idx.size();
            std::vector<std::vector<long long>> m(live.size(), std::vector<long long>(k + 1, 0));
            for (std::size_t r = 0; r < live.size(); ++r) {
                for (std::size_t t = 0; t < k; ++t) m[r][t] = col_res[idx[t]][static_cast<std::size_t>(live[r])];
                m[r][k] = rhs_res[static_cast<std::size_t>(live[r])];
            }
            std::size_t row = 0;
            for (std::size_t col = 0; col < k && row < m.size(); ++col) {
                std::size_t pivot = row;
                while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
                if (pivot == m.size()) continue;
                std::swap(m[pivot], m[row]);
                const long long inv = detail::mod_inverse(m[row][col], P);
                for (std::size_t j = col; j <= k; ++j) m[row][j] = m[row][j] * inv % P;
                for (std::size_t r = 0; r < m.size(); ++r) {
                    if (r == row || m[r][col] == 0) continue;
                    const long long f = m[r][col];
                    for (std::size_t j = col; j <= k; ++j)
                        m[r][j] = ((m[r][j] - f * m[row][j]) % P + P) % P;
                }
                ++row;
            }
            for (std::size_t r = row; r < m.size(); ++r)
                if (m[r][k] != 0) return false;
            return true;
        };

        const std::size_t best_known = support.size();
        const std::size_t cap = 6;
        const std::size_t m = static_cast<std::size_t>(cols);
        auto next_combination = [m](std::vector<std::size_t>& idx) -> bool {
            const std::size_t k = idx.size();
            for (std::size_t t = k; t-- > 0;) {
                if (idx[t] < m - k + t) {
                    ++idx[t];
                    for (std::size_t s = t + 1; s < k; ++s) idx[s] = idx[s - 1] + 1;
                    return true;
                }
            }
            return false;
        };
        std::optional<std::pair<std::vector<std::size_t>, DenseMatrix<K>>> found;
        for (std::size_t k = 1; k < best_known && k <= cap && k <= m && !found; ++k) {
            std::vector<std::size_t> idx(k);
            for (std::size_t t = 0; t < k; ++t) idx[t] = t;
            do {
                std::bitset<MaskBits> cover;
                for (std::size_t t : idx) cover |= col_mask[t];
                if ((target_mask & ~cover).any()) continue;
                if (prefilter_active && !consistent_mod_p(idx, cover)) continue;
                DenseMatrix<K> sub(rows, static_cast<Eigen::Index>(k));
                for (std::size_t t = 0; t < k; ++t)
                    sub.col(static_cast<Eigen::Index>(t)) = system.col(static_cast<Eigen::Index>(idx[t]));
                if (auto sol = solve_columns(sub, rhs)) {
                    found = {idx, *sol};
                    break;
                }
            } while (next_combination(idx));
        }

        if (found) {
            for (std::size_t t = 0; t < found->first.size(); ++t) {
                const K c = found->second(static_cast<Eigen::Index>(t), 0);
                if (!c.is_zero()) q.poly().add_term(candidates[found->first[t]], c);
            }
        } else {
            for (std::size_t c : support) q.poly().add_term(candidates[c], (*particular)(static_cast<Eigen::Index>(c), 0));
        }
    }

    // The certificate: Q o iota - P must vanish identically.
    const MPoly<K> composed = compose(q.poly(), images);
    if (!(composed == p.poly())) throw BadInputError("internal: rewrite certificate failed");
    return q;
}

/// Multiply a [1^i]-graded invariant by a [nu]-graded invariant and project
/// onto the leading partition [nu + 1^i]; the triangularity that powers the
/// surjectivity induction.
template <class K>
MultiSymInvariant<K> kappa_leading_term(int i, const MultiPartition& nu, const MultiSymInvariant<K>& u,
                                        const MultiSymInvariant<K>& v) {
    if (i < 1 || i > u.n()) throw BadInputError("kappa: i must lie in 1..n");
    const auto gu = graded_decompose(u);
    std::vector<int> ones(static_cast<std::size_t>(i), 1);
    const MultiPartition one_i = MultiPartition::from_multidegree(ones);
    if (gu.size() != 1 || gu.begin()->first != one_i)
        throw BadInputError("kappa: first factor is not graded [1^" + std::to_string(i) + "]");
    const auto gv = graded_decompose(v);
    if (gv.size() != 1 || gv.begin()->first != nu)
        throw BadInputError("kappa: second factor is not graded " + nu.to_string());

    const MultiSymInvariant<K> product(u.n(), u.d(), u.poly() * v.poly());
    const MultiPartition leading = nu.plus_ones(i, u.n());
    auto components = graded_decompose(product);
    auto it = components.find(leading);
    if (it == components.end()) return MultiSymInvariant<K>(u.n(), u.d(), MPoly<K>(u.n() * u.d()));
    return it->second;
}

}  // namespace specdata

#endif
