#ifndef SPECDATA_ZERO_CYCLE_HPP
#define SPECDATA_ZERO_CYCLE_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "specdata/errors.hpp"
#include "specdata/unipoly.hpp"

namespace specdata {

template <class K>
struct CyclePoint {
    std::vector<K> point;
    int mult = 1;
};

namespace detail {
template <class K>
bool point_less(const std::vector<K>& a, const std::vector<K>& b) {
    for (std::size_t k = 0; k < a.size() && k < b.size(); ++k) {
        if (field_less(a[k], b[k])) return true;
        if (field_less(b[k], a[k])) return false;
    }
    return a.size() < b.size();
}
}  // namespace detail

/// Multiset of distinct points in affine d-space with positive multiplicities.
/// Entries are kept sorted (lexicographically by point), so equal cycles
/// compare equal structurally.
template <class K>
class ZeroCycle {
public:
    ZeroCycle() = default;
    explicit ZeroCycle(std::vector<CyclePoint<K>> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) throw BadInputError("zero-cycle must have at least one point");
        const std::size_t d = entries_.front().point.size();
        for (const auto& e : entries_) {
            if (e.point.size() != d) throw BadInputError("zero-cycle points of mixed dimension");
            if (e.mult < 1) throw BadInputError("zero-cycle multiplicities must be positive");
        }
        std::sort(entries_.begin(), entries_.end(),
                  [](const CyclePoint<K>& a, const CyclePoint<K>& b) { return detail::point_less(a.point, b.point); });
        for (std::size_t i = 0; i + 1 < entries_.size(); ++i)
            if (entries_[i].point == entries_[i + 1].point)
                throw BadInputError("zero-cycle points must be pairwise distinct");
    }

    /// Merge-and-build: collapses repeated points instead of rejecting them.
    static ZeroCycle collect(const std::vector<CyclePoint<K>>& raw) {
        std::map<std::vector<K>, int, bool (*)(const std::vector<K>&, const std::vector<K>&)> acc(
            detail::point_less<K>);
        for (const auto& e : raw) acc[e.point] += e.mult;
        std::vector<CyclePoint<K>> entries;
        for (const auto& [pt, m] : acc) entries.push_back({pt, m});
        return ZeroCycle(std::move(entries));
    }

    const std::vector<CyclePoint<K>>& entries() const { return entries_; }
    int dim() const { return static_cast<int>(entries_.front().point.size()); }
    int n() const {
        int total = 0;
        for (const auto& e : entries_) total += e.mult;
        return total;
    }

    /// Point list with each point repeated by its multiplicity.
    std::vector<std::vector<K>> expand() const {
        std::vector<std::vector<K>> out;
        for (const auto& e : entries_)
            for (int i = 0; i < e.mult; ++i) out.push_back(e.point);
        return out;
    }

    bool multiplicity_free() const {
        for (const auto& e : entries_)
            if (e.mult != 1) return false;
        return true;
    }

    friend bool operator==(const ZeroCycle& a, const ZeroCycle& b) {
        if (a.entries_.size() != b.entries_.size()) return false;
        for (std::size_t i = 0; i < a.entries_.size(); ++i) {
            if (a.entries_[i].mult != b.entries_[i].mult) return false;
            if (!(a.entries_[i].point == b.entries_[i].point)) return false;
        }
        return true;
    }
    friend bool operator!=(const ZeroCycle& a, const ZeroCycle& b) { return !(a == b); }

    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) out += ", ";
            out += "(";
            for (std::size_t k = 0; k < entries_[i].point.size(); ++k) {
                if (k) out += ", ";
                out += to_string_adl(entries_[i].point[k]);
            }
            out += ")^" + std::to_string(entries_[i].mult);
        }
        return out + "]";
    }

private:
    std::vector<CyclePoint<K>> entries_;
};

}  // namespace specdata

#endif
