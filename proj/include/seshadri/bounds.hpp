#pragma once

/**
 * @file bounds.hpp
 * @brief Lower bounds for multi-point Seshadri constants and the
 *        multiplicity inequalities feeding them.
 *
 * Bounds are returned as RootVal (square roots of exact rationals) so callers
 * compare them exactly. The multiplicity inequalities are evaluated in
 * arbitrary-precision integers; no bound is ever rounded.
 */

#include "seshadri/exactnum.hpp"

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

namespace seshadri {

/// Non-increasing vector of positive multiplicities m1 >= m2 >= ... >= ms >= 1.
class MultVector {
public:
    explicit MultVector(std::vector<long long> m) : m_(std::move(m)) {
        if (m_.empty()) throw std::domain_error("MultVector: must be non-empty");
        for (std::size_t i = 0; i < m_.size(); ++i) {
            if (m_[i] < 1) throw std::domain_error("MultVector: entries must be >= 1");
            if (i > 0 && m_[i] > m_[i - 1])
                throw std::domain_error("MultVector: entries must be non-increasing");
        }
    }
    MultVector(std::initializer_list<long long> m) : MultVector(std::vector<long long>(m)) {}

    std::size_t size() const { return m_.size(); }
    long long operator[](std::size_t i) const { return m_[i]; }
    auto begin() const { return m_.begin(); }
    auto end() const { return m_.end(); }
    long long largest() const { return m_.front(); }
    long long smallest() const { return m_.back(); }
    long long sum() const {
        long long s = 0;
        for (long long v : m_) s += v;
        return s;
    }
    long long sum_sq() const {
        long long s = 0;
        for (long long v : m_) s += v * v;
        return s;
    }
    const std::vector<long long>& entries() const { return m_; }

    friend bool operator==(const MultVector&, const MultVector&) = default;
    friend auto operator<=>(const MultVector&, const MultVector&) = default;  // lexicographic

private:
    std::vector<long long> m_;
};

/// sqrt((r+2) L^2 / ((r+3) r)): lower bound for the r-point Seshadri constant
/// of an ample L at very general points on any smooth projective surface.
inline RootVal general_lower_bound(long long Lsq, long long r) {
    if (Lsq < 1) throw std::domain_error("general_lower_bound: L^2 must be >= 1");
    if (r < 2) throw std::domain_error("general_lower_bound: r must be >= 2");
    return RootVal(Rat(Int(r + 2) * Lsq, Int(r + 3) * r));
}

/// The three reference quantities for (L^2, r), compared exactly:
///   general_bound   sqrt((r+2) L^2 / ((r+3) r))
///   fibration_bound sqrt((r-1) L^2 / r^2), the older generic bound
///   max_bound       sqrt(L^2 / r), the unconditional upper bound
struct BoundReport {
    long long Lsq;
    long long r;
    RootVal general_bound;
    RootVal fibration_bound;
    RootVal max_bound;
    std::strong_ordering general_vs_fibration;
    std::strong_ordering general_vs_max;
    std::strong_ordering fibration_vs_max;
};

inline BoundReport bound_report(long long Lsq, long long r) {
    RootVal general = general_lower_bound(Lsq, r);
    RootVal fibration{Rat(Int(r - 1) * Lsq, Int(r) * r)};
    RootVal max{Rat(Lsq, r)};
    BoundReport rep{Lsq,
                    r,
                    general,
                    fibration,
                    max,
                    root_cmp(general, fibration),
                    root_cmp(general, max),
                    root_cmp(fibration, max)};
    return rep;
}

/// Minimal self-intersection of an irreducible curve with multiplicities m
/// at very general points: C^2 >= sum m_i^2 - m_s.
inline long long xu_el_min_selfint(const MultVector& m) { return m.sum_sq() - m.smallest(); }

/// Gonality-improved variant, valid for m1 >= 2: C^2 >= sum m_i^2 - m1 + gon.
inline long long xu_el_gon_min_selfint(const MultVector& m, long long gon) {
    if (m.largest() < 2) throw std::domain_error("xu_el_gon_min_selfint: requires m1 >= 2");
    if (gon < 1) throw std::domain_error("xu_el_gon_min_selfint: gonality must be >= 1");
    return m.sum_sq() - m.largest() + gon;
}

/// ((s+3) s / (s+2)) (sum m_i^2 - m_s) >= (sum m_i)^2 where applicable.
/// Not applicable when m1 < 2, when s = 1, or for the single exception
/// (s, m) = (2, (2, 2)); returns nullopt there, otherwise whether it holds.
inline std::optional<bool> han_inequality(const MultVector& m) {
    const long long s = static_cast<long long>(m.size());
    if (m.largest() < 2 || s == 1) return std::nullopt;
    if (s == 2 && m[0] == 2 && m[1] == 2) return std::nullopt;
    const Int lhs = Int(s + 3) * s * (Int(m.sum_sq()) - m.smallest());
    const Int rhs = Int(s + 2) * Int(m.sum()) * Int(m.sum());
    return lhs >= rhs;
}

/// A curve through s very general points computing a submaximal multi-point
/// Seshadri constant has C^2 < s.
inline bool seshadri_curve_constraint(long long s, long long Csq) {
    if (s < 1) throw std::domain_error("seshadri_curve_constraint: s must be >= 1");
    return Csq < s;
}

/// On a K3 surface the general lower bound is guaranteed once r >= max(L^2, 2);
/// below that threshold nothing is asserted.
inline std::optional<RootVal> k3_lower_bound(long long Lsq, long long r) {
    if (Lsq < 2 || Lsq % 2 != 0)
        throw std::domain_error("k3_lower_bound: L^2 must be a positive even integer");
    if (r < 1) throw std::domain_error("k3_lower_bound: r must be >= 1");
    if (r >= std::max(Lsq, 2LL)) return general_lower_bound(Lsq, r);
    return std::nullopt;
}

}  // namespace seshadri
