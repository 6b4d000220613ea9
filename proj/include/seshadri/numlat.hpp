#pragma once

/**
 * @file numlat.hpp
 * @brief Numerical divisor classes on ruled surfaces.
 *
 * Classes live in the rank-2 lattice spanned by a section C0 with
 * C0^2 = -e and a fibre f with f^2 = 0, C0.f = 1. Intersection theory and
 * ampleness work over any base curve; the cohomological operations (h0, chi,
 * arithmetic genus, canonical class) are implemented for rational base only.
 */

#include "seshadri/exactnum.hpp"

#include <stdexcept>
#include <string>

namespace seshadri {

/// Ruled surface over a smooth curve of genus base_genus, described by the
/// invariant e >= 0 of its normalized rank-2 bundle.
struct RuledSurface {
    long long invariant_e;
    long long base_genus;

    explicit RuledSurface(long long e, long long genus = 0)
        : invariant_e(e), base_genus(genus) {
        if (e < 0) throw std::domain_error("RuledSurface: invariant e must be >= 0 (normalized bundle)");
        if (genus < 0) throw std::domain_error("RuledSurface: base genus must be >= 0");
    }

    bool rational_base() const { return base_genus == 0; }
};

/// a * C0 + b * f in the Neron-Severi lattice.
struct DivClass {
    long long a = 0;
    long long b = 0;

    friend bool operator==(const DivClass&, const DivClass&) = default;
    friend auto operator<=>(const DivClass&, const DivClass&) = default;  // lexicographic (a, b)
    friend DivClass operator+(DivClass x, DivClass y) { return {x.a + y.a, x.b + y.b}; }
    friend DivClass operator*(long long k, DivClass d) { return {k * d.a, k * d.b}; }
};

inline long long intersect(const RuledSurface& S, DivClass d1, DivClass d2) {
    return -d1.a * d2.a * S.invariant_e + d1.a * d2.b + d2.a * d1.b;
}

inline void require_rational_base(const RuledSurface& S, const char* op) {
    if (!S.rational_base())
        throw std::domain_error(std::string(op) + ": implemented for rational base (genus 0) only");
}

inline DivClass canonical_class(const RuledSurface& S) {
    require_rational_base(S, "canonical_class");
    return {-2, -(2 + S.invariant_e)};
}

inline bool is_ample(const RuledSurface& S, DivClass d) {
    return d.a > 0 && d.b > d.a * S.invariant_e;
}

/// Whether (a, b) can be the class of an irreducible curve: C0, f, or
/// a > 0 with b > a e, or (when e > 0) a > 0 with b = a e.
inline bool is_irreducible_candidate(const RuledSurface& S, DivClass d) {
    if (d == DivClass{1, 0} || d == DivClass{0, 1}) return true;
    if (d.a <= 0) return false;
    const long long ae = d.a * S.invariant_e;
    return d.b > ae || (S.invariant_e > 0 && d.b == ae);
}

/// Global sections of O(a C0 + b f): sum over the rank-(a+1) pushforward,
/// the k-th summand contributing max(0, b - k e + 1).
inline long long h0(const RuledSurface& S, DivClass d) {
    require_rational_base(S, "h0");
    if (d.a < 0) return 0;
    long long total = 0;
    for (long long k = 0; k <= d.a; ++k) {
        const long long t = d.b - k * S.invariant_e + 1;
        if (t > 0) total += t;
    }
    return total;
}

inline Rat chi(const RuledSurface& S, DivClass d) {
    require_rational_base(S, "chi");
    const DivClass K = canonical_class(S);
    return Rat(2 + intersect(S, d, d) - intersect(S, K, d), 2);
}

inline Rat arithmetic_genus(const RuledSurface& S, DivClass d) {
    require_rational_base(S, "arithmetic_genus");
    const DivClass K = canonical_class(S);
    return Rat(2 + intersect(S, d, d) + intersect(S, K, d), 2);
}

inline std::string to_string(DivClass d) {
    std::string s = std::to_string(d.a) + "*C0";
    s += (d.b < 0) ? "-" : "+";
    s += std::to_string(d.b < 0 ? -d.b : d.b) + "*f";
    return s;
}

inline std::ostream& operator<<(std::ostream& os, DivClass d) { return os << to_string(d); }

}  // namespace seshadri
