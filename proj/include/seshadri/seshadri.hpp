#pragma once

/**
 * @file seshadri.hpp
 * @brief Exact multi-point Seshadri constants on ruled surfaces with e > 0
 *        for special point configurations (r <= e), explicit constructions
 *        realizing every positive rational value, and the scroll family.
 *
 * Values come with a certificate describing the curve (or family) that
 * computes them, so every exact value is checkable by one intersection
 * computation.
 */

#include "seshadri/exactnum.hpp"
#include "seshadri/numlat.hpp"

#include <stdexcept>
#include <string>
#include <variant>

namespace seshadri {

/// r points in general position, summarized by the two quantities the
/// special-configuration values depend on: t = largest number of the points
/// on one fibre, s = number of the points on the section C0. A fibre meets
/// C0 once, so s >= 1 forces t <= r - s + 1.
struct PointConfigSummary {
    long long r;
    long long t;
    long long s;

    PointConfigSummary(long long r_, long long t_, long long s_) : r(r_), t(t_), s(s_) {
        if (r < 1) throw std::domain_error("PointConfigSummary: r must be >= 1");
        if (t < 1 || t > r) throw std::domain_error("PointConfigSummary: t must satisfy 1 <= t <= r");
        if (s < 0 || s > r) throw std::domain_error("PointConfigSummary: s must satisfy 0 <= s <= r");
        if (s >= 1 && t > r - s + 1)
            throw std::domain_error("PointConfigSummary: with s points on C0, t must be <= r - s + 1");
    }
};

struct FibreCurve { long long t; };                      // fibre through t of the points
struct SectionC0 { long long s; };                       // the section C0 through s of the points
struct ScrollDivisor { DivClass cls; long long points; } ;  // divisor class through that many points
struct TheoremTag { std::string name; };                 // value justified by a named statement

using CurveCertificate = std::variant<FibreCurve, SectionC0, ScrollDivisor, TheoremTag>;

struct SeshadriResult {
    Rat value;
    CurveCertificate certificate;
};

inline void require_special_domain(const RuledSurface& S, DivClass L, long long r, const char* op) {
    if (S.invariant_e <= 0)
        throw std::domain_error(std::string(op) + ": requires invariant e > 0");
    if (r < 1 || r > S.invariant_e)
        throw std::domain_error(std::string(op) + ": requires 1 <= r <= e");
    if (!is_ample(S, L))
        throw std::domain_error(std::string(op) + ": L must be ample (a > 0 and b > a*e)");
}

/// Exact Seshadri constant of ample L at r <= e points in general position
/// with configuration summary (t, s): the minimum of L.f / t over the fibre
/// through t points and L.C0 / s over the section (when s >= 1). Ties go to
/// the fibre certificate.
inline SeshadriResult seshadri_special(const RuledSurface& S, DivClass L,
                                       const PointConfigSummary& cfg) {
    require_special_domain(S, L, cfg.r, "seshadri_special");
    const Rat fibre_value(L.a, cfg.t);  // L.f = a
    if (cfg.s == 0) return {fibre_value, FibreCurve{cfg.t}};
    const Rat section_value(L.b - L.a * S.invariant_e, cfg.s);  // L.C0 = b - a e
    if (rat_cmp(section_value, fibre_value) == std::strong_ordering::less)
        return {section_value, SectionC0{cfg.s}};
    return {fibre_value, FibreCurve{cfg.t}};
}

/// With b >= 2 a e + 1 the section candidate never wins, so the value is
/// always L.f / t = a / t regardless of s.
inline SeshadriResult seshadri_special_simplified(const RuledSurface& S, DivClass L,
                                                  const PointConfigSummary& cfg) {
    require_special_domain(S, L, cfg.r, "seshadri_special_simplified");
    if (L.b < 2 * L.a * S.invariant_e + 1)
        throw std::domain_error("seshadri_special_simplified: requires b >= 2*a*e + 1");
    return {Rat(L.a, cfg.t), FibreCurve{cfg.t}};
}

/// Surface, bundle and configuration realizing a prescribed value a / t.
struct AnyQConstruction {
    RuledSurface surface;
    DivClass L;
    long long r;
    PointConfigSummary cfg;
    Rat epsilon;
};

/// Realize any positive rational a / t as an exact multi-point Seshadri
/// constant: e = t, L = a C0 + (2 a t + 1) f, r = t points on one fibre.
inline AnyQConstruction construct_any_q(long long a, long long t) {
    if (a < 1 || t < 1) throw std::domain_error("construct_any_q: a and t must be >= 1");
    const RuledSurface S(t);
    const DivClass L{a, 2 * a * t + 1};
    const PointConfigSummary cfg(t, t, 0);
    const Rat eps = seshadri_special_simplified(S, L, cfg).value;
    return {S, L, t, cfg, eps};
}

/// At r <= e very general points the constant equals L.f = a, computed by any
/// fibre through one of the points, and it is strictly submaximal.
inline SeshadriResult seshadri_very_general_small_r(const RuledSurface& S, DivClass L, long long r) {
    require_special_domain(S, L, r, "seshadri_very_general_small_r");
    const Rat value(L.a);
    const RootVal maximal{Rat(intersect(S, L, L), r)};
    if (cmp_rat_root(value, maximal) != std::strong_ordering::less)
        throw std::logic_error("seshadri_very_general_small_r: submaximality invariant violated");
    return {value, FibreCurve{1}};
}

/// Rational ruled surface carrying the submaximal r-point value (r-1)/r.
struct ScrollInstance {
    RuledSurface surface;
    DivClass L;
    long long r;
    Rat epsilon;
};

/// For r >= 3: e = 0, n = (r-1)/2 for odd r and e = 1, n = r/2 for even r,
/// with L = C0 + n f. Then L^2 = r - 1, h0(L) = r + 1 and the r-point
/// Seshadri constant at very general points is (r-1)/r.
inline ScrollInstance scroll_example(long long r) {
    if (r < 3) throw std::domain_error("scroll_example: requires r >= 3");
    const long long e = (r % 2 == 0) ? 1 : 0;
    const long long n = (r % 2 == 0) ? r / 2 : (r - 1) / 2;
    const RuledSurface S(e);
    const DivClass L{1, n};
    if (2 * n - e + 1 != r || intersect(S, L, L) != r - 1 || h0(S, L) != r + 1 || !is_ample(S, L))
        throw std::logic_error("scroll_example: instance invariants violated");
    return {S, L, r, Rat(r - 1, r)};
}

inline std::string to_string(const CurveCertificate& c) {
    struct Visitor {
        std::string operator()(const FibreCurve& f) const {
            return "fibre curve (t = " + std::to_string(f.t) + ")";
        }
        std::string operator()(const SectionC0& s) const {
            return "section C0 (s = " + std::to_string(s.s) + ")";
        }
        std::string operator()(const ScrollDivisor& d) const {
            return "divisor " + seshadri::to_string(d.cls) + " through " +
                   std::to_string(d.points) + " points";
        }
        std::string operator()(const TheoremTag& t) const { return "theorem: " + t.name; }
    };
    return std::visit(Visitor{}, c);
}

}  // namespace seshadri
