#pragma once

/**
 * @file ratcurves.hpp
 * @brief Smooth rational curve classes on rational ruled surfaces: the
 *        complete classification by case, the rigidity of curves computing
 *        submaximal Seshadri constants, and the guaranteed lower bound for
 *        many points.
 */

#include "seshadri/bounds.hpp"
#include "seshadri/exactnum.hpp"
#include "seshadri/numlat.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace seshadri {

/// The classes of smooth irreducible rational curves on a rational ruled
/// surface fall into six families; everything else is either reducible as a
/// class or has positive arithmetic genus.
enum class CurveCaseKind {
    C0,                  // (1) the normalized section itself
    Fibre,               // (2) a fibre of the ruling
    SectionHighDegree,   // (3) m = 1, n > e
    SectionMinimal,      // (4) e > 0, m = 1, n = e
    E0Section,           // (5) e = 0, m >= 1, n = 1
    ConicF1,             // (6) e = 1, m = n = 2
    NotRational,         // irreducible candidate with arithmetic genus >= 1
    NotIrreducibleClass, // class fails the irreducibility conditions
};

struct RationalCurveCase {
    CurveCaseKind kind;
    Rat genus;  // arithmetic genus of the class (0 in the rational cases)

    bool is_rational_case() const {
        switch (kind) {
            case CurveCaseKind::C0:
            case CurveCaseKind::Fibre:
            case CurveCaseKind::SectionHighDegree:
            case CurveCaseKind::SectionMinimal:
            case CurveCaseKind::E0Section:
            case CurveCaseKind::ConicF1:
                return true;
            case CurveCaseKind::NotRational:
            case CurveCaseKind::NotIrreducibleClass:
                return false;
        }
        return false;
    }
};

/// Decide which family a class D = m*C0 + n*f belongs to. The explicit case
/// list decides the rational tags; the genus computation only labels the
/// remainder. C0 and Fibre take priority where the lists overlap (e = 0).
inline RationalCurveCase classify_smooth_rational(const RuledSurface& S, DivClass D) {
    require_rational_base(S, "classify_smooth_rational");
    const long long e = S.invariant_e;
    const long long m = D.a, n = D.b;
    if (m == 1 && n == 0) return {CurveCaseKind::C0, Rat(0)};
    if (m == 0 && n == 1) return {CurveCaseKind::Fibre, Rat(0)};
    if (!is_irreducible_candidate(S, D)) return {CurveCaseKind::NotIrreducibleClass, Rat(0)};
    const Rat pa = arithmetic_genus(S, D);
    if (m == 1 && n > e) return {CurveCaseKind::SectionHighDegree, pa};
    if (e > 0 && m == 1 && n == e) return {CurveCaseKind::SectionMinimal, pa};
    if (e == 0 && m >= 1 && n == 1) return {CurveCaseKind::E0Section, pa};
    if (e == 1 && m == 2 && n == 2) return {CurveCaseKind::ConicF1, pa};
    if (pa.sign() <= 0)
        throw std::logic_error("classify_smooth_rational: genus-0 candidate missing from the case list");
    return {CurveCaseKind::NotRational, pa};
}

inline std::string case_label(const RationalCurveCase& c) {
    switch (c.kind) {
        case CurveCaseKind::C0: return "case (1)";
        case CurveCaseKind::Fibre: return "case (2)";
        case CurveCaseKind::SectionHighDegree: return "case (3)";
        case CurveCaseKind::SectionMinimal: return "case (4)";
        case CurveCaseKind::E0Section: return "case (5)";
        case CurveCaseKind::ConicF1: return "case (6)";
        case CurveCaseKind::NotRational: return "not-rational(" + to_string(c.genus) + ")";
        case CurveCaseKind::NotIrreducibleClass: return "not-irreducible";
    }
    return "not-irreducible";
}

struct RigidityResult {
    bool rigid;
    std::string failed_hypothesis;  // empty when rigid
};

/// An irreducible curve of class D through r very general points (h0 >= r+1)
/// with D^2 < r is rigid: necessarily D^2 = r - 1 and the curve is a smooth
/// rational curve. The conclusion is forced numerically, so its failure here
/// would be an internal-consistency error, not a result.
inline RigidityResult check_seshadri_curve_rigidity(const RuledSurface& S, DivClass D, long long r) {
    require_rational_base(S, "check_seshadri_curve_rigidity");
    if (r < 1) throw std::domain_error("check_seshadri_curve_rigidity: r must be >= 1");
    if (!is_irreducible_candidate(S, D))
        return {false, "class " + to_string(D) + " is not an irreducible-curve candidate"};
    const long long sections = h0(S, D);
    if (sections < r + 1)
        return {false, "h0 = " + std::to_string(sections) + " < r + 1 = " + std::to_string(r + 1)};
    const long long selfint = intersect(S, D, D);
    if (selfint >= r)
        return {false, "D^2 = " + std::to_string(selfint) + " >= r = " + std::to_string(r)};
    if (selfint != r - 1 || arithmetic_genus(S, D) != Rat(0))
        throw std::logic_error("check_seshadri_curve_rigidity: rigidity conclusion violated");
    return {true, {}};
}

/// On a rational ruled surface the general lower bound sqrt((r+2)L^2/((r+3)r))
/// is unconditional once r >= L^2 + 5.
inline std::optional<RootVal> guaranteed_bound_rational_ruled(const RuledSurface& S, DivClass L,
                                                              long long r) {
    require_rational_base(S, "guaranteed_bound_rational_ruled");
    if (!is_ample(S, L))
        throw std::domain_error("guaranteed_bound_rational_ruled: L must be ample");
    if (r < 1) throw std::domain_error("guaranteed_bound_rational_ruled: r must be >= 1");
    const long long Lsq = intersect(S, L, L);
    if (r < Lsq + 5) return std::nullopt;
    return general_lower_bound(Lsq, r);
}

}  // namespace seshadri
