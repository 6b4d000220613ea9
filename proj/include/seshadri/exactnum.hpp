#pragma once

/**
 * @file exactnum.hpp
 * @brief Exact scalar types: arbitrary-precision rationals and square roots
 *        of non-negative rationals.
 *
 * Every comparison is decided by integer cross multiplication or by squaring.
 * Nothing here goes through floating point, so orderings carry proof weight:
 * a reported "<" is a theorem about the two values, not an approximation.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace seshadri {

using Int = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Rational number kept in lowest terms with positive denominator.
/// Canonical form is maintained by boost::multiprecision::cpp_rational.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long long n) : v_(n) {}  // integers embed implicitly
    Rat(const Int& n) : v_(n) {}
    Rat(Int num, Int den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        v_ = BigRational(std::move(num), std::move(den));
    }
    Rat(long long num, long long den) : Rat(Int(num), Int(den)) {}

    Int num() const { return numerator(v_); }
    Int den() const { return denominator(v_); }
    int sign() const { return v_.sign(); }
    bool is_integer() const { return denominator(v_) == 1; }

    Rat square() const { return Rat(v_ * v_); }

    Rat operator-() const { return Rat(-v_); }
    friend Rat operator+(const Rat& x, const Rat& y) { return Rat(x.v_ + y.v_); }
    friend Rat operator-(const Rat& x, const Rat& y) { return Rat(x.v_ - y.v_); }
    friend Rat operator*(const Rat& x, const Rat& y) { return Rat(x.v_ * y.v_); }
    friend Rat operator/(const Rat& x, const Rat& y) {
        if (y.v_.is_zero()) throw std::domain_error("Rat: division by zero");
        return Rat(x.v_ / y.v_);
    }

    friend bool operator==(const Rat& x, const Rat& y) { return x.v_ == y.v_; }
    friend std::strong_ordering operator<=>(const Rat& x, const Rat& y) {
        const int c = x.v_.compare(y.v_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    explicit Rat(BigRational v) : v_(std::move(v)) {}
    BigRational v_;
};

/// sqrt(radicand) for a non-negative rational radicand, kept symbolic.
/// The value is never evaluated numerically; comparisons square through it.
class RootVal {
public:
    explicit RootVal(Rat radicand) : rad_(std::move(radicand)) {
        if (rad_.sign() < 0) throw std::domain_error("RootVal: negative radicand");
    }
    const Rat& radicand() const { return rad_; }

private:
    Rat rad_;
};

inline std::strong_ordering rat_cmp(const Rat& x, const Rat& y) { return x <=> y; }

/// Compare a rational against sqrt(radicand). A negative rational lies below
/// every RootVal; otherwise the sign of a^2 - radicand decides (both sides
/// are >= 0, so squaring preserves the order).
inline std::strong_ordering cmp_rat_root(const Rat& a, const RootVal& s) {
    if (a.sign() < 0) return std::strong_ordering::less;
    return rat_cmp(a.square(), s.radicand());
}

/// Roots of non-negative values are ordered exactly as their radicands.
inline std::strong_ordering root_cmp(const RootVal& x, const RootVal& y) {
    return rat_cmp(x.radicand(), y.radicand());
}

inline std::strong_ordering operator<=>(const RootVal& x, const RootVal& y) { return root_cmp(x, y); }
inline bool operator==(const RootVal& x, const RootVal& y) {
    return root_cmp(x, y) == std::strong_ordering::equal;
}
inline std::strong_ordering operator<=>(const Rat& a, const RootVal& s) { return cmp_rat_root(a, s); }
inline bool operator==(const Rat& a, const RootVal& s) {
    return cmp_rat_root(a, s) == std::strong_ordering::equal;
}

inline std::string to_string(const Rat& q) {
    std::string s = q.num().str();
    if (!q.is_integer()) s += "/" + q.den().str();
    return s;
}

inline std::string to_string(const RootVal& r) { return "sqrt(" + to_string(r.radicand()) + ")"; }

inline const char* ordering_symbol(std::strong_ordering o) {
    if (o == std::strong_ordering::less) return "<";
    if (o == std::strong_ordering::greater) return ">";
    return "=";
}

inline std::ostream& operator<<(std::ostream& os, const Rat& q) { return os << to_string(q); }
inline std::ostream& operator<<(std::ostream& os, const RootVal& r) { return os << to_string(r); }

}  // namespace seshadri
