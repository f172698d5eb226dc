#pragma once

#include <string>
#include <utility>
#include <vector>

#include "modist/rational.hpp"

namespace modist {

/// Univariate polynomial over Q, coefficient i belonging to x^i.
/// The zero polynomial has degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& coeff(size_t i) const;
    const Rational& leading() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scale(const Rational& k) const;
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;

    Poly derivative() const;
    Rational eval(const Rational& x) const;
    int sign_at(const Rational& x) const { return eval(x).sign(); }
    Poly monic() const;

    static Poly gcd(Poly a, Poly b);
    /// p / gcd(p, p'): same roots, all simple.
    Poly squarefree_part() const;

    std::string str() const;

private:
    std::vector<Rational> c_;
};

/// Isolating interval for one real root: the open interval (lo, hi) holds
/// exactly one root, or lo == hi == the root itself when `exact`.
struct RootInterval {
    Rational lo, hi;
    bool exact = false;

    Rational mid() const { return (lo + hi) * Rational(1, 2); }
};

/// Isolates all real roots of a squarefree polynomial by Sturm-sequence
/// bisection, ascending.
std::vector<RootInterval> isolate_real_roots(const Poly& p);

/// Bisects an inexact isolating interval until hi - lo <= width (may land
/// exactly on the root, which turns the interval exact).
void refine_interval(const Poly& p, RootInterval& iv, const Rational& width);

}  // namespace modist
