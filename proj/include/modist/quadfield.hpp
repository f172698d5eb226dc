#pragma once

#include <iosfwd>
#include <string>
#include <utility>

#include "modist/rational.hpp"

namespace modist {

/// Shape of the ring of integers O_K = Z + omega Z of Q(sqrt(r)).
enum class OmegaKind {
    RationalField,     // r = 1, K = Q, omega unused
    SqrtR,             // r = 2,3 (mod 4), omega = sqrt(r)
    HalfOnePlusSqrtR,  // r = 1 (mod 4), omega = (1+sqrt(r))/2
};

/// A real quadratic field Q(sqrt(r)) with r squarefree, or Q itself (r = 1).
class QuadField {
public:
    /// The rational field Q.
    static QuadField rationals();

    /// Q(sqrt(r)) for squarefree r >= 1; r = 1 yields Q. Rejects r < 1 and
    /// non-squarefree r, naming the offending square factor.
    static QuadField real_quadratic(long r);

    /// The field containing sqrt(n) for n >= 1. Returns the field Q(sqrt(r))
    /// and the multiplier q with sqrt(n) = q*sqrt(r), n = q^2*r.
    static std::pair<QuadField, Int> adjoin_sqrt(const Int& n);

    long r() const { return r_; }
    OmegaKind omega_kind() const { return kind_; }
    bool is_rational_field() const { return r_ == 1; }

    /// Field discriminant: r when r = 1 (mod 4), else 4r.
    long discriminant() const;

    /// Coefficients (w0, w1) with omega^2 = w0 + w1*omega.
    std::pair<long, long> omega_sq() const;

    bool operator==(const QuadField& o) const { return r_ == o.r_; }
    bool operator!=(const QuadField& o) const { return r_ != o.r_; }

    std::string str() const;

private:
    QuadField(long r, OmegaKind kind) : r_(r), kind_(kind) {}

    long r_;
    OmegaKind kind_;
};

/// Element a + b*sqrt(r) of a real quadratic field (b = 0 over Q).
/// The (a, b) pair is canonical: sqrt(r) is irrational for r > 1.
class QElem {
public:
    QElem() : field_(QuadField::rationals()), a_(0), b_(0) {}
    QElem(QuadField field, Rational a, Rational b);

    /// A rational constant inside Q.
    static QElem rational(Rational a);
    /// A rational constant inside the given field.
    static QElem rational(const QuadField& field, Rational a);
    /// sqrt(r) as an element of its field (1 when r = 1).
    static QElem sqrt_gen(const QuadField& field);
    /// omega of the field's integral basis {1, omega}.
    static QElem omega(const QuadField& field);
    /// u + v*omega.
    static QElem from_integral_coords(const QuadField& field, const Rational& u, const Rational& v);

    const QuadField& field() const { return field_; }
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    QElem operator-() const;
    QElem operator+(const QElem& o) const;
    QElem operator-(const QElem& o) const;
    QElem operator*(const QElem& o) const;
    QElem operator/(const QElem& o) const;
    QElem operator*(const Rational& c) const;
    bool operator==(const QElem& o) const;
    bool operator!=(const QElem& o) const { return !(*this == o); }

    QElem conj() const;
    Rational norm() const;   // a^2 - r*b^2
    Rational trace() const;  // 2a
    QElem inv() const;
    QElem pow(long e) const;

    /// Exact sign of the real embedding: -1, 0, or +1.
    int sign_real() const;

    /// Membership in O_K: trace and norm both rational integers
    /// (plain integrality over Q).
    bool is_algebraic_integer() const;

    /// Coordinates (u, v) with value = u + v*omega. Over Q this is (a, 0).
    std::pair<Rational, Rational> integral_coords() const;

    /// Re-interprets a rational-valued element inside another field.
    QElem lift_to(const QuadField& target) const;

    std::string str() const;
    double approx() const;

private:
    QuadField field_;
    Rational a_, b_;
};

std::ostream& operator<<(std::ostream& os, const QElem& x);

}  // namespace modist
