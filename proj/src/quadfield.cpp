#include "modist/quadfield.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace modist {

namespace {

void require_same_field(const QElem& x, const QElem& y) {
    if (x.field() != y.field())
        throw std::domain_error("QElem: field mismatch (r=" + std::to_string(x.field().r()) +
                                " vs r=" + std::to_string(y.field().r()) + ")");
}

OmegaKind kind_for(long r) {
    if (r == 1) return OmegaKind::RationalField;
    return r % 4 == 1 ? OmegaKind::HalfOnePlusSqrtR : OmegaKind::SqrtR;
}

}  // namespace

QuadField QuadField::rationals() { return QuadField(1, OmegaKind::RationalField); }

QuadField QuadField::real_quadratic(long r) {
    if (r < 1)
        throw std::invalid_argument("QuadField: r must be >= 1 (imaginary fields unsupported), got " +
                                    std::to_string(r));
    auto [q, core] = squarefree_part(Int(r));
    if (q != 1)
        throw std::invalid_argument("QuadField: r=" + std::to_string(r) +
                                    " is not squarefree (divisible by " + Int(q * q).get_str() + ")");
    return QuadField(r, kind_for(r));
}

std::pair<QuadField, Int> QuadField::adjoin_sqrt(const Int& n) {
    if (n < 1) throw std::invalid_argument("QuadField::adjoin_sqrt: n must be >= 1");
    auto [q, core] = squarefree_part(n);
    if (!core.fits_slong_p()) throw std::invalid_argument("QuadField::adjoin_sqrt: radicand too large");
    long r = core.get_si();
    return {QuadField(r, kind_for(r)), q};
}

long QuadField::discriminant() const { return r_ % 4 == 1 ? r_ : 4 * r_; }

std::pair<long, long> QuadField::omega_sq() const {
    switch (kind_) {
        case OmegaKind::SqrtR:
            return {r_, 0};
        case OmegaKind::HalfOnePlusSqrtR:
            return {(r_ - 1) / 4, 1};
        case OmegaKind::RationalField:
            return {1, 0};  // omega = 1
    }
    throw std::logic_error("QuadField::omega_sq: bad kind");
}

std::string QuadField::str() const {
    return is_rational_field() ? "Q" : "Q(sqrt(" + std::to_string(r_) + "))";
}

QElem::QElem(QuadField field, Rational a, Rational b)
    : field_(field), a_(std::move(a)), b_(std::move(b)) {
    if (field_.is_rational_field() && !b_.is_zero())
        throw std::invalid_argument("QElem: nonzero sqrt coefficient over Q");
}

QElem QElem::rational(Rational a) { return QElem(QuadField::rationals(), std::move(a), 0); }

QElem QElem::rational(const QuadField& field, Rational a) { return QElem(field, std::move(a), 0); }

QElem QElem::sqrt_gen(const QuadField& field) {
    if (field.is_rational_field()) return rational(field, 1);
    return QElem(field, 0, 1);
}

QElem QElem::omega(const QuadField& field) {
    switch (field.omega_kind()) {
        case OmegaKind::RationalField:
            return rational(field, 1);
        case OmegaKind::SqrtR:
            return QElem(field, 0, 1);
        case OmegaKind::HalfOnePlusSqrtR:
            return QElem(field, Rational(1, 2), Rational(1, 2));
    }
    throw std::logic_error("QElem::omega: bad kind");
}

QElem QElem::from_integral_coords(const QuadField& field, const Rational& u, const Rational& v) {
    switch (field.omega_kind()) {
        case OmegaKind::RationalField:
            if (!v.is_zero())
                throw std::invalid_argument("QElem::from_integral_coords: omega coordinate over Q");
            return rational(field, u);
        case OmegaKind::SqrtR:
            return QElem(field, u, v);
        case OmegaKind::HalfOnePlusSqrtR:
            // u + v*(1+sqrt(r))/2
            return QElem(field, u + v * Rational(1, 2), v * Rational(1, 2));
    }
    throw std::logic_error("QElem::from_integral_coords: bad kind");
}

QElem QElem::operator-() const { return QElem(field_, -a_, -b_); }

QElem QElem::operator+(const QElem& o) const {
    require_same_field(*this, o);
    return QElem(field_, a_ + o.a_, b_ + o.b_);
}

QElem QElem::operator-(const QElem& o) const {
    require_same_field(*this, o);
    return QElem(field_, a_ - o.a_, b_ - o.b_);
}

QElem QElem::operator*(const QElem& o) const {
    require_same_field(*this, o);
    Rational r(field_.r());
    return QElem(field_, a_ * o.a_ + r * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
}

QElem QElem::operator/(const QElem& o) const {
    require_same_field(*this, o);
    return *this * o.inv();
}

QElem QElem::operator*(const Rational& c) const { return QElem(field_, a_ * c, b_ * c); }

bool QElem::operator==(const QElem& o) const {
    require_same_field(*this, o);
    return a_ == o.a_ && b_ == o.b_;
}

QElem QElem::conj() const { return QElem(field_, a_, -b_); }

Rational QElem::norm() const { return a_ * a_ - Rational(field_.r()) * b_ * b_; }

Rational QElem::trace() const { return a_ + a_; }

QElem QElem::inv() const {
    if (is_zero()) throw std::domain_error("QElem: division by zero");
    Rational n = norm();
    // n = 0 with (a,b) != 0 would force sqrt(r) rational; cannot happen.
    return QElem(field_, a_ / n, -(b_ / n));
}

QElem QElem::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    QElem base = *this, out = rational(field_, 1);
    while (e > 0) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

int QElem::sign_real() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with r*b^2; equality would make sqrt(r)
    // rational, excluded for r > 1 (and b = 0 over Q).
    Rational lhs = a_ * a_, rhs = Rational(field_.r()) * b_ * b_;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
}

bool QElem::is_algebraic_integer() const {
    if (field_.is_rational_field()) return a_.is_integer();
    return trace().is_integer() && norm().is_integer();
}

std::pair<Rational, Rational> QElem::integral_coords() const {
    switch (field_.omega_kind()) {
        case OmegaKind::RationalField:
            return {a_, Rational(0)};
        case OmegaKind::SqrtR:
            return {a_, b_};
        case OmegaKind::HalfOnePlusSqrtR:
            return {a_ - b_, b_ + b_};
    }
    throw std::logic_error("QElem::integral_coords: bad kind");
}

QElem QElem::lift_to(const QuadField& target) const {
    if (field_ == target) return *this;
    if (!is_rational())
        throw std::domain_error("QElem::lift_to: only rational values embed across fields");
    return rational(target, a_);
}

std::string QElem::str() const {
    if (is_rational()) return a_.str();
    return a_.str() + " + " + b_.str() + "*sqrt(" + std::to_string(field_.r()) + ")";
}

double QElem::approx() const {
    return a_.approx() + b_.approx() * std::sqrt(static_cast<double>(field_.r()));
}

std::ostream& operator<<(std::ostream& os, const QElem& x) { return os << x.str(); }

}  // namespace modist
