#pragma once

#include <iosfwd>
#include <string>

#include "modist/integers.hpp"

namespace modist {

/// Exact rational number, always reduced, denominator always positive,
/// zero stored as 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // implicit: integers promote to rationals
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den);
    Rational(long num, long den);

    /// Parses "num/den" or "num" with decimal digits and optional sign.
    static Rational parse(const std::string& s);

    Int num() const { return Int(v_.get_num()); }
    Int den() const { return Int(v_.get_den()); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    Rational inv() const;
    Rational pow(long e) const;
    Rational abs() const;

    /// Canonical "num/den" form, e.g. "-3/5", "7/1".
    std::string str() const;

    /// Nearest double, for diagnostics and sign cross-checks only.
    double approx() const { return v_.get_d(); }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace modist
