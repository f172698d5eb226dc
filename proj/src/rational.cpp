#include "modist/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace modist {

Rational::Rational(const Int& num, const Int& den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Int(num), Int(den)) {}

Rational Rational::parse(const std::string& s) {
    auto bad = [&] { return std::invalid_argument("Rational::parse: malformed rational '" + s + "'"); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto digits = [](const std::string& t, bool allow_sign) {
        if (t.empty()) return false;
        size_t i = allow_sign && (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (!digits(num, true) || !digits(den, false)) throw bad();
    return Rational(Int(num), Int(den));
}

Rational Rational::operator-() const {
    Rational out;
    out.v_ = -v_;
    return out;
}

Rational Rational::operator+(const Rational& o) const {
    Rational out;
    out.v_ = v_ + o.v_;
    return out;
}

Rational Rational::operator-(const Rational& o) const {
    Rational out;
    out.v_ = v_ - o.v_;
    return out;
}

Rational Rational::operator*(const Rational& o) const {
    Rational out;
    out.v_ = v_ * o.v_;
    return out;
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    Rational out;
    out.v_ = v_ / o.v_;
    return out;
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational Rational::inv() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    Rational out;
    out.v_ = 1 / v_;
    return out;
}

Rational Rational::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Rational base = *this, out = 1;
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rational::str() const { return num().get_str() + "/" + den().get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace modist
