#include "modist/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace modist {

namespace {
const Rational kZero(0);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Poly::coeff(size_t i) const { return i < c_.size() ? c_[i] : kZero; }

const Rational& Poly::leading() const {
    if (c_.empty()) throw std::domain_error("Poly::leading: zero polynomial");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> out(std::max(c_.size(), o.c_.size()), kZero);
    for (size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
    return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Rational> out(std::max(c_.size(), o.c_.size()), kZero);
    for (size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - o.coeff(i);
    return Poly(std::move(out));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> out(c_.size() + o.c_.size() - 1, kZero);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(out));
}

Poly Poly::scale(const Rational& k) const {
    std::vector<Rational> out = c_;
    for (Rational& x : out) x *= k;
    return Poly(std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("Poly::divmod: division by zero polynomial");
    std::vector<Rational> rem = c_;
    const int dd = divisor.degree();
    if (degree() < dd) return {Poly(), *this};
    std::vector<Rational> quo(static_cast<size_t>(degree() - dd) + 1, kZero);
    const Rational lead_inv = divisor.leading().inv();
    for (int k = degree() - dd; k >= 0; --k) {
        Rational q = rem[static_cast<size_t>(k + dd)] * lead_inv;
        quo[static_cast<size_t>(k)] = q;
        if (q.is_zero()) continue;
        for (int i = 0; i <= dd; ++i)
            rem[static_cast<size_t>(k + i)] -= q * divisor.coeff(static_cast<size_t>(i));
    }
    rem.resize(static_cast<size_t>(std::max(dd, 0)));
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::derivative() const {
    if (degree() < 1) return Poly();
    std::vector<Rational> out(c_.size() - 1, kZero);
    for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(out));
}

Rational Poly::eval(const Rational& x) const {
    Rational out(0);
    for (size_t i = c_.size(); i-- > 0;) out = out * x + c_[i];
    return out;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scale(leading().inv());
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r).monic();  // normalize to keep coefficients tame
    }
    return a.monic();
}

Poly Poly::squarefree_part() const {
    if (degree() < 1) return monic();
    return divmod(gcd(*this, derivative())).first.monic();
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += c_[i].str() + "*x^" + std::to_string(i);
    }
    return out;
}

namespace {

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain{p, p.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() >= 1) {
        Poly rem = chain[chain.size() - 2].divmod(chain.back()).second;
        chain.push_back(rem.scale(Rational(-1)));
    }
    if (chain.back().is_zero()) chain.pop_back();
    return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
    int variations = 0, prev = 0;
    for (const Poly& q : chain) {
        int s = q.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

// Roots of squarefree p strictly inside (a, b), both endpoints non-roots.
int count_roots(const std::vector<Poly>& chain, const Rational& a, const Rational& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

// Emits isolating intervals for the roots of squarefree p in (lo, hi),
// ascending. Both endpoints must be non-roots. When a bisection midpoint
// lands exactly on a root, a small root-free collar around it keeps the
// neighbouring intervals honest.
void isolate_rec(const Poly& p, const std::vector<Poly>& chain, const Rational& lo,
                 const Rational& hi, int count, std::vector<RootInterval>& out) {
    if (count == 0) return;
    if (count == 1) {
        out.push_back({lo, hi, false});
        return;
    }
    Rational mid = (lo + hi) * Rational(1, 2);
    if (p.sign_at(mid) == 0) {
        Rational eps = (hi - lo) * Rational(1, 4);
        while (p.sign_at(mid - eps) == 0 || p.sign_at(mid + eps) == 0 ||
               count_roots(chain, mid - eps, mid + eps) != 1)
            eps = eps * Rational(1, 2);
        isolate_rec(p, chain, lo, mid - eps, count_roots(chain, lo, mid - eps), out);
        out.push_back({mid, mid, true});
        isolate_rec(p, chain, mid + eps, hi, count_roots(chain, mid + eps, hi), out);
        return;
    }
    isolate_rec(p, chain, lo, mid, count_roots(chain, lo, mid), out);
    isolate_rec(p, chain, mid, hi, count_roots(chain, mid, hi), out);
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const Poly& p) {
    if (p.degree() < 0) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    if (p.degree() == 0) return {};

    // Cauchy bound: every root has |x| < 1 + max |c_i / lead|.
    Rational bound(1);
    const Rational lead_inv = p.leading().inv();
    for (int i = 0; i < p.degree(); ++i) {
        Rational m = (p.coeff(static_cast<size_t>(i)) * lead_inv).abs();
        if (m > bound) bound = m;
    }
    bound += Rational(1);

    std::vector<Poly> chain = sturm_chain(p);
    std::vector<RootInterval> out;
    isolate_rec(p, chain, -bound, bound, count_roots(chain, -bound, bound), out);
    return out;
}

void refine_interval(const Poly& p, RootInterval& iv, const Rational& width) {
    if (iv.exact) return;
    int sign_lo = p.sign_at(iv.lo);
    while (iv.hi - iv.lo > width) {
        Rational mid = iv.mid();
        int sm = p.sign_at(mid);
        if (sm == 0) {
            iv.lo = iv.hi = mid;
            iv.exact = true;
            return;
        }
        if (sm == sign_lo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
}

}  // namespace modist
