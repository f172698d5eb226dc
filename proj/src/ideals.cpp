#include "modist/ideals.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace modist {

namespace {

// Hard cap on the anti-uniformizer search; desk-scale valuations stay in
// single digits.
constexpr long kOrdCap = 64;

bool is_integral_elem(const QElem& x) {
    auto [u, v] = x.integral_coords();
    return u.is_integer() && v.is_integer();
}

std::pair<Int, Int> integer_coords(const QElem& x) {
    auto [u, v] = x.integral_coords();
    if (!u.is_integer() || !v.is_integer())
        throw std::invalid_argument("ideal arithmetic requires integral elements, got " + x.str());
    return {u.num(), v.num()};
}

Int lcm_int(const Int& a, const Int& b) {
    Int out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

// Multiplication by omega in integral coordinates:
// omega * (u + v*omega) = v*w0 + (u + v*w1)*omega.
std::pair<Int, Int> omega_mul(const QuadField& field, const Int& u, const Int& v) {
    auto [w0, w1] = field.omega_sq();
    return {v * w0, u + v * w1};
}

}  // namespace

std::string splitting_name(Splitting s) {
    switch (s) {
        case Splitting::Split: return "split";
        case Splitting::Inert: return "inert";
        case Splitting::Ramified: return "ramified";
        case Splitting::Rational: return "rational";
    }
    throw std::logic_error("splitting_name: bad value");
}

IdealHNF::IdealHNF(QuadField field, Int m, Int c, Int d)
    : field_(field), m_(std::move(m)), c_(std::move(c)), d_(std::move(d)) {
    if (m_ <= 0 || d_ <= 0 || c_ < 0 || c_ >= m_ || m_ % d_ != 0 || c_ % d_ != 0)
        throw std::logic_error("IdealHNF: invariant violation [[" + m_.get_str() + ",0],[" +
                               c_.get_str() + "," + d_.get_str() + "]]");
}

IdealHNF IdealHNF::unit(const QuadField& field) {
    if (field.is_rational_field())
        throw std::invalid_argument("IdealHNF: quadratic fields only");
    return IdealHNF(field, 1, 0, 1);
}

IdealHNF IdealHNF::from_generators(const QuadField& field, const std::vector<QElem>& gens) {
    if (field.is_rational_field())
        throw std::invalid_argument("IdealHNF: quadratic fields only");
    std::vector<std::pair<Int, Int>> rows;
    for (const QElem& g : gens) {
        if (g.field() != field) throw std::domain_error("IdealHNF: generator in wrong field");
        auto [u, v] = integer_coords(g);
        rows.emplace_back(u, v);
        rows.push_back(omega_mul(field, u, v));
    }
    Int c0 = 0, d = 0;
    std::vector<Int> firsts;
    for (auto& [u, v] : rows) {
        if (v == 0) {
            if (u != 0) firsts.push_back(u);
            continue;
        }
        if (d == 0) {
            c0 = u;
            d = v;
            continue;
        }
        Int g, x, y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), d.get_mpz_t(), v.get_mpz_t());
        Int nc = x * c0 + y * u;
        firsts.push_back(c0 - (d / g) * nc);
        firsts.push_back(u - (v / g) * nc);
        c0 = nc;
        d = g;
    }
    if (d == 0) throw std::invalid_argument("IdealHNF: generators do not span a rank-2 module");
    if (d < 0) {
        d = -d;
        c0 = -c0;
    }
    Int m = 0;
    for (const Int& f : firsts) mpz_gcd(m.get_mpz_t(), m.get_mpz_t(), f.get_mpz_t());
    m = abs(m);
    if (m == 0) throw std::invalid_argument("IdealHNF: generators do not span a rank-2 module");
    Int c = ((c0 % m) + m) % m;
    IdealHNF out(field, m, c, d);
    // Ideal test: the module must absorb multiplication by omega.
    auto [mu, mv] = omega_mul(field, out.m_, 0);
    auto [cu, cv] = omega_mul(field, out.c_, out.d_);
    if (!out.contains(QElem::from_integral_coords(field, Rational(mu), Rational(mv))) ||
        !out.contains(QElem::from_integral_coords(field, Rational(cu), Rational(cv))))
        throw std::invalid_argument("IdealHNF: generators span a module that is not an ideal");
    return out;
}

IdealHNF IdealHNF::mul(const IdealHNF& other) const {
    if (field_ != other.field_) throw std::domain_error("IdealHNF: field mismatch");
    auto [w0, w1] = field_.omega_sq();
    const Int &m1 = m_, &c1 = c_, &d1 = d_;
    const Int &m2 = other.m_, &c2 = other.c_, &d2 = other.d_;
    std::vector<QElem> gens = {
        QElem::from_integral_coords(field_, Rational(m1 * m2), 0),
        QElem::from_integral_coords(field_, Rational(m1 * c2), Rational(m1 * d2)),
        QElem::from_integral_coords(field_, Rational(c1 * m2), Rational(d1 * m2)),
        QElem::from_integral_coords(field_, Rational(c1 * c2 + d1 * d2 * w0),
                                    Rational(c1 * d2 + d1 * c2 + d1 * d2 * w1)),
    };
    return from_generators(field_, gens);
}

IdealHNF IdealHNF::pow(int k) const {
    if (k < 0) throw std::invalid_argument("IdealHNF::pow: negative exponent");
    IdealHNF out = unit(field_);
    for (int i = 0; i < k; ++i) out = out.mul(*this);
    return out;
}

bool IdealHNF::contains(const QElem& x) const {
    if (x.field() != field_) throw std::domain_error("IdealHNF: field mismatch");
    auto [u, v] = integer_coords(x);
    if (v % d_ != 0) return false;
    Int y = v / d_;
    return (u - y * c_) % m_ == 0;
}

bool IdealHNF::operator==(const IdealHNF& o) const {
    return field_ == o.field_ && m_ == o.m_ && c_ == o.c_ && d_ == o.d_;
}

std::string IdealHNF::str() const {
    return "[[" + m_.get_str() + ",0],[" + c_.get_str() + "," + d_.get_str() + "]]";
}

std::vector<PrimePlace> PrimePlace::primes_above(const QuadField& field, long p) {
    if (!is_prime(Int(p))) throw std::invalid_argument("primes_above: " + std::to_string(p) + " is not prime");

    if (field.is_rational_field()) {
        PrimePlace place(field, p);
        place.splitting_ = Splitting::Rational;
        place.e_ = place.f_ = 1;
        place.pi_ = QElem::rational(field, p);
        place.tau_ = QElem::rational(field, Rational(1, p));
        place.ord2_ = p == 2 ? 1 : 0;
        return {place};
    }

    // Roots of the minimal polynomial of omega mod p decide the splitting:
    // two roots = split, one = ramified, none = inert.
    auto [w0, w1] = field.omega_sq();  // omega^2 = w0 + w1*omega
    std::vector<long> roots;
    for (long t = 0; t < p; ++t) {
        // t^2 - w1*t - w0 mod p
        Int val = Int(t) * t - Int(w1) * t - Int(w0);
        if (val % p == 0) roots.push_back(t);
    }

    std::vector<PrimePlace> out;
    auto make_place = [&](long root, Splitting sp, int e, int f) {
        PrimePlace place(field, p);
        place.splitting_ = sp;
        place.e_ = e;
        place.f_ = f;
        place.c_ = root;
        QElem omega = QElem::omega(field);
        long c_adj = root;
        if (sp == Splitting::Split) {
            // Choose the generator g = omega - c with p^2 not dividing
            // norm(g), so that ord(g) = 1 and conj(g)/p is the
            // anti-uniformizer.
            Int n = (omega - QElem::rational(field, c_adj)).norm().num();
            if (n % (Int(p) * p) == 0) c_adj += p;
            n = (omega - QElem::rational(field, c_adj)).norm().num();
            if (n % (Int(p) * p) == 0)
                throw std::logic_error("primes_above: uniformizer adjustment failed");
        }
        QElem g = omega - QElem::rational(field, c_adj);
        place.pi_ = g.sign_real() > 0 ? g : -g;
        if (sp == Splitting::Split) {
            place.tau_ = place.pi_.conj() * Rational(1, p);
        } else {
            // Ramified: second generator of the HNF of (p, omega - c),
            // divided by p.
            long cc = ((-root) % p + p) % p;
            place.tau_ = (QElem::rational(field, cc) + omega) * Rational(1, p);
        }
        place.ord2_ = place.ord_nonzero(QElem::rational(field, 2));
        out.push_back(place);
    };

    if (roots.size() == 2) {
        make_place(roots[0], Splitting::Split, 1, 1);
        make_place(roots[1], Splitting::Split, 1, 1);
    } else if (roots.size() == 1) {
        make_place(roots[0], Splitting::Ramified, 2, 1);
    } else {
        PrimePlace place(field, p);
        place.splitting_ = Splitting::Inert;
        place.e_ = 1;
        place.f_ = 2;
        place.pi_ = QElem::rational(field, p);
        place.tau_ = QElem::rational(field, Rational(1, p));
        place.ord2_ = p == 2 ? 1 : 0;
        out.push_back(place);
    }

    for (const PrimePlace& place : out) {
        if (place.ord_nonzero(place.pi_) != 1 || place.ord_nonzero(place.tau_) != -1 ||
            place.ord_nonzero(QElem::rational(field, p)) != place.e_)
            throw std::logic_error("primes_above: uniformizer construction failed at p=" +
                                   std::to_string(p) + " in " + field.str());
    }
    return out;
}

long PrimePlace::ord_integral(const QElem& y) const {
    long k = 0;
    QElem cur = y;
    while (true) {
        QElem next = cur * tau_;
        if (!is_integral_elem(next)) return k;
        cur = next;
        if (++k > kOrdCap) throw std::runtime_error("PrimePlace::ord: valuation exceeds cap " +
                                                    std::to_string(kOrdCap));
    }
}

std::optional<long> PrimePlace::ord(const QElem& x) const {
    if (x.field() != field_) throw std::domain_error("PrimePlace::ord: field mismatch");
    if (x.is_zero()) return std::nullopt;
    if (field_.is_rational_field())
        return valuation(x.a().num(), Int(p_)) - valuation(x.a().den(), Int(p_));
    auto [u, v] = x.integral_coords();
    Int m = lcm_int(u.den(), v.den());
    QElem y = x * Rational(m);
    long vm = m == 1 ? 0 : ord_integral(QElem::rational(field_, Rational(m)));
    return ord_integral(y) - vm;
}

long PrimePlace::ord_nonzero(const QElem& x) const {
    auto v = ord(x);
    if (!v) throw std::domain_error("PrimePlace::ord_nonzero: zero element");
    return *v;
}

bool PrimePlace::residue_equal(const QElem& x, const QElem& y) const {
    auto vx = ord(x), vy = ord(y);
    if ((vx && *vx < 0) || (vy && *vy < 0))
        throw std::domain_error("PrimePlace::residue_equal: element outside the local ring");
    auto d = ord(x - y);
    return !d || *d >= 1;
}

bool PrimePlace::residue_is_zero(const QElem& x) const {
    auto v = ord(x);
    if (v && *v < 0)
        throw std::domain_error("PrimePlace::residue_is_zero: element outside the local ring");
    return !v || *v >= 1;
}

IdealHNF PrimePlace::place_ideal() const {
    if (field_.is_rational_field())
        throw std::invalid_argument("PrimePlace::place_ideal: quadratic fields only");
    std::vector<QElem> gens = {QElem::rational(field_, p_)};
    if (c_) gens.push_back(QElem::omega(field_) - QElem::rational(field_, *c_));
    return IdealHNF::from_generators(field_, gens);
}

std::string PrimePlace::str() const {
    if (!c_) return "(" + std::to_string(p_) + ")";
    return "(" + std::to_string(p_) + ", w-" + std::to_string(*c_) + ")";
}

bool PrimePlace::operator==(const PrimePlace& o) const {
    return field_ == o.field_ && p_ == o.p_ && splitting_ == o.splitting_ && c_ == o.c_;
}

std::vector<std::pair<PrimePlace, long>> factor_principal(const QElem& x) {
    if (x.is_zero()) throw std::invalid_argument("factor_principal: zero element");
    const QuadField& field = x.field();

    std::set<Int> primes;
    if (field.is_rational_field()) {
        for (const auto& [p, e] : factor(x.a().num())) primes.insert(p);
        for (const auto& [p, e] : factor(x.a().den())) primes.insert(p);
    } else {
        // Clear denominators first: with y = m*x integral, every place with
        // ord(x) != 0 lies above a prime dividing norm(y) or m. (The norm of
        // x alone can hide cancellations, e.g. unit-norm elements.)
        auto [u, v] = x.integral_coords();
        Int m = lcm_int(u.den(), v.den());
        QElem y = x * Rational(m);
        Int ny = y.norm().num();
        for (const auto& [p, e] : factor(ny)) primes.insert(p);
        if (m > 1)
            for (const auto& [p, e] : factor(m)) primes.insert(p);
    }
    primes.erase(Int(1));

    std::vector<std::pair<PrimePlace, long>> out;
    for (const Int& p : primes) {
        if (!p.fits_slong_p()) throw std::runtime_error("factor_principal: prime exceeds long range");
        for (const PrimePlace& place : PrimePlace::primes_above(field, p.get_si())) {
            long v = place.ord_nonzero(x);
            if (v != 0) out.emplace_back(place, v);
        }
    }
    return out;
}

}  // namespace modist
