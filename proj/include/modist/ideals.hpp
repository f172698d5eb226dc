#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modist/quadfield.hpp"

namespace modist {

/// How a rational prime p decomposes in O_K. `Rational` marks the unique
/// place pZ of the base field Q, where no splitting happens.
enum class Splitting { Split, Inert, Ramified, Rational };

std::string splitting_name(Splitting s);

/// Nonzero ideal of O_K as a Z-module in the basis {1, omega}, stored in
/// lower-triangular Hermite normal form [[m, 0], [c, d]]:
/// the module m*Z + (c + d*omega)*Z with m, d > 0, 0 <= c < m, d | m, d | c.
class IdealHNF {
public:
    /// HNF of the O_K-module generated by gens (each generator must be
    /// integral). Closure under omega is built in and re-checked.
    static IdealHNF from_generators(const QuadField& field, const std::vector<QElem>& gens);

    /// The unit ideal O_K.
    static IdealHNF unit(const QuadField& field);

    IdealHNF mul(const IdealHNF& other) const;
    IdealHNF pow(int k) const;

    /// Membership of an integral element, by solving the triangular system.
    bool contains(const QElem& x) const;

    const QuadField& field() const { return field_; }
    const Int& m() const { return m_; }
    const Int& c() const { return c_; }
    const Int& d() const { return d_; }

    bool operator==(const IdealHNF& o) const;
    std::string str() const;

private:
    IdealHNF(QuadField field, Int m, Int c, Int d);

    QuadField field_;
    Int m_, c_, d_;
};

/// A place of K: a prime ideal above the rational prime p, carrying the
/// splitting data and a uniformizer/anti-uniformizer pair used to compute
/// valuations by repeated multiplication.
class PrimePlace {
public:
    /// All places of K above p, ordered by the root c (split places give
    /// two, everything else one). For K = Q this is the single place pZ.
    static std::vector<PrimePlace> primes_above(const QuadField& field, long p);

    const QuadField& field() const { return field_; }
    long p() const { return p_; }
    Splitting splitting() const { return splitting_; }
    int e() const { return e_; }
    int f() const { return f_; }
    std::optional<long> c() const { return c_; }
    const QElem& uniformizer() const { return pi_; }
    const QElem& anti_uniformizer() const { return tau_; }
    long ord2() const { return ord2_; }

    /// ord_P(x); std::nullopt encodes ord(0) = +infinity.
    std::optional<long> ord(const QElem& x) const;

    /// ord for a known-nonzero element.
    long ord_nonzero(const QElem& x) const;

    /// Residue equality in A_P / P A_P; both arguments must have ord >= 0.
    bool residue_equal(const QElem& x, const QElem& y) const;
    bool residue_is_zero(const QElem& x) const;

    /// The prime ideal itself as an HNF module (quadratic fields only).
    IdealHNF place_ideal() const;

    /// Identifier like "(5)" or "(3, w-2)" for reports.
    std::string str() const;

    bool operator==(const PrimePlace& o) const;

private:
    PrimePlace(QuadField field, long p) : field_(field), p_(p), pi_(), tau_() {}

    long ord_integral(const QElem& y) const;

    QuadField field_;
    long p_;
    Splitting splitting_ = Splitting::Rational;
    int e_ = 1, f_ = 1;
    std::optional<long> c_;
    QElem pi_, tau_;
    long ord2_ = 0;
};

/// Complete list of places where ord_P(x) != 0, ordered by (p, c), with the
/// exponents of the principal fractional ideal (x).
std::vector<std::pair<PrimePlace, long>> factor_principal(const QElem& x);

}  // namespace modist
