#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modist/modular.hpp"
#include "modist/poly.hpp"

namespace modist {

/// Regular d-simplex with side 1: the standard basis of R^{d+1} inside the
/// sum-one hyperplane, sqScale 1/2.
PointSet regular_simplex(long d);

/// Regular simplex with side 1 plus its center; distances {1, d/(2(d+1))}.
PointSet simplex_with_center(long d);

/// The d+2 point set e_1..e_d, (alpha,..,alpha), (beta,..,beta) scaled by
/// 1/sqrt(2), with alpha, beta = (1 +- sqrt(d+1))/d; a 2-distance set with
/// distances {1, 1 + (d+2)/d} that is tight modulo any place above an odd
/// prime dividing d+2.
PointSet example_regular_plus_two(long d);

enum class RootSign { Plus, Minus };

/// Parameters of the two-distance extensions of the regular simplex:
/// x has k coordinates equal to c and d+1-k equal to c+beta, with beta the
/// root of k(d+1-k) b^2 - 2k b - (d+2) = 0 selected by `sign`
/// (k = 1 and k = d+1 have rational one-case formulas; sign is ignored).
class TFamilySpec {
public:
    static TFamilySpec make(long d, long k, RootSign sign = RootSign::Plus);

    long d() const { return d_; }
    long k() const { return k_; }
    RootSign sign() const { return sign_; }
    const QuadField& field() const { return field_; }
    const QElem& beta() const { return beta_; }
    const QElem& c() const { return c_; }

private:
    TFamilySpec() : field_(QuadField::rationals()) {}

    long d_ = 0, k_ = 0;
    RootSign sign_ = RootSign::Plus;
    QuadField field_;
    QElem beta_, c_;
};

/// Simplex plus the canonical T_d(k, beta) point (first k coordinates c);
/// a 2-distance set with d+2 points and distances {1, beta+1}.
PointSet t_family(const TFamilySpec& spec);

/// Existence of a collapsing prime for the T-family cell (d, k), both as the
/// closed form (k != (d+2)/2 or d != 0 mod 4) and as computed algebraic
/// integrality of the ratio -1/beta. Requires 2 <= k <= d and an irrational
/// sqrt(k(d+1)(d+2-k)).
struct TFamilyVerdict {
    long d = 0, k = 0;
    long field_r = 1;
    bool closed_form_exists = false;
    bool computed_exists = false;
    bool agree = false;
    QElem lrs_ratio;                      // -1/beta for the Plus branch
    std::optional<PrimePlace> collapsing; // present iff computed_exists
};

TFamilyVerdict classify_t_family(long d, long k);

/// Valuation-bounded perturbation: shifts every point by pi^{t+1} times the
/// caller's integer seed vector, with t large enough that every pairwise
/// squared distance keeps its residue modulo the place. The preservation is
/// re-verified internally and a violation is a hard error.
PointSet perturb(const PointSet& x, const PrimePlace& place,
                 const std::vector<std::vector<Int>>& seeds);

/// The unique squared-distance ratio a making a simple graph on n vertices
/// realizable as an n-point 2-distance set in R^{n-2}: a = (lambda+1)/lambda
/// with lambda the smallest eigenvalue of PAP on the centered space.
/// Exact when lambda has degree <= 2 over Q; degenerate when a <= 0 or
/// lambda = 0; Unsupported (with the isolating interval) otherwise.
struct GraphParamResult {
    enum class Kind { Value, Degenerate, Unsupported };
    Kind kind = Kind::Unsupported;
    std::optional<QElem> a;
    std::optional<QElem> lambda;
    std::pair<Rational, Rational> interval{0, 0};  // isolating interval for lambda
    std::string note;
};

GraphParamResult graph_two_distance_parameter(const std::vector<std::vector<int>>& adjacency);

}  // namespace modist
