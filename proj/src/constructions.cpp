#include "modist/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace modist {

namespace {

std::vector<std::vector<QElem>> simplex_points(const QuadField& field, long d) {
    const QElem zero = QElem::rational(field, 0);
    const QElem one = QElem::rational(field, 1);
    std::vector<std::vector<QElem>> pts(static_cast<size_t>(d + 1),
                                        std::vector<QElem>(static_cast<size_t>(d + 1), zero));
    for (long i = 0; i <= d; ++i) pts[static_cast<size_t>(i)][static_cast<size_t>(i)] = one;
    return pts;
}

const QElem kHalf() { return QElem::rational(Rational(1, 2)); }

}  // namespace

PointSet regular_simplex(long d) {
    if (d < 1) throw std::invalid_argument("regular_simplex: d must be >= 1");
    QuadField field = QuadField::rationals();
    return PointSet::make(field, {AmbientModel::Hyperplane, d}, simplex_points(field, d), kHalf());
}

PointSet simplex_with_center(long d) {
    if (d < 1) throw std::invalid_argument("simplex_with_center: d must be >= 1");
    QuadField field = QuadField::rationals();
    auto pts = simplex_points(field, d);
    pts.emplace_back(static_cast<size_t>(d + 1), QElem::rational(field, Rational(1, d + 1)));
    return PointSet::make(field, {AmbientModel::Hyperplane, d}, std::move(pts), kHalf());
}

PointSet example_regular_plus_two(long d) {
    if (d < 2) throw std::invalid_argument("example_regular_plus_two: d must be >= 2");
    auto [field, q] = QuadField::adjoin_sqrt(Int(d + 1));
    const QElem zero = QElem::rational(field, 0);
    const QElem one = QElem::rational(field, 1);
    const QElem root = QElem::sqrt_gen(field) * Rational(q);  // sqrt(d+1)
    const Rational inv_d(1, d);
    const QElem alpha = (one + root) * inv_d;
    const QElem beta = (one - root) * inv_d;

    std::vector<std::vector<QElem>> pts(static_cast<size_t>(d),
                                        std::vector<QElem>(static_cast<size_t>(d), zero));
    for (long i = 0; i < d; ++i) pts[static_cast<size_t>(i)][static_cast<size_t>(i)] = one;
    pts.emplace_back(static_cast<size_t>(d), alpha);
    pts.emplace_back(static_cast<size_t>(d), beta);
    return PointSet::make(field, {AmbientModel::Cartesian, d}, std::move(pts),
                          QElem::rational(field, Rational(1, 2)));
}

TFamilySpec TFamilySpec::make(long d, long k, RootSign sign) {
    if (d < 2) throw std::invalid_argument("TFamilySpec: d must be >= 2");
    if (k < 1 || k > d + 1) throw std::invalid_argument("TFamilySpec: k out of range [1, d+1]");
    TFamilySpec spec;
    spec.d_ = d;
    spec.k_ = k;
    spec.sign_ = sign;
    if (k == 1) {
        spec.field_ = QuadField::rationals();
        spec.beta_ = QElem::rational(Rational(d + 2, d));
    } else if (k == d + 1) {
        spec.field_ = QuadField::rationals();
        spec.beta_ = QElem::rational(Rational(-(d + 2), 2 * (d + 1)));
    } else {
        Int disc = Int(k) * (d + 1) * (d + 2 - k);
        auto [field, q] = QuadField::adjoin_sqrt(disc);
        spec.field_ = field;
        QElem root = QElem::sqrt_gen(field) * Rational(q);
        if (sign == RootSign::Minus) root = -root;
        spec.beta_ = (QElem::rational(field, k) + root) * Rational(1, k * (d + 1 - k));
    }
    // c = 1/(d+1) - ((d+1-k)/(d+1)) beta
    spec.c_ = QElem::rational(spec.field_, Rational(1, d + 1)) -
              spec.beta_ * Rational(d + 1 - k, d + 1);
    return spec;
}

PointSet t_family(const TFamilySpec& spec) {
    const QuadField& field = spec.field();
    const long d = spec.d(), k = spec.k();
    auto pts = simplex_points(field, d);
    std::vector<QElem> x(static_cast<size_t>(d + 1), spec.c());
    const QElem shifted = spec.c() + spec.beta();
    for (long i = k; i <= d; ++i) x[static_cast<size_t>(i)] = shifted;
    if (spec.beta().is_zero()) throw std::invalid_argument("t_family: degenerate beta = 0");
    pts.push_back(std::move(x));

    PointSet out = PointSet::make(field, {AmbientModel::Hyperplane, d}, std::move(pts),
                                  QElem::rational(field, Rational(1, 2)));
    // The defining property: exactly the two distances 1 and beta+1.
    std::vector<QElem> dist = distance_set(out);
    const QElem one = QElem::rational(field, 1);
    const QElem expected = spec.beta() + one;
    if (dist.size() != 2 ||
        !((dist[0] == one && dist[1] == expected) || (dist[0] == expected && dist[1] == one)))
        throw std::logic_error("t_family: constructed set is not the expected 2-distance set");
    return out;
}

TFamilyVerdict classify_t_family(long d, long k) {
    if (d < 2 || k < 2 || k > d)
        throw std::invalid_argument("classify_t_family: need 2 <= k <= d");
    Int disc = Int(k) * (d + 1) * (d + 2 - k);
    auto [field, q] = QuadField::adjoin_sqrt(disc);
    if (field.is_rational_field())
        throw std::domain_error("classify_t_family: sqrt(k(d+1)(d+2-k)) is rational; K = Q cell");

    TFamilyVerdict verdict;
    verdict.d = d;
    verdict.k = k;
    verdict.field_r = field.r();
    verdict.closed_form_exists = (2 * k != d + 2) || (d % 4 != 0);

    // -1/beta = k/(d+2) + sqrt(disc)/(d+2) on the Plus branch.
    verdict.lrs_ratio = QElem(field, Rational(k, d + 2), Rational(q, Int(d + 2)));
    verdict.computed_exists = !verdict.lrs_ratio.is_algebraic_integer();
    verdict.agree = verdict.closed_form_exists == verdict.computed_exists;

    if (verdict.computed_exists) {
        TFamilySpec spec = TFamilySpec::make(d, k, RootSign::Plus);
        QElem a = spec.beta() + QElem::rational(field, 1);
        verdict.collapsing = find_collapsing_prime(a);
        if (!verdict.collapsing)
            throw std::logic_error("classify_t_family: ratio not integral but no collapsing prime");
    }
    return verdict;
}

namespace {

long ceil_half(long a) { return a >= 0 ? (a + 1) / 2 : -((-a) / 2); }

}  // namespace

PointSet perturb(const PointSet& x, const PrimePlace& place,
                 const std::vector<std::vector<Int>>& seeds) {
    if (x.field() != place.field())
        throw std::domain_error("perturb: point set and place live in different fields");
    const size_t n = x.n();
    const size_t coords = x.point(0).size();
    if (seeds.size() != n) throw std::invalid_argument("perturb: need one seed vector per point");
    for (const auto& s : seeds)
        if (s.size() != coords) throw std::invalid_argument("perturb: seed dimension mismatch");

    const QuadField& field = x.field();
    const QElem two = QElem::rational(field, 2);

    // t = max{0, -min ord(2*s*x_ij), ceil((-1 - ord(s))/2)}: both correction
    // terms of the squared distance, 2 s <u, a> and s |a|^2, then land in
    // P A_P.
    const long ord_scale = place.ord_nonzero(x.sq_scale());
    long t = std::max(0L, ceil_half(-1 - ord_scale));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < coords; ++j) {
            const QElem& coord = x.point(i)[j];
            if (coord.is_zero()) continue;
            long v = ord_scale + place.ord_nonzero(two * coord);
            t = std::max(t, -v);
        }

    // In the hyperplane model the ambient R^d is H_d itself, so displacement
    // vectors must be tangent to it (coordinate sum zero).
    if (x.ambient().model == AmbientModel::Hyperplane) {
        for (size_t i = 0; i < n; ++i) {
            Int row_sum = 0;
            for (size_t j = 0; j < coords; ++j) row_sum += seeds[i][j];
            if (row_sum != 0)
                throw std::invalid_argument(
                    "perturb: hyperplane-model seeds must sum to zero per point (point " +
                    std::to_string(i) + " sums to " + row_sum.get_str() + ")");
        }
    }

    const QElem step = place.uniformizer().pow(t + 1);
    std::vector<std::vector<QElem>> pts;
    pts.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        std::vector<QElem> pt = x.point(i);
        for (size_t j = 0; j < coords; ++j)
            if (seeds[i][j] != 0) pt[j] = pt[j] + step * Rational(seeds[i][j]);
        pts.push_back(std::move(pt));
    }

    PointSet out = PointSet::make(field, x.ambient(), std::move(pts), x.sq_scale());

    // Postcondition: every pairwise squared distance keeps its residue.
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            QElem delta = out.sqdist(i, j) - x.sqdist(i, j);
            auto v = place.ord(delta);
            if (v && *v < 1)
                throw std::logic_error("perturb: residue shift at pair (" + std::to_string(i) + "," +
                                       std::to_string(j) + ")");
        }
    // When the distances sit in A_P at all, the raw residue partition must
    // carry over verbatim.
    std::vector<QElem> dist_old = distance_set(x);
    std::vector<long> ords = ord_profile(dist_old, place);
    if (std::all_of(ords.begin(), ords.end(), [](long v) { return v >= 0; })) {
        DistanceProfile before = residue_partition(dist_old, place);
        DistanceProfile after = residue_partition(distance_set(out), place);
        if (before.s_mod() != after.s_mod() ||
            before.contains_zero_residue != after.contains_zero_residue)
            throw std::logic_error("perturb: residue partition changed");
    }
    return out;
}

namespace {

using RatMat = std::vector<std::vector<Rational>>;

Rational mat_trace(const RatMat& m) {
    Rational t(0);
    for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
    const size_t n = a.size();
    RatMat out(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

// Characteristic polynomial det(xI - M) by the Faddeev-LeVerrier recurrence.
Poly charpoly(const RatMat& m) {
    const size_t n = m.size();
    std::vector<Rational> coeffs(n + 1, Rational(0));
    coeffs[n] = 1;
    RatMat acc(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) acc[i][i] = 1;
    for (size_t k = 1; k <= n; ++k) {
        acc = mat_mul(m, acc);
        Rational ck = -(mat_trace(acc) / Rational(static_cast<long>(k)));
        coeffs[n - k] = ck;
        for (size_t i = 0; i < n; ++i) acc[i][i] += ck;
    }
    return Poly(std::move(coeffs));
}

// Integers z with lo < z < hi; returns count clamped at 2 plus the smallest.
std::pair<int, Int> integers_in_open(const Rational& lo, const Rational& hi) {
    Int first;
    mpz_fdiv_q(first.get_mpz_t(), lo.num().get_mpz_t(), lo.den().get_mpz_t());
    first += 1;  // smallest integer strictly greater than lo
    int count = 0;
    for (Int z = first; count < 2 && Rational(z) < hi; z += 1) ++count;
    return {count, first};
}

}  // namespace

GraphParamResult graph_two_distance_parameter(const std::vector<std::vector<int>>& adjacency) {
    const size_t n = adjacency.size();
    if (n < 2) throw std::invalid_argument("graph_two_distance_parameter: need at least 2 vertices");
    for (size_t i = 0; i < n; ++i) {
        if (adjacency[i].size() != n)
            throw std::invalid_argument("graph_two_distance_parameter: adjacency not square");
        if (adjacency[i][i] != 0)
            throw std::invalid_argument("graph_two_distance_parameter: nonzero diagonal");
        for (size_t j = 0; j < n; ++j) {
            if (adjacency[i][j] != 0 && adjacency[i][j] != 1)
                throw std::invalid_argument("graph_two_distance_parameter: entries must be 0/1");
            if (adjacency[i][j] != adjacency[j][i])
                throw std::invalid_argument("graph_two_distance_parameter: adjacency not symmetric");
        }
    }

    // B = (I - J/n) A (I - J/n), entrywise:
    // B_ij = A_ij - (row_i + col_j)/n + total/n^2.
    std::vector<long> row_sum(n, 0);
    long total = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            row_sum[i] += adjacency[i][j];
            total += adjacency[i][j];
        }
    RatMat b(n, std::vector<Rational>(n, Rational(0)));
    const long nn = static_cast<long>(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            b[i][j] = Rational(adjacency[i][j]) - Rational(row_sum[i] + row_sum[j], nn) +
                      Rational(total, nn * nn);

    Poly cp = charpoly(b);
    if (!cp.coeff(0).is_zero())
        throw std::logic_error("graph_two_distance_parameter: centered matrix lost its kernel");
    // Peel the eigenvalue 0 carried by the all-ones direction.
    std::vector<Rational> shifted;
    for (int i = 1; i <= cp.degree(); ++i) shifted.push_back(cp.coeff(static_cast<size_t>(i)));
    Poly restricted(std::move(shifted));

    Poly sf = restricted.squarefree_part();
    std::vector<RootInterval> roots = isolate_real_roots(sf);
    if (roots.empty())
        throw std::logic_error("graph_two_distance_parameter: symmetric matrix with no real eigenvalue");

    GraphParamResult result;
    result.interval = {roots.front().lo, roots.front().hi};

    // Scale roots to algebraic integers: y = D*x turns monic sf over Q into
    // a monic integer polynomial.
    Int scale_den = 1;
    for (int i = 0; i <= sf.degree(); ++i)
        mpz_lcm(scale_den.get_mpz_t(), scale_den.get_mpz_t(),
                sf.coeff(static_cast<size_t>(i)).den().get_mpz_t());
    std::vector<Rational> scaled_coeffs(static_cast<size_t>(sf.degree()) + 1, Rational(0));
    for (int i = 0; i <= sf.degree(); ++i) {
        Rational c = sf.coeff(static_cast<size_t>(i)) * Rational(scale_den).pow(sf.degree() - i);
        scaled_coeffs[static_cast<size_t>(i)] = c;
    }
    Poly scaled(std::move(scaled_coeffs));
    const Rational ds(scale_den);

    std::vector<RootInterval> s_roots = roots;
    for (RootInterval& iv : s_roots) {
        iv.lo = iv.lo * ds;
        iv.hi = iv.hi * ds;
    }

    std::optional<QElem> lambda_scaled;  // D * lambda, an algebraic integer

    RootInterval& target = s_roots.front();
    // Degree 1: an exact or detectable integer root.
    if (target.exact) {
        lambda_scaled = QElem::rational(target.lo);
    } else {
        refine_interval(scaled, target, Rational(1, 2));
        if (target.exact) {
            lambda_scaled = QElem::rational(target.lo);
        } else {
            auto [cnt, z] = integers_in_open(target.lo, target.hi);
            if (cnt == 1 && scaled.eval(Rational(z)).is_zero()) lambda_scaled = QElem::rational(Rational(z));
        }
    }

    // Degree 2: some other real root is the algebraic conjugate; trace and
    // norm of the scaled pair are then rational integers, recoverable from
    // sufficiently refined intervals and verifiable by exact division.
    if (!lambda_scaled) {
        const Rational width_floor(Int(1), Int(1) << 96);
        for (size_t j = 1; j < s_roots.size() && !lambda_scaled; ++j) {
            RootInterval other = s_roots[j];
            if (other.exact) continue;  // a rational conjugate cannot pair with an irrational root
            RootInterval self = target;
            Rational width(1, 4);
            while (width > width_floor) {
                refine_interval(scaled, self, width);
                refine_interval(scaled, other, width);
                if (self.exact || other.exact) break;
                auto [tc, tz] = integers_in_open(self.lo + other.lo, self.hi + other.hi);
                Rational pl = std::min({self.lo * other.lo, self.lo * other.hi, self.hi * other.lo,
                                        self.hi * other.hi});
                Rational ph = std::max({self.lo * other.lo, self.lo * other.hi, self.hi * other.lo,
                                        self.hi * other.hi});
                auto [nc, nz] = integers_in_open(pl, ph);
                if (tc != 1 || nc != 1) {
                    // Either not yet isolated or genuinely no integer
                    // trace/norm; keep shrinking until the floor decides.
                    width *= Rational(1, 16);
                    continue;
                }
                // Candidate minimal polynomial y^2 - T y + N, verified by
                // exact division; membership in the isolating interval then
                // pins the root.
                Int t_cand = tz, n_cand = nz;
                Int disc = t_cand * t_cand - 4 * n_cand;
                if (disc <= 0) break;
                auto [qf, mult] = QuadField::adjoin_sqrt(disc);
                if (qf.is_rational_field()) break;  // rational roots were handled above
                std::vector<Rational> quad{Rational(n_cand), Rational(-t_cand), Rational(1)};
                if (!scaled.divmod(Poly(quad)).second.is_zero()) break;
                for (int s = -1; s <= 1; s += 2) {
                    QElem cand(qf, Rational(t_cand, 2), Rational(Int(s) * mult, Int(2)));
                    QElem lo_e = QElem::rational(qf, self.lo), hi_e = QElem::rational(qf, self.hi);
                    if ((cand - lo_e).sign_real() > 0 && (hi_e - cand).sign_real() > 0) {
                        lambda_scaled = cand;
                        break;
                    }
                }
                break;
            }
        }
    }

    if (!lambda_scaled) {
        result.kind = GraphParamResult::Kind::Unsupported;
        result.note = "smallest eigenvalue has degree > 2 over Q; squarefree factor " + sf.str();
        return result;
    }

    QElem lambda = *lambda_scaled * Rational(Int(1), scale_den);
    result.lambda = lambda;
    if (lambda.is_zero()) {
        result.kind = GraphParamResult::Kind::Degenerate;
        result.note = "smallest eigenvalue is 0; a = (lambda+1)/lambda undefined";
        return result;
    }
    QElem a = (lambda + QElem::rational(lambda.field(), 1)) / lambda;
    result.a = a;
    if (a.sign_real() <= 0) {
        result.kind = GraphParamResult::Kind::Degenerate;
        result.note = "parameter a = " + a.str() + " is not positive";
        return result;
    }
    result.kind = GraphParamResult::Kind::Value;
    return result;
}

}  // namespace modist
