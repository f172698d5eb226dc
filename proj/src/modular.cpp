#include "modist/modular.hpp"

#include <algorithm>
#include <stdexcept>

#include "modist/parallel.hpp"

namespace modist {

std::vector<long> ord_profile(const std::vector<QElem>& distances, const PrimePlace& place) {
    std::vector<long> out;
    out.reserve(distances.size());
    for (const QElem& a : distances) {
        auto v = place.ord(a);
        if (!v) throw std::invalid_argument("ord_profile: zero distance");
        out.push_back(*v);
    }
    return out;
}

std::optional<Normalization> normalize_distances(const std::vector<QElem>& distances,
                                                 const PrimePlace& place) {
    std::vector<long> ords = ord_profile(distances, place);
    for (long v : ords)
        if (v != ords.front()) return std::nullopt;
    Normalization out;
    out.scaler = place.uniformizer().pow(-ords.front());
    out.normalized.reserve(distances.size());
    for (const QElem& a : distances) out.normalized.push_back(out.scaler * a);
    return out;
}

DistanceProfile residue_partition(const std::vector<QElem>& distances, const PrimePlace& place) {
    DistanceProfile profile{distances, place, ord_profile(distances, place), {}, false};
    for (long v : profile.ords)
        if (v < 0) throw std::domain_error("residue_partition: distance outside the local ring");
    for (size_t i = 0; i < distances.size(); ++i) {
        bool placed = false;
        for (auto& cls : profile.residue_classes) {
            if (place.residue_equal(distances[cls.front()], distances[i])) {
                cls.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) profile.residue_classes.push_back({i});
        if (place.residue_is_zero(distances[i])) profile.contains_zero_residue = true;
    }
    return profile;
}

bool check_cardinality_bound(long n, long d, long s) {
    if (n < 1 || d < 1 || s < 1) throw std::invalid_argument("check_cardinality_bound: arguments must be >= 1");
    Int bound = binomial(static_cast<unsigned long>(d + s), static_cast<unsigned long>(s)) +
                binomial(static_cast<unsigned long>(d + s - 1), static_cast<unsigned long>(s - 1));
    return Int(n) <= bound;
}

ResidueCount residue_count(const std::vector<QElem>& distances, const PrimePlace& place) {
    ResidueCount out;
    if (auto norm = normalize_distances(distances, place)) {
        out.normalizable = true;
        out.profile = residue_partition(norm->normalized, place);
        return out;
    }
    std::vector<long> ords = ord_profile(distances, place);
    if (std::all_of(ords.begin(), ords.end(), [](long v) { return v >= 0; }))
        out.profile = residue_partition(distances, place);
    return out;
}

TightVerdict verify_tight_one_distance(const PointSet& x, const PrimePlace& place) {
    TightVerdict verdict;
    verdict.n = static_cast<long>(x.n());
    verdict.d = embedding_dimension(x);

    ResidueCount rc = residue_count(distance_set(x), place);
    verdict.normalizable = rc.normalizable;
    if (rc.profile) {
        verdict.s_mod = rc.profile->s_mod();
        verdict.contains_zero_residue = rc.profile->contains_zero_residue;
    }

    if (!rc.profile) verdict.reasons.push_back("not-in-local-ring");
    if (verdict.n != verdict.d + 2) verdict.reasons.push_back("n!=d+2");
    if (verdict.s_mod != 1) verdict.reasons.push_back("sMod!=1");
    if (verdict.contains_zero_residue) verdict.reasons.push_back("zero-residue");

    verdict.is_tight =
        verdict.n == verdict.d + 2 && verdict.s_mod == 1 && !verdict.contains_zero_residue;
    return verdict;
}

ObstructionReport obstruction_determinant(const PointSet& x, const PrimePlace& place) {
    std::vector<QElem> dist = distance_set(x);
    ResidueCount rc = residue_count(dist, place);
    if (!rc.profile || rc.profile->s_mod() != 1 || rc.profile->contains_zero_residue)
        throw std::domain_error(
            "obstruction_determinant: distances do not form a single nonzero residue class at " +
            place.str());

    // Rescale so the common residue is 1 (the scaled first distance is a
    // unit, so dividing by it fixes the class at 1 without moving the
    // partition).
    QElem factor = dist.front().inv();
    PointSet scaled = PointSet::make(x.field(), x.ambient(), x.points(), x.sq_scale() * factor);

    const QuadField& field = x.field();
    ObstructionReport report;
    report.n = static_cast<long>(x.n());
    report.d = embedding_dimension(x);
    report.p = place.p();

    QMatrix m = gram_difference_matrix(scaled, 0);
    report.det = det_exact(m);
    report.det_is_zero = report.det.is_zero();

    const QElem one = QElem::rational(field, 1);
    const QElem two = QElem::rational(field, 2);
    report.pattern_holds = true;
    for (size_t i = 0; i < m.rows() && report.pattern_holds; ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            const QElem& want = i == j ? two : one;
            if (!place.residue_equal(m.at(i, j), want)) {
                report.pattern_holds = false;
                break;
            }
        }

    report.n_mod_p = static_cast<long>(((report.n % report.p) + report.p) % report.p);
    report.p_divides_n = report.n_mod_p == 0;
    return report;
}

bool predict_tight_existence(long d, long p, ExistenceVariant variant) {
    if (d < 1) throw std::invalid_argument("predict_tight_existence: d must be >= 1");
    if (!is_prime(Int(p))) throw std::invalid_argument("predict_tight_existence: p must be prime");
    switch (variant) {
        case ExistenceVariant::General:
            if (p == 2) return d % 4 == 2;
            return (d + 2) % p == 0;
        case ExistenceVariant::OddIntegral:
            if (p != 2)
                throw std::invalid_argument("predict_tight_existence: OddIntegral requires p = 2");
            return (d + 2) % 16 == 0;
    }
    throw std::logic_error("predict_tight_existence: bad variant");
}

std::vector<QElem> lrs_ratios(const std::vector<QElem>& distances) {
    if (distances.size() < 2) throw std::invalid_argument("lrs_ratios: need at least two distances");
    for (size_t i = 0; i < distances.size(); ++i) {
        if (distances[i].is_zero()) throw std::invalid_argument("lrs_ratios: zero distance");
        for (size_t j = i + 1; j < distances.size(); ++j)
            if (distances[i] == distances[j]) throw std::invalid_argument("lrs_ratios: repeated distance");
    }
    const QuadField& field = distances.front().field();
    std::vector<QElem> out;
    out.reserve(distances.size());
    for (size_t i = 0; i < distances.size(); ++i) {
        QElem k = QElem::rational(field, 1);
        for (size_t j = 0; j < distances.size(); ++j) {
            if (j == i) continue;
            k = k * (distances[j] / (distances[j] - distances[i]));
        }
        out.push_back(k);
    }
    return out;
}

std::optional<PrimePlace> find_collapsing_prime(const QElem& a) {
    const QuadField& field = a.field();
    const QElem one = QElem::rational(field, 1);
    if (a.is_zero() || a == one)
        throw std::invalid_argument("find_collapsing_prime: a must differ from 0 and 1");
    QElem ratio = (one - a).inv();
    if (ratio.is_algebraic_integer()) return std::nullopt;
    for (const auto& [place, exponent] : factor_principal(one - a))
        if (exponent >= 1) return place;
    throw std::logic_error("find_collapsing_prime: non-integral ratio but no positive valuation");
}

std::vector<SweepRow> mod_profile_sweep(const PointSet& x, long p_max, int jobs) {
    if (p_max < 2) throw std::invalid_argument("mod_profile_sweep: p_max must be >= 2");
    std::vector<QElem> dist = distance_set(x);
    const long n = static_cast<long>(x.n());
    const long d = embedding_dimension(x);

    std::vector<PrimePlace> places;
    for (long p : primes_up_to(p_max))
        for (const PrimePlace& place : PrimePlace::primes_above(x.field(), p)) places.push_back(place);

    std::vector<SweepRow> rows(places.size());
    parallel_for(places.size(), jobs, [&](size_t i) {
        const PrimePlace& place = places[i];
        SweepRow row;
        row.p = place.p();
        row.splitting = place.splitting();
        row.c = place.c();
        ResidueCount rc = residue_count(dist, place);
        row.normalizable = rc.normalizable;
        row.s_mod = rc.s_mod();
        row.zero_residue = rc.zero_residue();
        row.tight = rc.profile && rc.profile->s_mod() == 1 && !rc.profile->contains_zero_residue &&
                    n == d + 2;
        rows[i] = row;
    });
    return rows;
}

}  // namespace modist
