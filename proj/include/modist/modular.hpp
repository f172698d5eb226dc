#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modist/geometry.hpp"
#include "modist/ideals.hpp"

namespace modist {

/// Residue analysis of a distance list at a place: valuations, the partition
/// of distance indices into residue classes of A_P / P A_P, and whether the
/// zero residue occurs.
struct DistanceProfile {
    std::vector<QElem> distances;
    PrimePlace place;
    std::vector<long> ords;
    std::vector<std::vector<size_t>> residue_classes;
    bool contains_zero_residue = false;

    long s_mod() const { return static_cast<long>(residue_classes.size()); }
};

/// ord_P(a) for each distance; rejects zero distances.
std::vector<long> ord_profile(const std::vector<QElem>& distances, const PrimePlace& place);

struct Normalization {
    QElem scaler;                   // positive, a power of the uniformizer
    std::vector<QElem> normalized;  // scaler * distances, all of ord 0
};

/// Succeeds iff all distances share one valuation n; then the scaler is
/// pi^{-n} and the rescaled list consists of units of A_P.
std::optional<Normalization> normalize_distances(const std::vector<QElem>& distances,
                                                 const PrimePlace& place);

/// Partitions distances (all of ord >= 0) by residue equality.
DistanceProfile residue_partition(const std::vector<QElem>& distances, const PrimePlace& place);

/// n <= C(d+s, s) + C(d+s-1, s-1).
bool check_cardinality_bound(long n, long d, long s);

/// Residue counting for one distance list, the common core of verify and
/// sweep: normalize when possible, otherwise fall back to the raw partition
/// when the list already sits in A_P.
struct ResidueCount {
    bool normalizable = false;
    std::optional<DistanceProfile> profile;  // absent iff some ord < 0 and not normalizable

    std::optional<long> s_mod() const {
        if (!profile) return std::nullopt;
        return profile->s_mod();
    }
    std::optional<bool> zero_residue() const {
        if (!profile) return std::nullopt;
        return profile->contains_zero_residue;
    }
};

ResidueCount residue_count(const std::vector<QElem>& distances, const PrimePlace& place);

/// Verdict for tightness as a 1-distance set modulo P A_P:
/// n = d + 2, one residue class, zero residue absent.
struct TightVerdict {
    bool is_tight = false;
    long n = 0;
    long d = 0;
    long s_mod = 0;  // 0 when no partition exists (distances not in A_P)
    bool normalizable = false;
    bool contains_zero_residue = false;
    std::vector<std::string> reasons;  // every failed clause
};

TightVerdict verify_tight_one_distance(const PointSet& x, const PrimePlace& place);

/// The determinant obstruction: for a verified one-residue set rescaled so
/// the residue is 1, the difference Gram matrix is congruent to J + I
/// entrywise and has determinant 0 once n = d + 2, forcing p | d + 2.
struct ObstructionReport {
    long n = 0;
    long d = 0;
    long p = 0;
    QElem det;
    bool det_is_zero = false;
    bool pattern_holds = false;  // diagonal = 2, off-diagonal = 1 mod P
    long n_mod_p = 0;
    bool p_divides_n = false;
};

ObstructionReport obstruction_determinant(const PointSet& x, const PrimePlace& place);

enum class ExistenceVariant { General, OddIntegral };

/// Closed-form existence of a tight 1-distance set modulo a place above p:
/// odd p: d+2 = 0 (mod p); p = 2: d = 2 (mod 4);
/// OddIntegral (squared odd elements, e = 1): d+2 = 0 (mod 16).
bool predict_tight_existence(long d, long p, ExistenceVariant variant);

/// k_i = prod_{j != i} a_j / (a_j - a_i); the k_i always sum to 1.
std::vector<QElem> lrs_ratios(const std::vector<QElem>& distances);

/// For D = {1, a}: a place P with a = 1 (mod P A_P), which exists iff the
/// ratio 1/(1-a) is not an algebraic integer; nullopt otherwise.
std::optional<PrimePlace> find_collapsing_prime(const QElem& a);

/// One row of the per-place profile table.
struct SweepRow {
    long p = 0;
    Splitting splitting = Splitting::Rational;
    std::optional<long> c;
    bool normalizable = false;
    std::optional<long> s_mod;
    std::optional<bool> zero_residue;
    bool tight = false;
};

/// Profile of X at every place above every prime <= p_max, in (p, c) order.
/// jobs > 1 evaluates places concurrently; the row order is fixed.
std::vector<SweepRow> mod_profile_sweep(const PointSet& x, long p_max, int jobs = 1);

}  // namespace modist
