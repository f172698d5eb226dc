#include <doctest.h>

#include <algorithm>

#include "modist/constructions.hpp"
#include "test_support.hpp"

using namespace modist;

namespace {
const QuadField Q = QuadField::rationals();

PrimePlace rational_place(long p) { return PrimePlace::primes_above(Q, p)[0]; }

std::vector<std::vector<Int>> tangent_seeds(const PointSet& x, testing::Rng& rng, long lo, long hi) {
    std::vector<std::vector<Int>> seeds(x.n(), std::vector<Int>(x.point(0).size(), 0));
    const bool hyper = x.ambient().model == AmbientModel::Hyperplane;
    for (auto& row : seeds) {
        Int sum = 0;
        for (size_t j = 0; j + (hyper ? 1 : 0) < row.size(); ++j) {
            row[j] = rng.integer(lo, hi);
            sum += row[j];
        }
        if (hyper) row.back() = -sum;
    }
    return seeds;
}
}  // namespace

TEST_CASE("regular_simplex") {
    PointSet s = regular_simplex(2);
    CHECK(s.n() == 3);
    CHECK(distance_set(s) == std::vector<QElem>{QElem::rational(Q, 1)});
    CHECK(embedding_dimension(s) == 2);
    CHECK_THROWS_AS(regular_simplex(0), std::invalid_argument);
}

TEST_CASE("simplex_with_center") {
    PointSet x = simplex_with_center(2);
    auto dist = distance_set(x);
    REQUIRE(dist.size() == 2);
    CHECK(dist[0] == QElem::rational(Q, 1));
    CHECK(dist[1] == QElem::rational(Q, Rational(1, 3)));

    // d = 6 is tight at 2; d = 4 is not (distances {1, 2/5})
    CHECK(verify_tight_one_distance(simplex_with_center(6), rational_place(2)).is_tight);
    TightVerdict v4 = verify_tight_one_distance(simplex_with_center(4), rational_place(2));
    CHECK_FALSE(v4.is_tight);
    CHECK(v4.s_mod == 2);

    // closed form of the short distance for a range of d
    for (long d = 1; d <= 60; ++d) {
        auto ds = distance_set(simplex_with_center(d));
        REQUIRE(ds.size() == 2);
        CHECK(ds[1] == QElem::rational(Q, Rational(d, 2 * (d + 1))));
    }
}

TEST_CASE("example_regular_plus_two") {
    PointSet x3 = example_regular_plus_two(3);
    CHECK(x3.field().is_rational_field());  // sqrt(4) = 2
    CHECK(x3.n() == 5);
    auto d3 = distance_set(x3);
    REQUIRE(d3.size() == 2);
    CHECK(d3[1] == QElem::rational(Q, Rational(8, 3)));
    CHECK(embedding_dimension(x3) == 3);
    CHECK(verify_tight_one_distance(x3, rational_place(5)).is_tight);

    PointSet x5 = example_regular_plus_two(5);
    CHECK(x5.field().r() == 6);
    auto d5 = distance_set(x5);
    CHECK(d5[1] == QElem::rational(x5.field(), Rational(12, 5)));
    auto places7 = PrimePlace::primes_above(x5.field(), 7);
    bool tight_somewhere = false;
    for (const PrimePlace& place : places7)
        tight_somewhere |= verify_tight_one_distance(x5, place).is_tight;
    CHECK(tight_somewhere);

    // distance closed form {1, 1 + (d+2)/d} for all d <= 60
    for (long d = 2; d <= 60; ++d) {
        PointSet x = example_regular_plus_two(d);
        auto ds = distance_set(x);
        REQUIRE(ds.size() == 2);
        CHECK(ds[0] == QElem::rational(x.field(), 1));
        CHECK(ds[1] == QElem::rational(x.field(), Rational(2 * d + 2, d)));
        CHECK(x.n() == static_cast<size_t>(d) + 2);
    }

    CHECK_THROWS_AS(example_regular_plus_two(1), std::invalid_argument);
}

TEST_CASE("TFamilySpec beta formulas") {
    // d = 4, k = 3: beta = (3 + sqrt45)/6 = (1+sqrt5)/2
    TFamilySpec s43 = TFamilySpec::make(4, 3, RootSign::Plus);
    CHECK(s43.field().r() == 5);
    CHECK(s43.beta() == QElem(s43.field(), Rational(1, 2), Rational(1, 2)));

    // d = 3, k = 1: beta = 1 + 2/3
    TFamilySpec s31 = TFamilySpec::make(3, 1);
    CHECK(s31.field().is_rational_field());
    CHECK(s31.beta() == QElem::rational(Q, Rational(5, 3)));

    // d = 3, k = 4 = d+1: beta = -5/8, the center family
    TFamilySpec s34 = TFamilySpec::make(3, 4);
    CHECK(s34.beta() == QElem::rational(Q, Rational(-5, 8)));

    // c = 1/(d+1) - ((d+1-k)/(d+1)) beta
    TFamilySpec s42 = TFamilySpec::make(4, 2, RootSign::Minus);
    CHECK(s42.c() == QElem::rational(s42.field(), Rational(1, 5)) -
                         s42.beta() * Rational(3, 5));

    CHECK_THROWS_AS(TFamilySpec::make(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(TFamilySpec::make(3, 5), std::invalid_argument);
}

TEST_CASE("t_family builds 2-distance sets") {
    // the center family realizes the same distances as simplex_with_center
    PointSet center = t_family(TFamilySpec::make(3, 4));
    auto dc = distance_set(center);
    REQUIRE(dc.size() == 2);
    CHECK(dc[1] == QElem::rational(Q, Rational(3, 8)));  // beta + 1 = 3/8 = d/(2(d+1))

    for (long d = 2; d <= 12; ++d) {
        for (long k = 1; k <= d + 1; ++k) {
            for (RootSign sign : {RootSign::Plus, RootSign::Minus}) {
                if (k == 1 && sign == RootSign::Minus) continue;
                if (k == d + 1 && sign == RootSign::Minus) continue;
                TFamilySpec spec = TFamilySpec::make(d, k, sign);
                PointSet x = t_family(spec);
                CHECK(x.n() == static_cast<size_t>(d) + 2);
                auto dist = distance_set(x);
                REQUIRE(dist.size() == 2);
                CHECK(embedding_dimension(x) == d);
            }
        }
    }
    // spot-check larger cells
    for (auto [d, k] : std::vector<std::pair<long, long>>{{20, 2}, {20, 11}, {30, 7}, {30, 31}}) {
        PointSet x = t_family(TFamilySpec::make(d, k));
        CHECK(x.n() == static_cast<size_t>(d) + 2);
        CHECK(embedding_dimension(x) == d);
    }
}

TEST_CASE("classify_t_family") {
    // (4,3): k = (d+2)/2 and d = 0 mod 4, ratio (1±sqrt5)/2 integral
    TFamilyVerdict v43 = classify_t_family(4, 3);
    CHECK_FALSE(v43.closed_form_exists);
    CHECK_FALSE(v43.computed_exists);
    CHECK(v43.agree);
    CHECK(v43.field_r == 5);
    CHECK(v43.lrs_ratio.is_algebraic_integer());
    CHECK_FALSE(v43.collapsing.has_value());

    // (4,2): ratio (1±sqrt10)/3, collapsing prime above 3
    TFamilyVerdict v42 = classify_t_family(4, 2);
    CHECK(v42.closed_form_exists);
    CHECK(v42.computed_exists);
    CHECK(v42.agree);
    CHECK(v42.field_r == 10);
    REQUIRE(v42.collapsing.has_value());
    CHECK(v42.collapsing->p() == 3);

    // (6,4): k = (d+2)/2 but d = 2 mod 4
    TFamilyVerdict v64 = classify_t_family(6, 4);
    CHECK(v64.closed_form_exists);
    CHECK(v64.computed_exists);
    CHECK(v64.agree);

    // K = Q cells are rejected: 5*9*5 = 225 = 15^2
    CHECK_THROWS_AS(classify_t_family(8, 5), std::domain_error);
    CHECK_THROWS_AS(classify_t_family(4, 1), std::invalid_argument);
}

TEST_CASE("classify grid agreement up to d = 18") {
    for (long d = 2; d <= 18; ++d)
        for (long k = 2; k <= d; ++k) {
            auto [field, q] = QuadField::adjoin_sqrt(Int(k) * (d + 1) * (d + 2 - k));
            if (field.is_rational_field()) continue;
            CHECK(classify_t_family(d, k).agree);
        }
}

TEST_CASE("boundary LRS ratios never integral") {
    // k = 1: ratio -d/(d+2); k = d+1: ratio 2(d+1)/(d+2)
    for (long d = 2; d <= 40; ++d) {
        TFamilySpec k1 = TFamilySpec::make(d, 1);
        QElem a1 = k1.beta() + QElem::rational(Q, 1);
        QElem ratio1 = (QElem::rational(Q, 1) - a1).inv();
        CHECK(ratio1 == QElem::rational(Q, Rational(-d, d + 2)));
        CHECK(find_collapsing_prime(a1).has_value());

        TFamilySpec kd = TFamilySpec::make(d, d + 1);
        QElem ad = kd.beta() + QElem::rational(Q, 1);
        QElem ratiod = (QElem::rational(Q, 1) - ad).inv();
        CHECK(ratiod == QElem::rational(Q, Rational(2 * (d + 1), d + 2)));
        CHECK(find_collapsing_prime(ad).has_value());
    }
}

TEST_CASE("perturb") {
    testing::Rng rng(103);

    // zero seeds reproduce the set exactly
    PointSet base = simplex_with_center(2);
    std::vector<std::vector<Int>> zero(base.n(), std::vector<Int>(base.point(0).size(), 0));
    PointSet same = perturb(base, rational_place(2), zero);
    CHECK(same.points() == base.points());
    CHECK(same.ambient() == base.ambient());

    // random tangent seeds keep the verdict tight at 2
    for (int i = 0; i < 10; ++i) {
        PointSet moved = perturb(base, rational_place(2), tangent_seeds(base, rng, -2, 2));
        CHECK(verify_tight_one_distance(moved, rational_place(2)).is_tight);
    }

    // construction (3.1) witnesses stay tight above 5 (Cartesian model:
    // seeds are unconstrained)
    PointSet eq31 = example_regular_plus_two(3);
    for (int i = 0; i < 10; ++i) {
        std::vector<std::vector<Int>> seeds(eq31.n(), std::vector<Int>(eq31.point(0).size()));
        for (auto& row : seeds)
            for (auto& v : row) v = rng.integer(-2, 2);
        PointSet moved = perturb(eq31, rational_place(5), seeds);
        TightVerdict v = verify_tight_one_distance(moved, rational_place(5));
        CHECK(v.s_mod == 1);
        CHECK_FALSE(v.contains_zero_residue);
    }

    // hyperplane seeds must be tangent
    std::vector<std::vector<Int>> bad(base.n(), std::vector<Int>(base.point(0).size(), 0));
    bad[0][0] = 1;
    CHECK_THROWS_AS(perturb(base, rational_place(2), bad), std::invalid_argument);

    // dimension mismatches
    CHECK_THROWS_AS(perturb(base, rational_place(2), {}), std::invalid_argument);

    // distances that are all divisible by the place still perturb cleanly:
    // the raw residue partition (a single zero class) is what must survive
    PointSet scaled3 = PointSet::make(
        Q, {AmbientModel::Cartesian, 2},
        {{QElem::rational(Q, 0), QElem::rational(Q, 0)},
         {QElem::rational(Q, 3), QElem::rational(Q, 0)},
         {QElem::rational(Q, 3), QElem::rational(Q, 3)}},
        QElem::rational(Q, 1));
    for (long s : {0L, 1L, 3L}) {
        PointSet moved3 = perturb(scaled3, rational_place(3), {{0, 0}, {s, 0}, {0, s}});
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = i + 1; j < 3; ++j)
                CHECK(rational_place(3).residue_equal(moved3.sqdist(i, j), scaled3.sqdist(i, j)));
    }

    // a quadratic-field case: perturb the (3.1) set for d = 5 at a place above 7
    PointSet x5 = example_regular_plus_two(5);
    PrimePlace p7 = PrimePlace::primes_above(x5.field(), 7)[0];
    std::vector<std::vector<Int>> seeds(x5.n(), std::vector<Int>(x5.point(0).size()));
    for (auto& row : seeds)
        for (auto& v : row) v = rng.integer(-3, 3);
    PointSet moved = perturb(x5, p7, seeds);
    CHECK(verify_tight_one_distance(moved, p7).s_mod == 1);
}

TEST_CASE("graph_two_distance_parameter") {
    auto complete = [](size_t n) {
        std::vector<std::vector<int>> a(n, std::vector<int>(n, 1));
        for (size_t i = 0; i < n; ++i) a[i][i] = 0;
        return a;
    };

    // complete graph: lambda = -1, a = 0, degenerate
    GraphParamResult kn = graph_two_distance_parameter(complete(5));
    CHECK(kn.kind == GraphParamResult::Kind::Degenerate);
    REQUIRE(kn.lambda.has_value());
    CHECK(*kn.lambda == QElem::rational(Q, -1));
    REQUIRE(kn.a.has_value());
    CHECK(kn.a->is_zero());

    // empty graph: lambda = 0
    GraphParamResult empty = graph_two_distance_parameter(std::vector<std::vector<int>>(
        4, std::vector<int>(4, 0)));
    CHECK(empty.kind == GraphParamResult::Kind::Degenerate);
    CHECK(empty.lambda->is_zero());

    // path P3: PAP has rank 1 with nonzero eigenvalue -4/3 (the trace), so
    // lambda = -4/3 and a = (lambda+1)/lambda = 1/4
    GraphParamResult p3 = graph_two_distance_parameter({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
    CHECK(p3.kind == GraphParamResult::Kind::Value);
    CHECK(*p3.lambda == QElem::rational(Q, Rational(-4, 3)));
    CHECK(*p3.a == QElem::rational(Q, Rational(1, 4)));

    // cycle C5 is 2-regular, so PAP = A on the centered space; the smallest
    // eigenvalue is (-1-sqrt5)/2 and a = (3-sqrt5)/2
    GraphParamResult c5 = graph_two_distance_parameter({{0, 1, 0, 0, 1},
                                                        {1, 0, 1, 0, 0},
                                                        {0, 1, 0, 1, 0},
                                                        {0, 0, 1, 0, 1},
                                                        {1, 0, 0, 1, 0}});
    CHECK(c5.kind == GraphParamResult::Kind::Value);
    QuadField q5 = QuadField::real_quadratic(5);
    CHECK(*c5.lambda == QElem(q5, Rational(-1, 2), Rational(-1, 2)));
    CHECK(*c5.a == QElem(q5, Rational(3, 2), Rational(-1, 2)));

    // spider tree (K_1,3 with one subdivided edge): the smallest eigenvalue
    // satisfies the irreducible cubic y^3 + 8y^2 - 20y - 100 (y = 5x)
    GraphParamResult spider = graph_two_distance_parameter({{0, 1, 1, 1, 0},
                                                            {1, 0, 0, 0, 0},
                                                            {1, 0, 0, 0, 0},
                                                            {1, 0, 0, 0, 1},
                                                            {0, 0, 0, 1, 0}});
    CHECK(spider.kind == GraphParamResult::Kind::Unsupported);
    // the isolating interval brackets -1.7975
    CHECK(spider.interval.first.approx() < -1.7);
    CHECK(spider.interval.second.approx() > -1.9);

    // malformed adjacency
    CHECK_THROWS_AS(graph_two_distance_parameter({{0, 1}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(graph_two_distance_parameter({{0, 2}, {2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(graph_two_distance_parameter({{0, 1}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(graph_two_distance_parameter({{0}}), std::invalid_argument);
}

TEST_CASE("constructed families satisfy the cardinality bound") {
    // equality exactly at tight witnesses
    for (long d : {2L, 6L, 10L}) {
        TightVerdict v = verify_tight_one_distance(simplex_with_center(d), rational_place(2));
        REQUIRE(v.is_tight);
        CHECK(check_cardinality_bound(v.n, v.d, v.s_mod));
        CHECK_FALSE(check_cardinality_bound(v.n + 1, v.d, v.s_mod));
    }
    // 2-distance counting at a generic place: strict inequality
    PointSet x = t_family(TFamilySpec::make(4, 2));
    auto places = PrimePlace::primes_above(x.field(), 11);
    ResidueCount rc = residue_count(distance_set(x), places[0]);
    REQUIRE(rc.profile.has_value());
    CHECK(rc.profile->s_mod() == 2);
    CHECK(check_cardinality_bound(static_cast<long>(x.n()), 4, 2));
}
