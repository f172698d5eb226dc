#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "modist/json_io.hpp"
#include "test_support.hpp"

using namespace modist;

namespace {
const QuadField Q = QuadField::rationals();
const QuadField Q10 = QuadField::real_quadratic(10);
}  // namespace

TEST_CASE("QElem round trip is bit exact") {
    QElem x(Q10, Rational(-7, 3), Rational(22, 8));
    Json j = qelem_to_json(x);
    CHECK(dump_json(j) == dump_json(qelem_to_json(qelem_from_json(j))));
    CHECK(qelem_from_json(j) == x);
    CHECK(j.dump() == R"({"a":"-7/3","b":"11/4","r":10})");

    testing::Rng rng(113);
    for (int i = 0; i < 100; ++i) {
        QElem y = rng.elem(Q10);
        CHECK(qelem_from_json(qelem_to_json(y)) == y);
    }
}

TEST_CASE("QElem parse validation") {
    CHECK_THROWS_AS(qelem_from_json(Json{{"r", 12}, {"a", "1/1"}, {"b", "0/1"}}),
                    std::invalid_argument);  // non-squarefree
    CHECK_THROWS_AS(qelem_from_json(Json{{"r", 10}, {"a", "3/"}, {"b", "0/1"}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(qelem_from_json(Json{{"r", 10}, {"b", "0/1"}}), std::invalid_argument);
    CHECK_THROWS_AS(qelem_from_json(Json{{"r", 1}, {"a", "1/2"}, {"b", "1/1"}}),
                    std::invalid_argument);  // sqrt part over Q
}

TEST_CASE("PointSet round trip") {
    PointSet x = example_regular_plus_two(5);
    Json j = pointset_to_json(x);
    PointSet back = pointset_from_json(j);
    CHECK(back.points() == x.points());
    CHECK(back.ambient() == x.ambient());
    CHECK(back.sq_scale() == x.sq_scale());
    CHECK(dump_json(pointset_to_json(back)) == dump_json(j));
}

TEST_CASE("PointSet schema validation") {
    Json good = pointset_to_json(regular_simplex(2));

    Json bad_model = good;
    bad_model["ambient"]["model"] = "spherical";
    CHECK_THROWS_WITH_AS(pointset_from_json(bad_model), doctest::Contains("model"),
                         std::invalid_argument);

    Json bad_sum = good;
    bad_sum["points"][0][0]["a"] = "2/1";
    CHECK_THROWS_WITH_AS(pointset_from_json(bad_sum), doctest::Contains("coordinate sum"),
                         std::invalid_argument);

    Json bad_field = good;
    bad_field["points"][0][0]["r"] = 3;
    CHECK_THROWS_WITH_AS(pointset_from_json(bad_field), doctest::Contains("r="),
                         std::invalid_argument);

    Json bad_r = good;
    bad_r["r"] = 18;
    CHECK_THROWS_WITH_AS(pointset_from_json(bad_r), doctest::Contains("9"),
                         std::invalid_argument);
}

TEST_CASE("PrimePlace serialization") {
    PrimePlace split = PrimePlace::primes_above(Q10, 3)[1];
    Json j = place_to_json(split);
    CHECK(j["p"] == 3);
    CHECK(j["r"] == 10);
    CHECK(j["splitting"] == "split");
    CHECK(j["c"] == 2);

    PrimePlace rat = PrimePlace::primes_above(Q, 7)[0];
    Json jr = place_to_json(rat);
    CHECK(jr["splitting"] == "rational");
    CHECK(jr["c"].is_null());
}

TEST_CASE("report serialization") {
    PointSet x = example_regular_plus_two(3);
    PrimePlace p5 = PrimePlace::primes_above(Q, 5)[0];
    Json v = verdict_to_json(verify_tight_one_distance(x, p5), p5);
    CHECK(v["isTight"] == true);
    CHECK(v["n"] == 5);
    CHECK(v["sMod"] == 1);

    Json o = obstruction_to_json(obstruction_determinant(x, p5));
    CHECK(o["detIsZero"] == true);
    CHECK(o["patternHolds"] == true);
    CHECK(o["pDividesN"] == true);

    auto rows = mod_profile_sweep(x, 5);
    CHECK(sweep_row_tsv(rows[1]) == "3\trational\t-\tfalse\t-\t-\tfalse");
    CHECK(sweep_row_tsv(rows[2]) == "5\trational\t-\ttrue\t1\tfalse\ttrue");
    Json sj = sweep_row_to_json(rows[2]);
    CHECK(sj["tight"] == true);
    CHECK(sj["c"].is_null());

    Json tj = tfamily_verdict_to_json(classify_t_family(4, 2));
    CHECK(tj["agree"] == true);
    CHECK(tj["collapsing"]["p"] == 3);
}

TEST_CASE("file round trip") {
    const std::string path = "modist_test_pointset.json";
    PointSet x = simplex_with_center(4);
    write_pointset(x, path);
    PointSet back = read_pointset(path);
    CHECK(back.points() == x.points());

    std::ofstream(path) << "{ not json";
    CHECK_THROWS_AS(read_pointset(path), std::invalid_argument);
    CHECK_THROWS_AS(read_pointset("does_not_exist.json"), std::invalid_argument);
    std::remove(path.c_str());
}

TEST_CASE("determinism") {
    PointSet x = example_regular_plus_two(7);
    CHECK(dump_json(pointset_to_json(x)) == dump_json(pointset_to_json(x)));
}
