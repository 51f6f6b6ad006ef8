#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <spanmet/metric.hpp>

#include "fixtures.hpp"

using namespace spanmet;

namespace {

RationalMatrix mat(const std::vector<std::vector<const char*>>& cells) {
    const int n = static_cast<int>(cells.size());
    RationalMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < static_cast<int>(cells[static_cast<size_t>(i)].size()); ++j)
            m(i, j) = parse_rational(cells[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    return m;
}

std::vector<std::string> labels(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back("p" + std::to_string(i));
    return out;
}

const MetricViolation& violation(const std::variant<FiniteMetricSpace, MetricViolation>& r) {
    REQUIRE(std::holds_alternative<MetricViolation>(r));
    return std::get<MetricViolation>(r);
}

}  // namespace

TEST_CASE("validate_metric accepts the fixtures") {
    auto m = fixtures::path3();
    CHECK(m.size() == 3);
    CHECK(m.label(0) == "a");
    CHECK(m.d(0, 2) == 3);
    CHECK(m.d(2, 0) == 3);
}

TEST_CASE("malformed input throws instead of reporting a violation") {
    CHECK_THROWS_AS(validate_metric(RationalMatrix(), labels(0)), std::invalid_argument);
    RationalMatrix notsquare;
    notsquare.n = 2;
    notsquare.cells.resize(3);
    CHECK_THROWS_AS(validate_metric(notsquare, labels(2)), std::invalid_argument);
    auto ok = mat({{"0", "1"}, {"1", "0"}});
    CHECK_THROWS_AS(validate_metric(ok, labels(3)), std::invalid_argument);
    CHECK_THROWS_AS(validate_metric(ok, {"a", "a"}), std::invalid_argument);
}

TEST_CASE("each axiom failure is reported with the offending cells") {
    SUBCASE("nonzero diagonal") {
        auto v = violation(validate_metric(mat({{"1", "2"}, {"2", "0"}}), labels(2)));
        CHECK(v.kind == ViolationKind::NonzeroDiagonal);
        CHECK(v.indices == std::vector<int>{0});
        CHECK(v.lhs == 1);
        CHECK(v.rhs == 0);
    }
    SUBCASE("asymmetry") {
        auto v = violation(validate_metric(mat({{"0", "1"}, {"2", "0"}}), labels(2)));
        CHECK(v.kind == ViolationKind::Asymmetry);
        CHECK(v.indices == std::vector<int>{0, 1});
        CHECK(v.lhs == 1);
        CHECK(v.rhs == 2);
    }
    SUBCASE("negative distance") {
        auto v = violation(validate_metric(mat({{"0", "-1"}, {"-1", "0"}}), labels(2)));
        CHECK(v.kind == ViolationKind::Negative);
        CHECK(v.indices == std::vector<int>{0, 1});
        CHECK(v.lhs == -1);
    }
    SUBCASE("zero off the diagonal") {
        auto v = violation(validate_metric(mat({{"0", "0"}, {"0", "0"}}), labels(2)));
        CHECK(v.kind == ViolationKind::ZeroOffDiagonal);
        CHECK(v.indices == std::vector<int>{0, 1});
    }
    SUBCASE("triangle inequality") {
        auto v = violation(validate_metric(mat({{"0", "1", "5"}, {"1", "0", "2"}, {"5", "2", "0"}}),
                                           labels(3)));
        CHECK(v.kind == ViolationKind::Triangle);
        CHECK(v.indices == std::vector<int>{0, 1, 2});
        CHECK(v.lhs == 5);
        CHECK(v.rhs == 3);
    }
}

TEST_CASE("cell checks run row by row, diagonal first within a row") {
    // row 0's diagonal precedes its pairs
    auto v1 = violation(validate_metric(mat({{"1", "2"}, {"3", "0"}}), labels(2)));
    CHECK(v1.kind == ViolationKind::NonzeroDiagonal);
    // row 0's pairs precede row 1's diagonal
    auto v2 = violation(validate_metric(mat({{"0", "2"}, {"3", "7"}}), labels(2)));
    CHECK(v2.kind == ViolationKind::Asymmetry);
}

TEST_CASE("the first triangle violation is lexicographic in (i, j, k)") {
    // d(0,3) and d(1,3) both break; (0, 1, 3) sorts before (1, 0, 3)
    auto cells = mat({{"0", "1", "1", "9"},
                      {"1", "0", "1", "7"},
                      {"1", "1", "0", "1"},
                      {"9", "7", "1", "0"}});
    auto v = violation(validate_metric(cells, labels(4)));
    CHECK(v.kind == ViolationKind::Triangle);
    CHECK(v.indices == std::vector<int>{0, 1, 3});
    CHECK(v.lhs == 9);
    CHECK(v.rhs == 8);
}

TEST_CASE("triangle scan result is independent of the job count") {
    auto cells = mat({{"0", "1", "1", "9"},
                      {"1", "0", "1", "7"},
                      {"1", "1", "0", "1"},
                      {"9", "7", "1", "0"}});
    auto v1 = violation(validate_metric(cells, labels(4), 1));
    auto v4 = violation(validate_metric(cells, labels(4), 4));
    CHECK(v1.indices == v4.indices);
}

TEST_CASE("a single point is a valid metric space") {
    auto r = validate_metric(mat({{"0"}}), {"only"});
    CHECK(std::holds_alternative<FiniteMetricSpace>(r));
}

TEST_CASE("require_valid throws on violations") {
    CHECK_THROWS_AS(require_valid(mat({{"0", "0"}, {"0", "0"}}), labels(2)), std::logic_error);
}

TEST_CASE("tie breaking finds every collision, sorted") {
    CHECK(check_tie_breaking(fixtures::path3()).holds);
    CHECK(check_tie_breaking(fixtures::star4()).holds);

    auto tb = check_tie_breaking(fixtures::cycle4());
    CHECK_FALSE(tb.holds);
    // four sides of length 1 give six collisions, the two diagonals one more
    REQUIRE(tb.colliding_pairs.size() == 7);
    CHECK(tb.colliding_pairs.front() == std::pair{PointPair{0, 1}, PointPair{0, 3}});
    CHECK(tb.colliding_pairs.back() == std::pair{PointPair{1, 2}, PointPair{2, 3}});
    CHECK(std::is_sorted(tb.colliding_pairs.begin(), tb.colliding_pairs.end()));
}

TEST_CASE("tie breaking compares values, not tokens") {
    // 1/2 written two ways still collides
    auto m = fixtures::space_from({{"0", "0.5", "1"}, {"1/2", "0", "2/4"}, {"1", "2/4", "0"}});
    auto tb = check_tie_breaking(m);
    CHECK_FALSE(tb.holds);
    REQUIRE(tb.colliding_pairs.size() == 1);
    CHECK(tb.colliding_pairs[0] == std::pair{PointPair{0, 1}, PointPair{1, 2}});
}

TEST_CASE("metric interval lists the points between two others") {
    auto m = fixtures::path3();
    CHECK(metric_interval(m, 0, 2) == PointSet{0, 1, 2});
    CHECK(metric_interval(m, 0, 1) == PointSet{0, 1});
    CHECK(metric_interval(m, 2, 0) == PointSet{0, 1, 2});
    CHECK_THROWS_AS(metric_interval(m, 1, 1), std::invalid_argument);

    auto k3 = fixtures::uniform_k3();
    CHECK(metric_interval(k3, 0, 1) == PointSet{0, 1});
}

TEST_CASE("scaled view clears denominators") {
    auto m = fixtures::space_from({{"0", "1/2", "5/6"}, {"1/2", "0", "1/3"}, {"5/6", "1/3", "0"}});
    const auto& s = m.scaled();
    CHECK(s.scale == 6);
    CHECK(s.big(0, 1) == 3);
    CHECK(s.big(0, 2) == 5);
    CHECK(s.big(1, 2) == 2);
    REQUIRE(s.small.has_value());
    CHECK((*s.small)(0, 2) == 5);
}

TEST_CASE("int64 view disappears past the headroom limit") {
    CHECK(fixtures::path3().scaled().small.has_value());
    // 2^59 is the cutoff; 10^18 is above it
    auto big = fixtures::space_from(
        {{"0", "1000000000000000000", "1000000000000000001"},
         {"1000000000000000000", "0", "1000000000000000002"},
         {"1000000000000000001", "1000000000000000002", "0"}});
    CHECK_FALSE(big.scaled().small.has_value());
    CHECK(big.scaled().big(0, 1) == BigInt("1000000000000000000"));
    // with_ints still works through the big view
    auto diag = with_ints(big, [](const auto& s) { return to_bigint(s(0, 0)); });
    CHECK(diag == 0);
}

TEST_CASE("rescaling multiplies every distance and revalidates") {
    auto m = fixtures::path3().rescaled(Rational(7, 3));
    CHECK(m.d(0, 1) == Rational(7, 3));
    CHECK(m.d(0, 2) == 7);
    CHECK(m.labels() == std::vector<std::string>{"a", "b", "c"});
    CHECK(m.scaled().scale == 3);
    CHECK_THROWS_AS(fixtures::path3().rescaled(Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(fixtures::path3().rescaled(Rational(-1)), std::invalid_argument);
}
