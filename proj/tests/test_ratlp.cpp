#include "doctest.h"

#include <random>

#include "tangledec/ratlp.hpp"

using namespace tangledec;

namespace {

RatMatrix mat(const std::vector<std::vector<int>>& rows) {
    std::vector<RatVec> converted;
    for (const auto& row : rows) {
        RatVec r;
        for (int v : row) {
            r.emplace_back(v);
        }
        converted.push_back(std::move(r));
    }
    return RatMatrix::from_rows(converted);
}

RatVec vec(const std::vector<int>& values) {
    RatVec v;
    for (int x : values) {
        v.emplace_back(x);
    }
    return v;
}

RatMatrix random_skew(std::mt19937& rng, int n, int bound = 100) {
    RatMatrix k(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            long long num = static_cast<long long>(rng() % (2 * bound + 1)) - bound;
            long long den = static_cast<long long>(rng() % bound) + 1;
            Rational r(num, den);
            k(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = r;
            k(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = -r;
        }
    }
    return k;
}

void check_tucker_conditions(const RatMatrix& k, const RatVec& x) {
    REQUIRE(x.size() == k.rows());
    RatVec kx = mat_vec(k, x);
    for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(x[i] >= 0);
        CHECK(kx[i] >= 0);
        CHECK(x[i] + kx[i] > 0);
    }
}

} // namespace

TEST_CASE("rational strings are canonical p/q") {
    CHECK(rational_to_string(Rational(1, 2)) == "1/2");
    CHECK(rational_to_string(Rational(2, 4)) == "1/2");
    CHECK(rational_to_string(Rational(-3, 6)) == "-1/2");
    CHECK(rational_to_string(Rational(5)) == "5/1");
    CHECK(rational_from_string("7/3") == Rational(7, 3));
    CHECK(rational_from_string("-4") == Rational(-4));
    CHECK(denominator(rational_from_string("10/4")) == 2);
    CHECK_THROWS_AS(rational_from_string("1/0"), MalformedInput);
    CHECK_THROWS_AS(rational_from_string("pi"), MalformedInput);
}

TEST_CASE("lp_feasible on the documented instances") {
    auto trivially = lp_feasible(mat({{1}}), vec({0}));
    REQUIRE(trivially.feasible);
    CHECK(trivially.x == vec({0}));

    auto impossible = lp_feasible(mat({{-1}}), vec({1}));
    REQUIRE(!impossible.feasible);
    REQUIRE(impossible.farkas_y.size() == 1);
    CHECK(impossible.farkas_y[0] > 0);

    RatMatrix a = mat({{0, 1}, {-1, 0}, {0, 1}});
    auto rotation = lp_feasible(a, vec({0, 0, 1}));
    REQUIRE(rotation.feasible);
    RatVec ax = mat_vec(a, rotation.x);
    CHECK(ax[0] >= 0);
    CHECK(ax[1] >= 0);
    CHECK(ax[2] >= 1);
}

TEST_CASE("lp_feasible detects an inconsistent pair of rows") {
    auto res = lp_feasible(mat({{-1, 0}, {1, 0}}), vec({0, 1}));
    REQUIRE(!res.feasible);
    // y >= 0, y^T A <= 0, y^T b > 0, re-checked here as the oracle.
    const RatMatrix a = mat({{-1, 0}, {1, 0}});
    Rational yb = res.farkas_y[0] * 0 + res.farkas_y[1] * 1;
    CHECK(yb > 0);
    for (std::size_t j = 0; j < 2; ++j) {
        Rational col = res.farkas_y[0] * a(0, j) + res.farkas_y[1] * a(1, j);
        CHECK(col <= 0);
    }
}

TEST_CASE("lp_feasible survives degenerate instances") {
    // Equality disguised as two inequalities plus a binding sum.
    auto eq = lp_feasible(mat({{1, -1}, {-1, 1}, {1, 1}}), vec({0, 0, 1}));
    REQUIRE(eq.feasible);
    CHECK(eq.x[0] == eq.x[1]);
    CHECK(eq.x[0] + eq.x[1] >= 1);

    // Fully redundant rows force repeated degenerate pivots.
    auto redundant = lp_feasible(mat({{1, 0}, {1, 0}, {1, 0}, {-1, 0}}), vec({0, 0, 0, 0}));
    REQUIRE(redundant.feasible);
    CHECK(redundant.x[0] == 0);

    auto empty = lp_feasible(RatMatrix(0, 3), RatVec{});
    REQUIRE(empty.feasible);
    CHECK(empty.x == vec({0, 0, 0}));
}

TEST_CASE("lp_feasible rejects mismatched dimensions") {
    CHECK_THROWS_AS(lp_feasible(mat({{1, 2}}), vec({1, 2})), MalformedInput);
}

TEST_CASE("lp_feasible is sound on random mixed instances") {
    std::mt19937 rng(2024);
    for (int iter = 0; iter < 200; ++iter) {
        int m = 1 + static_cast<int>(rng() % 6);
        int n = 1 + static_cast<int>(rng() % 4);
        RatMatrix a(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
        RatVec b(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) {
                a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                    Rational(static_cast<long long>(rng() % 11) - 5);
            }
            b[static_cast<std::size_t>(i)] = Rational(static_cast<long long>(rng() % 10) - 3);
        }
        auto res = lp_feasible(a, b);
        if (res.feasible) {
            RatVec ax = mat_vec(a, res.x);
            for (int i = 0; i < m; ++i) {
                CHECK(ax[static_cast<std::size_t>(i)] >= b[static_cast<std::size_t>(i)]);
            }
            for (const Rational& v : res.x) {
                CHECK(v >= 0);
            }
        } else {
            Rational yb = 0;
            for (int i = 0; i < m; ++i) {
                CHECK(res.farkas_y[static_cast<std::size_t>(i)] >= 0);
                yb += res.farkas_y[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)];
            }
            CHECK(yb > 0);
            for (int j = 0; j < n; ++j) {
                Rational col = 0;
                for (int i = 0; i < m; ++i) {
                    col += res.farkas_y[static_cast<std::size_t>(i)] *
                           a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
                }
                CHECK(col <= 0);
            }
        }
    }
}

TEST_CASE("tucker_solve on the documented instances") {
    auto one = tucker_solve(mat({{0}}));
    REQUIRE(one.x.size() == 1);
    CHECK(one.x[0] > 0);
    check_tucker_conditions(mat({{0}}), one.x);

    RatMatrix rotation = mat({{0, 1}, {-1, 0}});
    auto rot = tucker_solve(rotation);
    check_tucker_conditions(rotation, rot.x);
}

TEST_CASE("tucker_solve rejects non-skew matrices") {
    CHECK_THROWS_AS(tucker_solve(mat({{1}})), MalformedInput);
    CHECK_THROWS_AS(tucker_solve(mat({{0, 1}, {1, 0}})), MalformedInput);
    CHECK_THROWS_AS(tucker_solve(RatMatrix(2, 3)), MalformedInput);
}

TEST_CASE("tucker_solve on seeded random skew matrices") {
    std::mt19937 rng(777);
    for (int iter = 0; iter < 50; ++iter) {
        int n = 1 + static_cast<int>(rng() % 8);
        RatMatrix k = random_skew(rng, n);
        auto sol = tucker_solve(k);
        check_tucker_conditions(k, sol.x);
        CHECK(sol.x == tucker_solve_serial(k).x);
    }
}

TEST_CASE("summed per-coordinate solutions keep every margin at least one") {
    std::mt19937 rng(31);
    for (int iter = 0; iter < 20; ++iter) {
        int n = 1 + static_cast<int>(rng() % 6);
        RatMatrix k = random_skew(rng, n);
        RatVec total(static_cast<std::size_t>(n), Rational(0));
        for (int i = 0; i < n; ++i) {
            RatMatrix a(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n));
            for (int r = 0; r < n; ++r) {
                for (int c = 0; c < n; ++c) {
                    a(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                        k(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
                }
            }
            for (int c = 0; c < n; ++c) {
                a(static_cast<std::size_t>(n), static_cast<std::size_t>(c)) =
                    k(static_cast<std::size_t>(i), static_cast<std::size_t>(c));
            }
            a(static_cast<std::size_t>(n), static_cast<std::size_t>(i)) += 1;
            RatVec b(static_cast<std::size_t>(n) + 1, Rational(0));
            b[static_cast<std::size_t>(n)] = 1;
            auto res = lp_feasible(a, b);
            REQUIRE(res.feasible);
            for (int c = 0; c < n; ++c) {
                total[static_cast<std::size_t>(c)] += res.x[static_cast<std::size_t>(c)];
            }
        }
        RatVec kx = mat_vec(k, total);
        for (int i = 0; i < n; ++i) {
            CHECK(total[static_cast<std::size_t>(i)] + kx[static_cast<std::size_t>(i)] >= 1);
        }
    }
}

TEST_CASE("scale_to_integers on the documented instances") {
    auto halves = scale_to_integers({Rational(1, 2), Rational(1, 3)});
    CHECK(halves == std::vector<Int>{3, 2});
    CHECK(scale_to_integers({Rational(0), Rational(0)}) == std::vector<Int>{0, 0});
    CHECK(scale_to_integers({Rational(2), Rational(5)}) == std::vector<Int>{2, 5});
    CHECK(scale_to_integers({}) == std::vector<Int>{});
    CHECK_THROWS_AS(scale_to_integers({Rational(-1, 2)}), MalformedInput);
}

TEST_CASE("scale_to_integers preserves signs of integer combinations") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 1 + static_cast<int>(rng() % 6);
        RatVec x;
        for (int i = 0; i < n; ++i) {
            x.emplace_back(static_cast<long long>(rng() % 20),
                           static_cast<long long>(rng() % 9) + 1);
        }
        auto scaled = scale_to_integers(x);
        for (int trial = 0; trial < 8; ++trial) {
            Rational lhs = 0;
            Int rhs = 0;
            for (int i = 0; i < n; ++i) {
                long long c = static_cast<long long>(rng() % 7) - 3;
                lhs += c * x[static_cast<std::size_t>(i)];
                rhs += c * scaled[static_cast<std::size_t>(i)];
            }
            CHECK((lhs > 0) == (rhs > 0));
            CHECK((lhs == 0) == (rhs == 0));
        }
    }
}
