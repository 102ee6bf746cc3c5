#include <doctest.h>

#include <cmath>

#include "ctaea/core.hpp"
#include "ctaea/problems.hpp"
#include "ctaea/rng.hpp"
#include "oracles.hpp"

using namespace ctaea;

namespace {

Solution sol(std::vector<double> f, double cv = 0.0) {
    Solution s;
    s.f = std::move(f);
    s.cv = cv;
    return s;
}

} // namespace

TEST_CASE("constraint violation examples") {
    CHECK(constraint_violation(std::vector{1.0, 2.0}, {}, {}) == 0.0);
    CHECK(constraint_violation(std::vector{-0.3, 0.5}, {}, {}) == doctest::Approx(0.3));
    CHECK(constraint_violation({}, std::vector{0.2}, std::vector{0.0001}) ==
          doctest::Approx(0.1999));
    CHECK(constraint_violation(std::vector{-0.1, -0.2}, std::vector{0.05},
                               std::vector{0.1}) == doctest::Approx(0.3));
    CHECK_THROWS_AS(constraint_violation({}, std::vector{0.1}, {}), ContractViolation);
}

TEST_CASE("constraint violation is monotone in inequality depth") {
    Rng rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<double> g(3), deeper(3);
        for (int j = 0; j < 3; ++j) {
            g[j] = rng.uniform(-1.0, 1.0);
            deeper[j] = g[j];
        }
        int j = static_cast<int>(rng.uniform_index(3));
        deeper[j] -= rng.uniform01();
        CHECK(constraint_violation(deeper, {}, {}) >= constraint_violation(g, {}, {}));
    }
}

TEST_CASE("dominance examples") {
    CHECK(dominates(std::vector{1.0, 2.0}, std::vector{2.0, 3.0}));
    CHECK_FALSE(dominates(std::vector{1.0, 2.0}, std::vector{2.0, 1.0}));
    CHECK_FALSE(dominates(std::vector{1.0, 2.0}, std::vector{1.0, 2.0}));
    CHECK(dominates(std::vector{1.0, 2.0}, std::vector{1.0, 3.0}));
    CHECK_THROWS_AS(dominates(std::vector{1.0}, std::vector{1.0, 2.0}), ContractViolation);
}

TEST_CASE("dominance antisymmetry and transitivity on random triples") {
    Rng rng(17);
    int premise_hits = 0;
    for (int trial = 0; trial < 20000; ++trial) {
        std::vector<double> a(3), b(3), c(3);
        for (int j = 0; j < 3; ++j)
            b[j] = rng.uniform(0.0, 2.0);
        if (trial % 2 == 0) {
            // engineered chain a <= b <= c so the premise actually fires
            for (int j = 0; j < 3; ++j) {
                a[j] = b[j] - rng.uniform01();
                c[j] = b[j] + rng.uniform01();
            }
        } else {
            for (int j = 0; j < 3; ++j) {
                a[j] = rng.uniform(0.0, 2.0);
                c[j] = rng.uniform(0.0, 2.0);
            }
        }
        CHECK_FALSE((dominates(a, b) && dominates(b, a)));
        if (dominates(a, b) && dominates(b, c)) {
            ++premise_hits;
            CHECK(dominates(a, c));
        }
    }
    CHECK(premise_hits > 5000);
}

TEST_CASE("nondominated filter examples") {
    std::vector<Solution> set = {sol({1, 2}), sol({2, 1}), sol({2, 2})};
    auto kept = nondominated_filter(set);
    REQUIRE(kept.size() == 2);
    CHECK(kept[0].f == std::vector<double>{1, 2});
    CHECK(kept[1].f == std::vector<double>{2, 1});

    std::vector<Solution> single = {sol({3, 3})};
    CHECK(nondominated_filter(single) == single);
}

TEST_CASE("nondominated filter matches the pairwise oracle") {
    Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t count = 2 + rng.uniform_index(49);
        std::vector<Solution> set;
        for (std::size_t i = 0; i < count; ++i)
            set.push_back(sol({rng.uniform01(), rng.uniform01()}));
        CHECK(nondominated_filter(set) == oracles::naive_nondominated(set));
    }
}

TEST_CASE("evaluate checks bounds and is deterministic") {
    ProblemSpec problem = make_ctp(6, 10);
    std::vector<double> x(10, 0.0);
    x[0] = 0.5;

    Solution a = evaluate(problem, x);
    Solution b = evaluate(problem, x);
    CHECK(a == b);

    // distance function at its optimum, feasibility decided by the angular
    // constraint (value frozen from an independent scripted evaluation)
    CHECK(a.f[0] == 0.5);
    CHECK(a.f[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(a.cv == doctest::Approx(32.00445713276677).epsilon(1e-12));

    x[0] = 1.5;
    CHECK_THROWS_AS(evaluate(problem, x), ContractViolation);
    CHECK_THROWS_AS(evaluate(problem, std::vector<double>(3, 0.0)), ContractViolation);
}

TEST_CASE("evaluate flags the dc1 band constraint") {
    ProblemSpec problem = make_problem("dc1_dtlz1");
    std::vector<double> x(problem.n, 0.5);
    x[0] = 1.0 / 3.0; // cos(3 pi x1) = -1 < -b
    Solution s = evaluate(problem, x);
    CHECK(s.cv > 0.0);
    CHECK(s.cv == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("problem validation rejects broken specs") {
    ProblemSpec p = make_ctp(2, 5);
    CHECK_NOTHROW(validate(p));
    ProblemSpec broken = p;
    broken.lower[0] = broken.upper[0];
    CHECK_THROWS_AS(validate(broken), ConfigError);
    broken = p;
    broken.evaluator = nullptr;
    CHECK_THROWS_AS(validate(broken), ConfigError);
}
