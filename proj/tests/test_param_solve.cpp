#include "calogero/param_solve.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace calogero;

namespace {

NuPoly nu(std::size_t i, std::size_t k = 1) { return NuPoly::variable(k, i, 0); }
NuPoly c(long v, std::size_t k = 1) { return NuPoly::constant(k, v, 0); }

ParamSystem system_of(std::size_t k, std::size_t unknowns, std::vector<std::vector<NuPoly>> rows) {
    ParamSystem s;
    s.k = k;
    s.field = 0;
    s.unknowns = unknowns;
    s.rows = std::move(rows);
    return s;
}

}  // namespace

TEST_CASE("single row: t2 + 2 nu1 t1 = 0") {
    const auto sys = system_of(1, 2, {{c(2) * nu(1), c(1)}});
    const ParamSolution sol = parametric_solve(sys);
    CHECK(sol.rank == 1);
    // the only entry of column 0 is the pivot: t1 = -t2 / (2 nu1)
    CHECK(sol.free == std::vector<std::size_t>{1});
    const auto& e = sol.expressions[0];
    CHECK(e.numerators[0] * c(-2) * nu(1) == e.denominator);
    CHECK(back_substitutes(sys, sol));
}

TEST_CASE("empty system leaves everything free") {
    const auto sys = system_of(1, 3, {});
    const ParamSolution sol = parametric_solve(sys);
    CHECK(sol.rank == 0);
    CHECK(sol.dimension() == 3);
    CHECK(sol.free == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("dependent rows") {
    const auto sys = system_of(1, 2, {{c(1), c(0)}, {nu(1), c(0)}});
    const ParamSolution sol = parametric_solve(sys);
    CHECK(sol.rank == 1);
    CHECK(sol.free == std::vector<std::size_t>{1});
    CHECK(back_substitutes(sys, sol));
}

TEST_CASE("column order steers the free set") {
    const auto sys = system_of(1, 2, {{c(1), nu(1)}});
    const std::vector<std::size_t> order{1, 0};
    const ParamSolution sol = parametric_solve(sys, order);
    CHECK(sol.free == std::vector<std::size_t>{0});
    CHECK(back_substitutes(sys, sol));
    CHECK_THROWS_AS(parametric_solve(sys, std::vector<std::size_t>{0, 0}), std::invalid_argument);
}

TEST_CASE("non-constant pivots and rank drops at special points") {
    // nu1 t1 + t2 = 0, t1 + nu1 t2 = 0: generic rank 2, rank 1 at nu1 = +-1
    const auto sys = system_of(1, 2, {{nu(1), c(1)}, {c(1), nu(1)}});
    const ParamSolution sol = parametric_solve(sys);
    CHECK(sol.rank == 2);
    CHECK(mat_rank(evaluate_system(sys, std::vector<Rational>{1})) == 1);
    CHECK(mat_rank(evaluate_system(sys, std::vector<Rational>{2})) == 2);
}

TEST_CASE("random parametric systems: back substitution and rank consistency") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> small(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t k = 2, n = 5;
        // rows are combinations of two random generator rows, so rank <= 2 generically
        auto random_entry = [&] {
            NuPoly p = c(small(rng), k) + c(small(rng), k) * nu(1, k) + c(small(rng), k) * nu(2, k);
            return p;
        };
        std::vector<std::vector<NuPoly>> gens(2, std::vector<NuPoly>(n));
        for (auto& g : gens)
            for (auto& e : g)
                e = random_entry();
        std::vector<std::vector<NuPoly>> rows;
        for (int r = 0; r < 4; ++r) {
            NuPoly a = random_entry(), b = random_entry();
            std::vector<NuPoly> row(n);
            for (std::size_t j = 0; j < n; ++j)
                row[j] = a * gens[0][j] + b * gens[1][j];
            rows.push_back(row);
        }
        const auto sys = system_of(k, n, rows);
        const ParamSolution sol = parametric_solve(sys);
        CHECK(sol.rank <= 2);
        CHECK(back_substitutes(sys, sol));
        int checked = 0;
        for (int p = 0; p < 20 && checked < 5; ++p) {
            std::vector<Rational> pt{oracle::random_rational(rng, 50, 13), oracle::random_rational(rng, 50, 13)};
            if (denominators_vanish(sol, pt))
                continue;
            CHECK(mat_rank(evaluate_system(sys, pt)) == sol.rank);
            ++checked;
        }
        CHECK(checked == 5);
    }
}
