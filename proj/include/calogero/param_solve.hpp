#pragma once

#include "calogero/linalg.hpp"
#include "calogero/nupoly.hpp"

#include <span>
#include <vector>

namespace calogero {

/// Homogeneous system A(nu) t = 0: each row holds one NuPoly per unknown.
struct ParamSystem {
    std::size_t k = 0;
    int field = 0;
    std::size_t unknowns = 0;
    std::vector<std::vector<NuPoly>> rows;

    std::vector<NuPoly> zero_row() const { return std::vector<NuPoly>(unknowns, NuPoly(k, field)); }
};

/// t_j = sum_f numerators[f] * t_{free[f]} / denominator.
struct SolvedExpression {
    NuPoly denominator;
    std::vector<NuPoly> numerators;
};

/// Generic solution space of a ParamSystem over the field of rational
/// functions in nu.
struct ParamSolution {
    std::size_t unknowns = 0;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // unknowns solved for, in pivot order
    std::vector<std::size_t> free;    // unknowns left as parameters, ascending
    std::vector<SolvedExpression> expressions;  // one per unknown

    std::size_t dimension() const { return free.size(); }
};

/// Gauss-Jordan elimination with nu kept symbolic. Columns are visited in
/// `column_order` (default 0..n-1); within a column the first row whose entry
/// is a nonzero constant is the pivot, otherwise the sparsest lowest-degree
/// entry (ties by row index). Constant pivots divide out exactly; others are
/// cross-multiplied and the row's monomial and scalar content is stripped.
ParamSolution parametric_solve(const ParamSystem& system, std::span<const std::size_t> column_order = {});

/// Whether A(nu) t(nu) vanishes identically for every free parameter after
/// clearing denominators.
bool back_substitutes(const ParamSystem& system, const ParamSolution& solution);

/// A(point) as an exact matrix (rows x unknowns).
Matrix evaluate_system(const ParamSystem& system, std::span<const Rational> point);

/// Whether some solution denominator vanishes at `point`.
bool denominators_vanish(const ParamSolution& solution, std::span<const Rational> point);

}  // namespace calogero
