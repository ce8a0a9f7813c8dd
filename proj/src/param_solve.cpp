#include "calogero/param_solve.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace calogero {

namespace {

using Row = std::vector<NuPoly>;

bool row_is_zero(const Row& r) {
    for (const auto& p : r)
        if (!p.is_zero())
            return false;
    return true;
}

void strip_content(Row& row, std::size_t k) {
    NuPoly::Exponent common;
    bool any = false;
    for (const auto& p : row) {
        if (p.is_zero())
            continue;
        auto m = p.min_exponent();
        if (!any) {
            common = m;
            any = true;
        } else {
            for (std::size_t i = 0; i < k; ++i)
                common[i] = std::min(common[i], m[i]);
        }
    }
    if (!any)
        return;
    bool trivial = std::all_of(common.begin(), common.end(), [](auto e) { return e == 0; });
    Scalar lead;
    bool have_lead = false;
    for (auto& p : row) {
        if (p.is_zero())
            continue;
        if (!trivial)
            p = p.divide_monomial(common);
        if (!have_lead) {
            lead = p.terms().begin()->second;
            have_lead = true;
        }
    }
    Scalar inv = lead.inverse();
    for (auto& p : row)
        p *= inv;
}

}  // namespace

ParamSolution parametric_solve(const ParamSystem& system, std::span<const std::size_t> column_order) {
    const std::size_t n = system.unknowns;
    std::vector<std::size_t> order;
    if (column_order.empty()) {
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
    } else {
        order.assign(column_order.begin(), column_order.end());
        std::vector<bool> seen(n, false);
        for (auto c : order) {
            if (c >= n || seen[c])
                throw std::invalid_argument("column_order is not a permutation of the unknowns");
            seen[c] = true;
        }
        if (order.size() != n)
            throw std::invalid_argument("column_order is not a permutation of the unknowns");
    }

    std::vector<Row> rows;
    for (const auto& r : system.rows) {
        if (r.size() != n)
            throw DimensionError("system row has wrong number of entries");
        if (!row_is_zero(r))
            rows.push_back(r);
    }

    std::vector<bool> used(rows.size(), false);
    std::vector<std::pair<std::size_t, std::size_t>> pivot_rows;  // (column, row)

    for (std::size_t c : order) {
        std::size_t best = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (used[i] || rows[i][c].is_zero())
                continue;
            if (rows[i][c].is_constant()) {
                best = i;
                break;
            }
            if (best == rows.size() ||
                std::tuple(rows[i][c].num_terms(), rows[i][c].total_degree()) <
                    std::tuple(rows[best][c].num_terms(), rows[best][c].total_degree()))
                best = i;
        }
        if (best == rows.size())
            continue;
        used[best] = true;
        pivot_rows.emplace_back(c, best);
        Row& prow = rows[best];
        const bool unit = prow[c].is_constant();
        if (unit) {
            Scalar inv = prow[c].constant_term().inverse();
            for (auto& p : prow)
                p *= inv;
        }
        const NuPoly pivot = prow[c];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == best || rows[i][c].is_zero())
                continue;
            const NuPoly factor = rows[i][c];
            Row& row = rows[i];
            if (unit) {
                for (std::size_t j = 0; j < n; ++j)
                    if (!prow[j].is_zero())
                        row[j] -= factor * prow[j];
            } else {
                for (std::size_t j = 0; j < n; ++j) {
                    NuPoly v = pivot * row[j];
                    if (!prow[j].is_zero())
                        v -= factor * prow[j];
                    row[j] = std::move(v);
                }
                strip_content(row, system.k);
            }
        }
    }

    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!used[i] && !row_is_zero(rows[i]))
            throw InternalConsistencyError("parametric_solve: residual row after elimination");

    ParamSolution sol;
    sol.unknowns = n;
    sol.rank = pivot_rows.size();
    std::vector<bool> is_pivot(n, false);
    for (auto [c, r] : pivot_rows) {
        is_pivot[c] = true;
        sol.pivots.push_back(c);
    }
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j])
            sol.free.push_back(j);

    const NuPoly one = NuPoly::constant(system.k, Scalar::one(system.field));
    const NuPoly zero(system.k, system.field);
    sol.expressions.assign(n, SolvedExpression{one, std::vector<NuPoly>(sol.free.size(), zero)});
    for (std::size_t f = 0; f < sol.free.size(); ++f)
        sol.expressions[sol.free[f]].numerators[f] = one;
    for (auto [c, r] : pivot_rows) {
        SolvedExpression& e = sol.expressions[c];
        e.denominator = rows[r][c];
        for (std::size_t f = 0; f < sol.free.size(); ++f)
            e.numerators[f] = -rows[r][sol.free[f]];
    }
    return sol;
}

bool back_substitutes(const ParamSystem& system, const ParamSolution& solution) {
    const std::size_t n = system.unknowns;
    if (solution.expressions.size() != n)
        return false;
    std::vector<NuPoly> dens;
    std::vector<std::size_t> den_of(n);
    for (std::size_t j = 0; j < n; ++j) {
        const NuPoly& d = solution.expressions[j].denominator;
        if (d.is_zero())
            return false;
        std::size_t idx = dens.size();
        for (std::size_t i = 0; i < dens.size(); ++i)
            if (dens[i] == d) {
                idx = i;
                break;
            }
        if (idx == dens.size())
            dens.push_back(d);
        den_of[j] = idx;
    }
    std::vector<NuPoly> cofactor(dens.size(), NuPoly::constant(system.k, Scalar::one(system.field)));
    for (std::size_t i = 0; i < dens.size(); ++i)
        for (std::size_t o = 0; o < dens.size(); ++o)
            if (o != i)
                cofactor[i] *= dens[o];

    for (const auto& row : system.rows) {
        for (std::size_t f = 0; f < solution.free.size(); ++f) {
            NuPoly acc(system.k, system.field);
            for (std::size_t j = 0; j < n; ++j) {
                if (row[j].is_zero())
                    continue;
                const NuPoly& num = solution.expressions[j].numerators[f];
                if (num.is_zero())
                    continue;
                acc += row[j] * num * cofactor[den_of[j]];
            }
            if (!acc.is_zero())
                return false;
        }
    }
    return true;
}

Matrix evaluate_system(const ParamSystem& system, std::span<const Rational> point) {
    Matrix m(system.rows.size(), system.unknowns, system.field);
    for (std::size_t i = 0; i < system.rows.size(); ++i)
        for (std::size_t j = 0; j < system.unknowns; ++j)
            m(i, j) = system.rows[i][j].eval(point);
    return m;
}

bool denominators_vanish(const ParamSolution& solution, std::span<const Rational> point) {
    for (const auto& e : solution.expressions)
        if (e.denominator.eval(point).is_zero())
            return true;
    return false;
}

}  // namespace calogero
