#include "calogero/glc.hpp"

#include <algorithm>
#include <random>

namespace calogero {

void GroupAlgElem::add(std::size_t element, const NuPoly& c) {
    if (c.is_zero())
        return;
    auto [it, fresh] = terms.try_emplace(element, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            terms.erase(it);
    }
}

GroupAlgElem commutator_image(const RootSystem& rs, const Group& group, const Vector& c1, const Vector& c2) {
    GroupAlgElem out{rs.k, rs.field, {}};
    out.add(group.identity(), NuPoly::constant(rs.k, rs.inner(c1, c2)));
    for (std::size_t r = 0; r < rs.size(); ++r) {
        const Vector& v = rs.roots[r];
        Scalar a = rs.inner(c1, v);
        if (a.is_zero())
            continue;
        Scalar b = rs.inner(c2, v);
        if (b.is_zero())
            continue;
        Scalar w = a * b / rs.inner(v, v);
        out.add(group.reflection_of_root(r), NuPoly::variable(rs.k, rs.nu_class[r], rs.field) * w);
    }
    return out;
}

GroupAlgElem project_away_identity(const GroupAlgElem& x, std::size_t identity) {
    GroupAlgElem out = x;
    out.terms.erase(identity);
    return out;
}

GLCSystem empty_glc_system(const RootSystem& rs, const std::vector<ConjugacyClass>& classes) {
    GLCSystem sys;
    sys.system.k = rs.k;
    sys.system.field = rs.field;
    sys.system.unknowns = classes.size();
    for (const auto& c : classes)
        sys.class_e.push_back(c.e);
    return sys;
}

void append_glc_rows(GLCSystem& sys, const RootSystem& rs, const Group& group,
                     const std::vector<std::size_t>& class_of, std::size_t class_id, std::size_t g,
                     const std::vector<Vector>& basis) {
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j) {
            GroupAlgElem img = commutator_image(rs, group, basis[i], basis[j]);
            auto row = sys.system.zero_row();
            for (const auto& [h, coef] : img.terms) {
                std::size_t hg = group.multiply(h, g);
                row[class_of.at(hg)] += coef;
            }
            sys.system.rows.push_back(std::move(row));
            sys.provenance.push_back({class_id, g, i, j});
        }
}

GLCSystem build_glc_system(const RootSystem& rs, const Group& group, const std::vector<ConjugacyClass>& classes) {
    GLCSystem sys = empty_glc_system(rs, classes);
    const auto class_of = class_lookup(group, classes);
    for (const auto& c : classes) {
        if (c.e == 0)
            continue;
        const std::size_t g = c.representative;
        append_glc_rows(sys, rs, group, class_of, c.id, g, minus_one_eigenspace(group.matrix(g)));
    }
    return sys;
}

std::size_t count_supertraces(const std::vector<ConjugacyClass>& classes) {
    return static_cast<std::size_t>(
        std::count_if(classes.begin(), classes.end(), [](const ConjugacyClass& c) { return c.e == 0; }));
}

SupertraceSolution solve_glc(const GLCSystem& glc) {
    const std::size_t n = glc.system.unknowns;
    std::vector<std::size_t> order(n);
    for (std::size_t j = 0; j < n; ++j)
        order[j] = j;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return glc.class_e[a] > glc.class_e[b]; });

    SupertraceSolution out;
    out.raw = parametric_solve(glc.system, order);
    out.generic_rank = out.raw.rank;
    out.q = out.raw.dimension();
    out.free_classes = out.raw.free;
    out.table = out.raw.expressions;

    std::vector<std::size_t> e0;
    for (std::size_t j = 0; j < n; ++j)
        if (glc.class_e[j] == 0)
            e0.push_back(j);
    if (out.q != e0.size())
        throw Theorem5Violation("generic solution dimension " + std::to_string(out.q) +
                                " differs from the number of classes without eigenvalue -1 (" +
                                std::to_string(e0.size()) + ")");
    if (out.free_classes != e0)
        throw Theorem5Violation("the E = 0 classes do not parametrize the solution space");
    return out;
}

std::vector<SupertraceValue> supertrace_table(const SupertraceSolution& solution,
                                              const std::map<std::size_t, Rational>& free_values) {
    std::vector<Scalar> vals;
    for (auto f : solution.free_classes) {
        auto it = free_values.find(f);
        if (it == free_values.end())
            throw std::invalid_argument("missing value for free class " + std::to_string(f));
        vals.push_back(Scalar(it->second, solution.raw.expressions.empty()
                                              ? 0
                                              : solution.raw.expressions[0].denominator.field()));
    }
    for (const auto& [cls, v] : free_values)
        if (std::find(solution.free_classes.begin(), solution.free_classes.end(), cls) ==
            solution.free_classes.end())
            throw std::invalid_argument("class " + std::to_string(cls) + " is not a free class");

    std::vector<SupertraceValue> out;
    for (const auto& e : solution.table) {
        SupertraceValue sv{NuPoly(e.denominator.arity(), e.denominator.field()), e.denominator};
        for (std::size_t f = 0; f < vals.size(); ++f)
            sv.numerator.add_scaled(e.numerators[f], vals[f]);
        out.push_back(std::move(sv));
    }
    return out;
}

std::optional<NuPoly> SupertraceValue::as_polynomial() const {
    if (!denominator.is_constant() || denominator.is_zero())
        return std::nullopt;
    return numerator * denominator.constant_term().inverse();
}

std::string SupertraceValue::to_string() const {
    if (auto p = as_polynomial())
        return p->to_string();
    return "(" + numerator.to_string() + ")/(" + denominator.to_string() + ")";
}

std::string class_label(const RootSystem& rs, const Group& group, const std::vector<ConjugacyClass>& classes,
                        std::size_t id) {
    const ConjugacyClass& c = classes.at(id);
    if (c.representative == group.identity())
        return "1";
    std::size_t reflection_classes = 0;
    for (auto nu : rs.nu_class)
        reflection_classes = std::max(reflection_classes, nu);
    for (std::size_t r = 0; r < rs.size(); ++r) {
        if (std::binary_search(c.members.begin(), c.members.end(), group.reflection_of_root(r)))
            return reflection_classes == 1 ? "sigma" : "sigma" + std::to_string(rs.nu_class[r]);
    }
    return "C" + std::to_string(id);
}

PointRank rank_at(const GLCSystem& system, const SupertraceSolution& solution, std::vector<Rational> point) {
    PointRank pr;
    pr.rank = mat_rank(evaluate_system(system.system, point));
    pr.dimension = system.system.unknowns - pr.rank;
    pr.denominator_zero = denominators_vanish(solution.raw, point);
    pr.point = std::move(point);
    return pr;
}

std::vector<std::vector<Rational>> random_points(std::size_t k, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-60, 60);
    std::uniform_int_distribution<long> den(1, 17);
    std::vector<std::vector<Rational>> out;
    for (std::size_t c = 0; c < count; ++c) {
        std::vector<Rational> p;
        for (std::size_t i = 0; i < k; ++i) {
            Rational q(num(rng), den(rng));
            q.canonicalize();
            p.push_back(q);
        }
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace calogero
