#include "calogero/coxgroup.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

namespace calogero {

std::optional<std::size_t> Group::find(const Matrix& m) const {
    auto it = lookup_.find(m.key());
    if (it == lookup_.end())
        return std::nullopt;
    return it->second;
}

std::size_t Group::index_of(const Matrix& m) const {
    auto idx = find(m);
    if (!idx)
        throw InternalConsistencyError("matrix is not an element of the enumerated group");
    return *idx;
}

std::size_t Group::multiply(std::size_t a, std::size_t b) const {
    return index_of(matrix(a) * matrix(b));
}

Group enumerate_group(const RootSystem& rs, std::size_t cap) {
    Group g;
    g.dim_ = rs.dimension;
    g.field_ = rs.field;
    g.gram_ = rs.gram;

    auto insert = [&](Matrix m) -> std::pair<std::size_t, bool> {
        GroupElement e(std::move(m));
        auto [it, fresh] = g.lookup_.try_emplace(e.key(), g.elements_.size());
        if (fresh) {
            if (g.elements_.size() >= cap)
                throw GroupOverflow(rs.name + ": group closure exceeds " + std::to_string(cap) + " elements");
            g.elements_.push_back(std::move(e));
        }
        return {it->second, fresh};
    };

    insert(Matrix::identity(rs.dimension, rs.field));

    // one generator per distinct reflection, in order of first root
    std::vector<Matrix> gens;
    std::unordered_map<std::string, std::size_t> gen_slot;
    g.generator_slot_.resize(rs.size());
    for (std::size_t r = 0; r < rs.size(); ++r) {
        const Matrix& m = reflection_matrix(rs, r);
        auto [it, fresh] = gen_slot.try_emplace(m.key(), gens.size());
        if (fresh) {
            gens.push_back(m);
            g.generator_roots_.push_back(r);
        }
        g.generator_slot_[r] = it->second;
    }

    g.left_.assign(gens.size(), {});
    for (std::size_t h = 0; h < g.elements_.size(); ++h) {
        for (std::size_t s = 0; s < gens.size(); ++s) {
            auto [idx, fresh] = insert(gens[s] * g.elements_[h].matrix());
            (void)fresh;
            if (g.left_[s].size() <= h)
                g.left_[s].resize(h + 1);
            g.left_[s][h] = idx;
        }
    }

    std::vector<std::size_t> gen_elem(gens.size());
    for (std::size_t s = 0; s < gens.size(); ++s)
        gen_elem[s] = g.left_[s][0];
    g.root_reflection_.resize(rs.size());
    for (std::size_t r = 0; r < rs.size(); ++r)
        g.root_reflection_[r] = gen_elem[g.generator_slot_[r]];
    g.generators_ = gen_elem;
    std::sort(g.generators_.begin(), g.generators_.end());

    // g^-1 = G^-1 g^T G
    Matrix gram_inv(rs.dimension, rs.dimension, rs.field);
    for (std::size_t j = 0; j < rs.dimension; ++j) {
        Vector col = solve(rs.gram, Vector::unit(rs.dimension, j, rs.field));
        for (std::size_t i = 0; i < rs.dimension; ++i)
            gram_inv(i, j) = col[i];
    }
    g.inverse_.resize(g.size());
    g.grading_.resize(g.size());
    for (std::size_t h = 0; h < g.size(); ++h) {
        const Matrix& m = g.matrix(h);
        g.inverse_[h] = g.index_of(gram_inv * m.transpose() * rs.gram);
        g.grading_[h] = e_grading(m);
    }
    return g;
}

std::vector<ConjugacyClass> conjugacy_classes(const Group& group) {
    const std::size_t n = group.size();
    constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
    std::vector<std::size_t> orbit_of(n, unassigned);
    std::vector<ConjugacyClass> classes;

    const auto& slots = group.generator_roots();

    for (std::size_t start = 0; start < n; ++start) {
        if (orbit_of[start] != unassigned)
            continue;
        ConjugacyClass c;
        c.representative = start;
        std::deque<std::size_t> queue{start};
        orbit_of[start] = classes.size();
        while (!queue.empty()) {
            std::size_t x = queue.front();
            queue.pop_front();
            c.members.push_back(x);
            for (std::size_t r : slots) {
                // s x s = s * (s * x^-1)^-1
                std::size_t xs = group.inverse(group.reflect_left(r, group.inverse(x)));
                std::size_t y = group.reflect_left(r, xs);
                if (orbit_of[y] == unassigned) {
                    orbit_of[y] = classes.size();
                    queue.push_back(y);
                }
            }
        }
        std::sort(c.members.begin(), c.members.end());
        c.e = group.grading(start);
        c.det = determinant(group.matrix(start)).sign();
        classes.push_back(std::move(c));
    }

    std::sort(classes.begin(), classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
        return std::tuple(a.e, a.size(), a.representative) < std::tuple(b.e, b.size(), b.representative);
    });
    for (std::size_t i = 0; i < classes.size(); ++i)
        classes[i].id = i;
    return classes;
}

std::vector<std::size_t> class_lookup(const Group& group, const std::vector<ConjugacyClass>& classes) {
    std::vector<std::size_t> out(group.size(), 0);
    for (const auto& c : classes)
        for (auto m : c.members)
            out[m] = c.id;
    return out;
}

std::size_t e_grading(const Matrix& g) {
    return g.rows() - mat_rank(g + Matrix::identity(g.rows(), g.field()));
}

std::vector<Vector> minus_one_eigenspace(const Matrix& g) {
    return nullspace_basis(g + Matrix::identity(g.rows(), g.field()));
}

bool preserves_form(const Matrix& g, const Matrix& gram) {
    return g.transpose() * gram * g == gram;
}

}  // namespace calogero
