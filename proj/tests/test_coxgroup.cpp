#include "calogero/coxgroup.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <deque>
#include <map>
#include <set>
#include <unordered_set>

using namespace calogero;

namespace {

// Plain BFS over matrix products with string keys, right multiplication.
std::size_t closure_order(const RootSystem& rs) {
    std::unordered_set<std::string> seen;
    std::deque<Matrix> queue{Matrix::identity(rs.dimension, rs.field)};
    seen.insert(queue.front().key());
    while (!queue.empty()) {
        Matrix g = queue.front();
        queue.pop_front();
        for (const auto& s : rs.reflections) {
            Matrix h = g * s;
            if (seen.insert(h.key()).second)
                queue.push_back(std::move(h));
        }
    }
    return seen.size();
}

// Class partition by brute force h g h^-1 over all h.
std::set<std::set<std::size_t>> brute_classes(const Group& group) {
    std::set<std::set<std::size_t>> out;
    std::vector<bool> done(group.size(), false);
    for (std::size_t g = 0; g < group.size(); ++g) {
        if (done[g])
            continue;
        std::set<std::size_t> cls;
        for (std::size_t h = 0; h < group.size(); ++h) {
            Matrix c = group.matrix(h) * group.matrix(g) * group.matrix(group.inverse(h));
            std::size_t idx = group.index_of(c);
            cls.insert(idx);
            done[idx] = true;
        }
        out.insert(cls);
    }
    return out;
}

}  // namespace

TEST_CASE("group orders") {
    const std::map<std::string, std::size_t> orders{
        {"A1", 2},    {"A2", 6},      {"A3", 24},    {"A4", 120},   {"A5", 720},    {"B2", 8},
        {"B3", 48},   {"B4", 384},    {"D4", 192},   {"G2", 12},    {"F4", 1152},   {"I2(3)", 6},
        {"I2(4)", 8}, {"I2(5)", 10},  {"I2(6)", 12}, {"I2(8)", 16}, {"I2(12)", 24}, {"H3", 120}};
    for (const auto& spec : default_catalog()) {
        CAPTURE(spec.name());
        const RootSystem rs = build_root_system(spec);
        const Group g = enumerate_group(rs);
        CHECK(g.size() == orders.at(spec.name()));
        if (g.size() <= 200)
            CHECK(closure_order(rs) == g.size());
    }
}

TEST_CASE("overflow guard") {
    const RootSystem rs = build_root_system({Family::B, 3});
    CHECK_THROWS_AS(enumerate_group(rs, 20), GroupOverflow);
}

TEST_CASE("class examples") {
    auto classes_of = [](CatalogSpec spec) { return conjugacy_classes(enumerate_group(build_root_system(spec))); };
    auto sizes = [](const std::vector<ConjugacyClass>& cs) {
        std::multiset<std::size_t> s;
        for (const auto& c : cs)
            s.insert(c.size());
        return s;
    };
    const auto a1 = classes_of({Family::A, 1});
    CHECK(a1.size() == 2);
    CHECK(sizes(a1) == std::multiset<std::size_t>{1, 1});
    const auto a2 = classes_of({Family::A, 2});
    CHECK(a2.size() == 3);
    CHECK(sizes(a2) == std::multiset<std::size_t>{1, 3, 2});
    CHECK(classes_of({Family::B, 2}).size() == 5);
}

TEST_CASE("e_grading and eigenspace examples") {
    CHECK(e_grading(Matrix::identity(3, 0)) == 0);
    CHECK(e_grading(Matrix::of({{-1, 0}, {0, -1}})) == 2);
    CHECK(e_grading(Matrix::of({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})) == 1);

    CHECK(minus_one_eigenspace(Matrix::identity(2, 0)).empty());
    const auto swap = minus_one_eigenspace(Matrix::of({{0, 1}, {1, 0}}));
    CHECK(same_span(swap, std::vector<Vector>{Vector::of({1, -1})}));
    const auto minus = minus_one_eigenspace(Matrix::of({{-1, 0}, {0, -1}}));
    CHECK(minus.size() == 2);
}

TEST_CASE("group and class invariants over the catalog") {
    for (const auto& spec : default_catalog()) {
        CAPTURE(spec.name());
        const RootSystem rs = build_root_system(spec);
        const Group group = enumerate_group(rs);
        const auto classes = conjugacy_classes(group);

        CHECK(group.matrix(group.identity()) == Matrix::identity(rs.dimension, rs.field));
        std::size_t total = 0;
        for (const auto& c : classes) {
            total += c.size();
            CHECK(group.size() % c.size() == 0);
            for (auto m : c.members) {
                CHECK(group.grading(m) == c.e);
                CHECK(determinant(group.matrix(m)) == Scalar(c.det, rs.field));
            }
        }
        CHECK(total == group.size());
        for (std::size_t i = 1; i < classes.size(); ++i) {
            const auto& a = classes[i - 1];
            const auto& b = classes[i];
            CHECK(std::tuple(a.e, a.size(), a.representative) < std::tuple(b.e, b.size(), b.representative));
        }

        for (std::size_t g = 0; g < group.size(); ++g) {
            const Matrix& m = group.matrix(g);
            CHECK(preserves_form(m, rs.gram));
            CHECK(group.matrix(group.inverse(g)) * m == Matrix::identity(rs.dimension, rs.field));
            if (g % 7 == 0) {
                const auto basis = minus_one_eigenspace(m);
                CHECK(basis.size() == group.grading(g));
                for (const auto& c : basis)
                    CHECK(m * c == -c);
            }
        }
        for (std::size_t r = 0; r < rs.size(); r += 3) {
            CHECK(group.matrix(group.reflection_of_root(r)) == reflection_matrix(rs, r));
            const std::size_t g = group.size() / 2;
            CHECK(group.matrix(group.reflect_left(r, g)) == reflection_matrix(rs, r) * group.matrix(g));
        }
    }
}

TEST_CASE("orbit classes agree with brute-force conjugation") {
    for (const auto& spec : std::vector<CatalogSpec>{
             {Family::A, 3}, {Family::B, 3}, {Family::G, 2}, {Family::I2, 2, 5}, {Family::I2, 2, 12}, {Family::H, 3}}) {
        CAPTURE(spec.name());
        const Group group = enumerate_group(build_root_system(spec));
        std::set<std::set<std::size_t>> ours;
        for (const auto& c : conjugacy_classes(group))
            ours.insert(std::set<std::size_t>(c.members.begin(), c.members.end()));
        CHECK(ours == brute_classes(group));
    }
}

TEST_CASE("class lookup and multiplication") {
    const Group group = enumerate_group(build_root_system({Family::A, 3}));
    const auto classes = conjugacy_classes(group);
    const auto lookup = class_lookup(group, classes);
    for (const auto& c : classes)
        for (auto m : c.members)
            CHECK(lookup[m] == c.id);
    for (std::size_t a = 0; a < group.size(); a += 5)
        for (std::size_t b = 0; b < group.size(); b += 3)
            CHECK(group.matrix(group.multiply(a, b)) == group.matrix(a) * group.matrix(b));
    CHECK_THROWS_AS(group.index_of(Matrix::of({{2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})),
                    InternalConsistencyError);
    CHECK_FALSE(group.find(Matrix::identity(4, 0) + Matrix::identity(4, 0)).has_value());
}
