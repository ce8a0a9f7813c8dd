#include "calogero/verify.hpp"

#include <doctest.h>

using namespace calogero;

namespace {

struct Setup {
    RootSystem rs;
    Group group;
    std::vector<ConjugacyClass> classes;
};

Setup setup(CatalogSpec spec) {
    Setup s;
    s.rs = build_root_system(spec);
    s.group = enumerate_group(s.rs);
    s.classes = conjugacy_classes(s.group);
    return s;
}

VerifyOptions single_thread() {
    VerifyOptions o;
    o.threads = 1;
    return o;
}

}  // namespace

TEST_CASE("lemma2 on A1 and A2") {
    Setup a1 = setup({Family::A, 1});
    const Report r = verify_lemma2(a1.rs, a1.group);
    CHECK(r.passed());
    CHECK(r.cases == 2);  // identity times two roots
    Setup a2 = setup({Family::A, 2});
    const Report r2 = verify_lemma2(a2.rs, a2.group);
    CHECK(r2.passed());
    // E = 0 elements of S3: identity and two 3-cycles
    CHECK(r2.cases == 3 * a2.rs.size());
}

TEST_CASE("lemma3 reaches both branches") {
    for (auto spec : std::vector<CatalogSpec>{{Family::A, 2}, {Family::B, 2}, {Family::G, 2}, {Family::I2, 2, 5}}) {
        CAPTURE(spec.name());
        Setup s = setup(spec);
        const Report r = verify_lemma3(s.rs, s.group);
        CHECK(r.passed());
        CHECK(r.cases == s.group.size() * s.rs.size());
        CHECK(r.counters.at("branch_i") > 0);
        CHECK(r.counters.at("branch_ii") > 0);
        CHECK(r.counters.at("branch_i") + r.counters.at("branch_ii") == r.cases);
    }
}

TEST_CASE("lemma3 with -1 in the group") {
    // B2 contains -I with E = 2; every root lies in its eigenspace
    Setup b2 = setup({Family::B, 2});
    const auto minus = b2.group.find(Matrix::of({{-1, 0}, {0, -1}}));
    REQUIRE(minus);
    CHECK(b2.group.grading(*minus) == 2);
    for (std::size_t r = 0; r < b2.rs.size(); ++r)
        CHECK(b2.group.grading(b2.group.reflect_left(r, *minus)) == 1);
}

TEST_CASE("theorem4 and parity") {
    for (auto spec : std::vector<CatalogSpec>{{Family::A, 3}, {Family::B, 3}, {Family::H, 3}, {Family::I2, 2, 8}}) {
        CAPTURE(spec.name());
        Setup s = setup(spec);
        const Report t = verify_theorem4(s.rs, s.group, s.classes);
        CHECK(t.passed());
        CHECK(t.cases > 0);
        const Report p = verify_parity(s.rs, s.group, single_thread());
        CHECK(p.passed());
        CHECK(p.cases == s.group.size());
    }
}

TEST_CASE("Dunkl suites skip non-orthonormal realizations") {
    Setup h3 = setup({Family::H, 3});
    const Report r = verify_dunkl(h3.rs, "dunkl-sl2");
    CHECK(r.skipped);
    CHECK(r.passed());
    CHECK_FALSE(r.note.empty());
}

TEST_CASE("verify_all on A2") {
    Setup a2 = setup({Family::A, 2});
    const auto reports = verify_all(a2.rs, a2.group, a2.classes);
    CHECK(reports.size() >= 6);
    CHECK(reports.size() == suite_names().size());
    for (const auto& r : reports) {
        CAPTURE(r.suite);
        CHECK(r.passed());
        CHECK_FALSE(r.skipped);
        CHECK(r.root_system == "A2");
    }
}

TEST_CASE("B3 suites pass") {
    Setup b3 = setup({Family::B, 3});
    VerifyOptions opt = single_thread();
    opt.dunkl_degree = 3;
    for (const auto& r : verify_all(b3.rs, b3.group, b3.classes, opt)) {
        CAPTURE(r.suite);
        CHECK(r.passed());
    }
}

TEST_CASE("run_suite names") {
    Setup a1 = setup({Family::A, 1});
    CHECK(run_suite("parity", a1.rs, a1.group, a1.classes).suite == "parity");
    CHECK(run_suite("sl2", a1.rs, a1.group, a1.classes).suite == "dunkl-sl2");
    CHECK_THROWS_AS(run_suite("all", a1.rs, a1.group, a1.classes), std::invalid_argument);
    CHECK_THROWS_AS(run_suite("lemma7", a1.rs, a1.group, a1.classes), std::invalid_argument);
}

TEST_CASE("thread count does not change the outcome") {
    Setup b3 = setup({Family::B, 3});
    VerifyOptions one = single_thread(), four = single_thread();
    four.threads = 4;
    const Report a = verify_lemma3(b3.rs, b3.group, one);
    const Report b = verify_lemma3(b3.rs, b3.group, four);
    CHECK(a.cases == b.cases);
    CHECK(a.counters == b.counters);
    CHECK(a.failures == b.failures);
}

TEST_CASE("sampling for large groups") {
    Setup b3 = setup({Family::B, 3});
    VerifyOptions opt = single_thread();
    opt.exhaustive_limit = 10;
    opt.samples = 500;
    const Report r = verify_lemma3(b3.rs, b3.group, opt);
    CHECK(r.cases == 500);
    CHECK(r.passed());
    CHECK_FALSE(r.note.empty());
    CHECK(verify_lemma3(b3.rs, b3.group, opt).counters == r.counters);
}
