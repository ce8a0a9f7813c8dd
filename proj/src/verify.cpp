#include "calogero/verify.hpp"

#include "calogero/dunkl.hpp"
#include "calogero/glc.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <optional>
#include <random>
#include <thread>

namespace calogero {

namespace {

using Clock = std::chrono::steady_clock;

struct PairItem {
    std::size_t g;
    std::size_t r;
};

struct Outcome {
    std::optional<Failure> failure;
    int branch = 0;
};

template <class F>
void parallel_for(std::size_t n, std::size_t threads, F&& fn) {
    if (threads <= 1 || n < 64) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    constexpr std::size_t chunk = 32;
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t begin = next.fetch_add(chunk);
                if (begin >= n)
                    return;
                for (std::size_t i = begin; i < std::min(n, begin + chunk); ++i)
                    fn(i);
            }
        });
    for (auto& th : pool)
        th.join();
}

std::vector<PairItem> pair_items(const RootSystem& rs, const Group& group, const VerifyOptions& opt,
                                 bool only_e0, Report& rep) {
    std::vector<PairItem> items;
    if (group.size() <= opt.exhaustive_limit) {
        for (std::size_t g = 0; g < group.size(); ++g) {
            if (only_e0 && group.grading(g) != 0)
                continue;
            for (std::size_t r = 0; r < rs.size(); ++r)
                items.push_back({g, r});
        }
        return items;
    }
    std::vector<std::size_t> pool;
    for (std::size_t g = 0; g < group.size(); ++g)
        if (!only_e0 || group.grading(g) == 0)
            pool.push_back(g);
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::size_t> pick_g(0, pool.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_r(0, rs.size() - 1);
    for (std::size_t s = 0; s < opt.samples; ++s) {
        std::size_t g = pool[pick_g(rng)];
        items.push_back({g, pick_r(rng)});
    }
    rep.note = "sampled " + std::to_string(opt.samples) + " pairs, seed " + std::to_string(opt.seed);
    return items;
}

std::string element_label(const Group& group, std::size_t g) {
    return "#" + std::to_string(g) + " " + group.matrix(g).to_string();
}

std::string root_label(const RootSystem& rs, std::size_t r) {
    return "#" + std::to_string(r) + " " + rs.roots[r].to_string();
}

void collect(Report& rep, const std::vector<Outcome>& out, const std::vector<std::string>& branch_names) {
    rep.cases = out.size();
    for (const auto& o : out) {
        if (o.failure)
            rep.failures.push_back(*o.failure);
        if (!branch_names.empty())
            ++rep.counters[branch_names[o.branch]];
    }
}

Report new_report(std::string suite, std::string name) {
    Report r;
    r.suite = std::move(suite);
    r.root_system = std::move(name);
    return r;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::size_t resolve_threads(const VerifyOptions& opt) {
    return opt.threads ? opt.threads : default_threads();
}

}  // namespace

std::size_t default_threads() {
    if (const char* env = std::getenv("CALOGERO_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0)
            return static_cast<std::size_t>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

Report verify_lemma2(const RootSystem& rs, const Group& group, const VerifyOptions& opt) {
    auto start = Clock::now();
    Report rep = new_report("lemma2", rs.name);
    const auto items = pair_items(rs, group, opt, true, rep);
    std::vector<Outcome> out(items.size());
    const Matrix id = Matrix::identity(group.dimension(), group.field());
    parallel_for(items.size(), resolve_threads(opt), [&](std::size_t i) {
        const auto [g, r] = items[i];
        const std::size_t h = group.reflect_left(r, g);
        const std::size_t e = group.grading(h);
        if (e != 1) {
            out[i].failure = Failure{element_label(group, g), root_label(rs, r), "E(R_v g) = 1",
                                     "E(R_v g) = " + std::to_string(e)};
            return;
        }
        Vector x1 = solve(group.matrix(g) + id, rs.roots[r]);
        Vector image = group.matrix(h) * x1;
        if (x1.is_zero() || !(image == -x1))
            out[i].failure = Failure{element_label(group, g), root_label(rs, r), "R_v g x1 = -x1 for x1 = (g+1)^-1 v",
                                     "x1 = " + x1.to_string() + ", R_v g x1 = " + image.to_string()};
    });
    collect(rep, out, {});
    rep.elapsed_seconds = seconds_since(start);
    return rep;
}

Report verify_lemma3(const RootSystem& rs, const Group& group, const VerifyOptions& opt) {
    auto start = Clock::now();
    Report rep = new_report("lemma3", rs.name);
    const auto items = pair_items(rs, group, opt, false, rep);
    std::vector<Outcome> out(items.size());
    parallel_for(items.size(), resolve_threads(opt), [&](std::size_t i) {
        const auto [g, r] = items[i];
        const Vector& v = rs.roots[r];
        const std::size_t h = group.reflect_left(r, g);
        const std::size_t eg = group.grading(g);
        const std::size_t eh = group.grading(h);
        const auto basis = minus_one_eigenspace(group.matrix(g));

        Matrix functional(1, basis.size(), rs.field);
        bool orthogonal = true;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            functional(0, j) = rs.inner(v, basis[j]);
            if (!functional(0, j).is_zero())
                orthogonal = false;
        }
        if (orthogonal) {
            out[i].branch = 0;
            if (eh != eg + 1)
                out[i].failure = Failure{element_label(group, g), root_label(rs, r),
                                         "E(R_v g) = " + std::to_string(eg + 1), "E(R_v g) = " + std::to_string(eh)};
            return;
        }
        out[i].branch = 1;
        if (eh + 1 != eg) {
            out[i].failure = Failure{element_label(group, g), root_label(rs, r), "E(R_v g) = " + std::to_string(eg - 1),
                                     "E(R_v g) = " + std::to_string(eh)};
            return;
        }
        std::vector<Vector> sub;
        for (const auto& coeffs : nullspace_basis(functional)) {
            Vector c = Vector::zero(rs.dimension, rs.field);
            for (std::size_t j = 0; j < basis.size(); ++j)
                c += coeffs[j] * basis[j];
            sub.push_back(std::move(c));
        }
        const auto kernel = minus_one_eigenspace(group.matrix(h));
        if (!same_span(sub, kernel))
            out[i].failure = Failure{element_label(group, g), root_label(rs, r),
                                     "ker(R_v g + 1) = ker(g + 1) orthogonal to v",
                                     "kernel of dimension " + std::to_string(kernel.size()) + " differs"};
    });
    collect(rep, out, {"branch_i", "branch_ii"});
    rep.counters.try_emplace("branch_i", 0);
    rep.counters.try_emplace("branch_ii", 0);
    rep.elapsed_seconds = seconds_since(start);
    return rep;
}

Report verify_theorem4(const RootSystem& rs, const Group& group, const std::vector<ConjugacyClass>& classes) {
    auto start = Clock::now();
    Report rep = new_report("theorem4", rs.name);
    for (const auto& cls : classes) {
        if (cls.e == 0)
            continue;
        const std::size_t g = cls.representative;
        const auto basis = minus_one_eigenspace(group.matrix(g));
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i; j < basis.size(); ++j) {
                GroupAlgElem img =
                    project_away_identity(commutator_image(rs, group, basis[i], basis[j]), group.identity());
                for (const auto& [h, coef] : img.terms) {
                    ++rep.cases;
                    const std::size_t hg = group.multiply(h, g);
                    const std::size_t e = group.grading(hg);
                    if (e + 1 != cls.e)
                        rep.failures.push_back(Failure{element_label(group, g), "reflection " + element_label(group, h),
                                                       "E(R_v g) = " + std::to_string(cls.e - 1),
                                                       "E(R_v g) = " + std::to_string(e)});
                }
            }
        ++rep.counters["pairs"];
    }
    rep.elapsed_seconds = seconds_since(start);
    return rep;
}

Report verify_parity(const RootSystem& rs, const Group& group, const VerifyOptions& opt) {
    auto start = Clock::now();
    Report rep = new_report("parity", rs.name);
    std::vector<Outcome> out(group.size());
    parallel_for(group.size(), resolve_threads(opt), [&](std::size_t g) {
        const Scalar det = determinant(group.matrix(g));
        const std::size_t e = group.grading(g);
        const Scalar expected(e % 2 ? -1 : 1, group.field());
        if (!(det == expected))
            out[g].failure = Failure{element_label(group, g), "", "det = " + expected.to_string(),
                                     "det = " + det.to_string()};
    });
    collect(rep, out, {});
    rep.elapsed_seconds = seconds_since(start);
    return rep;
}

Report verify_dunkl(const RootSystem& rs, const std::string& suite, const VerifyOptions& opt) {
    Report rep = new_report(suite, rs.name);
    if (!rs.orthonormal()) {
        rep.skipped = true;
        rep.note = "non-orthonormal realization";
        return rep;
    }
    auto start = Clock::now();
    const Identity id = parse_identity(suite);
    std::size_t degree = opt.dunkl_degree;
    if (id == Identity::DunklCommute || id == Identity::NuZero)
        ++degree;
    IdentityReport ir = check_identity(rs, id, degree);
    rep.cases = ir.cases;
    rep.counters["degree"] = ir.degree;
    for (const auto& f : ir.failures)
        rep.failures.push_back(Failure{f.monomial, f.instance, f.rhs, f.lhs});
    rep.elapsed_seconds = seconds_since(start);
    return rep;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"lemma2",       "lemma3",      "theorem4",
                                                "parity",       "dunkl-commute", "dunkl-comaa",
                                                "dunkl-comav",  "dunkl-sl2",   "dunkl-nu0"};
    return names;
}

Report run_suite(const std::string& suite, const RootSystem& rs, const Group& group,
                 const std::vector<ConjugacyClass>& classes, const VerifyOptions& opt) {
    if (suite == "lemma2")
        return verify_lemma2(rs, group, opt);
    if (suite == "lemma3")
        return verify_lemma3(rs, group, opt);
    if (suite == "theorem4")
        return verify_theorem4(rs, group, classes);
    if (suite == "parity")
        return verify_parity(rs, group, opt);
    Identity id;
    try {
        id = parse_identity(suite);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("unknown suite '" + suite + "'");
    }
    return verify_dunkl(rs, identity_name(id), opt);
}

std::vector<Report> verify_all(const RootSystem& rs, const Group& group, const std::vector<ConjugacyClass>& classes,
                               const VerifyOptions& opt) {
    std::vector<Report> out;
    for (const auto& name : suite_names())
        out.push_back(run_suite(name, rs, group, classes, opt));
    return out;
}

}  // namespace calogero
