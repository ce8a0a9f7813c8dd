#pragma once

#include "calogero/coxgroup.hpp"
#include "calogero/rootsys.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace calogero {

struct Failure {
    std::string element;
    std::string root;
    std::string expected;
    std::string got;
    friend bool operator==(const Failure&, const Failure&) = default;
};

struct Report {
    std::string suite;
    std::string root_system;
    std::uint64_t cases = 0;
    std::vector<Failure> failures;
    /// Per-suite tallies, e.g. lemma3 branch counts.
    std::map<std::string, std::uint64_t> counters;
    bool skipped = false;
    std::string note;
    double elapsed_seconds = 0;

    bool passed() const { return failures.empty(); }
};

struct VerifyOptions {
    std::size_t dunkl_degree = 4;
    /// Groups larger than this are sampled in lemma2 / lemma3.
    std::size_t exhaustive_limit = 1200;
    std::size_t samples = 100000;
    std::uint64_t seed = 20240601;
    /// Worker threads for the (g, v) sweeps; 0 means CALOGERO_THREADS or hardware.
    std::size_t threads = 0;
};

/// E(g) = 0 implies E(R_v g) = 1, with eigenvector (g + 1)^{-1} v.
Report verify_lemma2(const RootSystem& rs, const Group& group, const VerifyOptions& opt = {});

/// E(R_v g) = E(g) + 1 when v is orthogonal to ker(g + 1), otherwise
/// E(R_v g) = E(g) - 1 and ker(R_v g + 1) = ker(g + 1) intersected with v^perp.
Report verify_lemma3(const RootSystem& rs, const Group& group, const VerifyOptions& opt = {});

/// Every non-identity term R_v of [c_i^0, c_j^1] gives E(R_v g) = E(g) - 1.
Report verify_theorem4(const RootSystem& rs, const Group& group, const std::vector<ConjugacyClass>& classes);

/// det(g) = (-1)^E(g) for every element.
Report verify_parity(const RootSystem& rs, const Group& group, const VerifyOptions& opt = {});

/// One of the Dunkl identity suites ("dunkl-commute", ...). Reported as
/// skipped when the realization is not orthonormal.
Report verify_dunkl(const RootSystem& rs, const std::string& suite, const VerifyOptions& opt = {});

/// Names accepted by run_suite, in the order verify_all runs them.
const std::vector<std::string>& suite_names();

/// Runs a named suite; "all" is not accepted here.
Report run_suite(const std::string& suite, const RootSystem& rs, const Group& group,
                 const std::vector<ConjugacyClass>& classes, const VerifyOptions& opt = {});

std::vector<Report> verify_all(const RootSystem& rs, const Group& group, const std::vector<ConjugacyClass>& classes,
                               const VerifyOptions& opt = {});

/// Thread count from CALOGERO_THREADS, falling back to the hardware.
std::size_t default_threads();

}  // namespace calogero
