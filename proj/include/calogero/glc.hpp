#pragma once

#include "calogero/coxgroup.hpp"
#include "calogero/nupoly.hpp"
#include "calogero/param_solve.hpp"
#include "calogero/rootsys.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace calogero {

/// The generic solution dimension of the ground level conditions differs from
/// the number of classes without eigenvalue -1.
class Theorem5Violation : public InternalConsistencyError {
public:
    using InternalConsistencyError::InternalConsistencyError;
};

/// Finite combination of group elements with NuPoly coefficients.
struct GroupAlgElem {
    std::size_t k = 0;
    int field = 0;
    std::map<std::size_t, NuPoly> terms;  // element index -> coefficient, no zeros

    void add(std::size_t element, const NuPoly& c);
    bool is_zero() const { return terms.empty(); }
};

/// [c1^0, c2^1] = (c1,c2) 1 + sum_{v in R} nu_v (c1,v)(c2,v)/(v,v) R_v, summed
/// over every root including both signs.
GroupAlgElem commutator_image(const RootSystem& rs, const Group& group, const Vector& c1, const Vector& c2);

/// Drops the identity term.
GroupAlgElem project_away_identity(const GroupAlgElem& x, std::size_t identity);

struct RowProvenance {
    std::size_t class_id = 0;
    std::size_t element = 0;  // the g the row was built from
    std::size_t i = 0;        // eigenspace basis indices, i <= j
    std::size_t j = 0;
};

/// str([c_i^0, c_j^1] g) = 0 for every class with E >= 1, one unknown t_C per class.
struct GLCSystem {
    ParamSystem system;
    std::vector<RowProvenance> provenance;
    std::vector<std::size_t> class_e;  // E of each unknown's class
};

/// Empty system with one unknown per class.
GLCSystem empty_glc_system(const RootSystem& rs, const std::vector<ConjugacyClass>& classes);

/// Appends the rows coming from element g with the given basis of ker(g + 1).
void append_glc_rows(GLCSystem& sys, const RootSystem& rs, const Group& group,
                     const std::vector<std::size_t>& class_of, std::size_t class_id, std::size_t g,
                     const std::vector<Vector>& basis);

/// One representative per class with E >= 1, basis from minus_one_eigenspace,
/// rows for all pairs i <= j.
GLCSystem build_glc_system(const RootSystem& rs, const Group& group, const std::vector<ConjugacyClass>& classes);

struct SupertraceSolution {
    std::size_t q = 0;
    std::size_t generic_rank = 0;
    std::vector<std::size_t> free_classes;
    /// t_C for every class in terms of the free classes.
    std::vector<SolvedExpression> table;
    ParamSolution raw;
};

/// Solves with unknowns ordered by descending E; throws Theorem5Violation when
/// the free unknowns are not exactly the E = 0 classes.
SupertraceSolution solve_glc(const GLCSystem& system);

/// Number of classes with E = 0.
std::size_t count_supertraces(const std::vector<ConjugacyClass>& classes);

struct SupertraceValue {
    NuPoly numerator;
    NuPoly denominator;

    /// Value as a NuPoly when the denominator is a non-zero constant.
    std::optional<NuPoly> as_polynomial() const;
    /// "-2*nu1", or "(num)/(den)" for a genuine rational function.
    std::string to_string() const;
};

/// str on every class given values on the free classes. Every free class
/// must be present in `free_values`.
std::vector<SupertraceValue> supertrace_table(const SupertraceSolution& solution,
                                              const std::map<std::size_t, Rational>& free_values);

/// Display name of a class: "1" for the identity, "sigma" / "sigma<k>" for the
/// reflection class carrying nu_k, "C<id>" otherwise.
std::string class_label(const RootSystem& rs, const Group& group, const std::vector<ConjugacyClass>& classes,
                        std::size_t id);

/// Rank of the system evaluated at `point`, and the resulting solution dimension.
struct PointRank {
    std::vector<Rational> point;
    std::size_t rank = 0;
    std::size_t dimension = 0;
    bool denominator_zero = false;
};
PointRank rank_at(const GLCSystem& system, const SupertraceSolution& solution, std::vector<Rational> point);

/// `count` reproducible random rational points in k coordinates, numerators
/// in [-60, 60] and denominators in [1, 17].
std::vector<std::vector<Rational>> random_points(std::size_t k, std::size_t count, std::uint64_t seed);

}  // namespace calogero
