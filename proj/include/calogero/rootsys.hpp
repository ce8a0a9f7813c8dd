#pragma once

#include "calogero/linalg.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace calogero {

class CatalogError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Family { A, B, C, D, F, G, H, I2 };

/// Type-and-rank descriptor of a catalog root system. For I2 the rank is 2
/// and `m` is the dihedral order parameter.
struct CatalogSpec {
    Family family = Family::A;
    std::size_t rank = 1;
    unsigned m = 0;

    std::string name() const;
    friend bool operator==(const CatalogSpec&, const CatalogSpec&) = default;
};

/// Human-readable list of what build_root_system accepts.
std::string supported_catalog();

/// Throws CatalogError when the descriptor is outside the catalog.
void check_catalog(const CatalogSpec& spec);

/// The default batch catalog, in a fixed order. H4 is appended on request.
std::vector<CatalogSpec> default_catalog(bool include_h4 = false);

struct RootSystem {
    std::string name;
    std::size_t dimension = 0;
    int field = 0;
    std::vector<Vector> roots;
    Matrix gram;
    /// nu_class[r] in 1..k: index of the coupling attached to root r.
    std::vector<std::size_t> nu_class;
    std::size_t k = 0;
    /// reflections[r] is the matrix of R_{roots[r]} in the working basis.
    std::vector<Matrix> reflections;

    bool orthonormal() const { return gram == Matrix::identity(dimension, field); }
    std::size_t size() const { return roots.size(); }
    std::optional<std::size_t> find_root(const Vector& v) const;
    std::size_t negation_of(std::size_t r) const;
    Scalar inner(const Vector& x, const Vector& y) const { return gram_inner(gram, x, y); }

    /// Copy with roots[r] and its negative multiplied by factors[pair index],
    /// pairs numbered in order of first appearance. Reflections and couplings
    /// are unchanged because R_v depends only on the line of v.
    RootSystem with_scaled_roots(std::span<const Rational> factors) const;

    // root key -> index, filled by finalize()
    std::unordered_map<std::string, std::size_t> index;
};

/// Matrix of x -> x - 2 (x,v)/(v,v) v where (.,.) is given by `gram`.
Matrix reflection_matrix(const Matrix& gram, const Vector& v);
/// The cached reflection of root `r`.
const Matrix& reflection_matrix(const RootSystem& rs, std::size_t r);

/// Catalog constructor. Crystallographic types get rational coordinates with
/// identity Gram matrix; H3, H4, I2(5) use the simple-root basis with the
/// Coxeter Gram matrix over Q(sqrt 5); I2(8), I2(12) use orthonormal
/// coordinates over Q(sqrt 2), Q(sqrt 3).
RootSystem build_root_system(const CatalogSpec& spec);

/// A1 as {+-e1} on the line, the realization the Dunkl examples are phrased in.
RootSystem a1_on_line();

/// Couplings by W-orbits of roots: R_v and R_w are conjugate iff w lies in the
/// orbit of v (u R_v u^-1 = R_{u v}). Indices are 1-based in order of first root.
std::vector<std::size_t> nu_classes_by_root_orbits(const RootSystem& rs);

class Group;
/// Couplings by conjugacy of the reflection elements inside an enumerated group.
std::vector<std::size_t> classify_reflections(const RootSystem& rs, const Group& group);

}  // namespace calogero
