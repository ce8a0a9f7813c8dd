#pragma once

#include "calogero/linalg.hpp"
#include "calogero/rootsys.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace calogero {

class GroupOverflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An element of W(R) as a matrix in the working basis, with its hash-cons key.
class GroupElement {
public:
    GroupElement() = default;
    explicit GroupElement(Matrix m) : m_(std::move(m)), key_(m_.key()) {}

    const Matrix& matrix() const { return m_; }
    const std::string& key() const { return key_; }

private:
    Matrix m_;
    std::string key_;
};

/// Finite reflection group, elements in breadth-first order from the identity.
class Group {
public:
    std::size_t size() const { return elements_.size(); }
    const GroupElement& element(std::size_t i) const { return elements_[i]; }
    const Matrix& matrix(std::size_t i) const { return elements_[i].matrix(); }
    std::size_t identity() const { return 0; }
    std::size_t dimension() const { return dim_; }
    int field() const { return field_; }
    const Matrix& gram() const { return gram_; }

    /// Index of a matrix, if it is an element.
    std::optional<std::size_t> find(const Matrix& m) const;
    /// Index of a matrix that must be an element; InternalConsistencyError otherwise.
    std::size_t index_of(const Matrix& m) const;

    /// Distinct reflections, as element indices, sorted.
    const std::vector<std::size_t>& generators() const { return generators_; }
    /// One root index per distinct reflection, in root order.
    const std::vector<std::size_t>& generator_roots() const { return generator_roots_; }
    /// Element index of R_v for root index r.
    std::size_t reflection_of_root(std::size_t r) const { return root_reflection_[r]; }
    /// Element index of R_v * g, v = roots[r].
    std::size_t reflect_left(std::size_t r, std::size_t g) const {
        return left_[generator_slot_[r]][g];
    }
    std::size_t inverse(std::size_t g) const { return inverse_[g]; }
    std::size_t multiply(std::size_t a, std::size_t b) const;

    /// E(g) for every element, computed during enumeration.
    std::size_t grading(std::size_t g) const { return grading_[g]; }

private:
    friend Group enumerate_group(const RootSystem& rs, std::size_t cap);

    std::size_t dim_ = 0;
    int field_ = 0;
    Matrix gram_;
    std::vector<GroupElement> elements_;
    std::unordered_map<std::string, std::size_t> lookup_;
    std::vector<std::size_t> generators_;
    std::vector<std::size_t> generator_roots_;
    std::vector<std::size_t> root_reflection_;
    std::vector<std::size_t> generator_slot_;          // root -> position in generators_
    std::vector<std::vector<std::size_t>> left_;       // [slot][g] -> s * g
    std::vector<std::size_t> inverse_;
    std::vector<std::size_t> grading_;
};

struct ConjugacyClass {
    std::size_t id = 0;
    std::size_t representative = 0;
    std::vector<std::size_t> members;  // sorted element indices
    std::size_t size() const { return members.size(); }
    std::size_t e = 0;                 // multiplicity of eigenvalue -1
    int det = 1;
};

constexpr std::size_t kDefaultElementCap = 1000000;

/// Closure of the reflections under multiplication, breadth first. Throws
/// GroupOverflow beyond `cap` elements.
Group enumerate_group(const RootSystem& rs, std::size_t cap = kDefaultElementCap);

/// Orbits of conjugation by the reflection generators, ordered by
/// (E, size, representative index); ids follow that order.
std::vector<ConjugacyClass> conjugacy_classes(const Group& group);

/// element index -> class id.
std::vector<std::size_t> class_lookup(const Group& group, const std::vector<ConjugacyClass>& classes);

/// E(g) = N - rank(g + I).
std::size_t e_grading(const Matrix& g);

/// Basis of ker(g + I); its length is e_grading(g).
std::vector<Vector> minus_one_eigenspace(const Matrix& g);

/// Whether g^T G g == G.
bool preserves_form(const Matrix& g, const Matrix& gram);

}  // namespace calogero
