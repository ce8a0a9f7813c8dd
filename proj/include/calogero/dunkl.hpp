#pragma once

#include "calogero/nupoly.hpp"
#include "calogero/rootsys.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace calogero {

class UnsupportedRealization : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Polynomial in the coordinates x_1..x_N whose coefficients are NuPolys.
class Poly {
public:
    using Exponent = std::vector<std::uint32_t>;
    using Terms = std::map<Exponent, NuPoly>;

    Poly() = default;
    Poly(std::size_t n, std::size_t k, int field) : n_(n), k_(k), field_(field) {}

    /// c * x^exp with a constant coefficient.
    static Poly monomial(std::size_t k, Exponent exp, const Scalar& c);
    static Poly term(Exponent exp, NuPoly c);
    /// The coordinate x_i (0-based).
    static Poly coordinate(std::size_t n, std::size_t i, std::size_t k, int field);

    std::size_t variables() const { return n_; }
    std::size_t arity() const { return k_; }
    int field() const { return field_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t degree() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const NuPoly& c);
    Poly& operator*=(const Scalar& c);
    friend Poly operator*(const NuPoly& c, Poly p) { return p *= c; }
    friend Poly operator*(const Scalar& c, Poly p) { return p *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    void add_term(const Exponent& e, const NuPoly& c);
    /// x_i * f.
    Poly times_coordinate(std::size_t i) const;
    /// d f / d x_i.
    Poly derivative(std::size_t i) const;
    /// Coefficients specialized at a coupling point.
    Poly specialize(std::span<const Rational> nu) const;
    /// Exact quotient by the linear form sum_j v_j x_j. Throws
    /// InternalConsistencyError when the division leaves a remainder.
    Poly divide_linear(const Vector& v) const;

    std::string to_string() const;

private:
    std::size_t n_ = 0;
    std::size_t k_ = 0;
    int field_ = 0;
    Terms terms_;
};

/// All monomials x^a with |a| <= max_degree, unit coefficient, ascending by degree.
std::vector<Poly> monomials_up_to(std::size_t n, std::size_t max_degree, std::size_t k, int field);

/// (R_v f)(x) = f(R_v x).
Poly apply_reflection(const RootSystem& rs, std::size_t root, const Poly& f);

/// D_i f = df/dx_i + 1/2 sum_{v in R} nu_v v_i (f - R_v f) / (x, v).
Poly dunkl_apply(const RootSystem& rs, std::size_t i, const Poly& f);

/// b_i^alpha f = x_i f + (-1)^alpha D_i f, i.e. sqrt(2) a_i^alpha.
Poly ladder_apply(const RootSystem& rs, int alpha, std::size_t i, const Poly& f);

/// T^{alpha beta} f = 1/4 sum_i {b_i^alpha, b_i^beta} f.
Poly t_apply(const RootSystem& rs, int alpha, int beta, const Poly& f);

/// The identities check_identity knows.
enum class Identity {
    DunklCommute,  ///< [D_i, D_j] = 0
    Comaa,         ///< [b_i^a, b_j^b] = 2 eps^{ab} (delta_ij + sum_v nu_v v_i v_j/(v,v) R_v)
    Comav,         ///< R_v b_i^a = sum_j (delta_ij - 2 v_i v_j/(v,v)) b_j^a R_v
    Sl2,           ///< [T^{ab}, b_i^c] = eps^{ac} b_i^b + eps^{bc} b_i^a and [T^{ab}, R_v] = 0
    NuZero,        ///< D_i at nu = 0 is d/dx_i
};

std::string identity_name(Identity id);
/// Accepts "dunkl-commute", "comaa", "comav", "sl2", "nu0" with or without a "dunkl-" prefix.
Identity parse_identity(const std::string& name);

struct IdentityFailure {
    std::string monomial;
    std::string instance;  // which indices / root
    std::string lhs;
    std::string rhs;
};

struct IdentityReport {
    std::string identity;
    std::size_t degree = 0;
    std::size_t cases = 0;
    std::vector<IdentityFailure> failures;
    bool passed() const { return failures.empty(); }
};

/// Applies both sides of `which` to every monomial of degree <= max_degree.
IdentityReport check_identity(const RootSystem& rs, Identity which, std::size_t max_degree);

}  // namespace calogero
