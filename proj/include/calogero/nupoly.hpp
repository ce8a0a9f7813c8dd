#pragma once

#include "calogero/scalar.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace calogero {

class ArityMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Sparse polynomial in the couplings nu_1..nu_k with exact coefficients.
/// Coefficients live in the field of the root system (Q for crystallographic
/// types, Q(sqrt d) otherwise); terms are kept sorted with no zero entries.
class NuPoly {
public:
    using Exponent = std::vector<std::uint32_t>;
    using Terms = std::map<Exponent, Scalar>;

    NuPoly() = default;
    NuPoly(std::size_t k, int field) : k_(k), field_(checked_field(field)) {}

    static NuPoly constant(std::size_t k, const Scalar& c);
    static NuPoly constant(std::size_t k, long c, int field) { return constant(k, Scalar(c, field)); }
    /// nu_i, 1-based.
    static NuPoly variable(std::size_t k, std::size_t i, int field);
    static NuPoly monomial(std::size_t k, Exponent exp, const Scalar& c);

    std::size_t arity() const { return k_; }
    int field() const { return field_; }
    const Terms& terms() const { return terms_; }
    std::size_t num_terms() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the empty monomial.
    Scalar constant_term() const;
    std::size_t total_degree() const;

    NuPoly operator-() const;
    NuPoly& operator+=(const NuPoly& o);
    NuPoly& operator-=(const NuPoly& o);
    NuPoly& operator*=(const NuPoly& o);
    NuPoly& operator*=(const Scalar& s);
    friend NuPoly operator+(NuPoly a, const NuPoly& b) { return a += b; }
    friend NuPoly operator-(NuPoly a, const NuPoly& b) { return a -= b; }
    friend NuPoly operator*(const NuPoly& a, const NuPoly& b);
    friend NuPoly operator*(NuPoly a, const Scalar& s) { return a *= s; }
    friend NuPoly operator*(const Scalar& s, NuPoly a) { return a *= s; }
    friend bool operator==(const NuPoly& a, const NuPoly& b);

    /// a += c * b without building the product separately.
    void add_scaled(const NuPoly& b, const Scalar& c);

    /// Exact value at a rational point of length k.
    Scalar eval(std::span<const Rational> point) const;

    /// Componentwise minimum exponent over all terms (empty poly: zeros).
    Exponent min_exponent() const;
    /// Divides every term by x^exp; every term must be divisible.
    NuPoly divide_monomial(const Exponent& exp) const;

    /// "1 - 4*nu1^2", terms by ascending degree.
    std::string to_string(const std::string& var = "nu") const;

private:
    void require_compatible(const NuPoly& o) const;
    void add_term(const Exponent& e, const Scalar& c);

    std::size_t k_ = 0;
    int field_ = 0;
    Terms terms_;
};

/// Ring operation selector for poly_arith.
enum class PolyOp { Add, Sub, Mul };
NuPoly poly_arith(const NuPoly& a, const NuPoly& b, PolyOp op);
Scalar poly_eval(const NuPoly& p, std::span<const Rational> point);

}  // namespace calogero
