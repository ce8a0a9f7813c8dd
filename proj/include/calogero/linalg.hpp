#pragma once

#include "calogero/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace calogero {

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Fixed-length column vector over one exact field.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::vector<Scalar> entries) : v_(std::move(entries)) {}
    static Vector zero(std::size_t n, int field);
    static Vector unit(std::size_t n, std::size_t i, int field);
    /// Convenience for rational literals, e.g. Vector::of({1, -1}).
    static Vector of(std::initializer_list<Rational> entries, int field = 0);

    std::size_t size() const { return v_.size(); }
    const Scalar& operator[](std::size_t i) const { return v_[i]; }
    Scalar& operator[](std::size_t i) { return v_[i]; }
    std::span<const Scalar> entries() const { return v_; }

    bool is_zero() const;
    Vector operator-() const;
    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    friend Vector operator+(Vector x, const Vector& y) { return x += y; }
    friend Vector operator-(Vector x, const Vector& y) { return x -= y; }
    friend Vector operator*(const Scalar& s, const Vector& x);
    friend bool operator==(const Vector& x, const Vector& y);

    std::string to_string() const;

private:
    std::vector<Scalar> v_;
};

/// Dense row-major matrix. Most operations need it square; rectangular
/// shapes exist for evaluated parametric systems.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, int field);
    static Matrix identity(std::size_t n, int field);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
    static Matrix of(std::initializer_list<std::initializer_list<Rational>> rows, int field = 0);
    static Matrix from_columns(std::span<const Vector> cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    int field() const { return field_; }

    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;
    Matrix transpose() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix x, const Matrix& y) { return x += y; }
    friend Matrix operator-(Matrix x, const Matrix& y) { return x -= y; }
    friend Matrix operator*(const Matrix& x, const Matrix& y);
    friend Vector operator*(const Matrix& m, const Vector& v);
    friend Matrix operator*(const Scalar& s, const Matrix& m);
    friend bool operator==(const Matrix& x, const Matrix& y);

    bool is_symmetric() const;
    /// Canonical byte image of the reduced entries; equal matrices give equal keys.
    std::string key() const;
    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    int field_ = 0;
    std::vector<Scalar> a_;
};

/// Throws FieldMismatch unless every entry lives in m.field().
void require_uniform_field(const Matrix& m);

/// Rank by fraction-free (Bareiss) elimination.
std::size_t mat_rank(const Matrix& m);

/// Determinant of a square matrix, Bareiss.
Scalar determinant(const Matrix& m);

/// Basis of the right kernel {x : m x = 0}. One vector per non-pivot column,
/// with a 1 in that column; ordered by column. Empty iff m has full column rank.
std::vector<Vector> nullspace_basis(const Matrix& m);

/// Unique solution of m x = b for invertible square m.
Vector solve(const Matrix& m, const Vector& b);

/// x^T G y.
Scalar gram_inner(const Matrix& gram, const Vector& x, const Vector& y);

/// Whether every vector of `sub` lies in span(basis).
bool in_span(std::span<const Vector> basis, std::span<const Vector> sub);

/// span(a) == span(b), by containment in both directions.
bool same_span(std::span<const Vector> a, std::span<const Vector> b);

}  // namespace calogero
