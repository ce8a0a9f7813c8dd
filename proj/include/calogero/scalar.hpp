#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace calogero {

using Rational = mpq_class;

/// Thrown when two values from different quadratic fields meet in one
/// operation. Q and Q(sqrt d) are never coerced into each other.
class FieldMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by consistency checks that can only fail on a bug (a theorem-backed
/// divisibility that did not divide, a group that is not closed, ...).
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Field descriptor: 0 for Q, otherwise the squarefree radicand of Q(sqrt d).
/// Only the radicands needed by the root-system catalog are accepted.
int checked_field(int d);

/// Exact element a + b*sqrt(d) of Q or of a real quadratic field.
class Scalar {
public:
    Scalar() = default;
    Scalar(long n, int field = 0) : a_(n), d_(checked_field(field)) {}
    Scalar(Rational a, int field = 0);
    Scalar(Rational a, Rational b, int field);

    static Scalar zero(int field) { return Scalar(Rational(0), field); }
    static Scalar one(int field) { return Scalar(Rational(1), field); }
    /// sqrt(d) itself; d must be a non-zero descriptor.
    static Scalar root(int field);

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    int field() const { return d_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }
    /// The value as a rational; throws std::domain_error if b != 0.
    const Rational& to_rational() const;
    /// -1, 0 or +1 (the field is real, so this is well defined).
    int sign() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

    Scalar inverse() const;

    /// Exact equality. Comparing values of different fields throws.
    friend bool operator==(const Scalar& x, const Scalar& y);
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    /// "p/q" (or "p" when q = 1), "p/q+r/s*sqrt(d)", "r/s*sqrt(d)".
    std::string to_string() const;
    /// Inverse of to_string. `field` fixes the field of values that carry no
    /// radical; a radical with a different radicand is a FieldMismatch.
    static Scalar parse(std::string_view text, int field);

    /// Appends a canonical byte image (used for hash-consing matrices).
    void append_key(std::string& out) const;

private:
    void require_same_field(const Scalar& o) const;

    Rational a_{0};
    Rational b_{0};
    int d_ = 0;
};

}  // namespace calogero
