#include "calogero/scalar.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace calogero {

namespace {

std::string field_name(int d) {
    return d == 0 ? std::string("Q") : "Q(sqrt(" + std::to_string(d) + "))";
}

Rational parse_rational(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    std::size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (start == text.size())
        throw std::invalid_argument("rational literal has no digits: '" + std::string(text) + "'");
    bool slash = false;
    for (std::size_t i = start; i < text.size(); ++i) {
        char c = text[i];
        if (c == '/' && !slash && i > start && i + 1 < text.size()) {
            slash = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
    }
    std::string s(text[0] == '+' ? text.substr(1) : text);
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
    if (slash && sgn(q.get_den()) == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

}  // namespace

int checked_field(int d) {
    if (d == 1)
        return 0;
    if (d == 0 || d == 2 || d == 3 || d == 5)
        return d;
    throw std::invalid_argument("unsupported field descriptor sqrt(" + std::to_string(d) +
                                "); supported: 0 (Q), 2, 3, 5");
}

Scalar::Scalar(Rational a, int field) : a_(std::move(a)), d_(checked_field(field)) {
    a_.canonicalize();
}

Scalar::Scalar(Rational a, Rational b, int field)
    : a_(std::move(a)), b_(std::move(b)), d_(checked_field(field)) {
    a_.canonicalize();
    b_.canonicalize();
    if (d_ == 0 && sgn(b_) != 0)
        throw std::invalid_argument("radical part given for the rational field");
}

Scalar Scalar::root(int field) {
    int d = checked_field(field);
    if (d == 0)
        throw std::invalid_argument("Scalar::root needs a quadratic field");
    return Scalar(Rational(0), Rational(1), d);
}

const Rational& Scalar::to_rational() const {
    if (!is_rational())
        throw std::domain_error("scalar " + to_string() + " is irrational");
    return a_;
}

int Scalar::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0)
        return sa;
    if (sa == 0)
        return sb;
    if (sa == sb)
        return sa;
    // opposite signs: compare a^2 with d*b^2
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * d_;
    int c = cmp(lhs, rhs);
    if (c == 0)
        return 0;  // unreachable for squarefree d, kept for completeness
    return c > 0 ? sa : sb;
}

void Scalar::require_same_field(const Scalar& o) const {
    if (d_ != o.d_)
        throw FieldMismatch("field mismatch: " + field_name(d_) + " vs " + field_name(o.d_));
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    require_same_field(o);
    a_ += o.a_;
    if (d_ != 0)
        b_ += o.b_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    require_same_field(o);
    a_ -= o.a_;
    if (d_ != 0)
        b_ -= o.b_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    require_same_field(o);
    if (d_ == 0 || (is_rational() && o.is_rational())) {
        a_ *= o.a_;
        return *this;
    }
    Rational na = a_ * o.a_ + b_ * o.b_ * d_;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero())
        throw std::domain_error("division by zero scalar");
    if (is_rational())
        return Scalar(Rational(1) / a_, Rational(0), d_);
    Rational norm = a_ * a_ - b_ * b_ * d_;
    return Scalar(a_ / norm, -b_ / norm, d_);
}

Scalar& Scalar::operator/=(const Scalar& o) {
    require_same_field(o);
    if (o.is_rational()) {
        if (sgn(o.a_) == 0)
            throw std::domain_error("division by zero scalar");
        a_ /= o.a_;
        if (d_ != 0)
            b_ /= o.a_;
        return *this;
    }
    return *this *= o.inverse();
}

bool operator==(const Scalar& x, const Scalar& y) {
    x.require_same_field(y);
    return x.a_ == y.a_ && x.b_ == y.b_;
}

std::string Scalar::to_string() const {
    if (is_rational())
        return a_.get_str();
    std::string rad = "*sqrt(" + std::to_string(d_) + ")";
    if (sgn(a_) == 0)
        return b_.get_str() + rad;
    std::string out = a_.get_str();
    if (sgn(b_) > 0)
        out += '+';
    return out + b_.get_str() + rad;
}

Scalar Scalar::parse(std::string_view text, int field) {
    field = checked_field(field);
    const std::string_view marker = "*sqrt(";
    std::size_t pos = text.find(marker);
    if (pos == std::string_view::npos)
        return Scalar(parse_rational(text), field);
    std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos || close + 1 != text.size())
        throw std::invalid_argument("malformed radical in '" + std::string(text) + "'");
    int d = checked_field(std::stoi(std::string(text.substr(pos + marker.size(), close - pos - marker.size()))));
    if (d == 0)
        throw std::invalid_argument("sqrt of a perfect square in '" + std::string(text) + "'");
    if (d != field)
        throw FieldMismatch("literal '" + std::string(text) + "' is not in " + field_name(field));
    std::string_view head = text.substr(0, pos);
    std::size_t split = std::string_view::npos;
    for (std::size_t i = head.size(); i-- > 1;) {
        if (head[i] == '+' || head[i] == '-') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos)
        return Scalar(Rational(0), parse_rational(head), d);
    return Scalar(parse_rational(head.substr(0, split)), parse_rational(head.substr(split)), d);
}

void Scalar::append_key(std::string& out) const {
    out += a_.get_str(32);
    if (d_ != 0) {
        out += '|';
        out += b_.get_str(32);
    }
    out += ';';
}

}  // namespace calogero
