#include "calogero/linalg.hpp"

#include <utility>

namespace calogero {

// ---------------------------------------------------------------- Vector

Vector Vector::zero(std::size_t n, int field) {
    return Vector(std::vector<Scalar>(n, Scalar::zero(field)));
}

Vector Vector::unit(std::size_t n, std::size_t i, int field) {
    Vector v = zero(n, field);
    v[i] = Scalar::one(field);
    return v;
}

Vector Vector::of(std::initializer_list<Rational> entries, int field) {
    std::vector<Scalar> v;
    v.reserve(entries.size());
    for (const auto& q : entries)
        v.emplace_back(q, field);
    return Vector(std::move(v));
}

bool Vector::is_zero() const {
    for (const auto& x : v_)
        if (!x.is_zero())
            return false;
    return true;
}

Vector Vector::operator-() const {
    Vector r(*this);
    for (auto& x : r.v_)
        x = -x;
    return r;
}

Vector& Vector::operator+=(const Vector& o) {
    if (o.size() != size())
        throw DimensionError("vector size mismatch");
    for (std::size_t i = 0; i < size(); ++i)
        v_[i] += o.v_[i];
    return *this;
}

Vector& Vector::operator-=(const Vector& o) {
    if (o.size() != size())
        throw DimensionError("vector size mismatch");
    for (std::size_t i = 0; i < size(); ++i)
        v_[i] -= o.v_[i];
    return *this;
}

Vector operator*(const Scalar& s, const Vector& x) {
    Vector r(x);
    for (auto& e : r.v_)
        e *= s;
    return r;
}

bool operator==(const Vector& x, const Vector& y) {
    if (x.size() != y.size())
        return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x.v_[i] != y.v_[i])
            return false;
    return true;
}

std::string Vector::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (i)
            out += ", ";
        out += v_[i].to_string();
    }
    return out + "]";
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, int field)
    : rows_(rows), cols_(cols), field_(checked_field(field)), a_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(std::size_t n, int field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    int field = 0;
    if (r && c)
        field = rows[0][0].field();
    Matrix m(r, c, field);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw DimensionError("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::of(std::initializer_list<std::initializer_list<Rational>> rows, int field) {
    std::vector<std::vector<Scalar>> data;
    for (const auto& row : rows) {
        auto& out = data.emplace_back();
        for (const auto& q : row)
            out.emplace_back(q, field);
    }
    Matrix m = from_rows(data);
    m.field_ = checked_field(field);
    return m;
}

Matrix Matrix::from_columns(std::span<const Vector> cols) {
    if (cols.empty())
        return Matrix();
    std::size_t n = cols[0].size();
    int field = n ? cols[0][0].field() : 0;
    Matrix m(n, cols.size(), field);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != n)
            throw DimensionError("column length mismatch");
        for (std::size_t i = 0; i < n; ++i)
            m(i, j) = cols[j][i];
    }
    return m;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(std::vector<Scalar>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
    std::vector<Scalar> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v.push_back((*this)(i, j));
    return Vector(std::move(v));
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionError("matrix shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i)
        a_[i] += o.a_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionError("matrix shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i)
        a_[i] -= o.a_[i];
    return *this;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_)
        throw DimensionError("matrix product shape mismatch");
    Matrix r(x.rows_, y.cols_, x.field_);
    for (std::size_t i = 0; i < x.rows_; ++i)
        for (std::size_t k = 0; k < x.cols_; ++k) {
            const Scalar& xik = x(i, k);
            if (xik.is_zero())
                continue;
            for (std::size_t j = 0; j < y.cols_; ++j)
                if (!y(k, j).is_zero())
                    r(i, j) += xik * y(k, j);
        }
    return r;
}

Vector operator*(const Matrix& m, const Vector& v) {
    if (m.cols_ != v.size())
        throw DimensionError("matrix-vector shape mismatch");
    Vector r = Vector::zero(m.rows_, m.field_);
    for (std::size_t i = 0; i < m.rows_; ++i)
        for (std::size_t j = 0; j < m.cols_; ++j)
            if (!m(i, j).is_zero() && !v[j].is_zero())
                r[i] += m(i, j) * v[j];
    return r;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
    Matrix r(m);
    for (auto& e : r.a_)
        e *= s;
    return r;
}

bool operator==(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
        return false;
    for (std::size_t i = 0; i < x.a_.size(); ++i)
        if (x.a_[i] != y.a_[i])
            return false;
    return true;
}

bool Matrix::is_symmetric() const {
    if (!is_square())
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i))
                return false;
    return true;
}

std::string Matrix::key() const {
    std::string k;
    k.reserve(a_.size() * 4);
    for (const auto& e : a_)
        e.append_key(k);
    return k;
}

std::string Matrix::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i)
            out += ", ";
        out += row(i).to_string();
    }
    return out + "]";
}

void require_uniform_field(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j).field() != m.field())
                throw FieldMismatch("matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") is outside the matrix field");
}

// ---------------------------------------------------------------- elimination

namespace {

struct Echelon {
    Matrix m;
    std::vector<std::size_t> pivots;  // pivot column of row r
    int sign = 1;
};

// Fraction-free Gaussian elimination (Bareiss). Over a field every step is an
// invertible row operation, so the result is a row echelon form of the input.
Echelon bareiss(Matrix m) {
    require_uniform_field(m);
    Echelon e;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    Scalar prev = Scalar::one(m.field());
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero())
            ++p;
        if (p == rows)
            continue;
        if (p != r) {
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m(p, j), m(r, j));
            e.sign = -e.sign;
        }
        const Scalar piv = m(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Scalar lead = m(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                Scalar v = piv * m(i, j);
                if (!lead.is_zero())
                    v -= lead * m(r, j);
                m(i, j) = v / prev;
            }
            m(i, c) = Scalar::zero(m.field());
        }
        prev = piv;
        e.pivots.push_back(c);
        ++r;
    }
    e.m = std::move(m);
    return e;
}

}  // namespace

std::size_t mat_rank(const Matrix& m) {
    return bareiss(m).pivots.size();
}

Scalar determinant(const Matrix& m) {
    if (!m.is_square())
        throw DimensionError("determinant of a non-square matrix");
    if (m.rows() == 0)
        return Scalar::one(m.field());
    Echelon e = bareiss(m);
    if (e.pivots.size() < m.rows())
        return Scalar::zero(m.field());
    Scalar d = e.m(m.rows() - 1, m.cols() - 1);
    return e.sign < 0 ? -d : d;
}

std::vector<Vector> nullspace_basis(const Matrix& m) {
    Echelon e = bareiss(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivots)
        is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        Vector x = Vector::unit(cols, f, m.field());
        for (std::size_t k = e.pivots.size(); k-- > 0;) {
            std::size_t pc = e.pivots[k];
            Scalar acc = Scalar::zero(m.field());
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (!x[j].is_zero() && !e.m(k, j).is_zero())
                    acc += e.m(k, j) * x[j];
            x[pc] = -acc / e.m(k, pc);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

Vector solve(const Matrix& m, const Vector& b) {
    if (!m.is_square() || b.size() != m.rows())
        throw DimensionError("solve: shape mismatch");
    const std::size_t n = m.rows();
    Matrix aug(n, n + 1, m.field());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n) = b[i];
    }
    Echelon e = bareiss(aug);
    if (e.pivots.size() < n || e.pivots.back() >= n)
        throw std::domain_error("solve: singular matrix");
    Vector x = Vector::zero(n, m.field());
    for (std::size_t k = n; k-- > 0;) {
        Scalar acc = e.m(k, n);
        for (std::size_t j = k + 1; j < n; ++j)
            acc -= e.m(k, j) * x[j];
        x[k] = acc / e.m(k, k);
    }
    return x;
}

Scalar gram_inner(const Matrix& gram, const Vector& x, const Vector& y) {
    if (!gram.is_square() || gram.rows() != x.size() || x.size() != y.size())
        throw DimensionError("gram_inner: dimension mismatch");
    Scalar acc = Scalar::zero(gram.field());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (!y[j].is_zero() && !gram(i, j).is_zero())
                acc += x[i] * gram(i, j) * y[j];
    }
    return acc;
}

bool in_span(std::span<const Vector> basis, std::span<const Vector> sub) {
    if (sub.empty())
        return true;
    if (basis.empty()) {
        for (const auto& v : sub)
            if (!v.is_zero())
                return false;
        return true;
    }
    std::vector<Vector> all(basis.begin(), basis.end());
    std::size_t r0 = mat_rank(Matrix::from_columns(all));
    all.insert(all.end(), sub.begin(), sub.end());
    return mat_rank(Matrix::from_columns(all)) == r0;
}

bool same_span(std::span<const Vector> a, std::span<const Vector> b) {
    return in_span(a, b) && in_span(b, a);
}

}  // namespace calogero
