#include "calogero/dunkl.hpp"

#include <functional>
#include <numeric>

namespace calogero {

namespace {

using ScalarPoly = std::map<Poly::Exponent, Scalar>;

void require_orthonormal(const RootSystem& rs) {
    if (!rs.orthonormal())
        throw UnsupportedRealization(rs.name +
                                     ": Dunkl operators need an orthonormal realization (Gram matrix = I)");
}

void add_to(ScalarPoly& p, const Poly::Exponent& e, const Scalar& c) {
    if (c.is_zero())
        return;
    auto [it, fresh] = p.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            p.erase(it);
    }
}

ScalarPoly multiply(const ScalarPoly& a, const ScalarPoly& b) {
    ScalarPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Poly::Exponent e(ea);
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] += eb[i];
            add_to(r, e, ca * cb);
        }
    return r;
}

int eps(int a, int b) {
    if (a == 0 && b == 1)
        return 1;
    if (a == 1 && b == 0)
        return -1;
    return 0;
}

std::string exponent_string(const Poly::Exponent& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i])
            continue;
        if (!s.empty())
            s += '*';
        s += "x" + std::to_string(i + 1);
        if (e[i] > 1)
            s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace

// ---------------------------------------------------------------- Poly

Poly Poly::monomial(std::size_t k, Exponent exp, const Scalar& c) {
    return term(std::move(exp), NuPoly::constant(k, c));
}

Poly Poly::term(Exponent exp, NuPoly c) {
    Poly p(exp.size(), c.arity(), c.field());
    p.add_term(exp, c);
    return p;
}

Poly Poly::coordinate(std::size_t n, std::size_t i, std::size_t k, int field) {
    Exponent e(n, 0);
    e.at(i) = 1;
    return monomial(k, std::move(e), Scalar::one(field));
}

std::size_t Poly::degree() const {
    std::size_t d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max<std::size_t>(d, std::accumulate(e.begin(), e.end(), std::size_t{0}));
    return d;
}

void Poly::add_term(const Exponent& e, const NuPoly& c) {
    if (e.size() != n_)
        throw DimensionError("monomial has the wrong number of coordinates");
    if (c.is_zero())
        return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.n_, a.k_, a.field_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Poly::Exponent e(ea);
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

Poly& Poly::operator*=(const NuPoly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= c;
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, p] : terms_)
        p *= c;
    return *this;
}

Poly Poly::times_coordinate(std::size_t i) const {
    Poly r(n_, k_, field_);
    for (const auto& [e, c] : terms_) {
        Exponent ne(e);
        ++ne.at(i);
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

Poly Poly::derivative(std::size_t i) const {
    Poly r(n_, k_, field_);
    for (const auto& [e, c] : terms_) {
        if (e.at(i) == 0)
            continue;
        Exponent ne(e);
        --ne[i];
        r.add_term(ne, c * Scalar(static_cast<long>(e[i]), field_));
    }
    return r;
}

Poly Poly::specialize(std::span<const Rational> nu) const {
    Poly r(n_, k_, field_);
    for (const auto& [e, c] : terms_)
        r.add_term(e, NuPoly::constant(k_, c.eval(nu)));
    return r;
}

Poly Poly::divide_linear(const Vector& v) const {
    if (v.size() != n_)
        throw DimensionError("linear form has the wrong number of coordinates");
    std::size_t lead = n_;
    for (std::size_t j = 0; j < n_; ++j)
        if (!v[j].is_zero()) {
            lead = j;
            break;
        }
    if (lead == n_)
        throw std::domain_error("division by the zero linear form");
    const Scalar inv = v[lead].inverse();

    Poly rest(*this);
    Poly q(n_, k_, field_);
    while (!rest.is_zero()) {
        // lexicographically largest monomial, x_1 > x_2 > ...
        auto top = std::prev(rest.terms_.end());
        if (top->first[lead] == 0)
            throw InternalConsistencyError("Dunkl division left a remainder: " + rest.to_string() +
                                           " is not divisible by the root form");
        Exponent qe(top->first);
        --qe[lead];
        NuPoly qc = top->second * inv;
        for (std::size_t j = 0; j < n_; ++j) {
            if (v[j].is_zero())
                continue;
            Exponent e(qe);
            ++e[j];
            rest.add_term(e, -(qc * v[j]));
        }
        q.add_term(qe, qc);
    }
    return q;
}

std::string Poly::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty())
            out += " + ";
        out += "(" + it->second.to_string() + ")*" + exponent_string(it->first);
    }
    return out;
}

std::vector<Poly> monomials_up_to(std::size_t n, std::size_t max_degree, std::size_t k, int field) {
    std::vector<Poly> out;
    Poly::Exponent e(n, 0);
    for (std::size_t deg = 0; deg <= max_degree; ++deg) {
        // compositions of deg into n parts, lexicographically descending
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t left) {
            if (pos + 1 == n) {
                e[pos] = static_cast<std::uint32_t>(left);
                out.push_back(Poly::monomial(k, e, Scalar::one(field)));
                return;
            }
            for (std::size_t a = left + 1; a-- > 0;) {
                e[pos] = static_cast<std::uint32_t>(a);
                rec(pos + 1, left - a);
            }
        };
        if (n == 0)
            break;
        rec(0, deg);
    }
    return out;
}

// ---------------------------------------------------------------- operators

Poly apply_reflection(const RootSystem& rs, std::size_t root, const Poly& f) {
    require_orthonormal(rs);
    const Matrix& m = reflection_matrix(rs, root);
    const std::size_t n = rs.dimension;
    // (R x)_k = sum_l m(k,l) x_l
    std::vector<std::vector<ScalarPoly>> powers(n);
    for (std::size_t kx = 0; kx < n; ++kx) {
        ScalarPoly lin;
        for (std::size_t l = 0; l < n; ++l) {
            Poly::Exponent e(n, 0);
            e[l] = 1;
            add_to(lin, e, m(kx, l));
        }
        powers[kx].push_back(ScalarPoly{{Poly::Exponent(n, 0), Scalar::one(rs.field)}});
        powers[kx].push_back(std::move(lin));
    }
    auto power = [&](std::size_t kx, std::size_t p) -> const ScalarPoly& {
        while (powers[kx].size() <= p)
            powers[kx].push_back(multiply(powers[kx].back(), powers[kx][1]));
        return powers[kx][p];
    };

    Poly r(n, f.arity(), f.field());
    for (const auto& [e, c] : f.terms()) {
        ScalarPoly img{{Poly::Exponent(n, 0), Scalar::one(rs.field)}};
        for (std::size_t kx = 0; kx < n; ++kx)
            if (e[kx])
                img = multiply(img, power(kx, e[kx]));
        for (const auto& [ie, ic] : img)
            r.add_term(ie, c * ic);
    }
    return r;
}

Poly dunkl_apply(const RootSystem& rs, std::size_t i, const Poly& f) {
    require_orthonormal(rs);
    if (i >= rs.dimension)
        throw DimensionError("Dunkl index out of range");
    Poly out = f.derivative(i);
    const Scalar half(Rational(1, 2), rs.field);
    for (std::size_t r = 0; r < rs.size(); ++r) {
        const Vector& v = rs.roots[r];
        if (v[i].is_zero())
            continue;
        Poly diff = f - apply_reflection(rs, r, f);
        if (diff.is_zero())
            continue;
        Poly q = diff.divide_linear(v);
        NuPoly coef = NuPoly::variable(rs.k, rs.nu_class[r], rs.field) * (half * v[i]);
        q *= coef;
        out += q;
    }
    return out;
}

Poly ladder_apply(const RootSystem& rs, int alpha, std::size_t i, const Poly& f) {
    if (alpha != 0 && alpha != 1)
        throw std::invalid_argument("ladder index alpha must be 0 or 1");
    Poly d = dunkl_apply(rs, i, f);
    Poly out = f.times_coordinate(i);
    if (alpha == 0)
        out += d;
    else
        out -= d;
    return out;
}

Poly t_apply(const RootSystem& rs, int alpha, int beta, const Poly& f) {
    Poly acc(f.variables(), f.arity(), f.field());
    for (std::size_t i = 0; i < rs.dimension; ++i) {
        acc += ladder_apply(rs, alpha, i, ladder_apply(rs, beta, i, f));
        acc += ladder_apply(rs, beta, i, ladder_apply(rs, alpha, i, f));
    }
    acc *= Scalar(Rational(1, 4), rs.field);
    return acc;
}

// ---------------------------------------------------------------- identity checks

std::string identity_name(Identity id) {
    switch (id) {
    case Identity::DunklCommute: return "dunkl-commute";
    case Identity::Comaa: return "dunkl-comaa";
    case Identity::Comav: return "dunkl-comav";
    case Identity::Sl2: return "dunkl-sl2";
    case Identity::NuZero: return "dunkl-nu0";
    }
    return "?";
}

Identity parse_identity(const std::string& name) {
    std::string s = name.rfind("dunkl-", 0) == 0 ? name.substr(6) : name;
    if (s == "commute")
        return Identity::DunklCommute;
    if (s == "comaa")
        return Identity::Comaa;
    if (s == "comav")
        return Identity::Comav;
    if (s == "sl2")
        return Identity::Sl2;
    if (s == "nu0")
        return Identity::NuZero;
    throw std::invalid_argument("unknown Dunkl identity '" + name +
                                "'; known: dunkl-commute, comaa, comav, sl2, nu0");
}

namespace {

// Memoized images of monomials under R_v and D_i; everything else is linear
// on top of these.
class OperatorCache {
public:
    explicit OperatorCache(const RootSystem& rs)
        : rs_(rs), refl_(rs.size()), dunkl_(rs.dimension) {}

    Poly R(std::size_t r, const Poly& f) {
        return linear(f, [&](const Poly::Exponent& e) -> const Poly& {
            auto it = refl_[r].find(e);
            if (it == refl_[r].end())
                it = refl_[r].emplace(e, apply_reflection(rs_, r, unit(e))).first;
            return it->second;
        });
    }

    Poly D(std::size_t i, const Poly& f) {
        return linear(f, [&](const Poly::Exponent& e) -> const Poly& {
            auto it = dunkl_[i].find(e);
            if (it == dunkl_[i].end())
                it = dunkl_[i].emplace(e, dunkl_apply(rs_, i, unit(e))).first;
            return it->second;
        });
    }

    Poly b(int alpha, std::size_t i, const Poly& f) {
        Poly out = f.times_coordinate(i);
        if (alpha == 0)
            out += D(i, f);
        else
            out -= D(i, f);
        return out;
    }

    Poly T(int alpha, int beta, const Poly& f) {
        Poly acc(f.variables(), f.arity(), f.field());
        for (std::size_t i = 0; i < rs_.dimension; ++i) {
            acc += b(alpha, i, b(beta, i, f));
            acc += b(beta, i, b(alpha, i, f));
        }
        acc *= Scalar(Rational(1, 4), rs_.field);
        return acc;
    }

private:
    Poly unit(const Poly::Exponent& e) const { return Poly::monomial(rs_.k, e, Scalar::one(rs_.field)); }

    template <class Image>
    Poly linear(const Poly& f, Image image) {
        Poly out(f.variables(), f.arity(), f.field());
        for (const auto& [e, c] : f.terms())
            out += c * image(e);
        return out;
    }

    const RootSystem& rs_;
    std::vector<std::map<Poly::Exponent, Poly>> refl_;
    std::vector<std::map<Poly::Exponent, Poly>> dunkl_;
};

}  // namespace

IdentityReport check_identity(const RootSystem& rs, Identity which, std::size_t max_degree) {
    require_orthonormal(rs);
    IdentityReport rep;
    rep.identity = identity_name(which);
    rep.degree = max_degree;
    const std::size_t n = rs.dimension;
    const std::size_t k = rs.k;
    const int fd = rs.field;
    const auto monos = monomials_up_to(n, max_degree, k, fd);
    OperatorCache op(rs);

    auto record = [&](const Poly& m, std::string instance, const Poly& lhs, const Poly& rhs) {
        ++rep.cases;
        if (!(lhs == rhs))
            rep.failures.push_back({m.to_string(), std::move(instance), lhs.to_string(), rhs.to_string()});
    };

    // sum_v nu_v v_i v_j / (v,v) R_v f
    auto reflection_sum = [&](std::size_t i, std::size_t j, const Poly& f) {
        Poly acc(n, k, fd);
        for (std::size_t r = 0; r < rs.size(); ++r) {
            const Vector& v = rs.roots[r];
            if (v[i].is_zero() || v[j].is_zero())
                continue;
            Scalar w = v[i] * v[j] / rs.inner(v, v);
            acc += (NuPoly::variable(k, rs.nu_class[r], fd) * w) * op.R(r, f);
        }
        return acc;
    };

    for (const auto& m : monos) {
        switch (which) {
        case Identity::DunklCommute:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    record(m, "i=" + std::to_string(i + 1) + ",j=" + std::to_string(j + 1),
                           op.D(i, op.D(j, m)), op.D(j, op.D(i, m)));
            break;
        case Identity::Comaa:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (int a = 0; a < 2; ++a)
                        for (int b = 0; b < 2; ++b) {
                            Poly lhs = op.b(a, i, op.b(b, j, m)) -
                                       op.b(b, j, op.b(a, i, m));
                            Poly rhs(n, k, fd);
                            if (int e = eps(a, b)) {
                                rhs = reflection_sum(i, j, m);
                                if (i == j)
                                    rhs += m;
                                rhs *= Scalar(2 * e, fd);
                            }
                            record(m,
                                   "i=" + std::to_string(i + 1) + ",j=" + std::to_string(j + 1) +
                                       ",alpha=" + std::to_string(a) + ",beta=" + std::to_string(b),
                                   lhs, rhs);
                        }
            break;
        case Identity::Comav:
            for (std::size_t r = 0; r < rs.size(); ++r) {
                const Vector& v = rs.roots[r];
                const Scalar vv = rs.inner(v, v);
                const Poly rm = op.R(r, m);
                for (std::size_t i = 0; i < n; ++i)
                    for (int a = 0; a < 2; ++a) {
                        Poly lhs = op.R(r, op.b(a, i, m));
                        Poly rhs(n, k, fd);
                        for (std::size_t j = 0; j < n; ++j) {
                            Scalar c = Scalar(i == j ? 1 : 0, fd) - Scalar(2, fd) * v[i] * v[j] / vv;
                            if (!c.is_zero())
                                rhs += c * op.b(a, j, rm);
                        }
                        record(m, "root=" + std::to_string(r) + ",i=" + std::to_string(i + 1) +
                                      ",alpha=" + std::to_string(a),
                               lhs, rhs);
                    }
            }
            break;
        case Identity::Sl2:
            for (int a = 0; a < 2; ++a)
                for (int b = a; b < 2; ++b) {
                    const Poly tm = op.T(a, b, m);
                    for (int c = 0; c < 2; ++c)
                        for (std::size_t i = 0; i < n; ++i) {
                            Poly lhs = op.T(a, b, op.b(c, i, m)) - op.b(c, i, tm);
                            Poly rhs(n, k, fd);
                            if (int e = eps(a, c))
                                rhs += Scalar(e, fd) * op.b(b, i, m);
                            if (int e = eps(b, c))
                                rhs += Scalar(e, fd) * op.b(a, i, m);
                            record(m,
                                   "T" + std::to_string(a) + std::to_string(b) + ",gamma=" + std::to_string(c) +
                                       ",i=" + std::to_string(i + 1),
                                   lhs, rhs);
                        }
                    for (std::size_t r = 0; r < rs.size(); ++r)
                        record(m, "T" + std::to_string(a) + std::to_string(b) + ",root=" + std::to_string(r),
                               op.T(a, b, op.R(r, m)), op.R(r, tm));
                }
            break;
        case Identity::NuZero: {
            std::vector<Rational> zero(k, Rational(0));
            for (std::size_t i = 0; i < n; ++i)
                record(m, "i=" + std::to_string(i + 1), op.D(i, m).specialize(zero), m.derivative(i));
            break;
        }
        }
    }
    return rep;
}

}  // namespace calogero
