#include "calogero/nupoly.hpp"

#include <algorithm>
#include <numeric>

namespace calogero {

NuPoly NuPoly::constant(std::size_t k, const Scalar& c) {
    NuPoly p(k, c.field());
    if (!c.is_zero())
        p.terms_.emplace(Exponent(k, 0), c);
    return p;
}

NuPoly NuPoly::variable(std::size_t k, std::size_t i, int field) {
    if (i < 1 || i > k)
        throw ArityMismatch("variable nu" + std::to_string(i) + " outside 1.." + std::to_string(k));
    Exponent e(k, 0);
    e[i - 1] = 1;
    return monomial(k, std::move(e), Scalar::one(field));
}

NuPoly NuPoly::monomial(std::size_t k, Exponent exp, const Scalar& c) {
    if (exp.size() != k)
        throw ArityMismatch("exponent length differs from arity");
    NuPoly p(k, c.field());
    if (!c.is_zero())
        p.terms_.emplace(std::move(exp), c);
    return p;
}

bool NuPoly::is_constant() const {
    if (terms_.empty())
        return true;
    if (terms_.size() > 1)
        return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

Scalar NuPoly::constant_term() const {
    auto it = terms_.find(Exponent(k_, 0));
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

std::size_t NuPoly::total_degree() const {
    std::size_t deg = 0;
    for (const auto& [e, c] : terms_)
        deg = std::max<std::size_t>(deg, std::accumulate(e.begin(), e.end(), std::size_t{0}));
    return deg;
}

void NuPoly::require_compatible(const NuPoly& o) const {
    if (k_ != o.k_)
        throw ArityMismatch("polynomials in " + std::to_string(k_) + " and " + std::to_string(o.k_) +
                            " couplings");
    if (field_ != o.field_)
        throw FieldMismatch("polynomials over different fields");
}

void NuPoly::add_term(const Exponent& e, const Scalar& c) {
    if (c.is_zero())
        return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

NuPoly NuPoly::operator-() const {
    NuPoly r(*this);
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

NuPoly& NuPoly::operator+=(const NuPoly& o) {
    require_compatible(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

NuPoly& NuPoly::operator-=(const NuPoly& o) {
    require_compatible(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

void NuPoly::add_scaled(const NuPoly& b, const Scalar& c) {
    require_compatible(b);
    if (c.is_zero())
        return;
    for (const auto& [e, x] : b.terms_)
        add_term(e, x * c);
}

NuPoly operator*(const NuPoly& a, const NuPoly& b) {
    a.require_compatible(b);
    NuPoly r(a.k_, a.field_);
    NuPoly::Exponent e(a.k_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < a.k_; ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

NuPoly& NuPoly::operator*=(const NuPoly& o) {
    *this = *this * o;
    return *this;
}

NuPoly& NuPoly::operator*=(const Scalar& s) {
    if (s.field() != field_)
        throw FieldMismatch("scalar and polynomial over different fields");
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= s;
    return *this;
}

bool operator==(const NuPoly& a, const NuPoly& b) {
    a.require_compatible(b);
    return a.terms_ == b.terms_;
}

Scalar NuPoly::eval(std::span<const Rational> point) const {
    if (point.size() != k_)
        throw ArityMismatch("evaluation point has " + std::to_string(point.size()) + " coordinates, need " +
                            std::to_string(k_));
    Scalar acc = Scalar::zero(field_);
    for (const auto& [e, c] : terms_) {
        Rational m = 1;
        for (std::size_t i = 0; i < k_; ++i)
            for (std::uint32_t p = 0; p < e[i]; ++p)
                m *= point[i];
        acc += c * Scalar(m, field_);
    }
    return acc;
}

NuPoly::Exponent NuPoly::min_exponent() const {
    if (terms_.empty())
        return Exponent(k_, 0);
    Exponent m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < k_; ++i)
            m[i] = std::min(m[i], e[i]);
    return m;
}

NuPoly NuPoly::divide_monomial(const Exponent& exp) const {
    NuPoly r(k_, field_);
    for (const auto& [e, c] : terms_) {
        Exponent q(e);
        for (std::size_t i = 0; i < k_; ++i) {
            if (q[i] < exp[i])
                throw std::domain_error("monomial does not divide polynomial");
            q[i] -= exp[i];
        }
        r.terms_.emplace(std::move(q), c);
    }
    return r;
}

std::string NuPoly::to_string(const std::string& var) const {
    if (terms_.empty())
        return "0";
    std::vector<const Terms::value_type*> order;
    for (const auto& t : terms_)
        order.push_back(&t);
    auto degree = [](const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); };
    std::stable_sort(order.begin(), order.end(), [&](auto* a, auto* b) {
        auto da = degree(a->first), db = degree(b->first);
        if (da != db)
            return da < db;
        return a->first > b->first;
    });
    std::string out;
    bool first = true;
    for (const auto* t : order) {
        const auto& [e, c] = *t;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i])
                continue;
            if (!mono.empty())
                mono += '*';
            mono += var + std::to_string(i + 1);
            if (e[i] > 1)
                mono += '^' + std::to_string(e[i]);
        }
        std::string coef;
        bool negative = false;
        if (c.is_rational()) {
            Rational q = c.to_rational();
            negative = sgn(q) < 0;
            if (negative)
                q = -q;
            if (mono.empty() || q != 1)
                coef = q.get_str();
        } else {
            coef = mono.empty() ? c.to_string() : "(" + c.to_string() + ")";
        }
        std::string term = coef.empty() ? mono : (mono.empty() ? coef : coef + "*" + mono);
        if (first)
            out = (negative ? "-" : "") + term;
        else
            out += (negative ? " - " : " + ") + term;
        first = false;
    }
    return out;
}

NuPoly poly_arith(const NuPoly& a, const NuPoly& b, PolyOp op) {
    switch (op) {
    case PolyOp::Add: return a + b;
    case PolyOp::Sub: return a - b;
    case PolyOp::Mul: return a * b;
    }
    return a;
}

Scalar poly_eval(const NuPoly& p, std::span<const Rational> point) {
    return p.eval(point);
}

}  // namespace calogero
