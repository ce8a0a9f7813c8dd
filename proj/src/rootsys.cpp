#include "calogero/rootsys.hpp"

#include "calogero/coxgroup.hpp"

#include <deque>
#include <map>

namespace calogero {

namespace {

const char* family_letter(Family f) {
    switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::H: return "H";
    case Family::I2: return "I2";
    }
    return "?";
}

Vector basis_combo(std::size_t n, std::initializer_list<std::pair<std::size_t, long>> terms) {
    Vector v = Vector::zero(n, 0);
    for (auto [i, c] : terms)
        v[i] += Scalar(c);
    return v;
}

std::string vector_key(const Vector& v) {
    std::string k;
    for (const auto& x : v.entries())
        x.append_key(k);
    return k;
}

void push_pair(std::vector<Vector>& roots, Vector v) {
    Vector neg = -v;
    roots.push_back(std::move(v));
    roots.push_back(std::move(neg));
}

bool positive_definite(const Matrix& g) {
    for (std::size_t n = 1; n <= g.rows(); ++n) {
        Matrix lead(n, n, g.field());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                lead(i, j) = g(i, j);
        if (determinant(lead).sign() <= 0)
            return false;
    }
    return true;
}

// Orbit closure of `seeds` under their own reflections.
std::vector<Vector> close_under_reflections(std::vector<Vector> seeds, const Matrix& gram) {
    std::vector<Vector> roots;
    std::unordered_map<std::string, std::size_t> seen;
    auto add = [&](Vector v) {
        std::string key = vector_key(v);
        if (seen.emplace(key, roots.size()).second) {
            roots.push_back(std::move(v));
            return true;
        }
        return false;
    };
    for (auto& s : seeds) {
        add(s);
        add(-s);
    }
    std::vector<Matrix> refl;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        refl.push_back(reflection_matrix(gram, roots[i]));
        for (std::size_t j = 0; j <= i; ++j) {
            add(refl[i] * roots[j]);
            add(refl[j] * roots[i]);
        }
        if (roots.size() > 100000)
            throw InternalConsistencyError("root closure does not terminate");
    }
    return roots;
}

RootSystem finalize(std::string name, std::vector<Vector> roots, Matrix gram) {
    RootSystem rs;
    rs.name = std::move(name);
    rs.dimension = gram.rows();
    rs.field = gram.field();
    rs.roots = std::move(roots);
    rs.gram = std::move(gram);
    if (!rs.gram.is_symmetric() || !positive_definite(rs.gram))
        throw InternalConsistencyError(rs.name + ": Gram matrix is not symmetric positive definite");
    for (std::size_t r = 0; r < rs.roots.size(); ++r) {
        const Vector& v = rs.roots[r];
        if (v.size() != rs.dimension || v.is_zero())
            throw InternalConsistencyError(rs.name + ": malformed root");
        rs.index.emplace(vector_key(v), r);
        rs.reflections.push_back(reflection_matrix(rs.gram, v));
    }
    rs.nu_class = nu_classes_by_root_orbits(rs);
    rs.k = 0;
    for (auto c : rs.nu_class)
        rs.k = std::max(rs.k, c);
    return rs;
}

RootSystem type_a(std::size_t n) {
    std::size_t dim = n + 1;
    std::vector<Vector> roots;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            push_pair(roots, basis_combo(dim, {{i, 1}, {j, -1}}));
    return finalize("A" + std::to_string(n), std::move(roots), Matrix::identity(dim, 0));
}

void add_long_pairs(std::vector<Vector>& roots, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            push_pair(roots, basis_combo(n, {{i, 1}, {j, -1}}));
            push_pair(roots, basis_combo(n, {{i, 1}, {j, 1}}));
        }
}

RootSystem type_bc(std::size_t n, long short_scale, const std::string& name) {
    std::vector<Vector> roots;
    for (std::size_t i = 0; i < n; ++i)
        push_pair(roots, basis_combo(n, {{i, short_scale}}));
    add_long_pairs(roots, n);
    return finalize(name, std::move(roots), Matrix::identity(n, 0));
}

RootSystem type_d(std::size_t n) {
    std::vector<Vector> roots;
    add_long_pairs(roots, n);
    return finalize("D" + std::to_string(n), std::move(roots), Matrix::identity(n, 0));
}

RootSystem type_g2() {
    std::vector<Vector> roots;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            push_pair(roots, basis_combo(3, {{i, 1}, {j, -1}}));
    for (std::size_t i = 0; i < 3; ++i) {
        Vector v = Vector::zero(3, 0);
        for (std::size_t j = 0; j < 3; ++j)
            v[j] = Scalar(i == j ? 2 : -1);
        push_pair(roots, std::move(v));
    }
    return finalize("G2", std::move(roots), Matrix::identity(3, 0));
}

RootSystem type_f4() {
    std::vector<Vector> roots;
    for (std::size_t i = 0; i < 4; ++i)
        push_pair(roots, basis_combo(4, {{i, 1}}));
    add_long_pairs(roots, 4);
    for (int mask = 0; mask < 8; ++mask) {
        Vector v = Vector::zero(4, 0);
        v[0] = Scalar(Rational(1, 2));
        for (int b = 0; b < 3; ++b)
            v[b + 1] = Scalar(Rational((mask >> b) & 1 ? -1 : 1, 2));
        push_pair(roots, std::move(v));
    }
    return finalize("F4", std::move(roots), Matrix::identity(4, 0));
}

// Simple-root basis with the Coxeter Gram matrix 2 cos(pi / m_ij) off the
// diagonal (sign flipped), entries in Q(sqrt 5). tau = 2cos(pi/5).
RootSystem gram_basis_type(const std::string& name, const std::vector<std::vector<int>>& coxeter) {
    const int d = 5;
    const Scalar tau(Rational(1, 2), Rational(1, 2), d);
    std::size_t n = coxeter.size();
    Matrix gram(n, n, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int m = coxeter[i][j];
            if (i == j)
                gram(i, j) = Scalar(2, d);
            else if (m == 3)
                gram(i, j) = Scalar(-1, d);
            else if (m == 5)
                gram(i, j) = -tau;
            else if (m != 2)
                throw InternalConsistencyError("unsupported Coxeter label");
        }
    std::vector<Vector> simple;
    for (std::size_t i = 0; i < n; ++i)
        simple.push_back(Vector::unit(n, i, d));
    auto roots = close_under_reflections(std::move(simple), gram);
    return finalize(name, std::move(roots), std::move(gram));
}

// Dihedral I2(m), m in {8, 12}, in orthonormal coordinates over Q(sqrt d).
// The line at angle t is spanned by (1 + cos 2t, sin 2t), whose entries lie in
// Q(cos(2 pi/m), sin(2 pi/m)) = Q(sqrt d) for these m.
RootSystem dihedral_orthonormal(unsigned m) {
    int d = m == 8 ? 2 : 3;
    // cos(2pi/m), sin(2pi/m): m=8 -> (sqrt2/2, sqrt2/2); m=12 -> (sqrt3/2, 1/2)
    Scalar c(Rational(0), Rational(1, 2), d);
    Scalar s = m == 8 ? Scalar(Rational(0), Rational(1, 2), d) : Scalar(Rational(1, 2), d);
    Vector v1 = Vector::unit(2, 0, d);
    // line at angle pi - pi/m: (1 + cos(2pi - 2pi/m), sin(2pi - 2pi/m))
    Vector v2(std::vector<Scalar>{Scalar::one(d) + c, -s});
    return finalize("I2(" + std::to_string(m) + ")",
                    close_under_reflections({v1, v2}, Matrix::identity(2, d)),
                    Matrix::identity(2, d));
}

}  // namespace

std::string CatalogSpec::name() const {
    if (family == Family::I2)
        return "I2(" + std::to_string(m) + ")";
    return family_letter(family) + std::to_string(rank);
}

std::string supported_catalog() {
    return "A_n (n>=1), B_n (n>=2), C_n (n>=2), D_n (n>=2; D2, D3 are aliases), G2, F4, H3, H4, "
           "I2(m) for m in {3,4,5,6,8,12}";
}

void check_catalog(const CatalogSpec& s) {
    bool ok = false;
    switch (s.family) {
    case Family::A: ok = s.rank >= 1; break;
    case Family::B:
    case Family::C:
    case Family::D: ok = s.rank >= 2; break;
    case Family::F: ok = s.rank == 4; break;
    case Family::G: ok = s.rank == 2; break;
    case Family::H: ok = s.rank == 3 || s.rank == 4; break;
    case Family::I2:
        ok = s.rank == 2 && (s.m == 3 || s.m == 4 || s.m == 5 || s.m == 6 || s.m == 8 || s.m == 12);
        break;
    }
    if (!ok)
        throw CatalogError("unsupported root system " + s.name() + "; supported: " + supported_catalog());
}

std::vector<CatalogSpec> default_catalog(bool include_h4) {
    std::vector<CatalogSpec> out;
    for (std::size_t n = 1; n <= 5; ++n)
        out.push_back({Family::A, n, 0});
    for (std::size_t n = 2; n <= 4; ++n)
        out.push_back({Family::B, n, 0});
    out.push_back({Family::D, 4, 0});
    out.push_back({Family::G, 2, 0});
    out.push_back({Family::F, 4, 0});
    for (unsigned m : {3u, 4u, 5u, 6u, 8u, 12u})
        out.push_back({Family::I2, 2, m});
    out.push_back({Family::H, 3, 0});
    if (include_h4)
        out.push_back({Family::H, 4, 0});
    return out;
}

std::optional<std::size_t> RootSystem::find_root(const Vector& v) const {
    if (v.size() != dimension)
        return std::nullopt;
    auto it = index.find(vector_key(v));
    if (it == index.end())
        return std::nullopt;
    return it->second;
}

std::size_t RootSystem::negation_of(std::size_t r) const {
    auto idx = find_root(-roots[r]);
    if (!idx)
        throw InternalConsistencyError(name + ": root set not closed under negation");
    return *idx;
}

RootSystem RootSystem::with_scaled_roots(std::span<const Rational> factors) const {
    RootSystem out = *this;
    std::vector<std::ptrdiff_t> pair_of(roots.size(), -1);
    std::size_t pairs = 0;
    for (std::size_t r = 0; r < roots.size(); ++r) {
        if (pair_of[r] >= 0)
            continue;
        std::size_t neg = negation_of(r);
        pair_of[r] = pair_of[neg] = static_cast<std::ptrdiff_t>(pairs++);
    }
    if (factors.size() != pairs)
        throw DimensionError("with_scaled_roots: need one factor per root pair");
    out.index.clear();
    for (std::size_t r = 0; r < roots.size(); ++r) {
        const Rational& f = factors[pair_of[r]];
        if (sgn(f) == 0)
            throw std::invalid_argument("with_scaled_roots: zero factor");
        out.roots[r] = Scalar(f, field) * roots[r];
        out.index.emplace(vector_key(out.roots[r]), r);
    }
    return out;
}

Matrix reflection_matrix(const Matrix& gram, const Vector& v) {
    const std::size_t n = v.size();
    const int d = gram.field();
    Vector gv = gram * v;
    Scalar vv = gram_inner(gram, v, v);
    if (vv.is_zero())
        throw std::invalid_argument("reflection in a null vector");
    Scalar two_over = Scalar(2, d) / vv;
    Matrix m = Matrix::identity(n, d);
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i].is_zero())
            continue;
        Scalar vi = two_over * v[i];
        for (std::size_t j = 0; j < n; ++j)
            if (!gv[j].is_zero())
                m(i, j) -= vi * gv[j];
    }
    return m;
}

const Matrix& reflection_matrix(const RootSystem& rs, std::size_t r) {
    return rs.reflections.at(r);
}

RootSystem build_root_system(const CatalogSpec& spec) {
    check_catalog(spec);
    switch (spec.family) {
    case Family::A: return type_a(spec.rank);
    case Family::B: return type_bc(spec.rank, 1, spec.name());
    case Family::C: return type_bc(spec.rank, 2, spec.name());
    case Family::D: return type_d(spec.rank);
    case Family::G: return type_g2();
    case Family::F: return type_f4();
    case Family::H:
        if (spec.rank == 3)
            return gram_basis_type("H3", {{1, 5, 2}, {5, 1, 3}, {2, 3, 1}});
        return gram_basis_type("H4", {{1, 5, 2, 2}, {5, 1, 3, 2}, {2, 3, 1, 3}, {2, 2, 3, 1}});
    case Family::I2: {
        RootSystem rs;
        switch (spec.m) {
        case 3: rs = type_a(2); break;
        case 4: rs = type_bc(2, 1, "B2"); break;
        case 6: rs = type_g2(); break;
        case 5: rs = gram_basis_type("I2(5)", {{1, 5}, {5, 1}}); break;
        default: rs = dihedral_orthonormal(spec.m); break;
        }
        rs.name = spec.name();
        return rs;
    }
    }
    throw CatalogError("unreachable catalog branch");
}

RootSystem a1_on_line() {
    std::vector<Vector> roots;
    push_pair(roots, Vector::unit(1, 0, 0));
    return finalize("A1", std::move(roots), Matrix::identity(1, 0));
}

std::vector<std::size_t> nu_classes_by_root_orbits(const RootSystem& rs) {
    const std::size_t n = rs.roots.size();
    std::vector<std::size_t> cls(n, 0);
    std::size_t next = 0;
    for (std::size_t start = 0; start < n; ++start) {
        if (cls[start])
            continue;
        ++next;
        std::deque<std::size_t> queue{start};
        cls[start] = next;
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t w = 0; w < n; ++w) {
                auto img = rs.find_root(rs.reflections[w] * rs.roots[u]);
                if (!img)
                    throw InternalConsistencyError(rs.name + ": root set not closed under reflections");
                if (!cls[*img]) {
                    cls[*img] = next;
                    queue.push_back(*img);
                }
            }
        }
    }
    return cls;
}

std::vector<std::size_t> classify_reflections(const RootSystem& rs, const Group& group) {
    const auto classes = conjugacy_classes(group);
    std::vector<std::size_t> class_of(group.size());
    for (const auto& c : classes)
        for (auto m : c.members)
            class_of[m] = c.id;
    std::map<std::size_t, std::size_t> nu_of_class;
    std::vector<std::size_t> out(rs.roots.size());
    for (std::size_t r = 0; r < rs.roots.size(); ++r) {
        std::size_t c = class_of[group.reflection_of_root(r)];
        auto it = nu_of_class.try_emplace(c, nu_of_class.size() + 1).first;
        out[r] = it->second;
    }
    return out;
}

}  // namespace calogero
