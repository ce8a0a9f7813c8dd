#include "calogero/json_io.hpp"

namespace calogero {

json scalar_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const json& j, int field) { return Scalar::parse(j.get<std::string>(), field); }

json nupoly_json(const NuPoly& p) {
    json terms = json::array();
    for (const auto& [exp, c] : p.terms())
        terms.push_back({{"exp", exp}, {"coef", scalar_json(c)}});
    return {{"k", p.arity()}, {"field", p.field()}, {"terms", terms}};
}

NuPoly nupoly_from_json(const json& j) {
    const auto k = j.at("k").get<std::size_t>();
    const int field = j.at("field").get<int>();
    NuPoly p(k, field);
    for (const auto& t : j.at("terms")) {
        auto exp = t.at("exp").get<NuPoly::Exponent>();
        if (exp.size() != k)
            throw ArityMismatch("exponent length does not match k");
        p += NuPoly::monomial(k, std::move(exp), scalar_from_json(t.at("coef"), field));
    }
    return p;
}

json failure_json(const Failure& f) {
    return {{"element", f.element}, {"root", f.root}, {"expected", f.expected}, {"got", f.got}};
}

Failure failure_from_json(const json& j) {
    return {j.at("element").get<std::string>(), j.at("root").get<std::string>(), j.at("expected").get<std::string>(),
            j.at("got").get<std::string>()};
}

json report_json(const Report& r, bool timing) {
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back(failure_json(f));
    json out{{"suite", r.suite},       {"root_system", r.root_system}, {"cases", r.cases},
             {"passed", r.passed()},   {"skipped", r.skipped},         {"counters", r.counters},
             {"failures", failures}};
    if (!r.note.empty())
        out["note"] = r.note;
    if (timing)
        out["elapsed_seconds"] = r.elapsed_seconds;
    return out;
}

Report report_from_json(const json& j) {
    Report r;
    r.suite = j.at("suite").get<std::string>();
    r.root_system = j.at("root_system").get<std::string>();
    r.cases = j.at("cases").get<std::uint64_t>();
    r.skipped = j.at("skipped").get<bool>();
    r.counters = j.at("counters").get<std::map<std::string, std::uint64_t>>();
    for (const auto& f : j.at("failures"))
        r.failures.push_back(failure_from_json(f));
    r.note = j.value("note", "");
    r.elapsed_seconds = j.value("elapsed_seconds", 0.0);
    return r;
}

json count_json(const CountDocument& c) {
    return {{"type", c.type},
            {"order", c.order},
            {"num_classes", c.num_classes},
            {"Q_by_classes", c.q_by_classes},
            {"Q_by_glc", c.q_by_glc},
            {"agree", c.agree}};
}

CountDocument count_from_json(const json& j) {
    return {j.at("type").get<std::string>(),         j.at("order").get<std::size_t>(),
            j.at("num_classes").get<std::size_t>(),  j.at("Q_by_classes").get<std::size_t>(),
            j.at("Q_by_glc").get<std::size_t>(),     j.at("agree").get<bool>()};
}

namespace {

json vector_json(const Vector& v) {
    json out = json::array();
    for (const auto& s : v.entries())
        out.push_back(scalar_json(s));
    return out;
}

json matrix_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        out.push_back(vector_json(m.row(i)));
    return out;
}

}  // namespace

json root_system_json(const RootSystem& rs) {
    json roots = json::array();
    for (const auto& v : rs.roots)
        roots.push_back(vector_json(v));
    return {{"name", rs.name},     {"dimension", rs.dimension}, {"field_d", rs.field},
            {"k", rs.k},           {"num_roots", rs.size()},    {"roots", roots},
            {"gram", matrix_json(rs.gram)}, {"nu_class", rs.nu_class}};
}

json group_json(const RootSystem& rs, const Group& group, bool with_elements) {
    json out{{"type", rs.name},
             {"order", group.size()},
             {"dimension", group.dimension()},
             {"num_reflections", group.generators().size()}};
    if (with_elements) {
        json elems = json::array();
        for (std::size_t g = 0; g < group.size(); ++g)
            elems.push_back({{"index", g}, {"E", group.grading(g)}, {"matrix", matrix_json(group.matrix(g))}});
        out["elements"] = elems;
    }
    return out;
}

json classes_json(const RootSystem& rs, const Group& group, const std::vector<ConjugacyClass>& classes) {
    json list = json::array();
    for (const auto& c : classes)
        list.push_back({{"id", c.id},
                        {"label", class_label(rs, group, classes, c.id)},
                        {"size", c.size()},
                        {"E", c.e},
                        {"det", c.det},
                        {"representative_matrix", matrix_json(group.matrix(c.representative))}});
    return {{"type", rs.name},
            {"order", group.size()},
            {"num_classes", classes.size()},
            {"Q_by_classes", count_supertraces(classes)},
            {"classes", list}};
}

json glc_json(const RootSystem& rs, const Group& group, const std::vector<ConjugacyClass>& classes,
              const GLCSystem& system, const SupertraceSolution& solution, const std::vector<PointRank>& points) {
    std::vector<std::string> labels;
    for (const auto& c : classes)
        labels.push_back(class_label(rs, group, classes, c.id));

    json rows = json::array();
    for (std::size_t i = 0; i < system.system.rows.size(); ++i) {
        const auto& prov = system.provenance[i];
        json coeffs = json::object();
        for (std::size_t c = 0; c < classes.size(); ++c)
            if (!system.system.rows[i][c].is_zero())
                coeffs[labels[c]] = system.system.rows[i][c].to_string();
        rows.push_back({{"class", labels[prov.class_id]}, {"i", prov.i}, {"j", prov.j}, {"coefficients", coeffs}});
    }

    json free = json::array();
    for (auto f : solution.free_classes)
        free.push_back(labels[f]);

    json expressions = json::array();
    for (std::size_t c = 0; c < classes.size(); ++c) {
        const auto& e = solution.table[c];
        json nums = json::object();
        for (std::size_t f = 0; f < solution.free_classes.size(); ++f)
            nums[labels[solution.free_classes[f]]] = e.numerators[f].to_string();
        expressions.push_back({{"class", labels[c]}, {"E", classes[c].e}, {"denominator", e.denominator.to_string()},
                               {"numerators", nums}});
    }

    // str(1) = 1, other free classes 0
    const std::size_t id_class = class_lookup(group, classes)[group.identity()];
    std::map<std::size_t, Rational> normal;
    for (auto f : solution.free_classes)
        normal[f] = f == id_class ? 1 : 0;
    json table = json::array();
    const auto values = supertrace_table(solution, normal);
    for (std::size_t c = 0; c < classes.size(); ++c)
        table.push_back("str(" + labels[c] + ") = " + values[c].to_string());

    json pts = json::array();
    for (const auto& p : points) {
        json nu = json::array();
        for (const auto& q : p.point)
            nu.push_back(q.get_str());
        pts.push_back({{"nu", nu}, {"rank", p.rank}, {"dimension", p.dimension},
                       {"denominator_zero", p.denominator_zero}});
    }

    return {{"type", rs.name},
            {"k", rs.k},
            {"unknowns", labels},
            {"num_rows", system.system.rows.size()},
            {"rows", rows},
            {"rank", solution.generic_rank},
            {"Q_by_glc", solution.q},
            {"Q_by_classes", count_supertraces(classes)},
            {"free", free},
            {"expressions", expressions},
            {"table", table},
            {"points", pts}};
}

}  // namespace calogero
