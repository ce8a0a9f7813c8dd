#include "cli.hpp"

#include "calogero/coxgroup.hpp"
#include "calogero/glc.hpp"
#include "calogero/json_io.hpp"
#include "calogero/verify.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cctype>
#include <ostream>
#include <sstream>
#include <thread>

namespace calogero::cli {

CatalogSpec parse_spec(const std::string& text) {
    std::size_t pos = 0;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
    std::size_t end = text.size();
    while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1])))
        --end;
    if (pos == end)
        throw ParseError("empty root system name", pos);

    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
    if (!std::isalpha(static_cast<unsigned char>(letter)))
        throw ParseError("expected a type letter", pos);
    ++pos;

    auto read_number = [&](const char* what) {
        const std::size_t start = pos;
        while (pos < end && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            throw ParseError(std::string("expected ") + what, start);
        if (pos - start > 6)
            throw ParseError(std::string(what) + " too large", start);
        return std::stoul(text.substr(start, pos - start));
    };

    CatalogSpec spec;
    const std::size_t rank = read_number("rank digits");
    if (letter == 'I') {
        if (rank != 2)
            throw CatalogError("unsupported root system I" + std::to_string(rank) + "; supported: " +
                               supported_catalog());
        if (pos >= end || text[pos] != '(')
            throw ParseError("expected '(' after I2", pos);
        ++pos;
        spec.family = Family::I2;
        spec.rank = 2;
        spec.m = static_cast<unsigned>(read_number("dihedral order"));
        if (pos >= end || text[pos] != ')')
            throw ParseError("expected ')'", pos);
        ++pos;
    } else {
        spec.rank = rank;
        switch (letter) {
        case 'A': spec.family = Family::A; break;
        case 'B': spec.family = Family::B; break;
        case 'C': spec.family = Family::C; break;
        case 'D': spec.family = Family::D; break;
        case 'F': spec.family = Family::F; break;
        case 'G': spec.family = Family::G; break;
        case 'H': spec.family = Family::H; break;
        default:
            throw CatalogError(std::string("unsupported root system ") + letter + std::to_string(rank) +
                               "; supported: " + supported_catalog());
        }
    }
    if (pos != end)
        throw ParseError("unexpected trailing characters", pos);
    check_catalog(spec);
    return spec;
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep))
        out.push_back(item);
    return out;
}

Rational parse_rational(const std::string& s) {
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational number: '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

struct Loaded {
    RootSystem rs;
    Group group;
    std::vector<ConjugacyClass> classes;
};

Loaded load(const RunConfig& cfg) {
    Loaded l;
    l.rs = build_root_system(parse_spec(cfg.type));
    l.group = enumerate_group(l.rs, cfg.element_cap);
    l.classes = conjugacy_classes(l.group);
    return l;
}

void check_nu(const RunConfig& cfg, const RootSystem& rs) {
    if (cfg.nu && cfg.nu->size() != rs.k)
        throw std::invalid_argument("--nu needs " + std::to_string(rs.k) + " values for " + rs.name);
}

std::string strip_label(std::string s) {
    if (s.rfind("str(", 0) == 0 && s.size() > 5 && s.back() == ')')
        return s.substr(4, s.size() - 5);
    if (s.rfind("str", 0) == 0 && s.size() > 3)
        return s.substr(3);
    return s;
}

CountDocument count_document(const Loaded& l) {
    const GLCSystem sys = build_glc_system(l.rs, l.group, l.classes);
    std::vector<std::size_t> order(l.classes.size());
    for (std::size_t j = 0; j < order.size(); ++j)
        order[j] = j;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return l.classes[a].e > l.classes[b].e; });
    const ParamSolution sol = parametric_solve(sys.system, order);
    CountDocument doc{l.rs.name, l.group.size(), l.classes.size(), count_supertraces(l.classes), sol.dimension()};
    doc.agree = doc.q_by_classes == doc.q_by_glc;
    return doc;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const Loaded l = load(cfg);
    VerifyOptions opt;
    opt.dunkl_degree = cfg.degree;
    opt.seed = cfg.seed;
    std::vector<Report> reports;
    if (cfg.suite == "all")
        reports = verify_all(l.rs, l.group, l.classes, opt);
    else
        reports.push_back(run_suite(cfg.suite, l.rs, l.group, l.classes, opt));

    bool ok = true;
    for (const auto& r : reports)
        ok = ok && r.passed();
    if (cfg.format == "json") {
        json list = json::array();
        for (const auto& r : reports)
            list.push_back(report_json(r, cfg.timing));
        out << json{{"type", l.rs.name}, {"passed", ok}, {"reports", list}}.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            out << (r.skipped ? "SKIP" : r.passed() ? "PASS" : "FAIL") << " " << r.suite << " " << r.root_system
                << " cases=" << r.cases;
            for (const auto& [name, count] : r.counters)
                out << " " << name << "=" << count;
            if (!r.note.empty())
                out << " (" << r.note << ")";
            if (cfg.timing)
                out << " " << r.elapsed_seconds << "s";
            out << "\n";
            for (const auto& f : r.failures)
                out << "  element " << f.element << " root " << f.root << ": expected " << f.expected << ", got "
                    << f.got << "\n";
        }
    }
    return ok ? 0 : 1;
}

int cmd_glc(const RunConfig& cfg, std::ostream& out) {
    const Loaded l = load(cfg);
    check_nu(cfg, l.rs);
    const GLCSystem sys = build_glc_system(l.rs, l.group, l.classes);
    const SupertraceSolution sol = solve_glc(sys);
    std::vector<PointRank> points;
    if (cfg.nu)
        points.push_back(rank_at(sys, sol, *cfg.nu));
    else
        for (auto& p : random_points(l.rs.k, cfg.points, cfg.seed))
            points.push_back(rank_at(sys, sol, std::move(p)));
    out << glc_json(l.rs, l.group, l.classes, sys, sol, points).dump(2) << "\n";
    return 0;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
    const Loaded l = load(cfg);
    check_nu(cfg, l.rs);
    const GLCSystem sys = build_glc_system(l.rs, l.group, l.classes);
    const SupertraceSolution sol = solve_glc(sys);

    std::vector<std::string> labels;
    for (const auto& c : l.classes)
        labels.push_back(class_label(l.rs, l.group, l.classes, c.id));
    std::map<std::size_t, Rational> values;
    for (auto f : sol.free_classes)
        values[f] = 0;
    if (cfg.normalization.empty()) {
        values[class_lookup(l.group, l.classes)[l.group.identity()]] = 1;
    } else {
        for (const auto& [name, v] : cfg.normalization) {
            const std::string label = strip_label(name);
            auto it = std::find(labels.begin(), labels.end(), label);
            if (it == labels.end())
                throw std::invalid_argument("unknown class '" + name + "'");
            values[static_cast<std::size_t>(it - labels.begin())] = v;
        }
    }

    const auto table = supertrace_table(sol, values);
    json norm = json::object();
    for (const auto& [c, v] : values)
        norm[labels[c]] = v.get_str();
    json rows = json::array();
    for (std::size_t c = 0; c < l.classes.size(); ++c) {
        json row{{"class", labels[c]},
                 {"E", l.classes[c].e},
                 {"size", l.classes[c].size()},
                 {"str", table[c].to_string()},
                 {"numerator", table[c].numerator.to_string()},
                 {"denominator", table[c].denominator.to_string()}};
        if (cfg.nu) {
            const Scalar den = table[c].denominator.eval(*cfg.nu);
            row["at_nu"] = den.is_zero() ? json(nullptr)
                                         : json((table[c].numerator.eval(*cfg.nu) / den).to_string());
        }
        rows.push_back(row);
    }
    json doc{{"type", l.rs.name}, {"normalization", norm}, {"values", rows}};
    if (cfg.nu) {
        json nu = json::array();
        for (const auto& q : *cfg.nu)
            nu.push_back(q.get_str());
        doc["nu"] = nu;
    }
    out << doc.dump(2) << "\n";
    return 0;
}

struct BatchRow {
    CountDocument count;
    bool suites_pass = false;
    std::string error;
};

int cmd_batch(const RunConfig& cfg, std::ostream& out) {
    const auto catalog = default_catalog(cfg.include_h4);
    std::vector<BatchRow> rows(catalog.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < catalog.size();) {
            try {
                RunConfig one = cfg;
                one.type = catalog[i].name();
                const Loaded l = load(one);
                rows[i].count = count_document(l);
                VerifyOptions opt;
                opt.dunkl_degree = cfg.degree;
                opt.seed = cfg.seed;
                opt.threads = 1;
                rows[i].suites_pass = true;
                for (const auto& r : verify_all(l.rs, l.group, l.classes, opt))
                    rows[i].suites_pass = rows[i].suites_pass && r.passed();
            } catch (const std::exception& e) {
                rows[i].count.type = catalog[i].name();
                rows[i].error = e.what();
            }
        }
    };
    const std::size_t threads = std::min(default_threads(), catalog.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();

    bool ok = true;
    for (const auto& r : rows)
        ok = ok && r.error.empty() && r.suites_pass && r.count.agree;
    if (cfg.format == "json") {
        json list = json::array();
        for (const auto& r : rows) {
            json row = count_json(r.count);
            row["all_suites_pass"] = r.suites_pass;
            if (!r.error.empty())
                row["error"] = r.error;
            list.push_back(row);
        }
        out << json{{"passed", ok}, {"types", list}}.dump(2) << "\n";
    } else {
        out << "type,order,num_classes,Q_by_classes,Q_by_glc,all_suites_pass\n";
        for (const auto& r : rows)
            out << '"' << r.count.type << '"' << "," << r.count.order << "," << r.count.num_classes << ","
                << r.count.q_by_classes << "," << r.count.q_by_glc << "," << (r.suites_pass ? "true" : "false")
                << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

std::vector<Rational> parse_rationals(const std::string& text) {
    std::vector<Rational> out;
    for (const auto& item : split(text, ','))
        out.push_back(parse_rational(item));
    return out;
}

std::vector<std::pair<std::string, Rational>> parse_normalization(const std::string& text) {
    std::vector<std::pair<std::string, Rational>> out;
    for (const auto& item : split(text, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("expected class=value in '" + item + "'");
        out.emplace_back(item.substr(0, eq), parse_rational(item.substr(eq + 1)));
    }
    return out;
}

int run(const RunConfig& cfg, const std::string& command, std::ostream& out) {
    if (command == "roots") {
        out << root_system_json(build_root_system(parse_spec(cfg.type))).dump(2) << "\n";
        return 0;
    }
    if (command == "group") {
        const Loaded l = load(cfg);
        out << group_json(l.rs, l.group, cfg.elements).dump(2) << "\n";
        return 0;
    }
    if (command == "classes") {
        const Loaded l = load(cfg);
        out << classes_json(l.rs, l.group, l.classes).dump(2) << "\n";
        return 0;
    }
    if (command == "count") {
        const CountDocument doc = count_document(load(cfg));
        out << count_json(doc).dump(2) << "\n";
        return doc.agree ? 0 : 1;
    }
    if (command == "glc")
        return cmd_glc(cfg, out);
    if (command == "table")
        return cmd_table(cfg, out);
    if (command == "verify")
        return cmd_verify(cfg, out);
    if (command == "batch")
        return cmd_batch(cfg, out);
    throw std::invalid_argument("unknown command '" + command + "'");
}

namespace {

void error_json(std::ostream& err, const std::string& kind, const std::string& message) {
    err << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Supertrace counting and verification for finite reflection groups", "calogero"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string nu_text, norm_text;
    auto add_type = [&](CLI::App* sub) { sub->add_option("-t,--type", cfg.type, "Root system, e.g. B3 or I2(8)")->required(); };
    auto add_cap = [&](CLI::App* sub) { sub->add_option("--cap", cfg.element_cap, "Group element cap"); };

    auto* roots = app.add_subcommand("roots", "Roots, Gram matrix and couplings");
    add_type(roots);
    auto* group = app.add_subcommand("group", "Group order");
    add_type(group);
    add_cap(group);
    group->add_flag("--elements", cfg.elements, "List every element");
    auto* classes = app.add_subcommand("classes", "Conjugacy classes with E and det");
    add_type(classes);
    add_cap(classes);
    auto* count = app.add_subcommand("count", "Q from classes and from the ground level conditions");
    add_type(count);
    add_cap(count);
    auto* glc = app.add_subcommand("glc", "Ground level conditions and their solution");
    add_type(glc);
    add_cap(glc);
    glc->add_option("--nu", nu_text, "Coupling values, comma separated");
    glc->add_option("--points", cfg.points, "Random rank checks when --nu is absent");
    glc->add_option("--seed", cfg.seed, "Seed for random points");
    auto* table = app.add_subcommand("table", "Supertrace on every class");
    add_type(table);
    add_cap(table);
    table->add_option("--normalize", norm_text, "Values on free classes, e.g. 1=1,C3=1/2");
    table->add_option("--nu", nu_text, "Also evaluate at these couplings");
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    add_type(verify);
    add_cap(verify);
    verify->add_option("--suite", cfg.suite, "all, lemma2, lemma3, theorem4, parity or dunkl-*");
    verify->add_option("--degree", cfg.degree, "Monomial degree bound for Dunkl suites");
    verify->add_option("--seed", cfg.seed, "Seed for sampled suites");
    bool as_json = false;
    verify->add_flag("--json", as_json, "JSON output");
    verify->add_flag("--timing", cfg.timing, "Include elapsed times");
    auto* batch = app.add_subcommand("batch", "count and verify over the catalog");
    batch->add_flag("--include-h4", cfg.include_h4, "Add H4 to the catalog");
    batch->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    batch->add_option("--degree", cfg.degree, "Monomial degree bound for Dunkl suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        error_json(err, "usage", e.what());
        return static_cast<int>(ExitCode::Usage);
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    if (command == "verify")
        cfg.format = as_json ? "json" : "text";
    else if (command == "batch" && batch->count("--format") == 0)
        cfg.format = "csv";

    try {
        if (!nu_text.empty())
            cfg.nu = parse_rationals(nu_text);
        if (!norm_text.empty())
            cfg.normalization = parse_normalization(norm_text);
        return run(cfg, command, out);
    } catch (const ParseError& e) {
        error_json(err, "parse", e.what());
        return static_cast<int>(ExitCode::Usage);
    } catch (const CatalogError& e) {
        error_json(err, "unsupported-type", e.what());
        return static_cast<int>(ExitCode::Usage);
    } catch (const InternalConsistencyError& e) {
        error_json(err, "internal", e.what());
        return static_cast<int>(ExitCode::Internal);
    } catch (const std::invalid_argument& e) {
        error_json(err, "usage", e.what());
        return static_cast<int>(ExitCode::Usage);
    } catch (const std::exception& e) {
        error_json(err, "internal", e.what());
        return static_cast<int>(ExitCode::Internal);
    }
}

}  // namespace calogero::cli
