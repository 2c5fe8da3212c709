#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "corpus/corpus.hpp"
#include "mhilb/enumeration.hpp"
#include "mhilb/equations.hpp"
#include "mhilb/error.hpp"
#include "mhilb/grothendieck.hpp"
#include "mhilb/io.hpp"
#include "mhilb/local_groebner.hpp"
#include "mhilb/supportive.hpp"
#include "mhilb/tangent.hpp"
#include "mhilb/toric.hpp"

namespace mhilb::cli {

using io::json;

namespace {

[[noreturn]] void bad(const std::string& msg) { fail(ErrorCode::InvalidInput, msg); }

const json& need(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) bad(where + ": missing '" + key + "'");
    return obj.at(key);
}

long long get_int(const json& obj, const char* key, long long dflt) {
    if (!obj.is_object() || !obj.contains(key)) return dflt;
    const json& v = obj.at(key);
    if (!v.is_number_integer()) bad(std::string("task.") + key + ": expected an integer");
    return v.get<long long>();
}

struct Effective {
    SupportOptions support;
    EquationOptions equations;
    std::vector<json> box;  // per-variable bound or null

    json to_json() const {
        return {{"frontier_cap", support.frontier_cap},
                {"iteration_cap", support.iteration_cap},
                {"syzygies", support.mode == SyzygyMode::Exact ? "exact" : "sufficient"},
                {"max_nodes", support.enumeration.max_nodes},
                {"max_results", support.enumeration.max_results},
                {"max_equations", equations.max_equations},
                {"max_minors", equations.max_minors},
                {"box", box}};
    }
};

Effective effective_from(const json& task, int n) {
    Effective e;
    e.support.mode = SyzygyMode::Sufficient;
    const json caps = task.is_object() && task.contains("caps") ? task.at("caps") : json::object();
    e.support.frontier_cap = static_cast<int>(get_int(caps, "frontier", e.support.frontier_cap));
    e.support.iteration_cap = static_cast<int>(get_int(caps, "iterations", e.support.iteration_cap));
    e.support.enumeration.max_nodes = static_cast<std::size_t>(get_int(caps, "max_nodes", 2000000));
    e.support.enumeration.max_results = static_cast<std::size_t>(get_int(caps, "max_results", 200000));
    e.equations.max_equations = static_cast<std::size_t>(get_int(caps, "max_equations", 5000000));
    e.equations.max_minors = static_cast<std::size_t>(get_int(caps, "max_minors", 300000));
    if (caps.contains("exact_syzygies")) {
        if (!caps.at("exact_syzygies").is_boolean()) bad("task.caps.exact_syzygies: expected a boolean");
        if (caps.at("exact_syzygies").get<bool>()) e.support.mode = SyzygyMode::Exact;
    }
    if (e.support.frontier_cap < 1 || e.support.iteration_cap < 1) bad("caps must be positive");
    e.box.assign(static_cast<std::size_t>(std::max(n, 0)), nullptr);
    if (caps.contains("box")) {
        const json& b = caps.at("box");
        if (!b.is_array() || b.size() != e.box.size()) bad("task.caps.box: expected one entry per variable");
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (b[i].is_null()) continue;
            if (!b[i].is_number_integer() || b[i].get<long long>() < 0) bad("task.caps.box: bounds are nonnegative integers");
            e.box[i] = b[i];
        }
    }
    return e;
}

struct Problem {
    std::optional<Grading> g;
    std::optional<HilbertSpec> h;
    json task = json::object();
};

Problem load(const json& problem, bool need_grading, bool need_hilbert) {
    if (!problem.is_object()) bad("problem: expected an object");
    Problem p;
    if (problem.contains("task")) {
        p.task = problem.at("task");
        if (!p.task.is_object()) bad("task: expected an object");
    }
    if (problem.contains("grading")) p.g = io::grading_from_json(problem.at("grading"));
    else if (need_grading) bad("problem: missing 'grading'");
    if (problem.contains("hilbert")) {
        if (!p.g) bad("problem: hilbert block needs a grading");
        p.h = io::hilbert_from_json(*p.g, problem.at("hilbert"));
    } else if (need_hilbert) {
        bad("problem: missing 'hilbert'");
    }
    return p;
}

std::vector<Degree> degrees_or_very_supportive(const Problem& p, const Effective& e, json& extra) {
    if (p.task.contains("D")) return io::degrees_from_json(*p.g, p.task.at("D"));
    auto rep = compute_very_supportive(*p.g, *p.h, {}, e.support);
    if (!rep.very_supportive()) fail(ErrorCode::IterationCap, "no very supportive set found within the caps");
    extra["D_computed"] = io::degrees_to_json(rep.D);
    return rep.D;
}

json hilbert_values(const MonomialIdeal& I, const Grading& g, const std::vector<Degree>& D) {
    json out = json::array();
    for (const auto& a : D) {
        auto v = hilbert_value(I, g, a);
        out.push_back({{"degree", io::degree_to_json(a)},
                       {"value", v.infinite ? json("infinite") : json(v.count)}});
    }
    return out;
}

json cmd_enumerate(const Problem& p, const Effective& e) {
    json r = json::object();
    auto D = degrees_or_very_supportive(p, e, r);
    auto res = enumerate_on(*p.g, *p.h, D, e.support.enumeration);
    json ideals = json::array();
    for (const auto& I : res.ideals) {
        json j = io::ideal_to_json(I);
        j["hilbert_on_D"] = hilbert_values(I, *p.g, D);
        ideals.push_back(j);
    }
    r["D"] = io::degrees_to_json(D);
    r["count"] = res.ideals.size();
    r["nodes"] = res.nodes;
    r["ideals"] = ideals;
    return r;
}

json cmd_supportive(const Problem& p, const Effective& e, bool very) {
    std::vector<Degree> seed;
    if (p.task.contains("seed")) seed = io::degrees_from_json(*p.g, p.task.at("seed"));
    if (p.task.contains("D")) return io::support_report_to_json(check_conditions(*p.g, *p.h, io::degrees_from_json(*p.g, p.task.at("D")), e.support));
    auto rep = very ? compute_very_supportive(*p.g, *p.h, seed, e.support)
                    : compute_supportive(*p.g, *p.h, seed, e.support);
    return io::support_report_to_json(rep);
}

std::string emitter_of(const json& task) {
    if (!task.contains("emitter")) bad("equations: no emitter given (quadratic, fitting, bayer, toric, chart)");
    return task.at("emitter").get<std::string>();
}

json cmd_equations(const json& problem, const Effective& e) {
    const json task = problem.value("task", json::object());
    const std::string emitter = emitter_of(task);
    if (emitter == "bayer") {
        EquationSet es;
        if (task.contains("points")) {
            int n = static_cast<int>(get_int(task, "n", 0));
            if (n < 1) bad("equations bayer: --n must be positive");
            long long m = get_int(task, "points", 0);
            if (m < 1) bad("equations bayer: --points must be positive");
            es = grothendieck_equations({UPoly::constant(Rat(static_cast<long>(m))), n}, GrothendieckFlavor::Bayer, e.equations);
        } else {
            Problem p = load(problem, true, true);
            const HilbertSpec& h = *p.h;
            if (h.tail != TailKind::Polynomial) bad("equations bayer: needs --points or a polynomial Hilbert tail");
            es = grothendieck_equations({h.poly, p.g->n()}, GrothendieckFlavor::Bayer, e.equations);
        }
        return io::equations_to_json(es);
    }
    if (emitter == "toric") {
        Problem p = load(problem, true, false);
        std::vector<Degree> D;
        if (task.contains("D")) {
            D = io::degrees_from_json(*p.g, task.at("D"));
        } else {
            auto gd = graver_degrees(*p.g);
            D.assign(gd.begin(), gd.end());
        }
        return io::equations_to_json(toric_binomials(*p.g, D, e.equations));
    }
    Problem p = load(problem, true, true);
    json extra = json::object();
    auto D = degrees_or_very_supportive(p, e, extra);
    EquationSet es;
    if (emitter == "quadratic") {
        es = quadratic_equations(*p.g, *p.h, D, e.equations);
    } else if (emitter == "fitting") {
        Degree E = io::degree_from_json(*p.g, need(task, "E", "equations fitting"));
        es = determinantal_equations(*p.g, *p.h, D, E, e.equations);
    } else if (emitter == "chart") {
        MonomialIdeal I = io::ideal_from_json(p.g->n(), need(task, "ideal", "equations chart"));
        es = chart_equations(*p.g, *p.h, D, standard_choice_of(I, *p.g, D), e.equations);
    } else {
        bad("equations: unknown emitter '" + emitter + "'");
    }
    json r = io::equations_to_json(es);
    r["D"] = io::degrees_to_json(D);
    for (auto& [k, v] : extra.items()) r[k] = v;
    return r;
}

json cmd_gotzmann(const json& task) {
    const std::string poly = need(task, "poly", "gotzmann").get<std::string>();
    int n = static_cast<int>(get_int(task, "n", 0));
    if (n < 1) bad("gotzmann: --n must be positive");
    HilbertPolynomial hp{UPoly::parse(poly), n};
    auto rep = macaulay_representation(hp.g);
    long d0 = gotzmann_number(hp);
    HilbertSpec h = hilbert_function_from_polynomial(hp);
    json values = json::array();
    Grading g = Grading::standard(n);
    for (long d = 0; d <= d0 + 1; ++d) values.push_back(h.value(g, Degree{{d}, {}}));
    return {{"poly", hp.g.str()}, {"n", n}, {"gotzmann_number", d0}, {"macaulay", rep.b}, {"hilbert_function", values}};
}

json degree_list(const Problem& p) {
    return need(p.task, "degrees", "toric");
}

json cmd_toric(const Problem& p) {
    const Grading& g = *p.g;
    const std::string action = need(p.task, "action", "toric").get<std::string>();
    if (action == "graver") {
        auto gb = graver_basis(kernel_lattice(g), g.n());
        return {{"graver", gb}, {"count", gb.size()}};
    }
    if (action == "degrees") {
        auto gd = graver_degrees(g);
        return {{"degrees", io::degrees_to_json(std::vector<Degree>(gd.begin(), gd.end()))}};
    }
    if (action == "unimodular") {
        auto values = maximal_minor_values(kernel_lattice(g), g.n());
        json mv = json::array();
        for (const auto& v : values) mv.push_back(io::big(v));
        return {{"unimodular", is_unimodular(g)}, {"maximal_minor_values", mv}};
    }
    auto D = io::degrees_from_json(g, degree_list(p));
    if (action == "prime") {
        json out = json::array();
        for (const auto& a : D) out.push_back({{"degree", io::degree_to_json(a)}, {"prime", is_prime_degree(g, a)}});
        return {{"degrees", out}};
    }
    if (action == "integral") {
        json out = json::array();
        for (const auto& a : D) {
            auto rep = integral_degree_report(g, a);
            json verts = json::array();
            for (const auto& v : rep.offending_vertices) {
                json row = json::array();
                for (const auto& x : v) row.push_back(io::big(x));
                verts.push_back(row);
            }
            out.push_back({{"degree", io::degree_to_json(a)}, {"integral", rep.integral}, {"empty", rep.empty},
                           {"offending_vertices", verts}});
        }
        return {{"degrees", out}};
    }
    if (action == "supernormal") {
        auto rep = supernormal_on(g, D);
        json out = json::array();
        for (const auto& en : rep.entries)
            out.push_back({{"degree", io::degree_to_json(en.degree)}, {"prime", en.prime}, {"integral", en.integral}});
        return {{"supernormal_on_sample", rep.supernormal_on_sample()}, {"degrees", out}};
    }
    bad("toric: unknown action '" + action + "'");
}

json cmd_tangent(const Problem& p) {
    MonomialIdeal I = io::ideal_from_json(p.g->n(), need(p.task, "ideal", "tangent"));
    auto rep = tangent_space(I, *p.g);
    return {{"ideal", io::ideal_to_json(I)},
            {"dimension", rep.dimension},
            {"unknowns", rep.unknowns},
            {"constraints", rep.constraints},
            {"rank", rep.rank}};
}

json cmd_local_gb(const json& task) {
    const std::string model = need(task, "model", "local-gb-check").get<std::string>();
    int m = static_cast<int>(get_int(task, "m", 0));
    if (m < 1) bad("local-gb-check: --m must be positive");
    LocalRing R = io::local_ring_from_spec(model, m);
    const json& input = need(task, "input", "local-gb-check");
    int n = static_cast<int>(get_int(input, "n", 0));
    if (n < 1) bad("local-gb-check: input.n must be positive");
    std::string order = input.value("order", std::string("lex"));
    TermOrder o = TermOrder::Lex;
    if (order == "grlex") o = TermOrder::GrLex;
    else if (order != "lex") bad("local-gb-check: order must be lex or grlex");
    std::vector<LocalPoly> F;
    for (const auto& f : need(input, "polys", "local-gb-check input")) F.push_back(io::local_poly_from_json(R, n, f));
    auto res = buchberger_check(R, F, o);
    json r{{"ring", R.str()}, {"order", order}, {"groebner", res.groebner}, {"pairs_checked", res.pairs_checked},
           {"initial_ideal", io::ideal_to_json(initial_ideal(R, F, o))}};
    if (res.failing_pair) {
        r["failing_pair"] = {res.failing_pair->first, res.failing_pair->second};
        r["failing_remainder"] = io::local_poly_to_json(R, res.failing_remainder);
    }
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) bad("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json parse_document(const std::string& text, const std::string& where) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        bad(where + ": " + e.what());
    }
}

}  // namespace

json execute(const std::string& sub, const json& problem) {
    const json task = problem.is_object() ? problem.value("task", json::object()) : json::object();
    int n = 0;
    if (problem.is_object() && problem.contains("grading")) n = io::grading_from_json(problem.at("grading")).n();
    Effective e = effective_from(task, n);
    json result;
    try {
        if (sub == "enumerate") result = cmd_enumerate(load(problem, true, true), e);
        else if (sub == "supportive") result = cmd_supportive(load(problem, true, true), e, false);
        else if (sub == "very-supportive") result = cmd_supportive(load(problem, true, true), e, true);
        else if (sub == "equations") result = cmd_equations(problem, e);
        else if (sub == "gotzmann") result = cmd_gotzmann(task);
        else if (sub == "toric") result = cmd_toric(load(problem, true, false));
        else if (sub == "tangent") result = cmd_tangent(load(problem, true, false));
        else if (sub == "local-gb-check") result = cmd_local_gb(task);
        else bad("unknown subcommand '" + sub + "'");
    } catch (const json::exception& ex) {
        bad(std::string("problem: ") + ex.what());
    }
    return {{"tool_version", io::kToolVersion},
            {"command", sub},
            {"problem_hash", io::fnv1a_hex(problem.dump())},
            {"effective", e.to_json()},
            {"result", result}};
}

std::string summarize(const json& a) {
    const std::string cmd = a.value("command", std::string());
    const json& r = a.at("result");
    std::ostringstream os;
    os << cmd << ": ";
    if (cmd == "enumerate") {
        os << r.at("count").get<std::size_t>() << " ideals on D = " << r.at("D").dump();
    } else if (cmd == "supportive" || cmd == "very-supportive") {
        os << "D = " << r.at("D").dump() << ", g=" << r["conditions"]["g"].get<std::string>()
           << " h=" << r["conditions"]["h"].get<std::string>() << " h'=" << r["conditions"]["h_prime"].get<std::string>()
           << " s=" << r["conditions"]["s"].get<std::string>() << ", " << r.at("ideals").size() << " ideals";
    } else if (cmd == "equations") {
        os << r["meta"]["count"].get<std::size_t>() << " equations (" << r["meta"]["emitter"].get<std::string>()
           << "), by terms " << r["meta"]["by_terms"].dump();
    } else if (cmd == "gotzmann") {
        os << "g = " << r.at("poly").get<std::string>() << ", d0 = " << r.at("gotzmann_number").get<long>();
    } else if (cmd == "tangent") {
        os << "dimension " << r.at("dimension").get<std::size_t>();
    } else if (cmd == "local-gb-check") {
        os << (r.at("groebner").get<bool>() ? "Groebner" : "not Groebner") << " over " << r.at("ring").get<std::string>()
           << " (" << r.at("pairs_checked").get<std::size_t>() << " pairs)";
    } else {
        os << r.dump();
    }
    return os.str();
}

namespace {

// Regression problems shipped in corpus/problems/<name>.json with artifacts corpus/expected/<name>.json.
int run_regressions(const std::string& dir, std::ostream& out) {
    namespace fs = std::filesystem;
    const fs::path problems = fs::path(dir) / "problems", expected = fs::path(dir) / "expected";
    if (!fs::is_directory(problems)) {
        out << "FAIL regression corpus missing at " << problems.string() << "\n";
        return 1;
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(problems))
        if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    int failures = 0;
    for (const auto& f : files) {
        json problem = parse_document(read_file(f.string()), f.string());
        const std::string sub = problem.at("task").at("subcommand").get<std::string>();
        json got = execute(sub, problem);
        const fs::path want_path = expected / f.filename();
        bool ok = fs::exists(want_path) && parse_document(read_file(want_path.string()), want_path.string()) == got;
        out << (ok ? "PASS" : "FAIL") << " [regression] " << f.stem().string() << " (" << sub << ")\n";
        failures += !ok;
    }
    return failures;
}

void add_value(json& task, const char* key, const std::string& v) {
    if (!v.empty()) task[key] = v;
}

json parse_box(const std::string& spec, int n) {
    json box = json::array();
    for (int i = 0; i < n; ++i) box.push_back(nullptr);
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) bad("--box: expected i:B entries");
        int i = 0;
        long long b = 0;
        try {
            i = std::stoi(item.substr(0, colon));
            b = std::stoll(item.substr(colon + 1));
        } catch (const std::exception&) {
            bad("--box: malformed entry '" + item + "'");
        }
        if (i < 0 || i >= n || b < 0) bad("--box: entry '" + item + "' out of range");
        box[static_cast<std::size_t>(i)] = b;
    }
    return box;
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"Multigraded Hilbert scheme computations"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_path, format = "json", box, emitter;
    long long cap_degrees = 0, cap_iter = 0;
    bool exact = false;
    app.add_option("--out", out_path, "write the JSON artifact to PATH");
    app.add_option("--format", format, "stdout format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--box", box, "per-variable bounds i:B,...");
    app.add_option("--cap-degrees", cap_degrees, "degree frontier cap")->check(CLI::PositiveNumber);
    app.add_option("--cap-iter", cap_iter, "fixed-point iteration cap")->check(CLI::PositiveNumber);
    app.add_flag("--exact-syzygies", exact, "use minimal syzygy degrees for condition (s)");
    app.add_option("--emitter", emitter, "equation emitter")
        ->check(CLI::IsMember({"quadratic", "fitting", "bayer", "toric", "chart"}));

    std::string file, kind, poly, model, input, action, dir;
    long long points = 0, nvars = 0, precision = 0;
    std::vector<int> criteria;
    std::vector<std::string> degrees;

    auto* en = app.add_subcommand("enumerate", "monomial ideals with Hilbert function h on D");
    en->add_option("problem", file)->required();
    auto* su = app.add_subcommand("supportive", "compute or check a supportive set");
    su->add_option("problem", file)->required();
    auto* vs = app.add_subcommand("very-supportive", "compute or check a very supportive set");
    vs->add_option("problem", file)->required();
    // equations and toric take [emitter|action] [problem]; either may come from the task block instead
    std::vector<std::string> eq_args, to_args;
    auto* eq = app.add_subcommand("equations", "emit defining equations");
    eq->add_option("args", eq_args, "[emitter] [problem]")->expected(0, 2);
    eq->add_option("--points", points, "number of points (bayer)");
    eq->add_option("--n", nvars, "number of variables (bayer)");
    auto* go = app.add_subcommand("gotzmann", "Gotzmann number of a Hilbert polynomial");
    go->add_option("problem", file);
    go->add_option("--poly", poly);
    go->add_option("--n", nvars);
    auto* to = app.add_subcommand("toric", "Graver bases and degree predicates");
    to->add_option("args", to_args, "[action] problem")->expected(1, 2);
    to->add_option("--degree", degrees, "degree as comma separated flat coordinates (repeatable)")->allow_extra_args(false);
    auto* ta = app.add_subcommand("tangent", "tangent space dimension at a monomial ideal");
    ta->add_option("problem", file)->required();
    auto* lg = app.add_subcommand("local-gb-check", "Buchberger criterion over a local ring");
    lg->add_option("problem", file);
    lg->add_option("--model", model);
    lg->add_option("--m", precision);
    lg->add_option("--input", input);
    auto* co = app.add_subcommand("corpus", "run the acceptance criteria and the regression corpus");
    co->add_option("--criterion", criteria, "run only these criteria");
    co->add_option("--dir", dir, "corpus directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (co->parsed()) {
            int failures = 0;
            auto ids = criteria.empty() ? corpus::criterion_ids() : std::vector<int>(criteria.begin(), criteria.end());
            for (int id : ids) {
                auto r = corpus::run_criterion(id);
                std::cout << corpus::summary_line(r) << "\n";
                for (const auto& line : r.checks)
                    if (!r.pass) std::cout << "    " << line << "\n";
                failures += !r.pass;
            }
            if (criteria.empty()) failures += run_regressions(dir.empty() ? corpus::corpus_dir() : dir, std::cout);
            return failures == 0 ? 0 : 1;
        }

        CLI::App* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        static const std::set<std::string> kEmitters = {"quadratic", "fitting", "bayer", "toric", "chart"};
        static const std::set<std::string> kActions = {"graver",   "degrees",    "prime",
                                                       "integral", "unimodular", "supernormal"};
        auto split_args = [&](const std::vector<std::string>& args, const std::set<std::string>& words,
                              std::string& word, const char* what) {
            for (const auto& a : args) {
                if (words.count(a) && word.empty()) word = a;
                else if (file.empty()) file = a;
                else bad(std::string(what) + ": unexpected argument '" + a + "'");
            }
        };
        if (name == "equations") split_args(eq_args, kEmitters, kind, "equations");
        if (name == "toric") {
            split_args(to_args, kActions, action, "toric");
            if (file.empty()) bad("toric: a problem file is required");
        }
        json problem = json::object();
        if (!file.empty()) problem = parse_document(read_file(file), file);
        if (!problem.is_object()) bad("problem: expected an object");
        json& task = problem["task"];
        if (task.is_null()) task = json::object();
        json caps = task.value("caps", json::object());
        if (cap_degrees) caps["frontier"] = cap_degrees;
        if (cap_iter) caps["iterations"] = cap_iter;
        if (exact) caps["exact_syzygies"] = true;
        if (!box.empty()) {
            if (!problem.contains("grading")) bad("--box needs a problem file with a grading");
            caps["box"] = parse_box(box, io::grading_from_json(problem.at("grading")).n());
        }
        if (!caps.empty()) task["caps"] = caps;
        if (name == "equations") {
            if (!kind.empty() && !emitter.empty() && kind != emitter) bad("equations: emitter given twice with different values");
            add_value(task, "emitter", kind.empty() ? emitter : kind);
            if (points) task["points"] = points;
            if (nvars) task["n"] = nvars;
        } else if (name == "gotzmann") {
            add_value(task, "poly", poly);
            if (nvars) task["n"] = nvars;
        } else if (name == "toric") {
            add_value(task, "action", action);
            if (!degrees.empty()) {
                json ds = json::array();
                for (const auto& d : degrees) {
                    json flat = json::array();
                    std::stringstream ss(d);
                    std::string x;
                    while (std::getline(ss, x, ',')) {
                        try {
                            flat.push_back(std::stoll(x));
                        } catch (const std::exception&) {
                            bad("--degree: malformed '" + d + "'");
                        }
                    }
                    ds.push_back(flat);
                }
                task["degrees"] = ds;
            }
        } else if (name == "local-gb-check") {
            add_value(task, "model", model);
            if (precision) task["m"] = precision;
            if (!input.empty()) task["input"] = parse_document(read_file(input), input);
        }

        json artifact = execute(name, problem);
        const std::string text = artifact.dump(2) + "\n";
        if (!out_path.empty()) {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) bad("cannot write " + out_path);
            out << text;
        }
        if (format == "text" || !out_path.empty()) std::cout << summarize(artifact) << "\n";
        else std::cout << text;
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
        return exit_status_for(e.code());
    } catch (const json::exception& e) {
        std::cerr << "error: INVALID_INPUT: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: INTERNAL: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace mhilb::cli
