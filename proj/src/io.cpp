#include "mhilb/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "mhilb/error.hpp"
#include "mhilb/grothendieck.hpp"

namespace mhilb::io {

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

json big(const Int& x) { return x.get_str(); }
json big(const Rat& x) { return x.get_str(); }

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::InvalidInput, what); }

long long as_int(const json& j, const std::string& what) {
    if (j.is_number_integer()) return j.get<long long>();
    if (j.is_string()) {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(j.get<std::string>(), &pos);
            if (pos == j.get<std::string>().size()) return v;
        } catch (const std::exception&) {
        }
    }
    bad(what + ": expected an integer");
}

std::vector<long long> as_int_vector(const json& j, const std::string& what) {
    if (!j.is_array()) bad(what + ": expected an array");
    std::vector<long long> v;
    for (const auto& x : j) v.push_back(as_int(x, what));
    return v;
}

Rat as_rat(const json& j, const std::string& what) {
    if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>())));
    if (j.is_string()) {
        Rat q;
        if (q.set_str(j.get<std::string>(), 10) != 0) bad(what + ": malformed rational");
        if (q.get_den() == 0) bad(what + ": zero denominator");
        q.canonicalize();
        return q;
    }
    bad(what + ": expected an integer or a rational string");
}

}  // namespace

Degree degree_from_json(const Grading& g, const json& j) {
    auto flat = as_int_vector(j, "degree");
    if (flat.size() != g.space().width())
        fail(ErrorCode::DimensionMismatch, "degree has " + std::to_string(flat.size()) + " entries, expected " +
                                               std::to_string(g.space().width()));
    return g.from_flat(flat);
}

json degree_to_json(const Degree& a) { return a.flat(); }

std::vector<Degree> degrees_from_json(const Grading& g, const json& j) {
    if (!j.is_array()) bad("degree list: expected an array");
    std::vector<Degree> D;
    for (const auto& x : j) D.push_back(degree_from_json(g, x));
    return D;
}

json degrees_to_json(const std::vector<Degree>& D) {
    json a = json::array();
    for (const auto& d : D) a.push_back(degree_to_json(d));
    return a;
}

Monomial monomial_from_json(int n, const json& j) {
    auto v = as_int_vector(j, "monomial");
    if (static_cast<int>(v.size()) != n) fail(ErrorCode::DimensionMismatch, "monomial has the wrong length");
    Monomial m;
    for (auto x : v) {
        if (x < 0) bad("monomial: negative exponent");
        m.push_back(static_cast<int>(x));
    }
    return m;
}

json monomial_to_json(const Monomial& m) { return m; }

Grading grading_from_json(const json& j) {
    if (!j.is_object()) bad("grading: expected an object");
    if (j.contains("standard")) return Grading::standard(static_cast<int>(as_int(j["standard"], "grading.standard")));
    if (!j.contains("columns")) bad("grading: missing columns");
    const json& cols = j["columns"];
    if (!cols.is_array()) bad("grading.columns: expected an array");
    int free_rank = j.contains("free_rank") ? static_cast<int>(as_int(j["free_rank"], "grading.free_rank")) : -1;
    std::vector<long long> moduli = j.contains("moduli") ? as_int_vector(j["moduli"], "grading.moduli")
                                                         : std::vector<long long>{};
    std::vector<std::vector<long long>> flat;
    for (const auto& c : cols) flat.push_back(as_int_vector(c, "grading column"));
    if (free_rank < 0) free_rank = flat.empty() ? 0 : static_cast<int>(flat[0].size() - moduli.size());
    int n = j.contains("n") ? static_cast<int>(as_int(j["n"], "grading.n")) : static_cast<int>(flat.size());
    std::vector<Degree> degs;
    for (const auto& f : flat) {
        if (f.size() != static_cast<std::size_t>(free_rank) + moduli.size())
            fail(ErrorCode::DimensionMismatch, "grading: column width does not match free_rank + torsion");
        Degree d;
        d.free.assign(f.begin(), f.begin() + free_rank);
        d.torsion.assign(f.begin() + free_rank, f.end());
        degs.push_back(d);
    }
    return Grading(n, free_rank, moduli, degs);
}

json grading_to_json(const Grading& g) {
    json cols = json::array();
    for (const auto& c : g.columns()) cols.push_back(c.flat());
    return {{"n", g.n()}, {"free_rank", g.free_rank()}, {"moduli", g.moduli()}, {"columns", cols},
            {"positive", g.is_positive()}};
}

HilbertSpec hilbert_from_json(const Grading& g, const json& j) {
    if (!j.is_object()) bad("hilbert: expected an object");
    std::map<Degree, long long> table;
    if (j.contains("table")) {
        if (!j["table"].is_array()) bad("hilbert.table: expected an array");
        for (const auto& e : j["table"]) {
            if (!e.contains("degree") || !e.contains("value")) bad("hilbert.table: entries need degree and value");
            long long v = as_int(e["value"], "hilbert value");
            if (v < 0) bad("hilbert.table: negative value");
            table[degree_from_json(g, e["degree"])] = v;
        }
    }
    std::string tail = j.value("tail", std::string("zero"));
    HilbertSpec h;
    if (tail == "zero") {
        h = HilbertSpec::zero_outside(table);
    } else if (tail == "constant") {
        long long c = as_int(j.at("value"), "hilbert.value");
        if (c < 0) bad("hilbert.value: negative");
        h = HilbertSpec::constant_on_semigroup(c, table);
    } else if (tail == "polynomial") {
        if (!j.contains("poly")) bad("hilbert: polynomial tail needs poly");
        HilbertPolynomial hp{UPoly::parse(j["poly"].get<std::string>()), g.n()};
        if (j.contains("threshold")) {
            h = HilbertSpec::polynomial_tail(hp.g, as_int(j["threshold"], "hilbert.threshold"), g.n(), table);
        } else {
            h = hilbert_function_from_polynomial(hp);
            for (const auto& [d, v] : table) h.table[d] = v;
        }
    } else {
        bad("hilbert.tail: unknown kind '" + tail + "'");
    }
    h.validate(g);
    return h;
}

json hilbert_to_json(const HilbertSpec& h) {
    json t = json::array();
    for (const auto& [d, v] : h.table) t.push_back({{"degree", d.flat()}, {"value", v}});
    json j{{"table", t}};
    switch (h.tail) {
        case TailKind::ZeroOutside: j["tail"] = "zero"; break;
        case TailKind::Constant:
            j["tail"] = "constant";
            j["value"] = h.constant;
            break;
        case TailKind::Polynomial:
            j["tail"] = "polynomial";
            j["poly"] = h.poly.str();
            j["threshold"] = h.threshold;
            break;
    }
    return j;
}

MonomialIdeal ideal_from_json(int n, const json& j) {
    const json& gens = j.is_object() ? j.at("generators") : j;
    if (!gens.is_array()) bad("ideal: expected a generator list");
    std::vector<Monomial> v;
    for (const auto& m : gens) v.push_back(monomial_from_json(n, m));
    return MonomialIdeal(n, v);
}

json ideal_to_json(const MonomialIdeal& I) {
    json gens = json::array(), text = json::array();
    for (const auto& m : I.generators()) {
        gens.push_back(m);
        text.push_back(monomial_str(m));
    }
    return {{"generators", gens}, {"text", text}};
}

namespace {

json var_to_json(const SymVar& v) {
    json j{{"kind", var_kind_name(v.kind)}, {"text", v.str()}};
    json monos = json::array();
    for (const auto& m : v.monos) monos.push_back(m);
    switch (v.kind) {
        case VarKind::Bracket:
        case VarKind::Toric:
            j["degree"] = v.degree.flat();
            j["monomials"] = monos;
            break;
        case VarKind::Stiefel:
            j["row"] = v.row;
            j["monomials"] = monos;
            break;
        case VarKind::Chart: j["monomials"] = monos; break;
        case VarKind::Named: j["name"] = v.name; break;
    }
    return j;
}

}  // namespace

json equations_to_json(const EquationSet& es) {
    json vars = json::array();
    for (const auto& v : es.vars.vars()) vars.push_back(var_to_json(v));
    json eqs = json::array();
    for (const auto& p : es.equations) {
        json terms = json::array();
        for (const auto& [m, c] : p.sorted_terms()) {
            json mono = json::array();
            for (const auto& [v, e] : m) mono.push_back({v, e});
            terms.push_back({{"coefficient", big(c)}, {"monomial", mono}});
        }
        eqs.push_back({{"terms", terms}, {"text", p.str(es.vars)}});
    }
    json by_terms = json::object();
    for (const auto& [k, v] : es.meta.raw_by_terms) by_terms[std::to_string(k)] = v;
    std::map<std::size_t, std::size_t> final_terms;
    for (const auto& p : es.equations) ++final_terms[p.num_terms()];
    json by_final = json::object();
    for (const auto& [k, v] : final_terms) by_final[std::to_string(k)] = v;
    json meta{{"emitter", es.meta.emitter},
              {"raw_count", es.meta.raw_count},
              {"raw_by_terms", by_terms},
              {"count", es.equations.size()},
              {"by_terms", by_final},
              {"info", es.meta.info},
              {"warnings", es.meta.warnings}};
    return {{"variables", vars}, {"equations", eqs}, {"meta", meta}};
}

json support_report_to_json(const SupportReport& r) {
    json ideals = json::array();
    for (const auto& I : r.ideals) ideals.push_back(ideal_to_json(I));
    json wit = json::array();
    for (const auto& w : r.witnesses)
        wit.push_back({{"condition", w.condition},
                       {"ideal", ideal_to_json(w.ideal)},
                       {"degree", w.degree.flat()},
                       {"detail", w.detail}});
    return {{"D", degrees_to_json(r.D)},
            {"conditions",
             {{"g", verdict_name(r.g)}, {"h", verdict_name(r.h)}, {"h_prime", verdict_name(r.h_prime)},
              {"s", verdict_name(r.s)}}},
            {"s_mode", r.s_mode == SyzygyMode::Exact ? "exact" : "sufficient"},
            {"verification", r.verification},
            {"supportive", r.supportive()},
            {"very_supportive", r.very_supportive()},
            {"iterations", r.iterations},
            {"ideals", ideals},
            {"witnesses", wit}};
}

LocalRing local_ring_from_spec(const std::string& model, int m) {
    if (model == "qt") return LocalRing::univariate(m);
    if (model.rfind("zp:", 0) == 0) {
        long p = 0;
        try {
            p = std::stol(model.substr(3));
        } catch (const std::exception&) {
            bad("model: malformed prime in '" + model + "'");
        }
        return LocalRing::integers_at(p, m);
    }
    bad("model: expected zp:PRIME or qt, got '" + model + "'");
}

LocalPoly local_poly_from_json(const LocalRing& R, int n, const json& j) {
    if (!j.is_array()) bad("local polynomial: expected a term list");
    LocalPoly p;
    p.n = n;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2) bad("local polynomial: each term is [coefficient, exponents]");
        Scalar c;
        if (t[0].is_array()) {
            std::vector<Rat> s;
            for (const auto& x : t[0]) s.push_back(as_rat(x, "series coefficient"));
            c = R.from_series(s);
        } else {
            c = R.from_rat(as_rat(t[0], "coefficient"));
        }
        p.add_term(R, monomial_from_json(n, t[1]), c);
    }
    return p;
}

json local_poly_to_json(const LocalRing& R, const LocalPoly& p) {
    json terms = json::array();
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        json c;
        if (R.kind() == LocalRing::Kind::IntegersAtPrime) {
            c = big(it->second.z);
        } else {
            c = json::array();
            for (const auto& x : it->second.s) c.push_back(big(x));
        }
        terms.push_back({c, it->first});
    }
    return terms;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        bad("malformed JSON in " + path + ": " + e.what());
    }
}

}  // namespace mhilb::io
