#include "reesdeg/script.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include <json.hpp>

#include "reesdeg/closure.hpp"
#include "reesdeg/filtration.hpp"
#include "reesdeg/groebner.hpp"
#include "reesdeg/hilbert.hpp"
#include "reesdeg/simplicial.hpp"
#include "reesdeg/sylvester.hpp"

namespace reesdeg {

namespace {

using nlohmann::json;

json series_json(const HilbertSeries& H) {
    json num = json::array();
    for (const auto& c : H.h) num.push_back(c.get_str());
    return json{{"numerator", num}, {"denominator_exponent", H.dim}};
}

json integers_json(const std::vector<Integer>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

std::string integers_text(const std::vector<Integer>& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].get_str();
    os << "]";
    return os.str();
}

std::vector<std::string> split_top_level(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(' || c == '{') ++depth;
        if (c == ')' || c == '}') --depth;
        if (c == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> words(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

struct Flags {
    std::map<std::string, std::string> values;

    bool has(const std::string& k) const { return values.count(k) > 0; }
    unsigned get_unsigned(const std::string& k, unsigned dflt) const {
        auto it = values.find(k);
        if (it == values.end()) return dflt;
        return static_cast<unsigned>(std::stoul(it->second));
    }
    std::string get(const std::string& k, const std::string& dflt) const {
        auto it = values.find(k);
        return it == values.end() ? dflt : it->second;
    }
};

TermOrder order_from_name(const std::string& name) {
    if (name == "grevlex") return TermOrder::grevlex();
    if (name == "lex") return TermOrder::lex();
    if (name == "deglex") return TermOrder::deglex();
    throw Error("unknown order '" + name + "'");
}

struct Session {
    RingPtr ring;
    std::map<std::string, std::vector<Polynomial>> ideals;
    std::map<std::string, SimplicialComplex> complexes;

    void require_ring() const {
        if (!ring) throw Error("no ring declared; start with 'ring x,y,...'");
    }

    std::vector<Polynomial> parse_gens(const std::string& text) const {
        require_ring();
        std::vector<Polynomial> gens;
        for (const auto& part : split_top_level(text, ',')) {
            std::string p = trim(part);
            if (p.empty()) throw Error("empty generator in list");
            gens.push_back(parse_polynomial(ring, p));
        }
        return gens;
    }

    /// Bound name or inline generator list.
    std::vector<Polynomial> resolve_gens(const std::string& arg) const {
        std::string a = trim(arg);
        auto it = ideals.find(a);
        if (it != ideals.end()) return it->second;
        return parse_gens(a);
    }

    Ideal resolve_ideal(const std::string& arg) const {
        require_ring();
        return Ideal(ring, resolve_gens(arg));
    }

    MonomialIdeal resolve_monomial(const std::string& arg) const {
        Ideal I = resolve_ideal(arg);
        if (!I.is_monomial())
            throw Error("this command needs a monomial ideal");
        return I.to_monomial_ideal();
    }

    Parametrization resolve_param(const std::string& arg) const {
        require_ring();
        std::vector<Polynomial> gens = resolve_gens(arg);
        return Parametrization::make(ring, std::move(gens));
    }

    const SimplicialComplex& resolve_complex(const std::string& arg) const {
        auto it = complexes.find(trim(arg));
        if (it == complexes.end()) throw Error("unknown complex '" + trim(arg) + "'");
        return it->second;
    }
};

SimplicialComplex parse_complex(const Session& session, const std::string& body) {
    session.require_ring();
    const RingPtr& ring = session.ring;
    std::vector<std::set<int>> facets;
    for (const auto& raw : split_top_level(body, ',')) {
        std::string f = trim(raw);
        if (f.empty()) continue;
        if (f.front() != '{' || f.back() != '}')
            throw Error("facet must be written {v1,v2,...}");
        std::set<int> facet;
        std::string inner = f.substr(1, f.size() - 2);
        for (const auto& vtx : split_top_level(inner, ',')) {
            std::string v = trim(vtx);
            if (v.empty()) continue;
            int idx = ring->var_index(v);
            if (idx < 0) throw Error("unknown vertex '" + v + "'");
            facet.insert(idx);
        }
        facets.push_back(std::move(facet));
    }
    return SimplicialComplex(ring->var_names(), std::move(facets));
}

struct ParsedCommand {
    std::string name;
    std::string echo;                      // normalized statement echo
    std::vector<std::string> positionals;  // whitespace-separated chunks
    std::string positional_text;           // everything joined
    Flags flags;
};

ParsedCommand parse_command(const std::string& stmt) {
    ParsedCommand out;
    std::vector<std::string> ws = words(stmt);
    out.name = ws[0];
    {
        std::ostringstream os;
        for (size_t i = 0; i < ws.size(); ++i) os << (i ? " " : "") << ws[i];
        out.echo = os.str();
    }
    std::vector<std::string> positional_parts;
    for (size_t i = 1; i < ws.size(); ++i) {
        if (ws[i].rfind("--", 0) == 0) {
            std::string key = ws[i].substr(2);
            std::string value;
            if (i + 1 < ws.size() && ws[i + 1].rfind("--", 0) != 0) {
                value = ws[i + 1];
                ++i;
            }
            out.flags.values[key] = value;
        } else {
            positional_parts.push_back(ws[i]);
        }
    }
    out.positionals = positional_parts;
    std::ostringstream os;
    for (size_t i = 0; i < positional_parts.size(); ++i)
        os << (i ? " " : "") << positional_parts[i];
    out.positional_text = os.str();
    return out;
}

std::string ideal_text(const std::vector<Polynomial>& gens) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < gens.size(); ++i)
        os << (i ? ", " : "") << gens[i].primitive().to_string();
    os << ")";
    return os.str();
}

std::string monomial_ideal_text(const MonomialIdeal& I) {
    return ideal_text(I.to_polynomials());
}

json ideal_json(const std::vector<Polynomial>& gens) {
    json a = json::array();
    for (const auto& g : gens) a.push_back(g.primitive().to_string());
    return a;
}

Report execute(Session& session, const ParsedCommand& cmd) {
    Report rep;
    rep.command = cmd.echo;
    json j{{"command", cmd.name}, {"inputs", cmd.positional_text}};
    std::ostringstream text;
    text << rep.command << ": ";
    auto t0 = std::chrono::steady_clock::now();

    TermOrder ord = order_from_name(cmd.flags.get("order", "grevlex"));

    if (cmd.name == "hilbert") {
        Ideal I = session.resolve_ideal(cmd.positional_text);
        HilbertSeries H = hilbert_series(I, ord);
        text << "series = " << H.to_string();
        j["result"] = {{"series", series_json(H)}};
    } else if (cmd.name == "coeffs") {
        Ideal I = session.resolve_ideal(cmd.positional_text);
        unsigned b = cmd.flags.get_unsigned("window", 1);
        HilbertCoefficients e = samuel_fit(I, b, ord);
        text << "e = " << integers_text(e.e) << " (window " << e.window_b << ")";
        j["result"] = {{"e", integers_json(e.e)}, {"window", e.window_b}};
    } else if (cmd.name == "tn") {
        Ideal I = session.resolve_ideal(cmd.positional_text);
        TrackingReport tr = tracking_number(I, ord);
        text << "tn = " << tr.tn.get_str() << ", e1 = " << tr.e1.get_str()
             << ", torsion = " << tr.torsion_mult.get_str();
        j["result"] = {{"tn", tr.tn.get_str()},
                       {"e1", tr.e1.get_str()},
                       {"torsion", tr.torsion_mult.get_str()}};
    } else if (cmd.name == "degrees") {
        MonomialIdeal I = session.resolve_monomial(cmd.positional_text);
        DegreeReport r = degree_report(I);
        text << "dim = " << r.dim << ", deg = " << r.deg.get_str()
             << ", gdeg = " << r.gdeg.get_str() << ", adeg = " << r.adeg.get_str()
             << ", h0 = " << r.h0.get_str();
        j["result"] = {{"dim", r.dim},
                       {"deg", r.deg.get_str()},
                       {"gdeg", r.gdeg.get_str()},
                       {"adeg", r.adeg.get_str()},
                       {"h0", r.h0.get_str()}};
        if (r.extended_degree) {
            text << ", Deg = " << r.extended_degree->get_str();
            j["result"]["extended_degree"] = r.extended_degree->get_str();
        }
    } else if (cmd.name == "decompose") {
        MonomialIdeal I = session.resolve_monomial(cmd.positional_text);
        IrreducibleDecomposition dec = irreducible_decomposition(I);
        text << "components = [";
        json comps = json::array();
        for (size_t i = 0; i < dec.components.size(); ++i) {
            std::string s = monomial_ideal_text(dec.components[i]);
            text << (i ? ", " : "") << s;
            comps.push_back(s);
        }
        text << "], ass = [";
        json ass = json::array();
        for (size_t i = 0; i < dec.ass.size(); ++i) {
            const auto& p = dec.ass[i];
            std::ostringstream ps;
            ps << "(";
            for (size_t k = 0; k < p.vars.size(); ++k)
                ps << (k ? ", " : "") << session.ring->var_name(p.vars[k]);
            ps << ")";
            text << (i ? ", " : "") << ps.str() << ": " << p.mult.get_str()
                 << (p.minimal ? " minimal" : " embedded");
            ass.push_back({{"prime", ps.str()},
                           {"mult", p.mult.get_str()},
                           {"minimal", p.minimal}});
        }
        text << "]";
        j["result"] = {{"components", comps}, {"ass", ass}};
    } else if (cmd.name == "closure") {
        MonomialIdeal I = session.resolve_monomial(cmd.positional_text);
        unsigned m = cmd.flags.get_unsigned("power", 1);
        MonomialIdeal C = integral_closure_power(I, m);
        text << "closure(I^" << m << ") = " << monomial_ideal_text(C);
        j["result"] = {{"power", m}, {"closure", ideal_json(C.to_polynomials())}};
    } else if (cmd.name == "normindex") {
        MonomialIdeal I = session.resolve_monomial(cmd.positional_text);
        unsigned N = cmd.flags.get_unsigned("upto", 4);
        NormalizationReport r = normalization_indices(I, N);
        text << "s0 = " << r.s0 << ", s = " << r.s << ", verified up to "
             << r.verified_up_to << ", spread hint " << r.spread_hint;
        j["result"] = {{"s0", r.s0}, {"s", r.s}, {"spread_hint", r.spread_hint}};
        j["verified_up_to"] = r.verified_up_to;
    } else if (cmd.name == "barcoeffs") {
        MonomialIdeal I = session.resolve_monomial(cmd.positional_text);
        unsigned b = cmd.flags.get_unsigned("window", 1);
        HilbertCoefficients e = bar_coefficients(I, b);
        text << "ebar = " << integers_text(e.e) << " (window " << e.window_b << ")";
        j["result"] = {{"ebar", integers_json(e.e)}, {"window", e.window_b}};
    } else if (cmd.name == "reduction" || cmd.name == "fseq" ||
               cmd.name == "huckaba") {
        if (cmd.positionals.size() != 2)
            throw Error(cmd.name + " needs two bound ideal names: I J");
        Ideal I = session.resolve_ideal(cmd.positionals[0]);
        Ideal J = session.resolve_ideal(cmd.positionals[1]);
        unsigned dflt = cmd.flags.has("max") || cmd.flags.has("upto")
                            ? 0
                            : default_reduction_window(J, ord);
        if (cmd.name == "reduction") {
            unsigned maxr = cmd.flags.get_unsigned("max", dflt);
            auto r = reduction_number(J, I, maxr, ord);
            if (r) {
                text << "r = " << *r;
                j["result"] = {{"r", *r}};
            } else {
                text << "r not found up to " << maxr;
                j["result"] = {{"r", nullptr}, {"searched_up_to", maxr}};
            }
        } else if (cmd.name == "fseq") {
            unsigned N = cmd.flags.get_unsigned("upto", dflt ? dflt + 1 : 6);
            FSequence f = f_sequence(I, J, N, ord);
            text << "f = " << integers_text(f.values);
            j["result"] = {{"f", integers_json(f.values)}};
            if (f.reduction_number) {
                text << ", r = " << *f.reduction_number;
                j["result"]["r"] = *f.reduction_number;
            } else {
                text << ", r not found";
                j["result"]["r"] = nullptr;
            }
        } else {
            unsigned N = cmd.flags.get_unsigned("upto", dflt ? dflt + 1 : 6);
            HuckabaReport r = huckaba_test(I, J, N, ord);
            const char* verdict =
                r.verdict == HuckabaVerdict::AlmostCM      ? "almost CM"
                : r.verdict == HuckabaVerdict::NotAlmostCM ? "not almost CM"
                                                           : "inconclusive";
            text << "e1 = " << r.e1.get_str() << ", sum f = " << r.f_sum.get_str()
                 << ", verdict = " << verdict;
            j["result"] = {{"e1", r.e1.get_str()},
                           {"f_sum", r.f_sum.get_str()},
                           {"verdict", verdict},
                           {"note", r.note}};
            if (r.sally_multiplicity) {
                text << ", sally multiplicity = " << r.sally_multiplicity->get_str();
                j["result"]["sally_multiplicity"] = r.sally_multiplicity->get_str();
            }
        }
    } else if (cmd.name == "sr") {
        const SimplicialComplex& K = session.resolve_complex(cmd.positional_text);
        FHVectors fh = fh_vectors(K);
        SRDegrees d = sr_degrees(K);
        MonomialIdeal I = sr_ideal(K);
        text << "f = " << integers_text(fh.f) << ", h = " << integers_text(fh.h)
             << ", chi = " << fh.chi.get_str() << ", deg = " << d.report.deg.get_str()
             << ", adeg = " << d.report.adeg.get_str() << ", tn = " << d.tn.get_str()
             << ", ideal = " << monomial_ideal_text(I);
        j["result"] = {{"f", integers_json(fh.f)},
                       {"h", integers_json(fh.h)},
                       {"chi", fh.chi.get_str()},
                       {"deg", d.report.deg.get_str()},
                       {"adeg", d.report.adeg.get_str()},
                       {"tn", d.tn.get_str()},
                       {"ideal", ideal_json(I.to_polynomials())}};
    } else if (cmd.name == "mubasis") {
        Parametrization P = session.resolve_param(cmd.positional_text);
        MuBasis mb = mu_basis(P);
        auto col_text = [&](int c) {
            std::ostringstream os;
            os << "[";
            for (int i = 0; i < 3; ++i)
                os << (i ? ", " : "")
                   << mb.phi[static_cast<size_t>(i)][static_cast<size_t>(c)].to_string();
            os << "]";
            return os.str();
        };
        text << "mu = " << mb.mu << ", degrees = (" << mb.mu << ", "
             << (mb.n - mb.mu) << "), column1 = " << col_text(0)
             << ", column2 = " << col_text(1);
        j["result"] = {{"mu", mb.mu},
                       {"column1", col_text(0)},
                       {"column2", col_text(1)},
                       {"cm_rees", cm_rees_test(P)}};
        text << ", cm_rees = " << (j["result"]["cm_rees"].get<bool>() ? "true" : "false");
    } else if (cmd.name == "implicitize") {
        Parametrization P = session.resolve_param(cmd.positional_text);
        MuBasis mb = mu_basis(P);
        EliminationResult r = mb.mu == 1 ? elimination_chain_mu1(P)
                                         : balanced_scheme(P);
        text << "F = " << r.equation.to_string() << ", edeg = " << r.edeg
             << ", power = " << r.power << ", birational = "
             << (r.birational ? "true" : "false");
        j["result"] = {{"F", r.equation.to_string()},
                       {"edeg", r.edeg},
                       {"power", r.power},
                       {"birational", r.birational}};
    } else if (cmd.name == "resultant") {
        Parametrization P = session.resolve_param(cmd.positional_text);
        Polynomial F = resultant_oracle(P);
        text << "F = " << F.primitive().to_string();
        j["result"] = {{"F", F.primitive().to_string()}};
    } else if (cmd.name == "secelim") {
        SecElimReport r{0, 0, {}, Ideal(session.ring)};
        if (cmd.positionals.size() >= 2 &&
            session.ideals.count(cmd.positionals[0])) {
            Ideal J = session.resolve_ideal(cmd.positionals[0]);
            std::ostringstream rest;
            for (size_t i = 1; i < cmd.positionals.size(); ++i)
                rest << (i > 1 ? " " : "") << cmd.positionals[i];
            Polynomial a = parse_polynomial(session.ring, rest.str());
            r = secondary_elim_degree(J, a);
        } else {
            Parametrization P = session.resolve_param(cmd.positional_text);
            r = secondary_elim_degree(P);
        }
        text << "hilbert function of R/(J:a) = "
             << integers_text(r.colon_staircase.per_degree)
             << ", socle = " << r.socle << ", r = " << r.r;
        j["result"] = {{"hilbert_function", integers_json(r.colon_staircase.per_degree)},
                       {"socle", r.socle},
                       {"r", r.r}};
    } else {
        throw Error("unknown command '" + cmd.name + "'");
    }

    auto t1 = std::chrono::steady_clock::now();
    j["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    rep.text = text.str();
    rep.json = j.dump();
    return rep;
}

}  // namespace

ScriptResult run_script(const std::string& text) {
    ScriptResult result;
    Session session;
    for (const auto& raw : split_top_level(text, ';')) {
        std::string stmt = trim(raw);
        if (stmt.empty()) continue;
        std::vector<std::string> ws = words(stmt);
        try {
            if (ws[0] == "ring") {
                std::string rest = trim(stmt.substr(4));
                std::vector<int> weights;
                size_t wpos = rest.find("weights");
                std::string vars_part = rest;
                if (wpos != std::string::npos) {
                    std::string wtext = trim(rest.substr(wpos + 7));
                    vars_part = trim(rest.substr(0, wpos));
                    for (const auto& w : split_top_level(wtext, ','))
                        weights.push_back(std::stoi(trim(w)));
                }
                std::vector<std::string> vars;
                for (const auto& v : split_top_level(vars_part, ','))
                    vars.push_back(trim(v));
                session.ring = PolyRing::make(vars, weights);
                session.ideals.clear();
                session.complexes.clear();
                continue;
            }
            size_t eq = stmt.find('=');
            std::string head = eq == std::string::npos ? "" : trim(stmt.substr(0, eq));
            bool is_binding = eq != std::string::npos && !head.empty() &&
                              words(head).size() == 1 &&
                              head.find_first_of("()+-*/^,") == std::string::npos;
            if (is_binding) {
                std::string name = head;
                std::string body = trim(stmt.substr(eq + 1));
                if (body.rfind("complex", 0) == 0) {
                    session.complexes.erase(name);
                    session.complexes.emplace(
                        name, parse_complex(session, trim(body.substr(7))));
                } else {
                    session.ideals[name] = session.parse_gens(body);
                }
                continue;
            }
            ParsedCommand cmd = parse_command(stmt);
            Report rep = execute(session, cmd);
            result.reports.push_back(std::move(rep));
        } catch (const Error& e) {
            Report rep;
            rep.command = stmt;
            rep.ok = false;
            rep.text = stmt + ": error: " + e.what();
            rep.json = json{{"command", stmt}, {"error", e.what()}}.dump();
            result.reports.push_back(std::move(rep));
            result.ok = false;
        }
    }
    for (const auto& r : result.reports)
        if (!r.ok) result.ok = false;
    return result;
}

std::string render_text(const ScriptResult& r) {
    std::ostringstream os;
    for (const auto& rep : r.reports) os << rep.text << "\n";
    return os.str();
}

std::string render_json(const ScriptResult& r) {
    std::ostringstream os;
    for (const auto& rep : r.reports) os << rep.json << "\n";
    return os.str();
}

}  // namespace reesdeg
