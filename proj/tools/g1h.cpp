// g1h: exact-integer toolkit for genus-1 horizontal handlebody decompositions.
//
// Subcommands: check, classify, enumerate, markov, orbit, fib, certify,
// minimal, verify-identities, sp-stat.
// Exit codes: 0 success, 2 usage/precondition, 3 non-closing monodromy,
// 4 internal check failure.

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "genus1/certificate.hpp"
#include "genus1/classifier.hpp"

using namespace genus1;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNonClosing = 3;
constexpr int kExitCheckFailure = 4;

struct Output {
    std::ofstream file;
    std::ostream* os{&std::cout};

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::runtime_error("cannot open output file " + path);
        os = &file;
    }
    std::ostream& stream() { return *os; }
};

std::vector<std::string> split_str(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::array<i64, 3> parse_triple(const std::string& s) {
    auto parts = split_str(s, ',');
    if (parts.size() != 3) throw CLI::ValidationError("expected three comma-separated integers");
    return {std::stoll(parts[0]), std::stoll(parts[1]), std::stoll(parts[2])};
}

SignTriple parse_delta(const std::string& s) {
    auto t = parse_triple(s);
    SignTriple d;
    for (int i = 0; i < 3; ++i) {
        if (t[i] != 1 && t[i] != -1) throw CLI::ValidationError("delta entries must be +1/-1");
        d.d[i] = static_cast<int>(t[i]);
    }
    return d;
}

// Parses "p,q:e;p,q:e;..." written with the last-applied factor first, the
// convention used for displaying products of twists.
TwistFactorization parse_factorization(const std::string& s) {
    TwistFactorization f;
    if (s.empty()) return f;
    for (const auto& item : split_str(s, ';')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("factor must look like p,q:+1");
        auto pq = split_str(item.substr(0, colon), ',');
        if (pq.size() != 2) throw CLI::ValidationError("factor must look like p,q:+1");
        std::string es = item.substr(colon + 1);
        int e;
        if (es == "+1" || es == "1" || es == "+") e = 1;
        else if (es == "-1" || es == "-") e = -1;
        else throw CLI::ValidationError("exponent must be +1 or -1");
        f.factors.push_back({{std::stoll(pq[0]), std::stoll(pq[1])}, e});
    }
    std::reverse(f.factors.begin(), f.factors.end());
    return f;
}

std::string factor_to_string(const TwistFactor& t) {
    std::ostringstream os;
    os << t.curve.p << "," << t.curve.q << ":" << (t.exponent > 0 ? "+1" : "-1");
    return os.str();
}

FamilyTag parse_family(const std::string& s) {
    if (s == "f1") return FamilyTag::F1;
    if (s == "f2") return FamilyTag::F2;
    if (s == "f3") return FamilyTag::F3;
    throw CLI::ValidationError("family must be one of f1, f2, f3");
}

std::string residue_str(const ResidueClass& r) {
    std::ostringstream os;
    if (r.modulus == 0) os << r.value << " (exact)";
    else if (r.modulus == 1) os << "any";
    else os << r.value << " (mod " << r.modulus << ")";
    return os.str();
}

std::string ball_str(const RationalBall& b) {
    std::ostringstream os;
    os << (b.orientation > 0 ? "+" : "-") << "B(" << b.p << "," << b.qbar << ")";
    return os.str();
}

struct CsvRow {
    std::vector<std::string> cells;
};

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<CsvRow>& rows) {
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << "\n";
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.cells.size(); ++i) os << (i ? "," : "") << r.cells[i];
        os << "\n";
    }
}

int cmd_check(Output& out, i64 p, i64 q, const RunConfig& cfg) {
    if (p <= 1 || gcd_v(abs_v(p), abs_v(q)) != 1) {
        std::cerr << "check: need p > 1 and gcd(p, q) = 1\n";
        return kExitUsage;
    }
    auto w1 = membership_f1(p, q, cfg.markov_limit);
    auto w2 = membership_f2(p, q, cfg.f2_bound);
    auto w3 = membership_f3(p, q, cfg.a_bound);
    std::optional<FamilyWitness> any = w1 ? w1 : (w2 ? w2 : w3);
    std::ostream& os = out.stream();
    if (cfg.format == "machine") {
        os << "ball: " << p << "," << q << "\n";
        os << "f1: " << (w1 ? "yes" : "no") << "\n";
        if (w1)
            os << "f1-witness: " << w1->params[0] << "," << w1->params[1] << "," << w1->params[2]
               << "\n";
        os << "f2: " << (w2 ? "yes" : "no") << "\n";
        if (w2)
            os << "f2-witness: " << w2->params[0] << "," << w2->params[1] << "," << w2->params[2]
               << "\n";
        os << "f3: " << (w3 ? "yes" : "no") << "\n";
        if (w3)
            os << "f3-witness: " << w3->params[0] << "," << w3->params[1] << "," << w3->params[2]
               << "\n";
        os << "almost-complex: "
           << (any ? (almost_complex_embeddable(p, q, any) ? "yes" : "no") : "unknown") << "\n";
        os << "bounds: " << cfg.markov_limit << "," << cfg.f2_bound << "," << cfg.a_bound << "\n";
        return kExitOk;
    }
    os << "B(" << p << "," << q << ")\n";
    if (w1)
        os << "  f1: yes  (Markov " << w1->params[0] << "," << w1->params[1] << ","
           << w1->params[2] << ", q1 = " << residue_str(w1->q.residues[0]) << ")\n";
    else
        os << "  f1: no   (Markov components searched up to " << cfg.markov_limit << ")\n";
    if (w2)
        os << "  f2: yes  (triple " << w2->params[0] << "," << w2->params[1] << ","
           << w2->params[2] << ", q1 = " << residue_str(w2->q.residues[0]) << ")\n";
    else
        os << "  f2: no   (orbit searched up to coordinate " << cfg.f2_bound << ")\n";
    if (w3)
        os << "  f3: yes  (a=" << w3->params[0] << " b=" << w3->params[1]
           << " eps=" << w3->params[2] << ")\n";
    else
        os << "  f3: no   (odd Fibonacci indices searched up to " << cfg.a_bound << ")\n";
    if (any)
        os << "  almost-complex: " << (almost_complex_embeddable(p, q, any) ? "yes" : "no")
           << "\n";
    else
        os << "  almost-complex: unknown (no family witness)\n";
    return kExitOk;
}

int cmd_classify(Output& out, const std::string& spec, int h1, const RunConfig& cfg) {
    TwistFactorization f = parse_factorization(spec);
    DecompositionInput input{h1, f};
    ManifoldLabel label;
    try {
        label = identify(input);
    } catch (const non_closing_error& e) {
        std::cerr << "classify: " << e.what() << "\n";
        return kExitNonClosing;
    }
    std::ostream& os = out.stream();
    SL2Matrix m = monodromy(f);
    auto rec = recognize_lambda_power(m);
    auto [chi_label, chi_input] = euler_characteristic(label, input);
    if (cfg.format == "machine") {
        os << "label: " << label.to_string() << "\n";
        if (rec) os << "recognized: " << (rec->first > 0 ? "+1" : "-1") << "," << rec->second << "\n";
        os << "chi: " << chi_label << "," << chi_input << "\n";
    } else {
        os << "label: " << label.to_string() << "\n";
        if (rec)
            os << "monodromy: " << (rec->first > 0 ? "+" : "-") << "tau_lambda^" << rec->second
               << "\n";
        os << "chi: " << chi_label << " (label) = " << chi_input << " (1 - h1 + h2)\n";
    }
    if (f.size() == 3) {
        SignTriple d;
        XTriple x{};
        for (int i = 0; i < 3; ++i) d.d[i] = f.factors[i].exponent;
        CurveTriple t{{f.factors[0].curve, f.factors[1].curve, f.factors[2].curve}, d};
        auto xs = x_of_curves(t);
        x = {xs[0], xs[1], xs[2]};
        Solution s(d, x);
        auto desc = descend(s);
        os << "solution: delta=" << d.d[0] << "," << d.d[1] << "," << d.d[2] << " x=" << x[0]
           << "," << x[1] << "," << x[2] << " a=" << s.a << "\n";
        os << "descent:";
        if (desc.steps.empty()) os << " already weakly minimal";
        for (int step : desc.steps) os << " m" << step;
        os << " -> " << desc.terminal.x[0] << "," << desc.terminal.x[1] << ","
           << desc.terminal.x[2] << "\n";
    }
    return kExitOk;
}

int cmd_markov(Output& out, i64 limit, const RunConfig& cfg) {
    if (limit < 1) {
        std::cerr << "markov: limit must be >= 1\n";
        return kExitUsage;
    }
    auto triples = enumerate_markov(limit);
    std::ostream& os = out.stream();
    if (cfg.format == "text") {
        for (const auto& t : triples)
            os << "(" << t.y[0] << "," << t.y[1] << "," << t.y[2] << ")\n";
        return kExitOk;
    }
    std::vector<CsvRow> rows;
    for (const auto& t : triples)
        rows.push_back({{std::to_string(t.y[0]), std::to_string(t.y[1]), std::to_string(t.y[2])}});
    write_csv(os, {"y1", "y2", "y3"}, rows);
    return kExitOk;
}

int cmd_enumerate(Output& out, const std::string& family, i64 bound, const RunConfig& cfg) {
    FamilyTag tag = parse_family(family);
    std::vector<BallTriple> triples = enumerate_family(tag, bound, cfg.jobs);
    std::ostream& os = out.stream();
    if (cfg.format == "text") {
        for (const auto& bt : triples) {
            os << family_name(bt.tag) << " params=" << bt.params[0] << "," << bt.params[1] << ","
               << bt.params[2] << " sign=" << (bt.sign > 0 ? "+1" : "-1") << "  "
               << ball_str(bt.balls[0]) << " u " << ball_str(bt.balls[1]) << " u "
               << ball_str(bt.balls[2]) << "\n";
        }
        return kExitOk;
    }
    std::vector<CsvRow> rows;
    for (const auto& bt : triples) {
        CsvRow r;
        r.cells.push_back(family_name(bt.tag));
        for (int i = 0; i < 3; ++i) r.cells.push_back(std::to_string(bt.params[i]));
        r.cells.push_back(bt.sign > 0 ? "+1" : "-1");
        for (int i = 0; i < 3; ++i) {
            r.cells.push_back(bt.balls[i].orientation > 0 ? "+" : "-");
            r.cells.push_back(std::to_string(bt.balls[i].p));
            r.cells.push_back(std::to_string(bt.balls[i].qbar));
        }
        rows.push_back(r);
    }
    write_csv(os,
              {"family", "param1", "param2", "param3", "sign", "o1", "p1", "q1", "o2", "p2", "q2",
               "o3", "p3", "q3"},
              rows);
    return kExitOk;
}

int cmd_orbit(Output& out, const std::string& delta_s, i64 a, const std::string& triple_s,
              int depth, bool hurwitz_edges, const RunConfig& cfg) {
    SignTriple delta = parse_delta(delta_s);
    auto x = parse_triple(triple_s);
    Solution seed(delta, {x[0], x[1], x[2]});
    if (seed.a != a) {
        std::cerr << "orbit: triple does not satisfy the equation with a = " << a << "\n";
        return kExitUsage;
    }
    struct Edge {
        Solution from, to;
        std::string label;
    };
    std::vector<Edge> edges;
    std::set<Solution> seen{seed};
    std::vector<Solution> frontier{seed};
    for (int d = 0; d < depth; ++d) {
        std::vector<Solution> next_frontier;
        for (const auto& s : frontier) {
            std::vector<std::pair<Solution, std::string>> nexts;
            for (int i = 0; i < 3; ++i)
                nexts.push_back({mutate(s, i), "m" + std::to_string(i + 1)});
            if (hurwitz_edges)
                for (int mv = 1; mv <= 4; ++mv)
                    nexts.push_back({hurwitz_on_solution(s, mv), "h" + std::to_string(mv)});
            for (auto& [t, lab] : nexts) {
                edges.push_back({s, t, lab});
                if (seen.insert(t).second) next_frontier.push_back(t);
            }
        }
        frontier = std::move(next_frontier);
    }
    std::ostream& os = out.stream();
    auto node_name = [&](const Solution& s) {
        std::ostringstream ns;
        if (hurwitz_edges)
            ns << (s.delta.d[0] > 0 ? "+" : "-") << (s.delta.d[1] > 0 ? "+" : "-")
               << (s.delta.d[2] > 0 ? "+" : "-") << "|";
        ns << s.x[0] << "," << s.x[1] << "," << s.x[2];
        return ns.str();
    };
    if (cfg.format == "dot") {
        os << "digraph orbit {\n";
        for (const auto& s : seen) os << "  \"" << node_name(s) << "\";\n";
        for (const auto& e : edges)
            os << "  \"" << node_name(e.from) << "\" -> \"" << node_name(e.to) << "\" [label=\""
               << e.label << "\"];\n";
        os << "}\n";
    } else {
        for (const auto& e : edges)
            os << node_name(e.from) << " -" << e.label << "-> " << node_name(e.to) << "\n";
    }
    return kExitOk;
}

int cmd_minimal(Output& out, const std::string& delta_s, const std::string& triple_s,
                const RunConfig& cfg) {
    SignTriple delta = parse_delta(delta_s);
    auto x = parse_triple(triple_s);
    Solution s(delta, {x[0], x[1], x[2]});
    auto res = descend(s);
    std::ostream& os = out.stream();
    if (cfg.format == "machine") {
        os << "a: " << s.a << "\n";
        os << "steps:";
        for (int st : res.steps) os << " " << st;
        os << "\n";
        os << "terminal: " << res.terminal.x[0] << "," << res.terminal.x[1] << ","
           << res.terminal.x[2] << "\n";
        os << "weakly-minimal: " << (is_weakly_minimal(res.terminal) ? "true" : "false") << "\n";
        return kExitOk;
    }
    os << "a = " << s.a << "\n";
    Solution cur = s;
    os << "  " << cur.x[0] << "," << cur.x[1] << "," << cur.x[2] << "\n";
    for (int st : res.steps) {
        cur = mutate(cur, st - 1);
        os << "  -m" << st << "-> " << cur.x[0] << "," << cur.x[1] << "," << cur.x[2] << "\n";
    }
    os << "terminal is " << (is_minimal(res.terminal) ? "minimal" : "weakly minimal") << " after "
       << res.steps.size() << " steps\n";
    return kExitOk;
}

int cmd_certify(Output& out, const std::string& family, const std::string& y_s,
                const std::string& x_s, i64 a, i64 b, i64 eps, int sign, const RunConfig& cfg) {
    FamilyTag tag = parse_family(family);
    std::array<i64, 3> params{};
    if (tag == FamilyTag::F1) {
        if (y_s.empty()) {
            std::cerr << "certify f1 requires --y y1,y2,y3\n";
            return kExitUsage;
        }
        params = parse_triple(y_s);
    } else if (tag == FamilyTag::F2) {
        if (x_s.empty()) {
            std::cerr << "certify f2 requires --x x1,x2,x3\n";
            return kExitUsage;
        }
        params = parse_triple(x_s);
    } else {
        params = {a, b, eps};
    }
    EmbeddingCertificate cert;
    try {
        cert = make_certificate(tag, params, sign, cfg.a_bound);
    } catch (const std::exception& e) {
        std::cerr << "certify: " << e.what() << "\n";
        return kExitUsage;
    }
    if (!certificate_checks_pass(cert)) {
        std::cerr << "certify: internal checks failed, refusing to emit\n";
        return kExitCheckFailure;
    }
    out.stream() << serialize_certificate(cert);
    return kExitOk;
}

int cmd_fib(Output& out, const std::string& what, i64 n, i64 m, const RunConfig&) {
    std::ostream& os = out.stream();
    if (what == "value") os << fib(n) << "\n";
    else if (what == "lucas") os << lucas(n) << "\n";
    else if (what == "mod") os << fib_mod(n, to_big(m)) << "\n";
    else if (what == "lucas-mod") os << lucas_mod(n, to_big(m)) << "\n";
    else if (what == "rank") {
        if (!is_prime(to_big(n))) {
            std::cerr << "fib rank: " << n << " is not prime\n";
            return kExitUsage;
        }
        os << rank_of_apparition(to_big(n)) << "\n";
    } else if (what == "primitive") {
        auto p = primitive_factor(n);
        if (p) os << *p << "\n";
        else os << "none\n";
    } else {
        std::cerr << "fib: unknown query " << what << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

int cmd_verify_identities(Output& out, i64 max_index) {
    std::ostream& os = out.stream();
    bool all_ok = true;
    for (int id = 1; id <= 9; ++id) {
        FLIdentity ident = static_cast<FLIdentity>(id);
        bool ok = true;
        long long checked = 0;
        if (id == 1 || id == 2 || id == 6) {
            for (i64 n = -max_index; n <= max_index && ok; ++n) {
                ok = identity_check(ident, n);
                ++checked;
            }
        } else if (id == 9) {
            for (i64 n = 1; n <= max_index && ok; ++n)
                for (i64 r = 1; r <= n && ok; ++r) {
                    ok = identity_check(ident, n, r);
                    ++checked;
                }
        } else {
            for (i64 mm = -max_index; mm <= max_index && ok; ++mm)
                for (i64 nn = -max_index; nn <= max_index && ok; ++nn) {
                    ok = identity_check(ident, mm, nn);
                    ++checked;
                }
        }
        os << "I" << id << ": " << (ok ? "pass" : "FAIL") << " (" << checked << " cases)\n";
        all_ok = all_ok && ok;
    }
    return all_ok ? kExitOk : kExitCheckFailure;
}

int cmd_sp_stat(Output& out, i64 a, const RunConfig& cfg) {
    if (a <= 3 || a % 2 == 0) {
        std::cerr << "sp-stat: a must be odd and > 3\n";
        return kExitUsage;
    }
    auto sp = s_p_set(a);
    i64 ps = psi(a);
    std::ostream& os = out.stream();
    if (cfg.format == "machine") {
        os << "a: " << a << "\n";
        os << "F_a: " << fib(a) << "\n";
        os << "psi: " << ps << "\n";
        os << "phi-half: " << euler_phi(a) / 2 << "\n";
        os << "s_p:";
        for (const auto& v : sp) os << " " << v;
        os << "\n";
        return kExitOk;
    }
    os << "a = " << a << ", F_a = " << fib(a) << "\n";
    os << "psi(a) = " << ps << " (phi(a)/2 = " << euler_phi(a) / 2 << ")\n";
    os << "S_p = {";
    bool first = true;
    for (const auto& v : sp) {
        if (!first) os << ", ";
        os << v;
        first = false;
    }
    os << "}  (" << sp.size() << " residues mod F_a)\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-integer toolkit for genus-1 horizontal decompositions"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string out_path;
    app.add_option("--bound", cfg.bound, "generic search bound");
    app.add_option("--a-bound", cfg.a_bound, "largest odd Fibonacci index searched");
    app.add_option("--format", cfg.format, "output format: text, machine, csv, dot")
        ->check(CLI::IsMember({"text", "machine", "csv", "dot"}));
    app.add_option("--jobs", cfg.jobs, "worker threads for enumerations")
        ->check(CLI::PositiveNumber);
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    // check
    i64 arg_p = 0, arg_q = 0;
    auto* sc_check = app.add_subcommand("check", "family membership of one ball B(p,q)");
    sc_check->add_option("p", arg_p, "p > 1")->required();
    sc_check->add_option("q", arg_q, "q, coprime to p")->required();

    // classify
    std::string arg_fact;
    int arg_h1 = 1;
    auto* sc_classify =
        app.add_subcommand("classify", "closed 4-manifold label of a twist factorization");
    sc_classify->add_option("factorization", arg_fact, "e.g. \"1,2:+1;2,1:+1;1,-1:+1\"")
        ->required();
    sc_classify->add_option("--h1", arg_h1, "number of 1-handles (0 or 1, default 1)");

    // enumerate
    std::string arg_family;
    i64 arg_bound = 0;
    auto* sc_enum = app.add_subcommand("enumerate", "all family ball triples up to a bound");
    sc_enum->add_option("family", arg_family, "f1, f2 or f3")->required();
    sc_enum->add_option("--bound", arg_bound, "max |p| over the three balls")->required();

    // markov
    i64 arg_limit = 0;
    auto* sc_markov = app.add_subcommand("markov", "Markov triples up to a component limit");
    sc_markov->add_option("--limit", arg_limit, "max component")->required();

    // orbit
    std::string arg_delta = "1,1,1", arg_triple;
    i64 arg_a = 0;
    int arg_depth = 2;
    bool arg_dot = false, arg_hurwitz = false;
    auto* sc_orbit = app.add_subcommand("orbit", "mutation orbit graph of a solution");
    sc_orbit->add_option("--delta", arg_delta, "sign triple, e.g. 1,1,1");
    sc_orbit->add_option("--a", arg_a, "value of a")->required();
    sc_orbit->add_option("--triple", arg_triple, "start triple x1,x2,x3")->required();
    sc_orbit->add_option("--depth", arg_depth, "BFS depth");
    sc_orbit->add_flag("--dot", arg_dot, "emit DOT (same as --format dot)");
    sc_orbit->add_flag("--hurwitz", arg_hurwitz, "also walk the four Hurwitz transformations");

    // minimal
    std::string arg_mdelta = "1,1,1", arg_mtriple;
    auto* sc_minimal = app.add_subcommand("minimal", "descend a solution to weak minimality");
    sc_minimal->add_option("--delta", arg_mdelta, "sign triple");
    sc_minimal->add_option("--triple", arg_mtriple, "start triple x1,x2,x3")->required();

    // fib
    std::string arg_fwhat;
    i64 arg_fn = 0, arg_fm = 1;
    auto* sc_fib = app.add_subcommand("fib", "Fibonacci/Lucas queries");
    sc_fib->add_option("query", arg_fwhat, "value, lucas, mod, lucas-mod, rank, primitive")
        ->required();
    sc_fib->add_option("n", arg_fn, "index (or prime for rank)")->required();
    sc_fib->add_option("m", arg_fm, "modulus for mod queries");

    // certify
    std::string arg_cfam, arg_cy, arg_cx;
    i64 arg_ca = 0, arg_cb = 0, arg_ceps = -1;
    int arg_csign = 1;
    auto* sc_certify = app.add_subcommand("certify", "emit a fully checked embedding certificate");
    sc_certify->add_option("family", arg_cfam, "f1, f2 or f3")->required();
    sc_certify->add_option("--y", arg_cy, "f1 Markov triple y1,y2,y3");
    sc_certify->add_option("--x", arg_cx, "f2 triple x1,x2,x3");
    sc_certify->add_option("--a", arg_ca, "f3 odd index a");
    sc_certify->add_option("--b", arg_cb, "f3 odd index b");
    sc_certify->add_option("--eps", arg_ceps, "f3 sign eps");
    sc_certify->add_option("--sign", arg_csign, "q-system sign branch (+1/-1)");

    // verify-identities
    i64 arg_vmax = 60;
    auto* sc_verify = app.add_subcommand("verify-identities", "sweep the identity suite I1..I9");
    sc_verify->add_option("--max", arg_vmax, "index sweep bound");

    // sp-stat
    i64 arg_sa = 0;
    auto* sc_sp = app.add_subcommand("sp-stat", "psi(a) and the square-residue set S_p");
    sc_sp->add_option("--a", arg_sa, "odd a > 3")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Output out;
    try {
        out.open(out_path);
        if (sc_check->parsed()) return cmd_check(out, arg_p, arg_q, cfg);
        if (sc_classify->parsed()) return cmd_classify(out, arg_fact, arg_h1, cfg);
        if (sc_enum->parsed()) {
            if (cfg.format == "text") cfg.format = "csv";
            return cmd_enumerate(out, arg_family, arg_bound, cfg);
        }
        if (sc_markov->parsed()) {
            if (cfg.format == "text") cfg.format = "csv";
            return cmd_markov(out, arg_limit, cfg);
        }
        if (sc_orbit->parsed()) {
            if (arg_dot) cfg.format = "dot";
            return cmd_orbit(out, arg_delta, arg_a, arg_triple, arg_depth, arg_hurwitz, cfg);
        }
        if (sc_minimal->parsed()) return cmd_minimal(out, arg_mdelta, arg_mtriple, cfg);
        if (sc_fib->parsed()) return cmd_fib(out, arg_fwhat, arg_fn, arg_fm, cfg);
        if (sc_certify->parsed())
            return cmd_certify(out, arg_cfam, arg_cy, arg_cx, arg_ca, arg_cb, arg_ceps, arg_csign,
                               cfg);
        if (sc_verify->parsed()) return cmd_verify_identities(out, arg_vmax);
        if (sc_sp->parsed()) return cmd_sp_stat(out, arg_sa, cfg);
    } catch (const non_closing_error& e) {
        std::cerr << e.what() << "\n";
        return kExitNonClosing;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitUsage;
}
