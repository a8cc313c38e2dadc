#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ppv/module.hpp"
#include "ppv/verma.hpp"

using nlohmann::json;
using namespace ppv;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitError = 1;
constexpr int kExitDefect = 2;
constexpr int kExitNonPolynomial = 3;
constexpr int kExitConfig = 4;

struct Options {
    std::string type = "A2";
    std::string graph_file;
    std::vector<int> lambda = {1, 1};
    int cutoff = 4;
    std::vector<std::uint32_t> primes = {5, 7, 11, 13, 17};
    std::string format = "text";  // text | json
    int jobs = 1;
};

Graph graph_of(const Options& opt) {
    if (opt.graph_file.empty()) return builtin_graph(opt.type);
    std::ifstream f(opt.graph_file);
    if (!f) throw ConfigError("cannot open graph file: " + opt.graph_file);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_graph(ss.str());
}

std::string beta_str(const DimVector& beta) {
    std::string s = "(";
    for (size_t k = 0; k < beta.size(); ++k) s += (k ? "," : "") + std::to_string(beta[k]);
    return s + ")";
}

std::string rat_str(const mpq_class& v) { return v.get_str(); }

/// shared engine stack for one configuration
struct Stack {
    DoubleQuiver dq;
    Catalog cat;
    GrassEngine grass;
    HallEngine hall;

    explicit Stack(const Options& opt)
        : dq(double_quiver(graph_of(opt))),
          cat(build_catalog(dq, opt.cutoff)),
          grass(cat, opt.primes),
          hall(grass) {}

    Weight lambda(const Options& opt) const {
        if (static_cast<int>(opt.lambda.size()) != dq.num_vertices())
            throw ConfigError("lambda needs exactly " +
                              std::to_string(dq.num_vertices()) + " entries");
        return opt.lambda;
    }

    int class_by_name(const std::string& n) const {
        for (size_t k = 0; k < cat.classes().size(); ++k)
            if (cat.classes()[k].name == n) return static_cast<int>(k);
        throw ConfigError("unknown class name: " + n);
    }

    std::vector<DimVector> slices() const {
        std::vector<DimVector> out;
        for (const auto& cl : cat.classes())
            if (std::find(out.begin(), out.end(), cl.beta) == out.end())
                out.push_back(cl.beta);
        return out;
    }
};

std::string class_fingerprint(const Catalog& cat, int class_id) {
    const auto& cls = cat.classes()[class_id];
    std::string fp;
    for (size_t k = 0; k < cls.beta.size(); ++k)
        fp += (k ? "-" : "") + std::to_string(cls.beta[k]);
    for (const auto& ind : cat.indecomposables())
        fp += "-" + std::to_string(hom_dim(ind.rep, cls.rep));
    return fp;
}

std::string delta_str(const Catalog& cat, const DeltaSum& d) {
    if (d.terms.empty()) return "0";
    std::string s;
    for (size_t k = 0; k < d.terms.size(); ++k) {
        const auto& [id, c] = d.terms[k];
        mpq_class a = c < 0 ? mpq_class(-c) : c;
        if (k == 0)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        if (a != 1) s += rat_str(a) + " ";
        s += "d(" + cat.classes()[id].name + ")";
    }
    return s;
}

int cmd_catalog(const Options& opt) {
    Stack st(opt);
    json entries = json::array();
    for (size_t cid = 0; cid < st.cat.classes().size(); ++cid) {
        const auto& cls = st.cat.classes()[cid];
        json names = json::array();
        for (int part : cls.parts) names.push_back(st.cat.indecomposables()[part].name);
        entries.push_back({{"beta", cls.beta},
                           {"fingerprint", class_fingerprint(st.cat, int(cid))},
                           {"decomposition", names}});
        if (opt.format == "text")
            std::cout << beta_str(cls.beta) << "\t" << cls.name << "\t"
                      << class_fingerprint(st.cat, int(cid)) << "\n";
    }
    if (opt.format == "json") std::cout << entries.dump(2) << "\n";
    return kExitPass;
}

void export_operator_matrices(Stack& st, VermaEngine& verma, const Weight& lambda,
                              const std::string& file) {
    // dual operator matrices per slice: columns indexed by the classes of the
    // source slice, rows by the classes of the target slice
    json ops = json::array();
    for (const DimVector& beta : st.slices()) {
        for (int i = 0; i < st.dq.num_vertices(); ++i) {
            for (const char* name : {"e_star", "f_star", "h_star"}) {
                std::string op(name);
                DimVector target = beta;
                if (op == "e_star") target[i] -= 1;
                if (op == "f_star") target[i] += 1;
                bool valid = std::all_of(target.begin(), target.end(),
                                         [](int b) { return b >= 0; });
                if (!valid || !st.cat.covers(target)) continue;
                json basis = json::array();
                for (int c : st.cat.classes_of(beta))
                    basis.push_back(class_fingerprint(st.cat, c));
                const std::vector<int>& rows_cls = st.cat.classes_of(target);
                json entries = json::array();
                for (int src : st.cat.classes_of(beta)) {
                    DeltaSum d = verma.delta(src);
                    DeltaSum r = op == "e_star"   ? verma.e_star(i, d)
                                 : op == "f_star" ? verma.f_star(i, d)
                                                  : verma.h_star(i, d);
                    json col = json::array();
                    for (int row : rows_cls) {
                        mpq_class v = 0;
                        for (const auto& [id, c] : r.terms)
                            if (id == row) v = c;
                        col.push_back(rat_str(v));
                    }
                    entries.push_back(col);
                }
                ops.push_back({{"lambda", lambda},
                               {"beta", beta},
                               {"op", op + "_" + std::to_string(i + 1)},
                               {"basis", basis},
                               {"entries", entries}});
            }
        }
    }
    std::ofstream f(file);
    if (!f) throw ConfigError("cannot write " + file);
    f << ops.dump(2) << "\n";
}

int cmd_verify(const Options& opt, const std::string& export_file) {
    Stack st(opt);
    Weight lambda = st.lambda(opt);
    VermaEngine verma(st.hall, lambda);
    std::vector<OperatorReport> reports = verma.verify_relations(opt.cutoff);
    if (is_dominant(lambda)) {
        reports.push_back(verma.integrability_check());
        OperatorReport chr{"character_freudenthal",
                           DimVector(st.dq.num_vertices(), 0), 0, {}};
        for (const auto& row : verma.character(opt.cutoff))
            if (row.l_dim != row.freudenthal) {
                chr.defect = 1;
                chr.witnesses.push_back("slice " + beta_str(row.beta));
            }
        reports.push_back(std::move(chr));
    }
    bool all_pass = true;
    json out = json::array();
    for (const auto& rep : reports) {
        all_pass = all_pass && rep.pass();
        out.push_back({{"relation", rep.relation},
                       {"slice", rep.slice},
                       {"pass", rep.pass()},
                       {"witnesses", rep.witnesses}});
        if (opt.format == "text")
            std::cout << (rep.pass() ? "PASS" : "FAIL") << "\t" << rep.relation << "\t"
                      << beta_str(rep.slice)
                      << (rep.pass() ? "" : "\tdefect=" + rat_str(rep.defect)) << "\n";
    }
    if (opt.format == "json") std::cout << out.dump(2) << "\n";
    if (!export_file.empty()) export_operator_matrices(st, verma, lambda, export_file);
    return all_pass ? kExitPass : kExitDefect;
}

int cmd_character(const Options& opt) {
    Stack st(opt);
    Weight lambda = st.lambda(opt);
    VermaEngine verma(st.hall, lambda);
    auto rows = verma.character(opt.cutoff);
    json out = json::array();
    long total = 0;
    bool dom = is_dominant(lambda);
    if (opt.format == "text") std::cout << "beta\tverma_dim\tl_dim\n";
    for (const auto& row : rows) {
        json r = {{"beta", row.beta}, {"verma_dim", row.verma_dim}};
        if (dom) {
            r["l_dim"] = row.l_dim;
            total += row.l_dim;
        }
        out.push_back(std::move(r));
        if (opt.format == "text")
            std::cout << beta_str(row.beta) << "\t" << row.verma_dim << "\t"
                      << (dom ? std::to_string(row.l_dim) : std::string("-")) << "\n";
    }
    if (opt.format == "text" && dom) std::cout << "L-total\t\t" << total << "\n";
    if (opt.format == "json") std::cout << out.dump(2) << "\n";
    return kExitPass;
}

int cmd_act(const Options& opt, const std::string& word, const std::string& on) {
    Stack st(opt);
    Weight lambda = st.lambda(opt);
    VermaEngine verma(st.hall, lambda);
    int start = (on == "zero" || on == "0") ? st.cat.class_of_parts({})
                                            : st.class_by_name(on);
    DeltaSum d = verma.delta(start);
    std::stringstream ss(word);
    std::vector<std::string> ops;
    std::string tok;
    while (std::getline(ss, tok, ',')) ops.push_back(tok);
    // operator words act right-to-left
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        const std::string& op = *it;
        if (op.size() < 2 || (op[0] != 'e' && op[0] != 'f' && op[0] != 'h'))
            throw ConfigError("bad operator token: " + op);
        int i;
        try {
            i = std::stoi(op.substr(1)) - 1;
        } catch (const std::exception&) {
            throw ConfigError("bad operator token: " + op);
        }
        if (i < 0 || i >= st.dq.num_vertices())
            throw ConfigError("vertex out of range in operator: " + op);
        if (op[0] == 'f')
            d = verma.f_star(i, d);
        else if (op[0] == 'e')
            d = verma.e_star(i, d);
        else
            d = verma.h_star(i, d);
    }
    if (opt.format == "json") {
        json terms = json::array();
        for (const auto& [id, c] : d.terms)
            terms.push_back({{"class", st.cat.classes()[id].name},
                             {"fingerprint", class_fingerprint(st.cat, id)},
                             {"coefficient", rat_str(c)}});
        std::cout << json({{"beta", d.beta}, {"terms", terms}}).dump(2) << "\n";
    } else {
        std::cout << delta_str(st.cat, d) << "\n";
    }
    return kExitPass;
}

int cmd_example_a2(const Options& opt) {
    Options o = opt;
    o.type = "A2";
    o.graph_file.clear();
    o.cutoff = std::max(o.cutoff, 4);
    Stack st(o);
    VermaEngine v(st.hall, {1, 1});
    auto f = [&](int i, const DeltaSum& d) { return v.f_star(i - 1, d); };
    auto dn = [&](const std::string& n) { return v.delta(st.class_by_name(n)); };
    auto show = [&](const DeltaSum& d) { return delta_str(st.cat, d); };

    struct Line {
        std::string label;
        DeltaSum value;
        std::string golden;
    };
    DeltaSum d0 = v.delta_zero();
    std::vector<Line> lines = {
        {"F1 d(0)", f(1, d0), "d(s1)"},
        {"F2 d(0)", f(2, d0), "d(s2)"},
        {"F1 d(s2)", f(1, dn("s2")), "d(s1+s2) + d(q2)"},
        {"F2 d(s1)", f(2, dn("s1")), "d(s1+s2) + d(q1)"},
        {"F1 d(s1+s2)", f(1, dn("s1+s2")), "d(q2+s1)"},
        {"F1 d(q2)", f(1, dn("q2")), "d(q2+s1)"},
        {"F2 d(q1)", f(2, dn("q1")), "d(q1+s2)"},
        {"F2 d(q2+s1)", f(2, dn("q2+s1")), "d(q1+q2)"},
        {"F1 d(q1+s2)", f(1, dn("q1+s2")), "d(q1+q2)"},
        {"F1 d(q1+q2)", f(1, dn("q1+q2")), "0"},
        {"F2 d(q1+q2)", f(2, dn("q1+q2")), "0"},
        {"F2 d(s1+s1)", f(2, dn("s1+s1")), "d(s1+s1+s2) + 2 d(q1+s1)"},
        {"F1 d(s1+s1)", f(1, dn("s1+s1")), "-d(s1+s1+s1)"},
    };

    bool ok = true;
    for (const auto& line : lines) {
        std::string got = show(line.value);
        bool match = got == line.golden;
        ok = ok && match;
        std::cout << line.label << " = " << got
                  << (match ? "" : "   [MISMATCH, expected " + line.golden + "]") << "\n";
    }
    // the two published values of F2 d(s1+s2) contradict each other; report
    // the computed value and which published statement it confirms
    std::string got = show(f(2, dn("s1+s2")));
    std::cout << "note: published statements give both F2 d(s1+s2) = d(q1+s2) and "
                 "F2 d(s1+s2) = d(q1+q2); computed value is "
              << got << ", confirming the "
              << (got == "d(q1+s2)" ? "first" : "second") << "\n";
    ok = ok && got == "d(q1+s2)";
    std::cout << (ok ? "example-a2: all identities match\n" : "example-a2: MISMATCH\n");
    return ok ? kExitPass : kExitDefect;
}

int cmd_pairing_matrix(const Options& opt, const std::vector<int>& beta_arg) {
    Stack st(opt);
    std::vector<DimVector> slices;
    if (!beta_arg.empty()) {
        DimVector beta = beta_arg;
        if (static_cast<int>(beta.size()) != st.dq.num_vertices())
            throw ConfigError("beta needs one entry per vertex");
        if (!st.cat.covers(beta)) throw ConfigError("beta outside the catalog cutoff");
        slices.push_back(beta);
    } else {
        slices = st.slices();
    }
    json out = json::array();
    for (const DimVector& beta : slices) {
        const std::vector<int>& cls = st.cat.classes_of(beta);
        std::vector<Word> words = words_of_content(beta);
        if (opt.format == "text") {
            std::cout << "slice " << beta_str(beta) << "\nword";
            for (int c : cls) std::cout << "\t" << st.cat.classes()[c].name;
            std::cout << "\n";
        }
        json rows = json::array();
        for (const Word& w : words) {
            std::string ws;
            for (size_t k = 0; k < w.size(); ++k)
                ws += (k ? "," : "") + std::to_string(w[k] + 1);
            json row = json::array();
            if (opt.format == "text") std::cout << ws;
            for (int c : cls) {
                long val = st.hall.eval_word(w, c);
                row.push_back(val);
                if (opt.format == "text") std::cout << "\t" << val;
            }
            if (opt.format == "text") std::cout << "\n";
            rows.push_back({{"word", ws}, {"values", row}});
        }
        json names = json::array();
        for (int c : cls) names.push_back(st.cat.classes()[c].name);
        out.push_back({{"beta", beta}, {"classes", names}, {"rows", rows}});
    }
    if (opt.format == "json") std::cout << out.dump(2) << "\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Verma-module engine over preprojective-algebra module varieties"};
    app.set_config("--config", "", "key=value configuration file");

    Options opt;
    app.add_option("--type", opt.type, "builtin graph name (A1..A4, D4)");
    app.add_option("--graph-file", opt.graph_file, "graph description file");
    app.add_option("--lambda", opt.lambda, "highest weight, comma separated")
        ->delimiter(',');
    app.add_option("--cutoff", opt.cutoff, "height cutoff for the catalog")
        ->check(CLI::PositiveNumber);
    app.add_option("--primes", opt.primes, "point-count primes (distinct, >= 5)")
        ->delimiter(',');
    app.add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", opt.jobs, "worker cap (evaluation is sequential)");

    app.fallthrough();  // global options may follow the subcommand
    auto* c_catalog = app.add_subcommand("catalog", "list iso-classes per slice");
    auto* c_verify = app.add_subcommand("verify", "run the relation suites");
    std::string export_file;
    c_verify->add_option("--export-operators", export_file,
                         "write dual operator matrices as JSON");
    auto* c_char = app.add_subcommand("character", "graded dimension table");
    auto* c_act = app.add_subcommand("act", "apply a dual operator word");
    std::string word, on = "zero";
    c_act->add_option("--word", word, "comma list like f2,f1,e1, applied right-to-left")
        ->required();
    c_act->add_option("--on", on, "'zero' or a class name");
    auto* c_ex =
        app.add_subcommand("example-a2", "recompute the A2 highest-weight example");
    auto* c_pm = app.add_subcommand("pairing-matrix", "word x class evaluation matrix");
    std::vector<int> beta_arg;
    c_pm->add_option("--beta", beta_arg, "restrict to one slice, comma separated")
        ->delimiter(',');
    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
        for (size_t a = 0; a < opt.primes.size(); ++a) {
            if (opt.primes[a] < 5) throw ConfigError("primes must be >= 5");
            for (size_t b = a + 1; b < opt.primes.size(); ++b)
                if (opt.primes[a] == opt.primes[b])
                    throw ConfigError("primes must be distinct");
        }
        if (*c_catalog) return cmd_catalog(opt);
        if (*c_verify) return cmd_verify(opt, export_file);
        if (*c_char) return cmd_character(opt);
        if (*c_act) return cmd_act(opt, word, on);
        if (*c_ex) return cmd_example_a2(opt);
        if (*c_pm) return cmd_pairing_matrix(opt, beta_arg);
        return kExitConfig;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cout << json({{"error", {{"type", "ConfigError"}, {"message", e.what()}}}})
                         .dump()
                  << "\n";
        return kExitConfig;
    } catch (const NonPolynomialCount& e) {
        std::cout << json({{"error",
                            {{"type", "NonPolynomialCount"}, {"message", e.what()}}}})
                         .dump()
                  << "\n";
        return kExitNonPolynomial;
    } catch (const ConfigError& e) {
        std::cout << json({{"error", {{"type", "ConfigError"}, {"message", e.what()}}}})
                         .dump()
                  << "\n";
        return kExitConfig;
    } catch (const Error& e) {
        std::cout << json({{"error", {{"type", "EngineError"}, {"message", e.what()}}}})
                         .dump()
                  << "\n";
        return kExitError;
    }
}
