#include "homcount/corpus.hpp"
#include "homcount/density.hpp"
#include "homcount/errors.hpp"
#include "homcount/graph.hpp"
#include "homcount/graph_io.hpp"
#include "homcount/hom_engine.hpp"
#include "homcount/report.hpp"
#include "homcount/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hc = homcount;
using ordered_json = nlohmann::ordered_json;

namespace {

// Exit codes shared by every subcommand.
constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;  // property violation or count mismatch
constexpr int kExitParse = 2;
constexpr int kExitUndefined = 3;  // density with an empty codomain
constexpr int kExitBudget = 4;

struct GlobalFlags {
    bool json = false;
    bool csv = false;
    bool naive = false;
    int threads = 1;
    std::uint64_t budget = hc::EngineOptions{}.naive_budget;
    std::uint64_t seed = 42;

    hc::EngineOptions engine() const { return {threads, budget}; }
};

std::string read_all(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool is_family_spec(const std::string& spec) {
    if (spec.size() < 2) return false;
    if (spec[0] != 'K' && spec[0] != 'P' && spec[0] != 'C' && spec[0] != 'E') return false;
    for (std::size_t i = 1; i < spec.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(spec[i]))) return false;
    return true;
}

hc::Graph family_graph(const std::string& spec) {
    int n = 0;
    try {
        n = std::stoi(spec.substr(1));
    } catch (const std::exception&) {
        throw hc::Error("family order in \"" + spec + "\" does not fit an int");
    }
    switch (spec[0]) {
        case 'K': return hc::complete(n);
        case 'P': return hc::path(n);
        case 'C': return hc::cycle(n);
        default: return hc::edgeless(n);
    }
}

std::string first_record(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
    }
    return "";
}

// Accepts a family specifier (K4, P3, C6, E5), a file path, or "-" for stdin.
// Files are read by extension unless `format` forces g6 or el; a .g6 file
// contributes its first record.
hc::Graph load_graph(const std::string& spec, const std::string& format) {
    if (is_family_spec(spec)) return family_graph(spec);

    std::string text;
    std::string effective = format;
    if (spec == "-") {
        text = read_all(std::cin);
        if (effective.empty()) effective = "el";
    } else {
        std::ifstream in(spec, std::ios::binary);
        if (!in) throw hc::Error("cannot open \"" + spec + "\"");
        text = read_all(in);
        if (effective.empty()) {
            if (spec.ends_with(".g6")) effective = "g6";
            else if (spec.ends_with(".el")) effective = "el";
            else
                throw hc::Error("cannot infer format of \"" + spec +
                                "\": expected a .g6 or .el extension or --format");
        }
    }
    if (effective == "g6") return hc::parse_graph6(first_record(text));
    return hc::parse_edge_list(text);
}

std::string graph6_or_size(const hc::Graph& g) {
    try {
        return hc::write_graph6(g);
    } catch (const hc::TooLargeError&) {
        return "(order " + std::to_string(g.order()) + ", too large for graph6)";
    }
}

std::string mapping_str(const hc::VertexMapping& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(i) + "->" + std::to_string(m[i]);
    }
    return out + "]";
}

std::string seconds_str(std::chrono::duration<double> d) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(6) << d.count();
    return out.str();
}

ordered_json report_json(const hc::CountReport& r) {
    ordered_json j;
    j["domain_spec"] = r.domain_spec;
    j["codomain_spec"] = r.codomain_spec;
    j["mappings"] = r.mappings.str();
    j["injective"] = r.injective.str();
    j["homomorphisms"] = r.homomorphisms.str();
    j["density"] = ordered_json{{"num", r.density.num().str()}, {"den", r.density.den().str()}};
    j["fast_path"] = std::string(to_string(r.fast_path));
    j["elapsed"] = r.elapsed.count();
    return j;
}

int cmd_count(const GlobalFlags& flags, const std::string& domain_spec,
              const std::string& codomain_spec, const std::string& format) {
    const hc::Graph g = load_graph(domain_spec, format);
    const hc::Graph f = load_graph(codomain_spec, format);
    hc::CountOptions opts;
    opts.engine = flags.engine();
    opts.force_naive = flags.naive;
    const hc::CountReport report =
        hc::make_count_report(g, f, domain_spec, codomain_spec, opts);

    if (flags.json) {
        std::cout << report_json(report).dump() << "\n";
    } else if (flags.csv) {
        std::cout << "domain_spec,codomain_spec,mappings,injective,homomorphisms,density_num,"
                     "density_den,fast_path,elapsed\n";
        std::cout << report.domain_spec << "," << report.codomain_spec << ","
                  << report.mappings.str() << "," << report.injective.str() << ","
                  << report.homomorphisms.str() << "," << report.density.num().str() << ","
                  << report.density.den().str() << "," << to_string(report.fast_path) << ","
                  << seconds_str(report.elapsed) << "\n";
    } else {
        std::cout << "domain         " << report.domain_spec << "  (order " << g.order()
                  << ", edges " << g.edge_count() << ")\n";
        std::cout << "codomain       " << report.codomain_spec << "  (order " << f.order()
                  << ", edges " << f.edge_count() << ")\n";
        std::cout << "mappings       " << report.mappings.str() << "\n";
        std::cout << "injective      " << report.injective.str() << "\n";
        std::cout << "homomorphisms  " << report.homomorphisms.str() << "\n";
        std::cout << "density        " << report.density.str() << " (" << std::setprecision(6)
                  << report.density.approx() << ")\n";
        std::cout << "fast path      " << to_string(report.fast_path) << "\n";
        std::cout << "elapsed        " << seconds_str(report.elapsed) << " s\n";
    }
    return kExitOk;
}

int cmd_verify(const GlobalFlags& flags, const std::string& selector, const hc::CorpusSpec& spec,
               bool inject_bug) {
    if (inject_bug) hc::testing::inject_count_bias(1);

    std::vector<std::string> selectors;
    if (selector == "all") selectors = hc::all_suite_selectors();
    else selectors.push_back(selector);

    std::vector<hc::SuiteResult> results;
    for (const auto& sel : selectors) results.push_back(hc::run_suite(sel, spec, flags.engine()));
    hc::testing::inject_count_bias(0);

    bool all_passed = true;
    for (const auto& r : results) all_passed = all_passed && r.passed();

    if (flags.json) {
        ordered_json out = ordered_json::array();
        for (const auto& r : results) {
            ordered_json suite;
            suite["selector"] = r.selector;
            suite["description"] = std::string(hc::suite_description(r.selector));
            suite["checks"] = r.checks;
            suite["violations"] = ordered_json::array();
            for (const auto& v : r.violations) {
                ordered_json item;
                item["domain"] = graph6_or_size(v.domain);
                item["codomain"] = graph6_or_size(v.codomain);
                if (v.mapping) item["mapping"] = *v.mapping;
                item["detail"] = v.detail;
                suite["violations"].push_back(item);
            }
            suite["passed"] = r.passed();
            out.push_back(suite);
        }
        std::cout << out.dump() << "\n";
    } else if (flags.csv) {
        std::cout << "selector,checks,violations,passed\n";
        for (const auto& r : results)
            std::cout << r.selector << "," << r.checks << "," << r.violations.size() << ","
                      << (r.passed() ? "true" : "false") << "\n";
    } else {
        constexpr std::size_t kMaxWitnesses = 5;
        for (const auto& r : results) {
            std::cout << std::left << std::setw(10) << r.selector << " checks " << std::setw(6)
                      << r.checks << (r.passed() ? " pass" : " FAIL") << "  ("
                      << hc::suite_description(r.selector) << ")\n";
            std::size_t shown = 0;
            for (const auto& v : r.violations) {
                if (shown == kMaxWitnesses) {
                    std::cout << "  ... and " << (r.violations.size() - shown)
                              << " more violations\n";
                    break;
                }
                std::cout << "  witness: domain " << graph6_or_size(v.domain) << "  codomain "
                          << graph6_or_size(v.codomain);
                if (v.mapping) std::cout << "  mapping " << mapping_str(*v.mapping);
                std::cout << "\n    " << v.detail << "\n";
                ++shown;
            }
        }
        std::cout << (all_passed ? "all suites passed" : "violations found") << "\n";
    }
    return all_passed ? kExitOk : kExitViolation;
}

int cmd_bench(const GlobalFlags& flags, const std::string& domain_spec,
              const std::string& codomain_spec, int repetitions, const std::string& format) {
    const hc::Graph g = load_graph(domain_spec, format);
    const hc::Graph f = load_graph(codomain_spec, format);
    const hc::EngineOptions opts = flags.engine();

    struct Row {
        std::string method;
        int rep;
        hc::Count count;
        std::string fast_path;
        std::uint64_t nodes;
        std::uint64_t prunes;
        double elapsed;
    };
    std::vector<Row> rows;

    for (int rep = 1; rep <= repetitions; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        const hc::Count naive = hc::count_homomorphisms_naive(g, f, opts);
        const std::chrono::duration<double> naive_elapsed =
            std::chrono::steady_clock::now() - start;
        rows.push_back({"naive", rep, naive, "-", 0, 0, naive_elapsed.count()});

        const auto [count, stats] = hc::count_homomorphisms(g, f, opts);
        rows.push_back({"engine", rep, count, std::string(to_string(stats.fast_path)),
                        stats.nodes_expanded, stats.prunes, stats.elapsed.count()});

        if (naive != count) {
            std::cerr << "count mismatch: naive " << naive.str() << " vs engine " << count.str()
                      << " for " << domain_spec << " -> " << codomain_spec << "\n";
            return kExitViolation;
        }
    }

    if (flags.json) {
        ordered_json out = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json row;
            row["method"] = r.method;
            row["rep"] = r.rep;
            row["count"] = r.count.str();
            row["fast_path"] = r.fast_path;
            row["nodes"] = r.nodes;
            row["prunes"] = r.prunes;
            row["elapsed"] = r.elapsed;
            out.push_back(row);
        }
        std::cout << out.dump() << "\n";
    } else if (flags.csv) {
        std::cout << "method,rep,count,fast_path,nodes,prunes,elapsed\n";
        for (const auto& r : rows) {
            std::ostringstream line;
            line << r.method << "," << r.rep << "," << r.count.str() << "," << r.fast_path << ","
                 << r.nodes << "," << r.prunes << "," << std::fixed << std::setprecision(6)
                 << r.elapsed;
            std::cout << line.str() << "\n";
        }
    } else {
        std::cout << "count " << rows.front().count.str() << " (" << domain_spec << " -> "
                  << codomain_spec << ", " << repetitions << " repetitions, counts equal)\n";
        std::cout << std::left << std::setw(8) << "method" << std::setw(5) << "rep"
                  << std::setw(18) << "fast_path" << std::setw(12) << "nodes" << std::setw(12)
                  << "prunes" << "elapsed\n";
        for (const auto& r : rows) {
            std::cout << std::left << std::setw(8) << r.method << std::setw(5) << r.rep
                      << std::setw(18) << r.fast_path << std::setw(12) << r.nodes << std::setw(12)
                      << r.prunes << std::fixed << std::setprecision(6) << r.elapsed << "\n";
        }
    }
    return kExitOk;
}

int cmd_gen(const hc::CorpusSpec& spec, const std::string& out_path) {
    hc::validate(spec);
    hc::GraphSampler sampler(spec);

    std::ostringstream body;
    for (std::uint64_t i = 0; i < spec.samples; ++i)
        body << hc::write_graph6(sampler.next_graph()) << "\n";

    if (out_path == "-") {
        std::cout << body.str();
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw hc::Error("cannot open \"" + out_path + "\" for writing");
        out << body.str();
        if (!out) throw hc::Error("write to \"" + out_path + "\" failed");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact homomorphism counting and density bounds for finite simple graphs"};
    app.require_subcommand(1);

    GlobalFlags flags;
    app.add_flag("--json", flags.json, "emit JSON instead of a table");
    auto* csv_opt = app.add_flag("--csv", flags.csv, "emit CSV instead of a table");
    csv_opt->excludes("--json");
    app.add_option("--threads", flags.threads, "worker threads for the search engine")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget", flags.budget, "mapping budget for the exhaustive counter");
    app.add_option("--seed", flags.seed, "seed for generated corpora");
    app.add_flag("--naive", flags.naive, "force the exhaustive counter instead of the engine");

    std::string format;
    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "input format for files and stdin")
            ->check(CLI::IsMember({"g6", "el"}));
    };

    auto* count_cmd =
        app.add_subcommand("count", "count mappings, injective mappings and homomorphisms");
    count_cmd->fallthrough();
    std::string domain_spec, codomain_spec;
    count_cmd->add_option("domain", domain_spec, "domain graph: family (K4, P3, C6, E5) or file")
        ->required();
    count_cmd->add_option("codomain", codomain_spec, "codomain graph, same forms")->required();
    add_format(count_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "run property suites over seeded corpora");
    verify_cmd->fallthrough();
    std::string selector;
    verify_cmd
        ->add_option("suite", selector,
                     "one of: all, thm2.1, lem2.2, lem2.3, thm2.4, thm2.5, cor2.5.1, thm2.6")
        ->required()
        ->check([](const std::string& s) -> std::string {
            if (s == "all" || hc::is_suite_selector(s)) return "";
            return "unknown suite \"" + s + "\"";
        });
    int n_min = 1, n_max = 5;
    std::uint64_t samples = 200;
    std::string edge_prob = "1/2";
    bool inject_bug = false;
    verify_cmd->add_option("--n-min", n_min, "smallest sampled order");
    verify_cmd->add_option("--n-max", n_max, "largest sampled order");
    verify_cmd->add_option("--samples", samples, "pairs drawn per suite");
    verify_cmd->add_option("--edge-prob", edge_prob, "edge probability, p/q or decimal");
    verify_cmd->add_flag("--inject-bug", inject_bug)->group("");  // self-test hook, hidden

    auto* bench_cmd =
        app.add_subcommand("bench", "time the exhaustive counter against the engine");
    bench_cmd->fallthrough();
    std::string bench_domain, bench_codomain;
    int repetitions = 3;
    bench_cmd->add_option("domain", bench_domain, "domain graph")->required();
    bench_cmd->add_option("codomain", bench_codomain, "codomain graph")->required();
    bench_cmd->add_option("repetitions", repetitions, "timing repetitions")
        ->check(CLI::PositiveNumber);
    add_format(bench_cmd);

    auto* gen_cmd = app.add_subcommand("gen", "write a seeded corpus as graph6 lines");
    gen_cmd->fallthrough();
    std::string out_path = "-";
    int gen_n_min = 1, gen_n_max = 5;
    std::uint64_t gen_samples = 200;
    std::string gen_edge_prob = "1/2";
    gen_cmd->add_option("-o,--out", out_path, "output path, - for stdout");
    gen_cmd->add_option("--n-min", gen_n_min, "smallest sampled order");
    gen_cmd->add_option("--n-max", gen_n_max, "largest sampled order");
    gen_cmd->add_option("--samples", gen_samples, "graphs to generate");
    gen_cmd->add_option("--edge-prob", gen_edge_prob, "edge probability, p/q or decimal");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (count_cmd->parsed()) return cmd_count(flags, domain_spec, codomain_spec, format);
        if (verify_cmd->parsed()) {
            hc::CorpusSpec spec{n_min, n_max, hc::parse_probability(edge_prob), samples,
                                flags.seed};
            return cmd_verify(flags, selector, spec, inject_bug);
        }
        if (bench_cmd->parsed())
            return cmd_bench(flags, bench_domain, bench_codomain, repetitions, format);
        hc::CorpusSpec spec{gen_n_min, gen_n_max, hc::parse_probability(gen_edge_prob),
                            gen_samples, flags.seed};
        return cmd_gen(spec, out_path);
    } catch (const hc::BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const hc::EmptyCodomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUndefined;
    } catch (const hc::ParseError& e) {
        std::cerr << "parse error at byte " << e.diagnostic().byte_offset << ": "
                  << e.diagnostic().message << "\n";
        return kExitParse;
    } catch (const hc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}
