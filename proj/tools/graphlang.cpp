#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "graphlang/crown.hpp"
#include "graphlang/errors.hpp"
#include "graphlang/family.hpp"
#include "graphlang/oracle.hpp"
#include "graphlang/properties.hpp"
#include "graphlang/report.hpp"

namespace {

using namespace graphlang;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitParse = 2;
constexpr int kExitResource = 3;
constexpr int kExitIo = 4;

struct CommonOpts {
    std::string lang;
    int crown = 0;
    bool json = false;
    Config cfg;

    std::string language() const {
        if (crown > 0) return crown_regex(crown);
        return lang;
    }
};

void add_language_opts(CLI::App* cmd, CommonOpts& opts) {
    auto* lang = cmd->add_option("--lang", opts.lang, "regular expression over a,b");
    auto* crown = cmd->add_option("--crown", opts.crown, "use the crown family over an n-cycle");
    lang->excludes(crown);
    cmd->final_callback([&opts, lang, crown]() {
        if (lang->count() == 0 && crown->count() == 0)
            throw CLI::RequiredError("--lang or --crown");
    });
}

void add_cap_opts(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_flag("--json", opts.json, "machine-readable output");
    cmd->add_option("--cap-canonical", opts.cfg.canonical_vertex_cap,
                    "vertex cap for canonical forms and encode");
    cmd->add_option("--cap-member", opts.cfg.member_vertex_cap,
                    "vertex cap for membership queries");
    cmd->add_option("--cap-star", opts.cfg.star_union_cap, "piece cap entering a Kleene star");
    cmd->add_option("--cap-pieces", opts.cfg.piece_cap, "linear piece cap");
    cmd->add_option("--cap-regex-nodes", opts.cfg.regex_node_cap,
                    "regex node cap for state elimination");
    cmd->add_option("--cap-budget", opts.cfg.enumerate_budget, "enumeration combination budget");
}

Graph read_graph(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) throw IoError("cannot open graph file '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    return parse_graph_text(text);
}

int emit_verdict(const Verdict& v, const std::string& property, bool json) {
    if (json)
        std::cout << verdict_json(v, property).dump(2) << "\n";
    else
        std::cout << verdict_text(v, property);
    switch (v.answer) {
    case Answer::yes:
        return kExitYes;
    case Answer::no:
        return kExitNo;
    case Answer::resource:
        return kExitResource;
    }
    return kExitResource;
}

bool run_predicate_command(const std::string& cmd, const Graph& g) {
    FILE* pipe = popen(cmd.c_str(), "w");
    if (!pipe) throw IoError("cannot run predicate command '" + cmd + "'");
    std::string text = graph_text(relabel_dense(g));
    fwrite(text.data(), 1, text.size(), pipe);
    int status = pclose(pipe);
    return status == 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"analyze families of finite graphs specified by regular languages over {a,b}"};
    app.require_subcommand(1);

    CommonOpts opts;

    auto* analyze_cmd = app.add_subcommand("analyze", "classify the family of a language");
    add_language_opts(analyze_cmd, opts);
    add_cap_opts(analyze_cmd, opts);

    auto* member_cmd = app.add_subcommand("member", "decide membership of a graph");
    std::string graph_path = "-";
    add_language_opts(member_cmd, opts);
    add_cap_opts(member_cmd, opts);
    member_cmd->add_option("--graph", graph_path, "graph file, - for stdin");

    auto* enum_cmd = app.add_subcommand("enumerate", "list family members up to a vertex bound");
    int max_vertices = 4;
    add_language_opts(enum_cmd, opts);
    add_cap_opts(enum_cmd, opts);
    enum_cmd->add_option("--max-vertices", max_vertices, "vertex bound");

    auto* decide_cmd = app.add_subcommand("decide", "decide a graph property over the family");
    std::string property;
    std::string pred_cmd;
    bool custom_hereditary = false, custom_component_local = false;
    long custom_witness_bound = -1;
    add_language_opts(decide_cmd, opts);
    add_cap_opts(decide_cmd, opts);
    decide_cmd
        ->add_option("--property", property,
                     "hamiltonian|perfect-matching|dominating-log|defensive-alliance-log|planar|"
                     "custom")
        ->required();
    decide_cmd->add_option("--pred-cmd", pred_cmd,
                           "custom predicate: command reading a graph on stdin, exit 0 = holds");
    decide_cmd->add_flag("--hereditary", custom_hereditary, "custom predicate is hereditary");
    decide_cmd->add_flag("--component-local", custom_component_local,
                         "custom predicate holds iff some component satisfies it");
    decide_cmd->add_option("--witness-bound", custom_witness_bound,
                           "custom predicate witness vertex bound");

    auto* encode_cmd = app.add_subcommand("encode", "short-lex word of a graph");
    std::string encode_path = "-";
    encode_cmd->add_option("--graph", encode_path, "graph file, - for stdin");
    add_cap_opts(encode_cmd, opts);

    auto* decode_cmd = app.add_subcommand("decode", "graph denoted by a word");
    std::string word;
    decode_cmd->add_option("word", word, "word over a,b")->required();
    add_cap_opts(decode_cmd, opts);

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force family members by word search");
    std::size_t max_len = 20;
    int oracle_max_vertices = 8;
    add_language_opts(oracle_cmd, opts);
    add_cap_opts(oracle_cmd, opts);
    oracle_cmd->add_option("--max-len", max_len, "maximum word length");
    oracle_cmd->add_option("--max-vertices", oracle_max_vertices, "skip larger decodes");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze_cmd->parsed()) {
            Analysis a = analyze(opts.language(), opts.cfg);
            if (opts.json)
                std::cout << analysis_json(a).dump(2) << "\n";
            else
                std::cout << analysis_text(a);
            return kExitYes;
        }
        if (member_cmd->parsed()) {
            Analysis a = analyze(opts.language(), opts.cfg);
            Graph g = read_graph(graph_path);
            MemberResult r = member(a, g, opts.cfg);
            if (opts.json) {
                nlohmann::json out;
                out["answer"] = r.yes ? "yes" : "no";
                if (r.yes) {
                    out["witnessWord"] = r.witness;
                    out["piece"] = r.piece;
                }
                std::cout << out.dump(2) << "\n";
            } else if (r.yes) {
                std::cout << "yes\nwitness: " << r.witness << "\n";
            } else {
                std::cout << "no\n";
            }
            return r.yes ? kExitYes : kExitNo;
        }
        if (enum_cmd->parsed()) {
            Analysis a = analyze(opts.language(), opts.cfg);
            std::vector<Graph> members = enumerate_family(a, max_vertices, opts.cfg);
            if (opts.json) {
                nlohmann::json out = nlohmann::json::array();
                for (const Graph& g : members) out.push_back(graph_json(g));
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << members.size() << " graphs\n";
                for (const Graph& g : members) std::cout << "\n" << graph_text(g);
            }
            return kExitYes;
        }
        if (decide_cmd->parsed()) {
            Analysis a = analyze(opts.language(), opts.cfg);
            Verdict v;
            if (property == "hamiltonian") {
                v = hamiltonian(a, opts.cfg);
            } else if (property == "perfect-matching") {
                v = perfect_matching(a, opts.cfg);
            } else if (property == "dominating-log") {
                v = dominating_set_log(a, opts.cfg);
            } else if (property == "defensive-alliance-log") {
                v = defensive_alliance_log(a, opts.cfg);
            } else if (property == "planar") {
                PropertyPlugin plugin;
                plugin.name = "planar";
                plugin.predicate = is_planar;
                plugin.hereditary = true;
                v = decide(a, plugin, opts.cfg);
            } else if (property == "custom") {
                if (pred_cmd.empty())
                    throw ParseError("--property custom needs --pred-cmd", 0);
                PropertyPlugin plugin;
                plugin.name = "custom";
                plugin.predicate = [&pred_cmd](const Graph& g) {
                    return run_predicate_command(pred_cmd, g);
                };
                plugin.hereditary = custom_hereditary;
                plugin.component_local = custom_component_local;
                if (custom_witness_bound >= 0)
                    plugin.witness_bound = [custom_witness_bound](long) {
                        return custom_witness_bound;
                    };
                v = decide(a, plugin, opts.cfg);
            } else {
                throw ParseError("unknown property '" + property + "'", 0);
            }
            return emit_verdict(v, property, opts.json);
        }
        if (encode_cmd->parsed()) {
            Graph g = read_graph(encode_path);
            std::cout << encode(g, opts.cfg.canonical_vertex_cap) << "\n";
            return kExitYes;
        }
        if (decode_cmd->parsed()) {
            Graph g = decode(word);
            std::cout << graph_text(relabel_dense(g));
            return kExitYes;
        }
        if (oracle_cmd->parsed()) {
            Dfa d = intersect_with_code(compile_regex(opts.language())).dfa;
            OracleRun run =
                oracle_members(d, max_len, oracle_max_vertices, opts.cfg,
                               std::max(8, oracle_max_vertices));
            if (opts.json) {
                nlohmann::json out = nlohmann::json::array();
                for (const OracleEntry& e : run.entries) {
                    nlohmann::json ej = graph_json(e.canonical);
                    ej["witness"] = e.witness;
                    out.push_back(ej);
                }
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << run.entries.size() << " graphs from " << run.words_enumerated
                          << " words\n";
                for (const OracleEntry& e : run.entries)
                    std::cout << "\nwitness: " << e.witness << "\n" << graph_text(e.canonical);
            }
            return kExitYes;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kExitResource;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitParse;
}
