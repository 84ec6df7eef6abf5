// Command-line front end; talks to the engine through the C API only.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "smgraph.h"

namespace {

struct StringDeleter {
    void operator()(char* s) const { smg_string_free(s); }
};
using CStr = std::unique_ptr<char, StringDeleter>;

struct GraphDeleter {
    void operator()(smg_graph* g) const { smg_graph_free(g); }
};
using Graph = std::unique_ptr<smg_graph, GraphDeleter>;

[[noreturn]] void die(const std::string& context) {
    std::cerr << "smg: " << context << ": " << smg_last_error() << "\n";
    std::exit(1);
}

std::string read_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) {
        std::cerr << "smg: cannot open " << path << "\n";
        std::exit(1);
    }
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

// relative output paths land in $SMG_CORPUS_DIR when it is set
std::string resolve_out(const std::string& path) {
    const char* dir = std::getenv("SMG_CORPUS_DIR");
    if (!dir || path.empty() || path[0] == '/' || path == "-") return path;
    return std::string(dir) + "/" + path;
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::string full = resolve_out(path);
    std::ofstream os(full);
    if (!os) {
        std::cerr << "smg: cannot write " << full << "\n";
        std::exit(1);
    }
    os << text;
}

Graph load_graph(const std::string& path) {
    smg_graph* g = nullptr;
    if (smg_graph_parse(read_file(path).c_str(), &g) != SMG_OK) die("parsing " + path);
    return Graph(g);
}

std::vector<int> parse_subs(const std::string& csv) {
    std::vector<int> out;
    std::istringstream is(csv);
    std::string tok;
    while (std::getline(is, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"standard-graph monodromy engine"};
    app.require_subcommand(1);

    // enumerate
    int n = 6, bound = 1, window = 2, max_chain = 1, k = 0;
    std::string subs_csv, graph_path, word_text, out_path, target = "ivy", suite = "all";
    bool cell = false;

    auto* cmd_enum = app.add_subcommand("enumerate", "enumerate standard graphs to a corpus");
    cmd_enum->add_option("--n", n, "sector count")->required();
    cmd_enum->add_option("--sub", subs_csv, "subdominant sectors, comma-separated");
    cmd_enum->add_option("--bound", bound, "maximum chain length")->required();
    cmd_enum->add_option("-o,--out", out_path, "output file (default stdout)");

    auto* cmd_act = app.add_subcommand("act", "apply a braid word to a standard graph");
    cmd_act->add_option("--graph", graph_path, "input .sgraph file")->required();
    cmd_act->add_option("--word", word_text, "braid word, e.g. 1^+2,4^-2")->required();
    cmd_act->add_option("-o,--out", out_path, "output file (default stdout)");

    auto* cmd_contract = app.add_subcommand("contract", "contract to a canonical form");
    cmd_contract->add_option("--graph", graph_path, "input .sgraph file")->required();
    cmd_contract->add_option("--target", target, "ivy | single-junction | one-y");
    cmd_contract->add_option("-o,--out", out_path, "output file for the graph");

    auto* cmd_orbit = app.add_subcommand("orbit", "bounded breadth-first orbit closure");
    cmd_orbit->add_option("--graph", graph_path, "input .sgraph file")->required();
    cmd_orbit->add_option("--bound", bound, "maximum chain length")->required();

    auto* cmd_comp = app.add_subcommand("components", "classify monodromy components");
    cmd_comp->add_option("--n", n, "sector count")->required();
    cmd_comp->add_option("--sub", subs_csv, "subdominant sectors, comma-separated");
    cmd_comp->add_option("--bound", max_chain, "maximum chain length")->required();

    auto* cmd_sch = app.add_subcommand("schroeder", "small Schroeder number");
    cmd_sch->add_option("k", k, "index")->required();

    auto* cmd_loops = app.add_subcommand("loops", "apply a braid word to the loop system");
    cmd_loops->add_option("--n", n, "sector count")->required();
    cmd_loops->add_option("--sub", subs_csv, "subdominant sectors, comma-separated");
    cmd_loops->add_option("--word", word_text, "braid word, e.g. 3^-1,2^+1,3^+1")->required();

    auto* cmd_verify = app.add_subcommand("verify", "run an acceptance suite");
    cmd_verify->add_option("suite", suite,
                           "schroeder|actions|contraction|components|loops|corpus|all");

    auto* cmd_export = app.add_subcommand("export", "DOT export");
    cmd_export->add_option("--graph", graph_path, "input .sgraph file")->required();
    cmd_export->add_flag("--cell", cell, "export the truncated cell graph instead");
    cmd_export->add_option("--window", window, "cell graph window");
    cmd_export->add_option("-o,--out", out_path, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    if (cmd_enum->parsed()) {
        auto subs = parse_subs(subs_csv);
        CStr text;
        char* raw = nullptr;
        if (smg_enumerate(n, subs.data(), (int)subs.size(), bound, &raw) != SMG_OK)
            die("enumerate");
        text.reset(raw);
        write_out(out_path, text.get());
    } else if (cmd_act->parsed()) {
        Graph g = load_graph(graph_path);
        smg_graph* out = nullptr;
        if (smg_graph_act(g.get(), word_text.c_str(), &out) != SMG_OK) die("act");
        Graph res(out);
        char* raw = nullptr;
        if (smg_graph_serialize(res.get(), &raw) != SMG_OK) die("serialize");
        CStr text(raw);
        write_out(out_path, text.get());
    } else if (cmd_contract->parsed()) {
        Graph g = load_graph(graph_path);
        smg_graph* out = nullptr;
        char* word_raw = nullptr;
        if (smg_graph_contract(g.get(), target.c_str(), &word_raw, &out) != SMG_OK)
            die("contract");
        CStr word(word_raw);
        Graph res(out);
        char* raw = nullptr;
        if (smg_graph_serialize(res.get(), &raw) != SMG_OK) die("serialize");
        CStr text(raw);
        std::cout << "word " << (word.get()[0] ? word.get() : "(empty)") << "\n";
        write_out(out_path, text.get());
    } else if (cmd_orbit->parsed()) {
        Graph g = load_graph(graph_path);
        char* raw = nullptr;
        if (smg_graph_orbit(g.get(), bound, &raw) != SMG_OK) die("orbit");
        CStr text(raw);
        std::cout << text.get();
    } else if (cmd_comp->parsed()) {
        auto subs = parse_subs(subs_csv);
        char* raw = nullptr;
        if (smg_components(n, subs.data(), (int)subs.size(), max_chain, &raw) != SMG_OK)
            die("components");
        CStr text(raw);
        std::cout << text.get();
    } else if (cmd_sch->parsed()) {
        long long value = 0;
        if (smg_schroeder(k, &value) != SMG_OK) die("schroeder");
        std::cout << value << "\n";
    } else if (cmd_loops->parsed()) {
        auto subs = parse_subs(subs_csv);
        char* raw = nullptr;
        if (smg_loops_apply(n, subs.data(), (int)subs.size(), word_text.c_str(), &raw) != SMG_OK)
            die("loops");
        CStr text(raw);
        std::cout << text.get();
    } else if (cmd_verify->parsed()) {
        char* raw = nullptr;
        int ok = 0;
        if (smg_verify(suite.c_str(), &raw, &ok) != SMG_OK) die("verify");
        CStr text(raw);
        std::cout << text.get();
        return ok ? 0 : 2;
    } else if (cmd_export->parsed()) {
        Graph g = load_graph(graph_path);
        char* raw = nullptr;
        int rc = cell ? smg_graph_export_cell_dot(g.get(), window, &raw)
                      : smg_graph_export_dot(g.get(), &raw);
        if (rc != SMG_OK) die("export");
        CStr text(raw);
        write_out(out_path, text.get());
    }
    return 0;
}
