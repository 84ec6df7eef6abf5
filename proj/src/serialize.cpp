#include "serialize.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace smg {

namespace {

struct LineReader {
    std::vector<std::string> lines;
    size_t pos = 0;

    explicit LineReader(const std::string& text) {
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line)) lines.push_back(line);
    }
    bool done() {
        while (pos < lines.size() && blank(lines[pos])) ++pos;
        return pos >= lines.size();
    }
    static bool blank(const std::string& s) {
        return s.find_first_not_of(" \t\r") == std::string::npos || s[0] == '#';
    }
    std::string next(const char* what) {
        if (done()) throw ParseError(std::string("unexpected end of input; expected ") + what);
        return lines[pos++];
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("line " + std::to_string(pos) + ": " + msg);
    }
};

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

int to_int(const std::string& s, LineReader& r) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (...) {
        r.fail("expected integer, found '" + s + "'");
    }
}

SectorConfig parse_config_lines(LineReader& r) {
    auto nline = tokens(r.next("'n <count>'"));
    if (nline.size() != 2 || nline[0] != "n") r.fail("expected 'n <count>'");
    int n = to_int(nline[1], r);
    auto sline = tokens(r.next("'sub <indices...>'"));
    if (sline.empty() || sline[0] != "sub") r.fail("expected 'sub <indices...>'");
    std::vector<int> subs;
    for (size_t i = 1; i < sline.size(); ++i) subs.push_back(to_int(sline[i], r));
    // unchecked: config-level problems surface in validate(), not in parsing
    return SectorConfig::unchecked(n, subs);
}

void write_config(std::ostringstream& os, const SectorConfig& cfg) {
    os << "n " << cfg.n() << "\n";
    os << "sub";
    for (int s : cfg.subdominant_indices()) os << " " << s;
    os << "\n";
}

} // namespace

std::string serialize(const StandardGraph& g) {
    std::ostringstream os;
    os << "sgraph 1\n";
    write_config(os, g.config());
    // compact the live vertices
    std::map<int, int> id;
    for (int v : g.alive_vertices()) {
        int next = (int)id.size();
        id[v] = next;
    }
    for (int v : g.alive_vertices()) {
        os << "vertex " << id[v] << " :";
        for (const Item& it : g.items(v)) {
            if (it.kind == Item::Kind::Ray)
                os << " ray" << it.index;
            else
                os << " edge(" << id.at(g.edge_other(it.index, v)) << ","
                   << g.edge(it.index).len << ")";
        }
        os << "\n";
    }
    return os.str();
}

StandardGraph parse_standard_graph(const std::string& text) {
    LineReader r(text);
    auto header = tokens(r.next("'sgraph 1'"));
    if (header.size() != 2 || header[0] != "sgraph" || header[1] != "1")
        r.fail("expected header 'sgraph 1'");
    SectorConfig cfg = parse_config_lines(r);
    StandardGraph g(cfg);

    struct PendingItem {
        bool is_ray;
        int ray;
        int other;
        int len;
    };
    std::vector<std::vector<PendingItem>> pend;
    while (!r.done()) {
        auto t = tokens(r.next("vertex line"));
        if (t.size() < 3 || t[0] != "vertex" || t[2] != ":")
            r.fail("expected 'vertex <id> : <items...>'");
        int vid = to_int(t[1], r);
        if (vid != (int)pend.size()) r.fail("vertex ids must be consecutive from 0");
        std::vector<PendingItem> items;
        for (size_t i = 3; i < t.size(); ++i) {
            const std::string& tok = t[i];
            if (tok.rfind("ray", 0) == 0) {
                items.push_back({true, to_int(tok.substr(3), r), -1, -1});
            } else if (tok.rfind("edge(", 0) == 0 && tok.back() == ')') {
                auto body = tok.substr(5, tok.size() - 6);
                auto comma = body.find(',');
                if (comma == std::string::npos) r.fail("edge item needs '(other,len)'");
                items.push_back({false, -1, to_int(body.substr(0, comma), r),
                                 to_int(body.substr(comma + 1), r)});
            } else {
                r.fail("unknown item '" + tok + "'");
            }
        }
        pend.push_back(std::move(items));
    }
    for (size_t v = 0; v < pend.size(); ++v) g.add_vertex();
    std::map<std::pair<int, int>, int> edge_ids;
    for (int v = 0; v < (int)pend.size(); ++v) {
        std::vector<Item> items;
        for (const PendingItem& p : pend[v]) {
            if (p.is_ray) {
                items.push_back(Item::ray(p.ray));
                continue;
            }
            if (p.other < 0 || p.other >= (int)pend.size())
                throw ParseError("edge references unknown vertex " + std::to_string(p.other));
            auto key = std::minmax(v, p.other);
            auto it = edge_ids.find({key.first, key.second});
            int e;
            if (it == edge_ids.end()) {
                e = g.add_edge(v, p.other, p.len);
                edge_ids[{key.first, key.second}] = e;
            } else {
                e = it->second;
                if (g.edge(e).len != p.len)
                    throw ParseError("edge between " + std::to_string(v) + " and " +
                                     std::to_string(p.other) + " has mismatched lengths");
            }
            items.push_back(Item::edge(e));
        }
        g.set_items(v, std::move(items));
    }
    return g;
}

std::string serialize(const CellGraph& cg) {
    std::ostringstream os;
    os << "cgraph 1\n";
    write_config(os, cg.config());
    os << "window " << cg.window() << "\n";
    os << "assign";
    for (int a : cg.face_assignment()) os << " " << a;
    os << "\n";
    os << "vertices " << cg.vertex_count() << "\n";
    for (const auto& e : cg.edges()) os << "edge " << e.from << " " << e.to << " " << e.label << "\n";
    for (int v = 0; v < cg.vertex_count(); ++v) {
        for (int l = 0; l < cg.n(); ++l) {
            if (cg.unknown_out(v, l)) os << "flag " << v << " out " << l << "\n";
            if (cg.unknown_in(v, l)) os << "flag " << v << " in " << l << "\n";
        }
    }
    return os.str();
}

CellGraph parse_cell_graph(const std::string& text) {
    LineReader r(text);
    auto header = tokens(r.next("'cgraph 1'"));
    if (header.size() != 2 || header[0] != "cgraph" || header[1] != "1")
        r.fail("expected header 'cgraph 1'");
    SectorConfig cfg = parse_config_lines(r);
    CellGraph cg(cfg);
    auto wline = tokens(r.next("'window <w>'"));
    if (wline.size() != 2 || wline[0] != "window") r.fail("expected 'window <w>'");
    cg.set_window(to_int(wline[1], r));
    auto aline = tokens(r.next("'assign ...'"));
    if (aline.empty() || aline[0] != "assign" || (int)aline.size() != cfg.n() + 1)
        r.fail("expected 'assign' with one value per sector");
    std::vector<int> assign;
    for (size_t i = 1; i < aline.size(); ++i) assign.push_back(to_int(aline[i], r));
    cg.set_face_assignment(std::move(assign));
    auto vline = tokens(r.next("'vertices <count>'"));
    if (vline.size() != 2 || vline[0] != "vertices") r.fail("expected 'vertices <count>'");
    int count = to_int(vline[1], r);
    for (int i = 0; i < count; ++i) cg.add_vertex();
    while (!r.done()) {
        auto t = tokens(r.next("edge or flag line"));
        if (t[0] == "edge" && t.size() == 4) {
            cg.add_edge(to_int(t[1], r), to_int(t[2], r), to_int(t[3], r));
        } else if (t[0] == "flag" && t.size() == 4) {
            int v = to_int(t[1], r);
            int l = to_int(t[3], r);
            if (t[2] == "out")
                cg.set_unknown_out(v, l, true);
            else if (t[2] == "in")
                cg.set_unknown_in(v, l, true);
            else
                r.fail("flag direction must be 'in' or 'out'");
        } else {
            r.fail("expected 'edge <from> <to> <label>' or 'flag <v> <dir> <label>'");
        }
    }
    return cg;
}

std::string serialize(const ChordDiagram& d) {
    std::ostringstream os;
    os << "chords 1\n";
    os << "m " << d.m << "\n";
    for (auto& [a, b] : d.chords) os << "chord " << a << " " << b << "\n";
    return os.str();
}

ChordDiagram parse_chord_diagram(const std::string& text) {
    LineReader r(text);
    auto header = tokens(r.next("'chords 1'"));
    if (header.size() != 2 || header[0] != "chords" || header[1] != "1")
        r.fail("expected header 'chords 1'");
    auto mline = tokens(r.next("'m <size>'"));
    if (mline.size() != 2 || mline[0] != "m") r.fail("expected 'm <size>'");
    ChordDiagram d;
    d.m = to_int(mline[1], r);
    while (!r.done()) {
        auto t = tokens(r.next("chord line"));
        if (t.size() != 3 || t[0] != "chord") r.fail("expected 'chord <a> <b>'");
        int a = to_int(t[1], r), b = to_int(t[2], r);
        d.chords.push_back(std::minmax(a, b));
    }
    std::sort(d.chords.begin(), d.chords.end());
    return d;
}

std::string braid_word_str(const BraidWord& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        os << w[i].label << "^" << (w[i].exponent > 0 ? "+" : "") << w[i].exponent;
    }
    return os.str();
}

BraidWord parse_braid_word(const std::string& text) {
    BraidWord out;
    std::string trimmed;
    for (char c : text)
        if (!isspace((unsigned char)c)) trimmed += c;
    if (trimmed.empty()) return out;
    std::istringstream is(trimmed);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        auto caret = tok.find('^');
        if (caret == std::string::npos)
            throw ParseError("braid word token '" + tok + "' lacks '^'");
        try {
            int label = std::stoi(tok.substr(0, caret));
            int expo = std::stoi(tok.substr(caret + 1));
            if (expo != 1 && expo != -1 && expo != 2 && expo != -2)
                throw ParseError("braid word exponent must be one of +-1, +-2");
            out.push_back({label, expo});
        } catch (const ParseError&) {
            throw;
        } catch (...) {
            throw ParseError("bad braid word token '" + tok + "'");
        }
    }
    return out;
}

std::string serialize(const LoopSystem& sys) {
    std::ostringstream os;
    os << "loops 1\n";
    write_config(os, sys.config);
    for (const auto& [j, w] : sys.entries) os << "entry " << j << " " << w.str() << "\n";
    return os.str();
}

LoopSystem parse_loop_system(const std::string& text) {
    LineReader r(text);
    auto header = tokens(r.next("'loops 1'"));
    if (header.size() != 2 || header[0] != "loops" || header[1] != "1")
        r.fail("expected header 'loops 1'");
    SectorConfig cfg = parse_config_lines(r);
    LoopSystem sys{cfg, {}};
    while (!r.done()) {
        auto t = tokens(r.next("entry line"));
        if (t.size() != 3 || t[0] != "entry") r.fail("expected 'entry <j> <word>'");
        sys.entries[to_int(t[1], r)] = LoopWord::parse(t[2]);
    }
    return sys;
}

std::string serialize_corpus(const std::vector<StandardGraph>& corpus) {
    std::ostringstream os;
    os << "corpus 1\n";
    os << "count " << corpus.size() << "\n";
    for (const auto& g : corpus) {
        os << "---\n";
        os << serialize(g);
    }
    return os.str();
}

std::vector<StandardGraph> parse_corpus(const std::string& text) {
    LineReader r(text);
    auto header = tokens(r.next("'corpus 1'"));
    if (header.size() != 2 || header[0] != "corpus" || header[1] != "1")
        r.fail("expected header 'corpus 1'");
    auto cline = tokens(r.next("'count <k>'"));
    if (cline.size() != 2 || cline[0] != "count") r.fail("expected 'count <k>'");
    int count = to_int(cline[1], r);
    std::vector<StandardGraph> out;
    std::string block;
    auto flush = [&]() {
        if (!block.empty()) {
            out.push_back(parse_standard_graph(block));
            block.clear();
        }
    };
    while (!r.done()) {
        std::string line = r.next("corpus block");
        if (line == "---") {
            flush();
        } else {
            block += line;
            block += "\n";
        }
    }
    flush();
    if ((int)out.size() != count)
        throw ParseError("corpus count mismatch: header says " + std::to_string(count) +
                         ", found " + std::to_string(out.size()));
    return out;
}

namespace {

const char* style_for(StructureKind k) {
    switch (k) {
        case StructureKind::I: return "dotted";
        case StructureKind::V: return "dashed";
        case StructureKind::Y: return "dotdashed"; // graphviz: rendered via "dashed,dotted"
    }
    return "solid";
}

} // namespace

std::string export_dot(const StandardGraph& g) {
    std::ostringstream os;
    os << "graph standard {\n";
    os << "  // faces between rays follow the sector convention; layout is advisory\n";
    auto fm = g.face_map();
    // structure styling per item
    std::map<std::pair<int, int>, std::string> item_style; // (vertex,pos) -> style
    for (const Structure& s : g.all_structures()) {
        const SectorConfig& cfg = g.config();
        auto mark = [&](int v, Item it) {
            int p = g.item_pos(v, it);
            if (p >= 0) item_style[{v, p}] = style_for(s.kind);
        };
        if (s.kind == StructureKind::I) {
            mark(s.junction, Item::ray(cfg.mod(s.label + 1)));
        } else if (s.kind == StructureKind::V) {
            mark(s.junction, Item::ray(cfg.mod(s.label + 1)));
            mark(s.junction, Item::ray(cfg.mod(s.label + 2)));
        } else {
            mark(s.junction, Item::edge(s.stem_edge));
            mark(s.y_junction, Item::ray(cfg.mod(s.label + 1)));
            mark(s.y_junction, Item::ray(cfg.mod(s.label + 2)));
        }
    }
    for (int v : g.alive_vertices())
        os << "  v" << v << " [shape=circle label=\"" << v << "\"];\n";
    for (int r = 0; r < g.config().n(); ++r)
        os << "  ray" << r << " [shape=none label=\"r" << r << "\"];\n";
    std::map<int, bool> edge_done;
    for (int v : g.alive_vertices()) {
        const auto& items = g.items(v);
        for (int p = 0; p < (int)items.size(); ++p) {
            const Item& it = items[p];
            std::string style = "solid";
            if (auto f = item_style.find({v, p}); f != item_style.end()) style = f->second;
            if (style == "dotdashed") style = "dashed\" color=\"gray30"; // closest dot-dash hint
            if (it.kind == Item::Kind::Ray) {
                os << "  v" << v << " -- ray" << it.index << " [style=\"" << style << "\"];\n";
            } else if (!edge_done[it.index]) {
                edge_done[it.index] = true;
                auto [fa, fb] = g.edge_flanks(it.index, *fm);
                os << "  v" << g.edge(it.index).a << " -- v" << g.edge(it.index).b
                   << " [style=\"" << style << "\" label=\"len=" << g.edge(it.index).len << " ("
                   << fa << "|" << fb << ")\"];\n";
            }
        }
    }
    os << "}\n";
    return os.str();
}

std::string export_dot(const CellGraph& cg) {
    std::ostringstream os;
    os << "digraph cell {\n";
    for (int v = 0; v < cg.vertex_count(); ++v)
        os << "  v" << v << " [shape=point label=\"\"];\n";
    for (const auto& e : cg.edges())
        os << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.label << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace smg
