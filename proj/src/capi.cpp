#include "../include/smgraph.h"

#include <cstring>
#include <sstream>

#include "acceptance.hpp"
#include "actions.hpp"
#include "contraction.hpp"
#include "enumeration.hpp"
#include "errors.hpp"
#include "loops.hpp"
#include "orbits.hpp"
#include "serialize.hpp"

using namespace smg;

struct smg_graph {
    StandardGraph g;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = (char*)malloc(s.size() + 1);
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return SMG_OK;
    } catch (const ParseError& e) {
        g_last_error = e.what();
        return SMG_EPARSE;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return SMG_EINVAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SMG_EINTERNAL;
    }
}

SectorConfig config_from(int n, const int* subdominant, int count) {
    std::vector<int> subs(subdominant, subdominant + count);
    std::string err;
    auto cfg = SectorConfig::create(n, subs, &err);
    if (!cfg) throw std::invalid_argument(err);
    return *cfg;
}

} // namespace

extern "C" {

const char* smg_last_error(void) { return g_last_error.c_str(); }

void smg_string_free(char* s) { free(s); }

void smg_graph_free(smg_graph* g) { delete g; }

int smg_graph_parse(const char* text, smg_graph** out) {
    return guarded([&] {
        if (!text || !out) throw std::invalid_argument("null argument");
        *out = new smg_graph{parse_standard_graph(text)};
    });
}

int smg_graph_star(int n, const int* subdominant, int count, smg_graph** out) {
    return guarded([&] {
        if (!out || (count > 0 && !subdominant)) throw std::invalid_argument("null argument");
        *out = new smg_graph{StandardGraph::star(config_from(n, subdominant, count))};
    });
}

int smg_graph_serialize(const smg_graph* g, char** text_out) {
    return guarded([&] {
        if (!g || !text_out) throw std::invalid_argument("null argument");
        *text_out = dup_string(serialize(g->g));
    });
}

int smg_graph_canonical(const smg_graph* g, char** text_out) {
    return guarded([&] {
        if (!g || !text_out) throw std::invalid_argument("null argument");
        *text_out = dup_string(g->g.canonical());
    });
}

int smg_graph_validate(const smg_graph* g, char** report_out, int* ok) {
    return guarded([&] {
        if (!g || !report_out || !ok) throw std::invalid_argument("null argument");
        auto v = g->g.validate();
        std::ostringstream os;
        for (const auto& line : v) os << line << "\n";
        *report_out = dup_string(os.str());
        *ok = v.empty() ? 1 : 0;
    });
}

int smg_graph_bounded_faces(const smg_graph* g, int* out) {
    return guarded([&] {
        if (!g || !out) throw std::invalid_argument("null argument");
        *out = g->g.bounded_face_count();
    });
}

int smg_graph_act(const smg_graph* g, const char* word, smg_graph** out) {
    return guarded([&] {
        if (!g || !word || !out) throw std::invalid_argument("null argument");
        *out = new smg_graph{apply_word(g->g, parse_braid_word(word))};
    });
}

int smg_graph_contract(const smg_graph* g, const char* target, char** word_out,
                       smg_graph** graph_out) {
    return guarded([&] {
        if (!g || !target || !word_out || !graph_out)
            throw std::invalid_argument("null argument");
        std::string t = target;
        ContractionResult res = [&] {
            if (t == "ivy") return to_ivy(g->g);
            if (t == "single-junction") return to_single_junction(g->g);
            if (t == "one-y") return to_one_y(g->g);
            throw std::invalid_argument("contract target must be ivy|single-junction|one-y");
        }();
        *word_out = dup_string(braid_word_str(res.word));
        *graph_out = new smg_graph{res.graph};
    });
}

int smg_graph_orbit(const smg_graph* g, int max_chain, char** out) {
    return guarded([&] {
        if (!g || !out) throw std::invalid_argument("null argument");
        std::ostringstream os;
        for (const auto& c : orbit_bfs(g->g, max_chain)) os << c << "\n";
        *out = dup_string(os.str());
    });
}

int smg_graph_export_dot(const smg_graph* g, char** out) {
    return guarded([&] {
        if (!g || !out) throw std::invalid_argument("null argument");
        *out = dup_string(export_dot(g->g));
    });
}

int smg_graph_export_cell_dot(const smg_graph* g, int window, char** out) {
    return guarded([&] {
        if (!g || !out) throw std::invalid_argument("null argument");
        *out = dup_string(export_dot(to_cell_graph(g->g, window)));
    });
}

int smg_enumerate(int n, const int* subdominant, int count, int max_chain, char** corpus_out) {
    return guarded([&] {
        if (!corpus_out || (count > 0 && !subdominant))
            throw std::invalid_argument("null argument");
        auto corpus = enum_standard_graphs(config_from(n, subdominant, count), max_chain);
        *corpus_out = dup_string(serialize_corpus(corpus));
    });
}

int smg_components(int n, const int* subdominant, int count, int max_chain, char** report_out) {
    return guarded([&] {
        if (!report_out || (count > 0 && !subdominant))
            throw std::invalid_argument("null argument");
        Classification cls =
            classify_components(config_from(n, subdominant, count), max_chain);
        std::ostringstream os;
        os << "classes " << cls.classes.size() << "\n";
        for (const auto& c : cls.classes)
            os << c.key << " size=" << c.members.size() << " rep=" << c.representative_canonical
               << "\n";
        os << "max-intermediate-junctions " << cls.max_intermediate_junctions << "\n";
        os << "max-intermediate-chain " << cls.max_intermediate_chain << "\n";
        *report_out = dup_string(os.str());
    });
}

int smg_schroeder(int k, long long* out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null argument");
        *out = schroeder(k);
    });
}

int smg_loops_apply(int n, const int* subdominant, int count, const char* word,
                    char** system_out) {
    return guarded([&] {
        if (!system_out || !word || (count > 0 && !subdominant))
            throw std::invalid_argument("null argument");
        auto cfg = config_from(n, subdominant, count);
        LoopSystem sys = word_action(initial_system(cfg), parse_braid_word(word));
        std::string text = serialize(sys) + "tuple " + sys.str() + "\n";
        *system_out = dup_string(text);
    });
}

int smg_verify(const char* suite, char** report_out, int* all_passed) {
    return guarded([&] {
        if (!suite || !report_out || !all_passed) throw std::invalid_argument("null argument");
        AcceptanceReport rep = run_acceptance(suite);
        *report_out = dup_string(rep.format());
        *all_passed = rep.all_passed() ? 1 : 0;
    });
}

} // extern "C"
