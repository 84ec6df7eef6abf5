/* C interface to the standard-graph monodromy engine.
 *
 * All functions return 0 on success and a nonzero error code on failure;
 * the message for the most recent failure on the calling thread is
 * available via smg_last_error(). Strings returned through char** are
 * heap-allocated and must be released with smg_string_free().
 */
#ifndef SMGRAPH_H
#define SMGRAPH_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct smg_graph smg_graph; /* opaque standard graph */

enum smg_status {
    SMG_OK = 0,
    SMG_EINVAL = 1, /* bad arguments or precondition violated */
    SMG_EPARSE = 2, /* malformed input text */
    SMG_EINTERNAL = 3
};

const char* smg_last_error(void);
void smg_string_free(char* s);
void smg_graph_free(smg_graph* g);

/* construction and serialization (text schema "sgraph 1") */
int smg_graph_parse(const char* text, smg_graph** out);
int smg_graph_star(int n, const int* subdominant, int count, smg_graph** out);
int smg_graph_serialize(const smg_graph* g, char** text_out);
int smg_graph_canonical(const smg_graph* g, char** text_out);

/* validation: ok becomes 1/0; report lists one violation per line */
int smg_graph_validate(const smg_graph* g, char** report_out, int* ok);

int smg_graph_bounded_faces(const smg_graph* g, int* out);

/* braid word text: comma-separated tokens like "1^+2,4^-2" (only even
 * exponents act on standard graphs) */
int smg_graph_act(const smg_graph* g, const char* word, smg_graph** out);

/* target: "ivy" | "single-junction" | "one-y"; returns the certifying word */
int smg_graph_contract(const smg_graph* g, const char* target, char** word_out,
                       smg_graph** graph_out);

/* breadth-first orbit closure; one canonical string per line */
int smg_graph_orbit(const smg_graph* g, int max_chain, char** out);

int smg_graph_export_dot(const smg_graph* g, char** out);
int smg_graph_export_cell_dot(const smg_graph* g, int window, char** out);

/* corpus text ("corpus 1" blocks) */
int smg_enumerate(int n, const int* subdominant, int count, int max_chain, char** corpus_out);

/* one line per component class: key, size, representative canonical */
int smg_components(int n, const int* subdominant, int count, int max_chain, char** report_out);

int smg_schroeder(int k, long long* out);

/* applies a braid word to the initial loop system of the configuration and
 * returns the "loops 1" text plus the tuple display */
int smg_loops_apply(int n, const int* subdominant, int count, const char* word,
                    char** system_out);

/* suite: schroeder|actions|contraction|components|loops|corpus|all */
int smg_verify(const char* suite, char** report_out, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* SMGRAPH_H */
