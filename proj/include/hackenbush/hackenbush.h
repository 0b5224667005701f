/*
 * hackenbush.h - C interface to the Hackenbush engine.
 *
 * Positions are opaque immutable handles. Every function that can fail
 * returns an hb_status; on failure hb_last_error() describes the problem
 * for the calling thread. Strings returned through char** are owned by the
 * caller and released with hb_string_free(). Handles returned through
 * hb_position** are released with hb_position_free().
 */
#ifndef HACKENBUSH_H
#define HACKENBUSH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HACKENBUSH_BUILDING)
#    define HB_API __declspec(dllexport)
#  else
#    define HB_API __declspec(dllimport)
#  endif
#else
#  define HB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hb_position hb_position;

typedef enum hb_status {
    HB_OK = 0,
    HB_ERR_PARSE = 1,
    HB_ERR_DUPLICATE_EDGE = 2,
    HB_ERR_NO_GROUND = 3,
    HB_ERR_UNKNOWN_COLOR = 4,
    HB_ERR_UNKNOWN_EDGE = 5,
    HB_ERR_TOO_LARGE = 6,
    HB_ERR_GREEN_EDGE = 7,
    HB_ERR_INVALID_ARGUMENT = 8,
    HB_ERR_BUFFER_TOO_SMALL = 9,
    HB_ERR_INTERNAL = 10
} hb_status;

typedef enum hb_color { HB_BLUE = 0, HB_RED = 1, HB_GREEN = 2 } hb_color;
typedef enum hb_player { HB_LEFT = 0, HB_RIGHT = 1 } hb_player;
typedef enum hb_convention { HB_NORMAL = 0, HB_MISERE = 1 } hb_convention;
typedef enum hb_outcome { HB_OUTCOME_L = 0, HB_OUTCOME_R = 1, HB_OUTCOME_P = 2, HB_OUTCOME_N = 3 } hb_outcome;
typedef enum hb_shape { HB_SHAPE_STRINGS = 0, HB_SHAPE_TREES = 1, HB_SHAPE_GRAPHS = 2 } hb_shape;

/* Largest number of edges a position may hold. */
#define HB_MAX_EDGES 64

typedef struct hb_edge {
    uint32_t id;
    uint32_t u;
    uint32_t v;
    hb_color color;
} hb_edge;

typedef struct hb_grounded_counts {
    size_t blue;
    size_t red;
    size_t green;
} hb_grounded_counts;

typedef struct hb_search_stats {
    uint64_t nodes_expanded;
    uint64_t memo_hits;
    uint64_t max_depth;
} hb_search_stats;

typedef struct hb_solve_result {
    hb_outcome outcome;
    hb_player winner_left_first;
    hb_player winner_right_first;
    hb_search_stats stats;
} hb_solve_result;

/* Bounds for the verification suites. Trees and Graphs are enumerated up to
 * max_edges edges, Strings up to max_edges + min(max_edges, 2). */
typedef struct hb_suite_params {
    size_t max_edges;
    size_t random_trials;
    size_t random_max_edges;
    uint64_t seed;
    size_t max_graph_vertices;
    int include_timing;
} hb_suite_params;

/* Returns 0 to continue, non-zero to stop early. The position handle is only
 * valid for the duration of the call. */
typedef int (*hb_position_callback)(const hb_position* position, void* user);
typedef int (*hb_explore_callback)(const char* position_text, hb_outcome misere, void* user);

HB_API const char* hb_version(void);
HB_API const char* hb_last_error(void);
HB_API const char* hb_status_string(hb_status status);
HB_API char hb_outcome_letter(hb_outcome outcome);
HB_API void hb_string_free(char* s);
HB_API hb_suite_params hb_default_suite_params(void);

/* position file format, see README */
HB_API hb_status hb_position_parse(const char* text, hb_position** out);
HB_API hb_status hb_position_serialize(const hb_position* p, char** out);
HB_API hb_status hb_position_clone(const hb_position* p, hb_position** out);
HB_API void hb_position_free(hb_position* p);
HB_API int hb_position_equal(const hb_position* a, const hb_position* b);
HB_API size_t hb_position_edge_count(const hb_position* p);
HB_API hb_status hb_position_edge(const hb_position* p, size_t index, hb_edge* out);
HB_API int hb_position_has_green(const hb_position* p);

HB_API hb_status hb_position_grounded_counts(const hb_position* p, hb_grounded_counts* out);

/* Writes up to `capacity` edge ids in ascending order and always sets *count.
 * Returns HB_ERR_BUFFER_TOO_SMALL when *count > capacity. */
HB_API hb_status hb_legal_moves(const hb_position* p, hb_player mover, uint32_t* edge_ids, size_t capacity,
                                size_t* count);
HB_API hb_status hb_apply_move(const hb_position* p, uint32_t edge_id, hb_position** out);

HB_API hb_status hb_solve(const hb_position* p, hb_convention conv, int memoize, hb_solve_result* out);
HB_API hb_status hb_winner(const hb_position* p, hb_player mover, hb_convention conv, hb_player* out);
HB_API hb_status hb_optimal_moves(const hb_position* p, hb_player mover, hb_convention conv, uint32_t* edge_ids,
                                  size_t capacity, size_t* count);

/* Misère Red-Blue outcome from grounded counts. HB_ERR_GREEN_EDGE on green input. */
HB_API hb_status hb_classify_misere_rb(const hb_position* p, hb_outcome* out);
/* *found = 0 when the mover has no grounded edge of their own colour. */
HB_API hb_status hb_proof_strategy_move(const hb_position* p, hb_player mover, int* found, uint32_t* edge_id);

HB_API hb_status hb_merge_ground(const hb_position* p, hb_position** out);
HB_API hb_status hb_to_misere_instance(const hb_position* p, hb_position** out);

/* `colors` is a letter set such as "BR" or "BRG". */
HB_API hb_status hb_random_position(size_t max_edges, size_t max_vertices, const char* colors, uint64_t seed,
                                    hb_position** out);
HB_API hb_status hb_enumerate(hb_shape shape, size_t max_edges, const char* colors, size_t max_graph_vertices,
                              hb_position_callback callback, void* user);
HB_API hb_status hb_explore_green_strings(size_t max_edges, int strict_green, hb_explore_callback callback,
                                         void* user);

/* suite: "theorem1", "reduction", "strategy" or "duality". `colors` is only
 * used by "duality" (NULL means "BR"). Writes the report as a JSON document. */
HB_API hb_status hb_verify(const char* suite, const hb_suite_params* params, const char* colors, char** report_json,
                           int* passed);

#ifdef __cplusplus
}
#endif

#endif /* HACKENBUSH_H */
