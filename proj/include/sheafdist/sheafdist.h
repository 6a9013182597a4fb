/* C interface to the sheafdist library.
 *
 * Objects are opaque handles created by the library and released with the
 * matching *_free function. Every fallible call returns an sd_status; on
 * failure sd_last_error() describes the problem (thread-local). Strings
 * returned through char** must be released with sd_string_free.
 */
#ifndef SHEAFDIST_H
#define SHEAFDIST_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(SHEAFDIST_BUILDING)
#define SD_API __declspec(dllexport)
#else
#define SD_API __declspec(dllimport)
#endif
#else
#define SD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sd_status {
  SD_OK = 0,
  SD_ERR_PARSE = 1,
  SD_ERR_INVALID_ARGUMENT = 2,
  SD_ERR_UNSUPPORTED = 3,
  SD_ERR_OUT_OF_RANGE = 4,
  SD_ERR_IO = 5,
  SD_ERR_INTERNAL = 6
} sd_status;

typedef enum sd_interval_type {
  SD_CENTRAL_OPEN = 0,
  SD_CENTRAL_CLOSED = 1,
  SD_RIGHT = 2,
  SD_LEFT = 3
} sd_interval_type;

typedef enum sd_part { SD_PART_CENTRAL = 0, SD_PART_RIGHT = 1, SD_PART_LEFT = 2 } sd_part;

typedef enum sd_side { SD_SIDE_RIGHT = 0, SD_SIDE_LEFT = 1 } sd_side;

/* A graded interval. Infinite endpoints are +/-INFINITY with the flag 0. */
typedef struct sd_interval {
  double lo;
  int lo_closed;
  double hi;
  int hi_closed;
  int degree;
} sd_interval;

/* One line of a matching. For central parts `index` is the matching index,
 * for half-open parts the degree. A deletion has exactly one of
 * has_left / has_right set. */
typedef struct sd_match_entry {
  sd_part part;
  int index;
  int has_left;
  sd_interval left;
  int has_right;
  sd_interval right;
  double cost;
} sd_match_entry;

typedef struct sd_barcode sd_barcode;
typedef struct sd_matching sd_matching;

SD_API const char* sd_version(void);
SD_API const char* sd_last_error(void);
SD_API double sd_default_tolerance(void);
SD_API void sd_string_free(char* s);

/* Writes the shortest round-trip decimal (or inf/-inf) into buf. */
SD_API sd_status sd_format_number(double value, char* buf, size_t size);

SD_API sd_status sd_interval_parse(const char* literal, sd_interval* out);
SD_API sd_status sd_interval_format(const sd_interval* iv, char** out);
SD_API sd_status sd_classify(const sd_interval* iv, sd_interval_type* out);

SD_API sd_status sd_barcode_parse(const char* text, sd_barcode** out);
SD_API sd_status sd_barcode_read_file(const char* path, sd_barcode** out);
SD_API sd_status sd_barcode_from_intervals(const sd_interval* items, size_t count,
                                           sd_barcode** out);
SD_API void sd_barcode_free(sd_barcode* barcode);
SD_API size_t sd_barcode_size(const sd_barcode* barcode);
SD_API sd_status sd_barcode_get(const sd_barcode* barcode, size_t i, sd_interval* out);
SD_API sd_status sd_barcode_format(const sd_barcode* barcode, char** out);
SD_API sd_status sd_barcode_equal(const sd_barcode* a, const sd_barcode* b, double tol, int* out);

/* Graded dimensions of global sections. Call with degrees == NULL to get
 * the number of nonzero entries in *count. */
SD_API sd_status sd_global_sections(const sd_barcode* barcode, int compact_support, int* degrees,
                                    long* dims, size_t capacity, size_t* count);

/* Distances are +INFINITY when the barcodes lie in different components. */
SD_API sd_status sd_distance(const sd_barcode* f, const sd_barcode* g, double* out);
SD_API sd_status sd_bruteforce_distance(const sd_barcode* f, const sd_barcode* g, size_t limit,
                                        double* out);
SD_API sd_status sd_same_component(const sd_barcode* f, const sd_barcode* g, int* out);

SD_API sd_status sd_match(const sd_barcode* f, const sd_barcode* g, sd_matching** out);
SD_API void sd_matching_free(sd_matching* matching);
SD_API double sd_matching_distance(const sd_matching* matching);
SD_API size_t sd_matching_size(const sd_matching* matching);
SD_API sd_status sd_matching_entry(const sd_matching* matching, size_t i, sd_match_entry* out);

SD_API sd_status sd_convolve(const sd_barcode* barcode, double eps, sd_barcode** out);
SD_API sd_status sd_interpolate(const sd_barcode* f, const sd_barcode* g,
                                const sd_matching* matching, double t, double tol,
                                sd_barcode** out);

/* Hom(k_I[-i], k_J[-j]) for source I@i and target J@j. */
SD_API sd_status sd_hom_dim(const sd_interval* source, const sd_interval* target, double tol,
                            int* out);
SD_API sd_status sd_ext_oracle(const sd_interval* source, const sd_interval* target, double tol,
                               int* out);

/* .pdg text for the given side of the barcode's CLR split (all degrees). */
SD_API sd_status sd_barcode_export_diagram(const sd_barcode* barcode, sd_side side, char** out);
/* Reads .pdg text and rebuilds bars on the given side. */
SD_API sd_status sd_diagram_import(const char* text, sd_side side, sd_barcode** out);

#ifdef __cplusplus
}
#endif

#endif /* SHEAFDIST_H */
