/* mzdgbt.h - C interface to the MZ digit-wise halving toolkit.
 *
 * The library divides decimal digit strings by two one digit at a time,
 * builds the labeled division graph that k recursive halvings induce,
 * derives binary codes from digit parities, and emits deterministic
 * PPM/CSV artifacts.  All handles are opaque; every fallible call returns
 * an mz_status and writes its result through an out parameter.  Handles
 * and strings returned through out parameters are owned by the caller and
 * must be released with the matching *_free function.  Strings returned
 * as plain `const char*` are owned by the handle they came from and stay
 * valid until that handle is freed.
 *
 * All operations are pure and deterministic: the same inputs produce the
 * same bytes on every run.  Distinct handles may be used concurrently
 * from different threads; a single handle must not be mutated (freed)
 * while another thread reads it.
 */

#ifndef MZDGBT_H
#define MZDGBT_H

#include <stddef.h>

#ifndef MZ_API
#  if defined(_WIN32)
#    define MZ_API
#  else
#    define MZ_API __attribute__((visibility("default")))
#  endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mz_status {
    MZ_OK = 0,
    MZ_ERR_ARGUMENT = 1, /* null pointer, bad flag, violated precondition */
    MZ_ERR_PARSE = 2,    /* malformed digit string or palette file */
    MZ_ERR_RANGE = 3,    /* index or level out of range */
    MZ_ERR_GUARD = 4,    /* tractability guard rejected the input */
    MZ_ERR_IO = 5,       /* destination could not be opened or written */
    MZ_ERR_INTERNAL = 6
} mz_status;

MZ_API const char* mz_version(void);
MZ_API const char* mz_status_name(mz_status status);

/* Frees a string returned through a char** out parameter. NULL is a no-op. */
MZ_API void mz_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Halving                                                             */
/* ------------------------------------------------------------------ */

typedef struct mz_halving mz_halving;

/* Single-digit step: digit -> (floor(digit/2), 5*(digit mod 2)). */
MZ_API mz_status mz_digit_halve(int digit, int* floor_half, int* fraction);

/* One halving of a digit string.  `digits` is a decimal string; leading
 * zeros are significant and preserved.  The result row is one digit wider
 * than the input and its integer value is exactly five times the input's. */
MZ_API mz_status mz_halve(const char* digits, mz_halving** out);
MZ_API void mz_halving_free(mz_halving* h);

MZ_API const char* mz_halving_input(const mz_halving* h);
MZ_API const char* mz_halving_result(const mz_halving* h);
/* Quotient rendering: result digits with the decimal point before the
 * last digit, e.g. "375" -> "187.5".  A leading zero digit is kept. */
MZ_API const char* mz_halving_quotient(const mz_halving* h);
MZ_API size_t mz_halving_width(const mz_halving* h);
/* Step j (0 = most significant input digit). */
MZ_API mz_status mz_halving_step(const mz_halving* h, size_t j,
                                 int* floor_half, int* fraction);

/* ------------------------------------------------------------------ */
/* Codewords                                                           */
/* ------------------------------------------------------------------ */

/* Parity codeword of level k: apply k halvings, then map each digit of
 * the final row to its parity.  Length is strlen(digits) + k.  The
 * returned string is 0/1 characters; free with mz_string_free. */
MZ_API mz_status mz_codeword(const char* digits, unsigned k, char** out);

/* Same codeword computed along an independent route: multiply the input
 * value by 5^k with big-integer arithmetic, render in decimal, left-pad
 * with zeros, map to parities.  Agrees with mz_codeword on every input. */
MZ_API mz_status mz_codeword_oracle(const char* digits, unsigned k, char** out);

/* Parity of the floor/fraction pair row of step k (k >= 1), ordered from
 * the most significant pair down.  Length is 2*(strlen(digits) + k - 1). */
MZ_API mz_status mz_codeword_intermediate(const char* digits, unsigned k,
                                          char** out);

/* ------------------------------------------------------------------ */
/* Division graph                                                      */
/* ------------------------------------------------------------------ */

typedef struct mz_graph mz_graph;

MZ_API mz_status mz_graph_build(const char* digits, unsigned k, mz_graph** out);
MZ_API void mz_graph_free(mz_graph* g);

MZ_API size_t mz_graph_order(const mz_graph* g);
MZ_API size_t mz_graph_edge_count(const mz_graph* g);
MZ_API size_t mz_graph_leaf_count(const mz_graph* g); /* degree-1 vertices */
MZ_API unsigned mz_graph_k(const mz_graph* g);
MZ_API size_t mz_graph_input_width(const mz_graph* g);
MZ_API int mz_graph_is_path(const mz_graph* g);
MZ_API int mz_graph_is_connected(const mz_graph* g);

/* Number of 8-cycles, counted from the structural cycle sites. */
MZ_API unsigned long long mz_graph_c8_count(const mz_graph* g);
/* Exhaustive 8-cycle enumeration; MZ_ERR_GUARD when order > 200. */
MZ_API mz_status mz_graph_c8_bruteforce(const mz_graph* g,
                                        unsigned long long* out);

/* Copies result row r (width input_width + r) into buf as a NUL-terminated
 * decimal string.  cap must be at least input_width + r + 1. */
MZ_API mz_status mz_graph_row(const mz_graph* g, unsigned r,
                              char* buf, size_t cap);

/* Text exports.  The description format lists one vertex per line as
 * "row kind index label" (kind is result/floor/fraction, index 0 = least
 * significant), then one edge per line as the two endpoint triples.
 * The adjacency format starts with "order edge_count" and then lists, per
 * vertex id, "id label neighbor-ids...". */
MZ_API mz_status mz_graph_write_description(const mz_graph* g, const char* path);
MZ_API mz_status mz_graph_write_adjacency(const mz_graph* g, const char* path);

/* ------------------------------------------------------------------ */
/* Codes                                                               */
/* ------------------------------------------------------------------ */

typedef struct mz_code mz_code;

enum { MZ_CODE_ALLOW_FULL_DECK = 1 }; /* permit all ten digits (10! words) */

typedef struct mz_code_info {
    size_t length;         /* n: common codeword length */
    size_t size;           /* M: number of codewords */
    size_t min_distance;   /* d: minimum pairwise Hamming distance */
    size_t stripped_zeros; /* k0 removed by mz_code_strip, else 0 */
    int degenerate;        /* M == 1; min_distance reported as length */
    int has_duplicates;    /* equal codewords present; forces d = 0 */
} mz_code_info;

/* Builds the level-k code of a set of distinct digits, e.g. "256": one
 * codeword per permutation of the set, in lexicographic order.  Sets of
 * ten digits are rejected with MZ_ERR_GUARD unless
 * MZ_CODE_ALLOW_FULL_DECK is passed. */
MZ_API mz_status mz_code_build(const char* digit_set, unsigned k,
                               unsigned flags, mz_code** out);
MZ_API void mz_code_free(mz_code* c);

MZ_API size_t mz_code_size(const mz_code* c);
MZ_API size_t mz_code_length(const mz_code* c);
MZ_API const char* mz_code_word(const mz_code* c, size_t i);   /* NULL oob */
MZ_API const char* mz_code_source(const mz_code* c, size_t i); /* NULL oob */
MZ_API mz_status mz_code_get_info(const mz_code* c, mz_code_info* out);

/* Removes the family-wide minimum count of leading zero bits from every
 * codeword (an all-zero word counts its full length). */
MZ_API mz_status mz_code_strip(const mz_code* c, mz_code** out, size_t* k0);

/* Writes one codeword per line, permutation order. */
MZ_API mz_status mz_code_write_words(const mz_code* c, const char* path);

/* Hamming distance of two equal-length 0/1 strings. */
MZ_API mz_status mz_hamming(const char* a, const char* b, size_t* out);

/* Codes quoted by codeword length instead of level: a length-L code over
 * t digits sits at level L - t. */
MZ_API mz_status mz_level_for_length(size_t codeword_length, size_t digit_count,
                                     unsigned* out);

/* ------------------------------------------------------------------ */
/* Scans                                                               */
/* ------------------------------------------------------------------ */

typedef struct mz_scan mz_scan;

typedef struct mz_scan_entry {
    unsigned k;
    size_t raw_length;     /* width + k */
    size_t stripped_zeros; /* k0 */
    size_t length;         /* n after stripping */
    size_t min_distance;   /* d of the stripped code */
} mz_scan_entry;

/* Scans levels k_from..k_to of the permutation family of `digit_set`,
 * recording per-level code parameters and every pair of sources whose
 * codewords coincide.  Collisions are findings, not errors. */
MZ_API mz_status mz_scan_family(const char* digit_set, unsigned k_from,
                                unsigned k_to, unsigned flags, mz_scan** out);

/* Same scan across every digit string of the given width (all 10^width of
 * them), not just one permutation family.  Width is capped at 3. */
MZ_API mz_status mz_scan_all(unsigned width, unsigned k_from, unsigned k_to,
                             mz_scan** out);
MZ_API void mz_scan_free(mz_scan* s);

MZ_API size_t mz_scan_collision_count(const mz_scan* s);
MZ_API mz_status mz_scan_collision(const mz_scan* s, size_t i, unsigned* k,
                                   const char** x, const char** y);
MZ_API size_t mz_scan_entry_count(const mz_scan* s);
MZ_API mz_status mz_scan_get_entry(const mz_scan* s, size_t i,
                                   mz_scan_entry* out);

/* CSV emitters ("\n" line endings, header first):
 *   series:     k,raw_n,k0,n,d
 *   collisions: k,x,y
 *   pie:        offset,count   with offset = d - floor(n/2)           */
MZ_API mz_status mz_scan_write_series_csv(const mz_scan* s, const char* path);
MZ_API mz_status mz_scan_write_collisions_csv(const mz_scan* s, const char* path);
MZ_API mz_status mz_scan_write_pie_csv(const mz_scan* s, const char* path);

/* Per-level Hamming distance of two equal-width inputs as "k,distance"
 * CSV, written to a file or returned as an allocated string. */
MZ_API mz_status mz_xor_distance_csv(const char* x, const char* y,
                                     unsigned k_from, unsigned k_to,
                                     const char* path);
MZ_API mz_status mz_xor_distance_csv_text(const char* x, const char* y,
                                          unsigned k_from, unsigned k_to,
                                          char** out);

/* ------------------------------------------------------------------ */
/* Rendering                                                           */
/* ------------------------------------------------------------------ */

typedef struct mz_palette mz_palette;
typedef struct mz_image mz_image;

enum {
    MZ_BITMAP_BINARY = 1,     /* color by digit parity instead of value */
    MZ_BITMAP_FULL = 2,       /* interleave floor/fraction rows */
    MZ_BITMAP_ALIGN_LEFT = 4  /* rows flush left instead of right */
};

/* Default colors: digits 0..9 get ten fixed, pairwise distinct colors
 * (0 black, 1 white); the background is mid gray. */
MZ_API mz_status mz_palette_standard(mz_palette** out);
/* Loads eleven "label R G B" lines; labels are 0..9 and "background". */
MZ_API mz_status mz_palette_load(const char* path, mz_palette** out);
MZ_API void mz_palette_free(mz_palette* p);

/* Renders the result rows of k halvings, one pixel per digit, one row per
 * level, rows right-aligned by default (pass NULL palette for defaults). */
MZ_API mz_status mz_bitmap(const char* digits, unsigned k, unsigned flags,
                           const mz_palette* palette, mz_image** out);

/* One row per level k_from..k_to: the XOR of the two inputs' level-k
 * codewords, right-aligned; set bits white, clear bits black. */
MZ_API mz_status mz_xor_bitmap(const char* x, const char* y, unsigned k_from,
                               unsigned k_to, const mz_palette* palette,
                               mz_image** out);
MZ_API void mz_image_free(mz_image* img);

MZ_API size_t mz_image_width(const mz_image* img);
MZ_API size_t mz_image_height(const mz_image* img);
/* Row-major RGB triples, 3 * width * height bytes. */
MZ_API const unsigned char* mz_image_pixels(const mz_image* img);

/* Binary PPM: "P6\n{width} {height}\n255\n" then raw RGB bytes.
 * bytes_written may be NULL. */
MZ_API mz_status mz_image_write_ppm(const mz_image* img, const char* path,
                                    size_t* bytes_written);

#ifdef __cplusplus
}
#endif

#endif /* MZDGBT_H */
