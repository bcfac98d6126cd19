// extern-C surface of the shared library.  Every entry point traps C++
// exceptions and maps them onto mz_status codes; handles own their data
// and all strings they hand out.

#include "mzdgbt.h"

#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "codes.hpp"
#include "digits.hpp"
#include "graph.hpp"
#include "render.hpp"

struct mz_halving {
    mz::HalvingTrace trace;
    std::string input, result, quotient;
};

struct mz_graph {
    mz::DgbtGraph graph;
};

struct mz_code {
    mz::Code code;
    std::size_t k0 = 0;
    std::vector<std::string> word_strs, source_strs;
};

struct mz_scan {
    mz::ScanReport report;
    std::vector<std::string> xs, ys;
};

struct mz_palette {
    mz::Palette palette;
};

struct mz_image {
    mz::Image image;
};

namespace {

template <typename F>
mz_status guarded(F&& body) noexcept {
    try {
        body();
        return MZ_OK;
    } catch (const mz::ParseError&) {
        return MZ_ERR_PARSE;
    } catch (const mz::GuardError&) {
        return MZ_ERR_GUARD;
    } catch (const mz::IoError&) {
        return MZ_ERR_IO;
    } catch (const std::out_of_range&) {
        return MZ_ERR_RANGE;
    } catch (const std::invalid_argument&) {
        return MZ_ERR_ARGUMENT;
    } catch (...) {
        return MZ_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::vector<mz::Digit> parse_digit_set(const char* digit_set) {
    const mz::DigitString parsed = mz::DigitString::parse(digit_set);
    return parsed.digits();
}

void fill_code_strings(mz_code& handle) {
    handle.word_strs.reserve(handle.code.words.size());
    handle.source_strs.reserve(handle.code.sources.size());
    for (const mz::BitString& w : handle.code.words)
        handle.word_strs.push_back(w.str());
    for (const mz::DigitString& s : handle.code.sources)
        handle.source_strs.push_back(s.str());
}

void fill_scan_strings(mz_scan& handle) {
    handle.xs.reserve(handle.report.collisions.size());
    handle.ys.reserve(handle.report.collisions.size());
    for (const mz::Collision& c : handle.report.collisions) {
        handle.xs.push_back(c.x.str());
        handle.ys.push_back(c.y.str());
    }
}

const mz::Palette& palette_or_default(const mz_palette* palette) {
    return palette ? palette->palette : mz::Palette::standard();
}

template <typename F>
mz_status write_file(const char* path, F&& writer) {
    return guarded([&] {
        if (!path)
            throw std::invalid_argument("null path");
        std::ofstream os(path, std::ios::binary);
        if (!os)
            throw mz::IoError("cannot open " + std::string(path));
        writer(os);
        if (!os)
            throw mz::IoError("write failed for " + std::string(path));
    });
}

template <typename F>
mz_status codeword_impl(const char* digits, char** out, F&& compute) {
    if (!digits || !out)
        return MZ_ERR_ARGUMENT;
    return guarded([&] {
        const mz::BitString word = compute(mz::DigitString::parse(digits));
        *out = dup_string(word.str());
    });
}

} // namespace

extern "C" {

MZ_API const char* mz_version(void) {
    return "1.0.0";
}

MZ_API const char* mz_status_name(mz_status status) {
    switch (status) {
    case MZ_OK: return "ok";
    case MZ_ERR_ARGUMENT: return "invalid argument";
    case MZ_ERR_PARSE: return "parse error";
    case MZ_ERR_RANGE: return "out of range";
    case MZ_ERR_GUARD: return "guard exceeded";
    case MZ_ERR_IO: return "i/o error";
    case MZ_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

MZ_API void mz_string_free(char* s) {
    delete[] s;
}

MZ_API mz_status mz_digit_halve(int digit, int* floor_half, int* fraction) {
    if (digit < 0 || digit > 9 || !floor_half || !fraction)
        return MZ_ERR_ARGUMENT;
    const mz::HalvingStep s = mz::halve_digit(static_cast<mz::Digit>(digit));
    *floor_half = s.floor_half;
    *fraction = s.fraction;
    return MZ_OK;
}

MZ_API mz_status mz_halve(const char* digits, mz_halving** out) {
    if (!digits || !out)
        return MZ_ERR_ARGUMENT;
    return guarded([&] {
        mz::HalvingTrace trace = mz::halve(mz::DigitString::parse(digits));
        std::string input = trace.input.str();
        std::string result = trace.result.str();
        std::string quotient = mz::format_quotient(trace);
        *out = new mz_halving{std::move(trace), std::move(input),
                              std::move(result), std::move(quotient)};
    });
}

MZ_API void mz_halving_free(mz_halving* h) {
    delete h;
}

MZ_API const char* mz_halving_input(const mz_halving* h) {
    return h ? h->input.c_str() : nullptr;
}

MZ_API const char* mz_halving_result(const mz_halving* h) {
    return h ? h->result.c_str() : nullptr;
}

MZ_API const char* mz_halving_quotient(const mz_halving* h) {
    return h ? h->quotient.c_str() : nullptr;
}

MZ_API size_t mz_halving_width(const mz_halving* h) {
    return h ? h->trace.input.size() : 0;
}

MZ_API mz_status mz_halving_step(const mz_halving* h, size_t j, int* floor_half,
                                 int* fraction) {
    if (!h || !floor_half || !fraction)
        return MZ_ERR_ARGUMENT;
    if (j >= h->trace.steps.size())
        return MZ_ERR_RANGE;
    *floor_half = h->trace.steps[j].floor_half;
    *fraction = h->trace.steps[j].fraction;
    return MZ_OK;
}

MZ_API mz_status mz_codeword(const char* digits, unsigned k, char** out) {
    return codeword_impl(digits, out, [k](const mz::DigitString& x) {
        return mz::parity_codeword(x, k);
    });
}

MZ_API mz_status mz_codeword_oracle(const char* digits, unsigned k, char** out) {
    return codeword_impl(digits, out, [k](const mz::DigitString& x) {
        return mz::oracle_codeword(x, k);
    });
}

MZ_API mz_status mz_codeword_intermediate(const char* digits, unsigned k,
                                          char** out) {
    return codeword_impl(digits, out, [k](const mz::DigitString& x) {
        return mz::intermediate_codeword(x, k);
    });
}

MZ_API mz_status mz_graph_build(const char* digits, unsigned k, mz_graph** out) {
    if (!digits || !out)
        return MZ_ERR_ARGUMENT;
    return guarded([&] {
        *out = new mz_graph{mz::DgbtGraph::build(mz::DigitString::parse(digits), k)};
    });
}

MZ_API void mz_graph_free(mz_graph* g) {
    delete g;
}

MZ_API size_t mz_graph_order(const mz_graph* g) {
    return g ? g->graph.order() : 0;
}

MZ_API size_t mz_graph_edge_count(const mz_graph* g) {
    return g ? g->graph.edge_count() : 0;
}

MZ_API size_t mz_graph_leaf_count(const mz_graph* g) {
    return g ? g->graph.leaf_count() : 0;
}

MZ_API unsigned mz_graph_k(const mz_graph* g) {
    return g ? g->graph.k() : 0;
}

MZ_API size_t mz_graph_input_width(const mz_graph* g) {
    return g ? g->graph.input_width() : 0;
}

MZ_API int mz_graph_is_path(const mz_graph* g) {
    return g && g->graph.is_path() ? 1 : 0;
}

MZ_API int mz_graph_is_connected(const mz_graph* g) {
    return g && g->graph.is_connected() ? 1 : 0;
}

MZ_API unsigned long long mz_graph_c8_count(const mz_graph* g) {
    return g ? g->graph.c8_site_count() : 0;
}

MZ_API mz_status mz_graph_c8_bruteforce(const mz_graph* g,
                                        unsigned long long* out) {
    if (!g || !out)
        return MZ_ERR_ARGUMENT;
    return guarded([&] { *out = g->graph.c8_count_bruteforce(); });
}

MZ_API mz_status mz_graph_row(const mz_graph* g, unsigned r, char* buf,
                              size_t cap) {
    if (!g || !buf)
        return MZ_ERR_ARGUMENT;
    return guarded([&] {
        const std::string row = g->graph.row(r).str();
        if (cap < row.size() + 1)
            throw std::invalid_argument("buffer too small");
        std::memcpy(buf, row.c_str(), row.size() + 1);
    });
}

MZ_API mz_status mz_graph_write_description(const mz_graph* g, const char* path) {
    if (!g)
        return MZ_ERR_ARGUMENT;
    return write_file(path, [&](std::ostream& os) { g->graph.write_description(os); });
}

MZ_API mz_status mz_graph_write_adjacency(const mz_graph* g, const char* path) {
    if (!g)
        return MZ_ERR_ARGUMENT;
    return write_file(path, [&](std::ostream& os) { g->graph.write_adjacency(os); });
}

MZ_API mz_status mz_code_build(const char* digit_set, unsigned k, unsigned flags,
                               mz_code** out) {
    if (!digit_set || !out || (flags & ~unsigned{MZ_CODE_ALLOW_FULL_DECK}))
        return MZ_ERR_ARGUMENT;
    return guarded([&] {
        auto handle = std::make_unique<mz_code>();
        handle->code = mz::family_code(parse_digit_set(digit_set), k,
                                       flags & MZ_CODE_ALLOW_FULL_DECK);
        fill_code_strings(*handle);
        *out = handle.release();
    });
}

MZ_API void mz_code_free(mz_code* c) {
    delete c;
}

MZ_API size_t mz_code_size(const mz_code* c) {
    return c ? c->code.size() : 0;
}

MZ_API size_t mz_code_length(const mz_code* c) {
    return c ? c->code.length() : 0;
}

MZ_API const char* mz_code_word(const mz_code* c, size_t i) {
    return c && i < c->word_strs.size() ? c->word_strs[i].c_str() : nullptr;
}

MZ_API const char* mz_code_source(const mz_code* c, size_t i) {
    return c && i < c->source_strs.size() ? c->source_strs[i].c_str() : nullptr;
}

MZ_API mz_status mz_code_get_info(const mz_code* c, mz_code_info* out) {
    if (!c || !out)
        return MZ_ERR_ARGUMENT;
    return guarded([&] {
        const mz::CodeParams p = mz::code_params(c->code, c->k0);
        out->length = p.n;
        out->size = p.m;
        out->min_distance = p.min_distance;
        out->stripped_zeros = p.k0;
        out->degenerate = p.degenerate;
        out->has_duplicates = p.has_duplicates;
    });
}

MZ_API mz_status mz_code_strip(const mz_code* c, mz_code** out, size_t* k0) {
    if (!c || !out)
        return MZ_ERR_ARGUMENT;
    return guarded([&] {
        mz::StripResult stripped = mz::strip_common_leading_zeros(c->code);
        auto handle = std::make_unique<mz_code>();
        handle->code = std::move(stripped.code);
        handle->k0 = c->k0 + stripped.k0;
        fill_code_strings(*handle);
        if (k0)
            *k0 = stripped.k0;
        *out = handle.release();
    });
}

MZ_API mz_status mz_code_write_words(const mz_code* c, const char* path) {
    if (!c)
        return MZ_ERR_ARGUMENT;
    return write_file(path, [&](std::ostream& os) {
        for (const std::string& w : c->word_strs)
            os << w << '\n';
    });
}

MZ_API mz_status mz_hamming(const char* a, const char* b, size_t* out) {
    if (!a || !b || !out)
        return MZ_ERR_ARGUMENT;
    return guarded([&] {
        *out = mz::hamming(mz::BitString::parse(a), mz::BitString::parse(b));
    });
}

MZ_API mz_status mz_level_for_length(size_t codeword_length, size_t digit_count,
                                     unsigned* out) {
    if (!out)
        return MZ_ERR_ARGUMENT;
    return guarded([&] { *out = mz::level_for_length(codeword_length, digit_count); });
}

MZ_API mz_status mz_scan_family(const char* digit_set, unsigned k_from,
                                unsigned k_to, unsigned flags, mz_scan** out) {
    if (!digit_set || !out || (flags & ~unsigned{MZ_CODE_ALLOW_FULL_DECK}))
        return MZ_ERR_ARGUMENT;
    return guarded([&] {
        auto handle = std::make_unique<mz_scan>();
        handle->report = mz::conjecture_scan(parse_digit_set(digit_set), k_from,
                                             k_to, flags & MZ_CODE_ALLOW_FULL_DECK);
        fill_scan_strings(*handle);
        *out = handle.release();
    });
}

MZ_API mz_status mz_scan_all(unsigned width, unsigned k_from, unsigned k_to,
                             mz_scan** out) {
    if (!out)
        return MZ_ERR_ARGUMENT;
    return guarded([&] {
        auto handle = std::make_unique<mz_scan>();
        handle->report = mz::conjecture_scan_all(width, k_from, k_to);
        fill_scan_strings(*handle);
        *out = handle.release();
    });
}

MZ_API void mz_scan_free(mz_scan* s) {
    delete s;
}

MZ_API size_t mz_scan_collision_count(const mz_scan* s) {
    return s ? s->report.collisions.size() : 0;
}

MZ_API mz_status mz_scan_collision(const mz_scan* s, size_t i, unsigned* k,
                                   const char** x, const char** y) {
    if (!s)
        return MZ_ERR_ARGUMENT;
    if (i >= s->report.collisions.size())
        return MZ_ERR_RANGE;
    if (k)
        *k = s->report.collisions[i].k;
    if (x)
        *x = s->xs[i].c_str();
    if (y)
        *y = s->ys[i].c_str();
    return MZ_OK;
}

MZ_API size_t mz_scan_entry_count(const mz_scan* s) {
    return s ? s->report.rows.size() : 0;
}

MZ_API mz_status mz_scan_get_entry(const mz_scan* s, size_t i,
                                   mz_scan_entry* out) {
    if (!s || !out)
        return MZ_ERR_ARGUMENT;
    if (i >= s->report.rows.size())
        return MZ_ERR_RANGE;
    const mz::ScanRow& r = s->report.rows[i];
    out->k = r.k;
    out->raw_length = r.raw_n;
    out->stripped_zeros = r.k0;
    out->length = r.n;
    out->min_distance = r.min_distance;
    return MZ_OK;
}

MZ_API mz_status mz_scan_write_series_csv(const mz_scan* s, const char* path) {
    if (!s)
        return MZ_ERR_ARGUMENT;
    return write_file(path, [&](std::ostream& os) {
        mz::write_series_csv(s->report.rows, os);
    });
}

MZ_API mz_status mz_scan_write_collisions_csv(const mz_scan* s, const char* path) {
    if (!s)
        return MZ_ERR_ARGUMENT;
    return write_file(path, [&](std::ostream& os) {
        mz::write_collisions_csv(s->report.collisions, os);
    });
}

MZ_API mz_status mz_scan_write_pie_csv(const mz_scan* s, const char* path) {
    if (!s)
        return MZ_ERR_ARGUMENT;
    return write_file(path, [&](std::ostream& os) {
        mz::write_pie_csv(s->report.rows, os);
    });
}

MZ_API mz_status mz_xor_distance_csv(const char* x, const char* y,
                                     unsigned k_from, unsigned k_to,
                                     const char* path) {
    if (!x || !y)
        return MZ_ERR_ARGUMENT;
    return write_file(path, [&](std::ostream& os) {
        mz::write_distance_csv(mz::DigitString::parse(x),
                               mz::DigitString::parse(y), k_from, k_to, os);
    });
}

MZ_API mz_status mz_xor_distance_csv_text(const char* x, const char* y,
                                          unsigned k_from, unsigned k_to,
                                          char** out) {
    if (!x || !y || !out)
        return MZ_ERR_ARGUMENT;
    return guarded([&] {
        std::ostringstream os;
        mz::write_distance_csv(mz::DigitString::parse(x),
                               mz::DigitString::parse(y), k_from, k_to, os);
        *out = dup_string(os.str());
    });
}

MZ_API mz_status mz_palette_standard(mz_palette** out) {
    if (!out)
        return MZ_ERR_ARGUMENT;
    return guarded([&] { *out = new mz_palette{mz::Palette::standard()}; });
}

MZ_API mz_status mz_palette_load(const char* path, mz_palette** out) {
    if (!path || !out)
        return MZ_ERR_ARGUMENT;
    return guarded([&] { *out = new mz_palette{mz::Palette::load_file(path)}; });
}

MZ_API void mz_palette_free(mz_palette* p) {
    delete p;
}

MZ_API mz_status mz_bitmap(const char* digits, unsigned k, unsigned flags,
                           const mz_palette* palette, mz_image** out) {
    const unsigned known =
        MZ_BITMAP_BINARY | MZ_BITMAP_FULL | MZ_BITMAP_ALIGN_LEFT;
    if (!digits || !out || (flags & ~known))
        return MZ_ERR_ARGUMENT;
    return guarded([&] {
        const mz::DigitString x = mz::DigitString::parse(digits);
        const mz::Align align =
            flags & MZ_BITMAP_ALIGN_LEFT ? mz::Align::Left : mz::Align::Right;
        const bool full = flags & MZ_BITMAP_FULL;
        const mz::Palette& pal = palette_or_default(palette);
        mz::Image img = flags & MZ_BITMAP_BINARY
                            ? mz::binary_bitmap(x, k, pal, align, full)
                            : mz::digit_bitmap(x, k, pal, align, full);
        *out = new mz_image{std::move(img)};
    });
}

MZ_API mz_status mz_xor_bitmap(const char* x, const char* y, unsigned k_from,
                               unsigned k_to, const mz_palette* palette,
                               mz_image** out) {
    if (!x || !y || !out)
        return MZ_ERR_ARGUMENT;
    return guarded([&] {
        *out = new mz_image{mz::xor_bitmap(mz::DigitString::parse(x),
                                           mz::DigitString::parse(y), k_from,
                                           k_to, palette_or_default(palette))};
    });
}

MZ_API void mz_image_free(mz_image* img) {
    delete img;
}

MZ_API size_t mz_image_width(const mz_image* img) {
    return img ? img->image.width() : 0;
}

MZ_API size_t mz_image_height(const mz_image* img) {
    return img ? img->image.height() : 0;
}

MZ_API const unsigned char* mz_image_pixels(const mz_image* img) {
    return img ? img->image.pixels().data() : nullptr;
}

MZ_API mz_status mz_image_write_ppm(const mz_image* img, const char* path,
                                    size_t* bytes_written) {
    if (!img || !path)
        return MZ_ERR_ARGUMENT;
    return guarded([&] {
        const std::size_t n = mz::write_ppm_file(img->image, path);
        if (bytes_written)
            *bytes_written = n;
    });
}

} // extern "C"
