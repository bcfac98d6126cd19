// mzdgbt - command-line front end for the MZ halving toolkit.
//
// Subcommands: divide, graph, bitmap, code, scan, distance-pair.
// Exit codes: 0 success, 1 internal or i/o failure, 2 usage error.
// stdout carries data only; diagnostics go to stderr.  Identical
// invocations produce byte-identical output.

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <mzdgbt.h>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int exit_code_for(mz_status status) {
    if (status == MZ_OK)
        return kExitOk;
    return status == MZ_ERR_IO || status == MZ_ERR_INTERNAL ? kExitFailure
                                                            : kExitUsage;
}

int fail(mz_status status, const std::string& what) {
    std::fprintf(stderr, "mzdgbt: %s: %s\n", what.c_str(), mz_status_name(status));
    return exit_code_for(status);
}

struct PaletteHandle {
    mz_palette* p = nullptr;
    ~PaletteHandle() { mz_palette_free(p); }
};

// Loads --palette when given; a null handle means library defaults.
int load_palette(const std::string& path, PaletteHandle& out) {
    if (path.empty())
        return kExitOk;
    const mz_status st = mz_palette_load(path.c_str(), &out.p);
    if (st != MZ_OK)
        return fail(st, "palette " + path);
    return kExitOk;
}

// Digits given as "2,5,6" (or plain "256"); returned as a bare digit string.
bool parse_digit_list(const std::string& arg, std::string& out) {
    out.clear();
    std::string token;
    for (std::size_t i = 0; i <= arg.size(); ++i) {
        if (i == arg.size() || arg[i] == ',') {
            if (token.size() == 1)
                out += token;
            else if (!token.empty())
                return false;
            token.clear();
        } else {
            token += arg[i];
        }
    }
    return !out.empty();
}

int run_divide(const std::string& x, unsigned steps) {
    std::string current = x;
    for (unsigned i = 0; i < steps; ++i) {
        mz_halving* h = nullptr;
        const mz_status st = mz_halve(current.c_str(), &h);
        if (st != MZ_OK)
            return fail(st, "number \"" + current + "\"");
        std::printf("%s\n", mz_halving_quotient(h));
        current = mz_halving_result(h);
        mz_halving_free(h);
    }
    return kExitOk;
}

int run_graph(const std::string& x, unsigned k, bool stats,
              const std::string& export_path, const std::string& adjacency_path) {
    mz_graph* g = nullptr;
    mz_status st = mz_graph_build(x.c_str(), k, &g);
    if (st != MZ_OK)
        return fail(st, "number \"" + x + "\"");
    std::unique_ptr<mz_graph, decltype(&mz_graph_free)> guard(g, mz_graph_free);

    if (!export_path.empty()) {
        st = mz_graph_write_description(g, export_path.c_str());
        if (st != MZ_OK)
            return fail(st, export_path);
    }
    if (!adjacency_path.empty()) {
        st = mz_graph_write_adjacency(g, adjacency_path.c_str());
        if (st != MZ_OK)
            return fail(st, adjacency_path);
    }
    if (stats || (export_path.empty() && adjacency_path.empty()))
        std::printf("order=%zu edges=%zu leaves=%zu c8=%llu path=%s\n",
                    mz_graph_order(g), mz_graph_edge_count(g),
                    mz_graph_leaf_count(g), mz_graph_c8_count(g),
                    mz_graph_is_path(g) ? "true" : "false");
    return kExitOk;
}

int run_bitmap(const std::string& x, unsigned k, const std::string& out_path,
               bool binary, bool full, const std::string& align,
               const std::string& palette_path) {
    PaletteHandle palette;
    if (int rc = load_palette(palette_path, palette))
        return rc;

    unsigned flags = 0;
    if (binary)
        flags |= MZ_BITMAP_BINARY;
    if (full)
        flags |= MZ_BITMAP_FULL;
    if (align == "left")
        flags |= MZ_BITMAP_ALIGN_LEFT;

    mz_image* img = nullptr;
    mz_status st = mz_bitmap(x.c_str(), k, flags, palette.p, &img);
    if (st != MZ_OK)
        return fail(st, "number \"" + x + "\"");
    st = mz_image_write_ppm(img, out_path.c_str(), nullptr);
    mz_image_free(img);
    if (st != MZ_OK)
        return fail(st, out_path);
    return kExitOk;
}

int run_code(const std::string& digit_list, unsigned k, bool strip, bool params,
             const std::string& dump_path, bool allow_full_deck) {
    std::string digit_set;
    if (!parse_digit_list(digit_list, digit_set)) {
        std::fprintf(stderr, "mzdgbt: --digits expects single digits separated "
                             "by commas, e.g. 2,5,6\n");
        return kExitUsage;
    }

    mz_code* code = nullptr;
    mz_status st = mz_code_build(digit_set.c_str(), k,
                                 allow_full_deck ? MZ_CODE_ALLOW_FULL_DECK : 0,
                                 &code);
    if (st != MZ_OK)
        return fail(st, "digit set \"" + digit_set + "\"");
    std::unique_ptr<mz_code, decltype(&mz_code_free)> guard(code, mz_code_free);

    if (strip) {
        mz_code* stripped = nullptr;
        st = mz_code_strip(code, &stripped, nullptr);
        if (st != MZ_OK)
            return fail(st, "strip");
        guard.reset(stripped);
        code = stripped;
    }

    if (!dump_path.empty()) {
        st = mz_code_write_words(code, dump_path.c_str());
        if (st != MZ_OK)
            return fail(st, dump_path);
    }
    if (params) {
        mz_code_info info;
        st = mz_code_get_info(code, &info);
        if (st != MZ_OK)
            return fail(st, "params");
        std::printf("n=%zu M=%zu d=%zu k0=%zu", info.length, info.size,
                    info.min_distance, info.stripped_zeros);
        if (info.degenerate)
            std::printf(" degenerate=true");
        if (info.has_duplicates)
            std::printf(" duplicates=true");
        std::printf("\n");
    }
    if (dump_path.empty() && !params)
        for (size_t i = 0; i < mz_code_size(code); ++i)
            std::printf("%s\n", mz_code_word(code, i));
    return kExitOk;
}

int run_scan(const std::string& digit_list, unsigned all_width, unsigned k_from,
             unsigned k_to, const std::string& out_path,
             const std::string& collisions_path, const std::string& pie_path,
             bool allow_full_deck) {
    if (k_from > k_to) {
        std::fprintf(stderr, "mzdgbt: --k-from must not exceed --k-to\n");
        return kExitUsage;
    }

    mz_scan* scan = nullptr;
    mz_status st;
    if (!digit_list.empty()) {
        std::string digit_set;
        if (!parse_digit_list(digit_list, digit_set)) {
            std::fprintf(stderr, "mzdgbt: --digits expects single digits "
                                 "separated by commas, e.g. 2,5,6\n");
            return kExitUsage;
        }
        st = mz_scan_family(digit_set.c_str(), k_from, k_to,
                            allow_full_deck ? MZ_CODE_ALLOW_FULL_DECK : 0, &scan);
    } else {
        st = mz_scan_all(all_width, k_from, k_to, &scan);
    }
    if (st != MZ_OK)
        return fail(st, "scan");
    std::unique_ptr<mz_scan, decltype(&mz_scan_free)> guard(scan, mz_scan_free);

    if (!out_path.empty()) {
        st = mz_scan_write_series_csv(scan, out_path.c_str());
        if (st != MZ_OK)
            return fail(st, out_path);
    }
    if (!collisions_path.empty()) {
        st = mz_scan_write_collisions_csv(scan, collisions_path.c_str());
        if (st != MZ_OK)
            return fail(st, collisions_path);
    }
    if (!pie_path.empty()) {
        st = mz_scan_write_pie_csv(scan, pie_path.c_str());
        if (st != MZ_OK)
            return fail(st, pie_path);
    }
    std::printf("collisions=%zu\n", mz_scan_collision_count(scan));
    return kExitOk;
}

int run_distance_pair(const std::string& x, const std::string& y,
                      unsigned k_from, unsigned k_to, bool as_ppm,
                      const std::string& out_path,
                      const std::string& palette_path) {
    if (as_ppm) {
        if (out_path.empty()) {
            std::fprintf(stderr, "mzdgbt: --ppm requires --out FILE\n");
            return kExitUsage;
        }
        PaletteHandle palette;
        if (int rc = load_palette(palette_path, palette))
            return rc;
        mz_image* img = nullptr;
        mz_status st =
            mz_xor_bitmap(x.c_str(), y.c_str(), k_from, k_to, palette.p, &img);
        if (st != MZ_OK)
            return fail(st, "distance bitmap");
        st = mz_image_write_ppm(img, out_path.c_str(), nullptr);
        mz_image_free(img);
        if (st != MZ_OK)
            return fail(st, out_path);
        return kExitOk;
    }

    if (!out_path.empty()) {
        const mz_status st =
            mz_xor_distance_csv(x.c_str(), y.c_str(), k_from, k_to, out_path.c_str());
        if (st != MZ_OK)
            return fail(st, out_path);
        return kExitOk;
    }
    char* text = nullptr;
    const mz_status st =
        mz_xor_distance_csv_text(x.c_str(), y.c_str(), k_from, k_to, &text);
    if (st != MZ_OK)
        return fail(st, "distance series");
    std::fputs(text, stdout);
    mz_string_free(text);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"MZ digit-wise halving: division graphs, binary codes, and "
                 "deterministic bitmap/CSV artifacts"};
    app.require_subcommand(1);

    // divide
    std::string div_x;
    unsigned div_steps = 1;
    auto* divide = app.add_subcommand("divide", "Print the quotient of each halving level");
    divide->add_option("x", div_x, "decimal digit string")->required();
    divide->add_option("--steps", div_steps, "number of halvings (default 1)")
        ->check(CLI::Range(1u, 100000u));

    // graph
    std::string graph_x, graph_export, graph_export_adj;
    unsigned graph_k = 0;
    bool graph_stats = false;
    auto* graph = app.add_subcommand("graph", "Build the division graph of k halvings");
    graph->add_option("x", graph_x, "decimal digit string")->required();
    graph->add_option("--k", graph_k, "number of halvings")->required();
    graph->add_flag("--stats", graph_stats, "print order/edges/leaves/c8/path");
    graph->add_option("--export", graph_export, "write vertex+edge description file");
    graph->add_option("--export-adj", graph_export_adj, "write adjacency list file");

    // bitmap
    std::string bm_x, bm_out, bm_align = "right", bm_palette;
    unsigned bm_k = 0;
    bool bm_binary = false, bm_full = false;
    auto* bitmap = app.add_subcommand("bitmap", "Render the halving rows as a PPM image");
    bitmap->add_option("x", bm_x, "decimal digit string")->required();
    bitmap->add_option("--k", bm_k, "number of halvings")->required();
    bitmap->add_option("--out", bm_out, "output PPM path")->required();
    bitmap->add_flag("--binary", bm_binary, "color by digit parity");
    bitmap->add_flag("--full", bm_full, "interleave floor/fraction rows");
    bitmap->add_option("--align", bm_align, "row alignment (default right)")
        ->check(CLI::IsMember({"left", "right"}));
    bitmap->add_option("--palette", bm_palette, "palette file (eleven 'label R G B' lines)");

    // code
    std::string code_digits, code_dump;
    unsigned code_k = 0;
    bool code_strip = false, code_params = false, code_full_deck = false;
    auto* code = app.add_subcommand("code", "Codewords of a digit-set permutation family");
    code->add_option("--digits", code_digits, "distinct digits, e.g. 2,5,6")->required();
    code->add_option("--k", code_k, "halving level")->required();
    code->add_flag("--strip", code_strip, "remove the common leading zero bits");
    code->add_flag("--params", code_params, "print n/M/d/k0 instead of the words");
    code->add_option("--dump", code_dump, "write one codeword per line");
    code->add_flag("--allow-full-deck", code_full_deck, "permit all ten digits (10! words)");

    // scan
    std::string scan_digits, scan_out, scan_collisions, scan_pie;
    unsigned scan_from = 0, scan_to = 0, scan_all_width = 0;
    bool scan_full_deck = false;
    auto* scan = app.add_subcommand("scan", "Scan levels for colliding codewords");
    auto* scan_digits_opt =
        scan->add_option("--digits", scan_digits, "distinct digits, e.g. 2,5,6");
    scan->add_option("--all-width", scan_all_width,
                     "scan every digit string of this width instead (max 3)")
        ->excludes(scan_digits_opt);
    scan->add_option("--k-from", scan_from, "first level")->required();
    scan->add_option("--k-to", scan_to, "last level")->required();
    scan->add_option("--out", scan_out, "write per-level k,raw_n,k0,n,d CSV");
    scan->add_option("--collisions", scan_collisions, "write k,x,y collision CSV");
    scan->add_option("--pie", scan_pie, "write offset,count histogram CSV");
    scan->add_flag("--allow-full-deck", scan_full_deck, "permit all ten digits");

    // distance-pair
    std::string dp_x, dp_y, dp_out, dp_palette;
    unsigned dp_from = 1, dp_to = 1;
    bool dp_csv = false, dp_ppm = false;
    auto* dp = app.add_subcommand("distance-pair",
                                  "Per-level Hamming distance of two numbers");
    dp->add_option("x", dp_x, "decimal digit string")->required();
    dp->add_option("y", dp_y, "decimal digit string of the same width")->required();
    dp->add_option("--k-from", dp_from, "first level (>= 1)")->required();
    dp->add_option("--k-to", dp_to, "last level")->required();
    dp->add_option("--out", dp_out, "output path (required for --ppm)");
    auto* dp_csv_flag = dp->add_flag("--csv", dp_csv, "emit k,distance CSV (default)");
    dp->add_flag("--ppm", dp_ppm, "emit the XOR bitmap as PPM")->excludes(dp_csv_flag);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (divide->parsed())
        return run_divide(div_x, div_steps);
    if (graph->parsed())
        return run_graph(graph_x, graph_k, graph_stats, graph_export,
                         graph_export_adj);
    if (bitmap->parsed())
        return run_bitmap(bm_x, bm_k, bm_out, bm_binary, bm_full, bm_align,
                          bm_palette);
    if (code->parsed())
        return run_code(code_digits, code_k, code_strip, code_params, code_dump,
                        code_full_deck);
    if (scan->parsed()) {
        if (scan_digits.empty() && scan_all_width == 0) {
            std::fprintf(stderr, "mzdgbt: scan needs --digits or --all-width\n");
            return kExitUsage;
        }
        return run_scan(scan_digits, scan_all_width, scan_from, scan_to, scan_out,
                        scan_collisions, scan_pie, scan_full_deck);
    }
    if (dp->parsed())
        return run_distance_pair(dp_x, dp_y, dp_from, dp_to, dp_ppm, dp_out,
                                 dp_palette);
    return kExitUsage;
}
