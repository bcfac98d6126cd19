// Exercises the shared library through the public C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include <mzdgbt.h>

namespace {

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    REQUIRE(is.good());
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

std::string tmp_path(const char* name) {
    return std::string("capi_") + name;
}

} // namespace

TEST_CASE("library identity") {
    CHECK(mz_version() != nullptr);
    CHECK(std::strcmp(mz_status_name(MZ_OK), "ok") == 0);
    CHECK(std::strcmp(mz_status_name(MZ_ERR_PARSE), "parse error") == 0);
}

TEST_CASE("digit step") {
    int b = -1, t = -1;
    REQUIRE(mz_digit_halve(5, &b, &t) == MZ_OK);
    CHECK(b == 2);
    CHECK(t == 5);
    CHECK(mz_digit_halve(10, &b, &t) == MZ_ERR_ARGUMENT);
    CHECK(mz_digit_halve(5, nullptr, &t) == MZ_ERR_ARGUMENT);
}

TEST_CASE("halving handles") {
    mz_halving* h = nullptr;
    REQUIRE(mz_halve("375", &h) == MZ_OK);
    CHECK(std::strcmp(mz_halving_input(h), "375") == 0);
    CHECK(std::strcmp(mz_halving_result(h), "1875") == 0);
    CHECK(std::strcmp(mz_halving_quotient(h), "187.5") == 0);
    CHECK(mz_halving_width(h) == 3);
    int b = -1, t = -1;
    REQUIRE(mz_halving_step(h, 0, &b, &t) == MZ_OK);
    CHECK(b == 1);
    CHECK(t == 5);
    CHECK(mz_halving_step(h, 3, &b, &t) == MZ_ERR_RANGE);
    mz_halving_free(h);

    mz_halving* bad = nullptr;
    CHECK(mz_halve("4x8", &bad) == MZ_ERR_PARSE);
    CHECK(mz_halve("", &bad) == MZ_ERR_PARSE);
    CHECK(mz_halve(nullptr, &bad) == MZ_ERR_ARGUMENT);
    mz_halving_free(nullptr); // tolerated
}

TEST_CASE("codeword strings") {
    char* w = nullptr;
    REQUIRE(mz_codeword("265", 10, &w) == MZ_OK);
    CHECK(std::string(w) == "0000101010001");
    mz_string_free(w);

    REQUIRE(mz_codeword_oracle("265", 10, &w) == MZ_OK);
    CHECK(std::string(w) == "0000101010001");
    mz_string_free(w);

    REQUIRE(mz_codeword_intermediate("458", 1, &w) == MZ_OK);
    CHECK(std::string(w) == "000100");
    mz_string_free(w);
    CHECK(mz_codeword_intermediate("458", 0, &w) == MZ_ERR_RANGE);
}

TEST_CASE("graph handles") {
    mz_graph* g = nullptr;
    REQUIRE(mz_graph_build("458", 1, &g) == MZ_OK);
    CHECK(mz_graph_order(g) == 13);
    CHECK(mz_graph_edge_count(g) == 12);
    CHECK(mz_graph_leaf_count(g) == 2);
    CHECK(mz_graph_is_path(g) == 1);
    CHECK(mz_graph_is_connected(g) == 1);
    CHECK(mz_graph_c8_count(g) == 0);
    CHECK(mz_graph_k(g) == 1);
    CHECK(mz_graph_input_width(g) == 3);

    unsigned long long c8 = 99;
    REQUIRE(mz_graph_c8_bruteforce(g, &c8) == MZ_OK);
    CHECK(c8 == 0);

    char row[16];
    REQUIRE(mz_graph_row(g, 1, row, sizeof row) == MZ_OK);
    CHECK(std::string(row) == "2290");
    CHECK(mz_graph_row(g, 5, row, sizeof row) == MZ_ERR_RANGE);
    CHECK(mz_graph_row(g, 1, row, 2) == MZ_ERR_ARGUMENT);
    mz_graph_free(g);

    mz_graph* big = nullptr;
    REQUIRE(mz_graph_build("123456", 8, &big) == MZ_OK);
    CHECK(mz_graph_c8_bruteforce(big, &c8) == MZ_ERR_GUARD);
    mz_graph_free(big);
}

TEST_CASE("graph exports") {
    mz_graph* g = nullptr;
    REQUIRE(mz_graph_build("7", 1, &g) == MZ_OK);

    const std::string desc = tmp_path("desc.txt");
    REQUIRE(mz_graph_write_description(g, desc.c_str()) == MZ_OK);
    CHECK(slurp(desc).rfind("0 result 0 7\n", 0) == 0);

    const std::string adj = tmp_path("adj.txt");
    REQUIRE(mz_graph_write_adjacency(g, adj.c_str()) == MZ_OK);
    CHECK(slurp(adj).rfind("5 4\n", 0) == 0);

    CHECK(mz_graph_write_description(g, "/nonexistent/dir/x.txt") == MZ_ERR_IO);
    std::remove(desc.c_str());
    std::remove(adj.c_str());
    mz_graph_free(g);
}

TEST_CASE("code handles") {
    mz_code* c = nullptr;
    REQUIRE(mz_code_build("256", 10, 0, &c) == MZ_OK);
    CHECK(mz_code_size(c) == 6);
    CHECK(mz_code_length(c) == 13);
    CHECK(std::string(mz_code_word(c, 0)) == "0000100000000");
    CHECK(std::string(mz_code_source(c, 0)) == "256");
    CHECK(std::string(mz_code_source(c, 5)) == "652");
    CHECK(mz_code_word(c, 6) == nullptr);

    size_t k0 = 0;
    mz_code* stripped = nullptr;
    REQUIRE(mz_code_strip(c, &stripped, &k0) == MZ_OK);
    CHECK(k0 == 3);
    CHECK(mz_code_length(stripped) == 10);
    CHECK(std::string(mz_code_word(stripped, 0)) == "0100000000");

    mz_code_info info;
    REQUIRE(mz_code_get_info(stripped, &info) == MZ_OK);
    CHECK(info.length == 10);
    CHECK(info.size == 6);
    CHECK(info.min_distance == 2);
    CHECK(info.stripped_zeros == 3);
    CHECK(info.degenerate == 0);
    CHECK(info.has_duplicates == 0);

    const std::string words = tmp_path("words.txt");
    REQUIRE(mz_code_write_words(stripped, words.c_str()) == MZ_OK);
    CHECK(slurp(words).rfind("0100000000\n", 0) == 0);
    std::remove(words.c_str());

    mz_code_free(stripped);
    mz_code_free(c);

    mz_code* bad = nullptr;
    CHECK(mz_code_build("225", 3, 0, &bad) == MZ_ERR_ARGUMENT);
    CHECK(mz_code_build("0123456789", 1, 0, &bad) == MZ_ERR_GUARD);
    CHECK(mz_code_build("256", 1, 0xff, &bad) == MZ_ERR_ARGUMENT);
}

TEST_CASE("hamming") {
    size_t d = 0;
    REQUIRE(mz_hamming("0100000000", "0101010001", &d) == MZ_OK);
    CHECK(d == 3);
    CHECK(mz_hamming("01", "011", &d) == MZ_ERR_ARGUMENT);
    CHECK(mz_hamming("01", "0a", &d) == MZ_ERR_PARSE);
}

TEST_CASE("length to level conversion") {
    unsigned level = 99;
    REQUIRE(mz_level_for_length(8, 3, &level) == MZ_OK);
    CHECK(level == 5);
    CHECK(mz_level_for_length(2, 3, &level) == MZ_ERR_ARGUMENT);
    CHECK(mz_level_for_length(8, 3, nullptr) == MZ_ERR_ARGUMENT);
}

TEST_CASE("family scans") {
    mz_scan* s = nullptr;
    REQUIRE(mz_scan_family("256", 1, 1, 0, &s) == MZ_OK);
    REQUIRE(mz_scan_collision_count(s) == 3);
    unsigned k = 0;
    const char* x = nullptr;
    const char* y = nullptr;
    REQUIRE(mz_scan_collision(s, 2, &k, &x, &y) == MZ_OK);
    CHECK(k == 1);
    CHECK(std::string(x) == "526");
    CHECK(std::string(y) == "562");
    CHECK(mz_scan_collision(s, 3, &k, &x, &y) == MZ_ERR_RANGE);

    REQUIRE(mz_scan_entry_count(s) == 1);
    mz_scan_entry e;
    REQUIRE(mz_scan_get_entry(s, 0, &e) == MZ_OK);
    CHECK(e.k == 1);
    CHECK(e.raw_length == 4);

    const std::string csv = tmp_path("collisions.csv");
    REQUIRE(mz_scan_write_collisions_csv(s, csv.c_str()) == MZ_OK);
    CHECK(slurp(csv) == "k,x,y\n1,256,652\n1,265,625\n1,526,562\n");
    std::remove(csv.c_str());
    mz_scan_free(s);

    mz_scan* clean = nullptr;
    REQUIRE(mz_scan_family("256", 3, 8, 0, &clean) == MZ_OK);
    CHECK(mz_scan_collision_count(clean) == 0);

    const std::string series = tmp_path("series.csv");
    REQUIRE(mz_scan_write_series_csv(clean, series.c_str()) == MZ_OK);
    CHECK(slurp(series).rfind("k,raw_n,k0,n,d\n3,6,1,5,1\n", 0) == 0);
    std::remove(series.c_str());

    const std::string pie = tmp_path("pie.csv");
    REQUIRE(mz_scan_write_pie_csv(clean, pie.c_str()) == MZ_OK);
    CHECK(slurp(pie) == "offset,count\n-2,2\n-1,4\n");
    std::remove(pie.c_str());
    mz_scan_free(clean);

    mz_scan* wide = nullptr;
    REQUIRE(mz_scan_all(1, 1, 1, &wide) == MZ_OK);
    CHECK(mz_scan_collision_count(wide) == 8);
    mz_scan_free(wide);
    CHECK(mz_scan_all(4, 1, 1, &wide) == MZ_ERR_GUARD);
    CHECK(mz_scan_family("256", 5, 3, 0, &wide) == MZ_ERR_ARGUMENT);
}

TEST_CASE("distance csv") {
    char* text = nullptr;
    REQUIRE(mz_xor_distance_csv_text("256", "625", 10, 10, &text) == MZ_OK);
    CHECK(std::string(text) == "k,distance\n10,5\n");
    mz_string_free(text);

    const std::string path = tmp_path("dist.csv");
    REQUIRE(mz_xor_distance_csv("256", "625", 1, 3, path.c_str()) == MZ_OK);
    CHECK(slurp(path).rfind("k,distance\n1,", 0) == 0);
    std::remove(path.c_str());

    CHECK(mz_xor_distance_csv_text("25", "625", 1, 3, &text) == MZ_ERR_ARGUMENT);
}

TEST_CASE("palettes and images") {
    mz_palette* p = nullptr;
    REQUIRE(mz_palette_standard(&p) == MZ_OK);

    mz_image* img = nullptr;
    REQUIRE(mz_bitmap("7", 11, 0, p, &img) == MZ_OK);
    CHECK(mz_image_width(img) == 12);
    CHECK(mz_image_height(img) == 12);
    CHECK(mz_image_pixels(img) != nullptr);

    const std::string ppm = tmp_path("g.ppm");
    size_t bytes = 0;
    REQUIRE(mz_image_write_ppm(img, ppm.c_str(), &bytes) == MZ_OK);
    CHECK(bytes == 445);
    CHECK(slurp(ppm).size() == 445);
    std::remove(ppm.c_str());
    mz_image_free(img);

    // a 1x1 bitmap of the digit 0 is the 14-byte all-black PPM
    REQUIRE(mz_bitmap("0", 0, 0, nullptr, &img) == MZ_OK);
    const std::string tiny = tmp_path("tiny.ppm");
    REQUIRE(mz_image_write_ppm(img, tiny.c_str(), &bytes) == MZ_OK);
    CHECK(bytes == 14);
    CHECK(slurp(tiny) == std::string("P6\n1 1\n255\n\0\0\0", 14));
    std::remove(tiny.c_str());
    mz_image_free(img);

    REQUIRE(mz_xor_bitmap("256", "625", 1, 300, nullptr, &img) == MZ_OK);
    CHECK(mz_image_width(img) == 303);
    CHECK(mz_image_height(img) == 300);
    mz_image_free(img);

    CHECK(mz_bitmap("7", 1, 0x80, nullptr, &img) == MZ_ERR_ARGUMENT);
    CHECK(mz_palette_load("/nonexistent/palette.txt", &p) == MZ_ERR_IO);
    mz_palette_free(p);
}
