#include <doctest.h>

#include <random>

#include "codes.hpp"
#include "graph.hpp"
#include "test_util.hpp"

using namespace mz;
using mztest::random_digits;

namespace {

std::vector<std::string> word_strings(const Code& code) {
    std::vector<std::string> out;
    out.reserve(code.words.size());
    for (const BitString& w : code.words)
        out.push_back(w.str());
    return out;
}

} // namespace

TEST_CASE("bit strings") {
    const BitString b = BitString::parse("01101");
    CHECK(b.size() == 5);
    CHECK(b.weight() == 3);
    CHECK(b.leading_zeros() == 1);
    CHECK(BitString::parse("0000").leading_zeros() == 4);
    CHECK(b.without_prefix(2).str() == "101");
    CHECK_THROWS_AS(BitString::parse("01a"), ParseError);
    CHECK_THROWS_AS(b.without_prefix(6), std::out_of_range);
    CHECK((BitString::parse("01") ^ BitString::parse("10")).str() == "11");
    CHECK_THROWS_AS(BitString::parse("01") ^ BitString::parse("011"),
                    std::invalid_argument);
}

TEST_CASE("level-10 codewords of the 2,5,6 permutations") {
    CHECK(parity_codeword(DigitString::parse("625"), 10).str() == "0000101111001");
    CHECK(parity_codeword(DigitString::parse("526"), 10).str() == "0001110110110");
    CHECK(parity_codeword(DigitString::parse("562"), 10).str() == "0001000001010");
    CHECK(parity_codeword(DigitString::parse("652"), 10).str() == "0000101101100");
    CHECK(parity_codeword(DigitString::parse("265"), 10).str() == "0000101010001");
    CHECK(parity_codeword(DigitString::parse("256"), 10).str() == "0000100000000");
}

TEST_CASE("level 0 is the parity of the input digits") {
    CHECK(parity_codeword(DigitString::parse("256"), 0).str() == "010");
    CHECK(oracle_codeword(DigitString::parse("256"), 0).str() == "010");
}

TEST_CASE("the big-integer route gives the same words") {
    CHECK(oracle_codeword(DigitString::parse("265"), 10).str() == "0000101010001");
    CHECK(oracle_codeword(DigitString::parse("256"), 5).str() == "00000000");

    std::mt19937 rng(31337);
    std::uniform_int_distribution<std::size_t> len(1, 30);
    std::uniform_int_distribution<unsigned> level(0, 120);
    for (int i = 0; i < 200; ++i) {
        const DigitString x = random_digits(rng, len(rng));
        const unsigned k = level(rng);
        const BitString viaHalving = parity_codeword(x, k);
        CHECK(viaHalving.size() == x.size() + k);
        CHECK(viaHalving == oracle_codeword(x, k));
    }
}

TEST_CASE("codewords equal the parities of the graph's last row") {
    std::mt19937 rng(11);
    for (int i = 0; i < 10; ++i) {
        const DigitString x = random_digits(rng, 1 + i % 4);
        const unsigned k = static_cast<unsigned>(i);
        const BinaryGraph bg(DgbtGraph::build(x, k));
        CHECK(parity_codeword(x, k).bits() == bg.row_bits(k));
    }
}

TEST_CASE("intermediate codewords come from the step pairs") {
    CHECK(intermediate_codeword(DigitString::parse("458"), 1).str() == "000100");
    CHECK(intermediate_codeword(DigitString::parse("256"), 1).str() == "100110");
    CHECK_THROWS_AS(intermediate_codeword(DigitString::parse("458"), 0),
                    std::out_of_range);

    // fraction bits of an all-even row are zero
    const BitString w = intermediate_codeword(DigitString::parse("2468"), 1);
    for (std::size_t i = 1; i < w.size(); i += 2)
        CHECK(w.bit(i) == 0);

    std::mt19937 rng(4242);
    for (int i = 0; i < 30; ++i) {
        const DigitString x = random_digits(rng, 1 + i % 5);
        const unsigned k = 1 + static_cast<unsigned>(i) % 7;
        CHECK(intermediate_codeword(x, k).size() == 2 * (x.size() + k - 1));
    }
}

TEST_CASE("permutation families are lexicographic") {
    const auto fam = permutation_family({2, 5, 6});
    REQUIRE(fam.size() == 6);
    CHECK(fam[0].str() == "256");
    CHECK(fam[1].str() == "265");
    CHECK(fam[2].str() == "526");
    CHECK(fam[3].str() == "562");
    CHECK(fam[4].str() == "625");
    CHECK(fam[5].str() == "652");

    CHECK(permutation_family({7}).size() == 1);
    CHECK(permutation_family({7})[0].str() == "7");

    // a leading zero stays part of the string
    const auto zf = permutation_family({0, 1});
    CHECK(zf[0].str() == "01");
    CHECK(zf[1].str() == "10");

    CHECK_THROWS_AS(permutation_family({2, 2, 5}), std::invalid_argument);
    CHECK_THROWS_AS(permutation_family({}), std::invalid_argument);
    CHECK_THROWS_AS(permutation_family({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}), GuardError);
    CHECK(permutation_family({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, true).size() == 3628800);
}

TEST_CASE("length naming maps onto levels") {
    CHECK(level_for_length(8, 3) == 5);
    CHECK(level_for_length(10, 3) == 7);
    CHECK(level_for_length(3, 3) == 0);
    CHECK_THROWS_AS(level_for_length(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(level_for_length(2, 0), std::invalid_argument);
    // the length-8 code of {2,5,6} is its level-5 family code
    CHECK(family_code({2, 5, 6}, level_for_length(8, 3)).length() == 8);
}

TEST_CASE("family codes reproduce the published lists") {
    const Code c10 = family_code({2, 5, 6}, 10);
    CHECK(word_strings(c10) ==
          std::vector<std::string>{"0000100000000", "0000101010001",
                                   "0001110110110", "0001000001010",
                                   "0000101111001", "0000101101100"});

    // level 5 (the length-8 list): the 526 entry is computed, not copied
    const Code c5 = family_code({2, 5, 6}, 5);
    CHECK(word_strings(c5) ==
          std::vector<std::string>{"00000000", "00000101", "01001110",
                                   "01110010", "01111101", "00011100"});

    // level 7 contains the published 562 word at the family position
    const Code c7 = family_code({2, 5, 6}, 7);
    CHECK(c7.words[3].str() == "0001100010");

    const Code lone = family_code({7}, 3);
    REQUIRE(lone.size() == 1);
    CHECK(lone.words[0].str() == "0011"); // 7 * 125 = 875, padded to 0875
}

TEST_CASE("stripping removes the family-wide zero prefix") {
    const Code c10 = family_code({2, 5, 6}, 10);
    const StripResult s = strip_common_leading_zeros(c10);
    CHECK(s.k0 == 3);
    CHECK(s.code.length() == 10);
    CHECK(word_strings(s.code) ==
          std::vector<std::string>{"0100000000", "0101010001", "1110110110",
                                   "1000001010", "0101111001", "0101101100"});

    // an all-zero word contributes its whole length
    Code zeros;
    zeros.sources.push_back(DigitString::parse("256"));
    zeros.words.push_back(BitString::parse("00000000"));
    const StripResult z = strip_common_leading_zeros(zeros);
    CHECK(z.k0 == 8);
    CHECK(z.code.length() == 0);
}

TEST_CASE("hamming distance") {
    CHECK(hamming(BitString::parse("0000"), BitString::parse("0000")) == 0);
    CHECK(hamming(BitString::parse("01"), BitString::parse("10")) == 2);
    CHECK(hamming(BitString::parse("0100000000"), BitString::parse("0101010001")) == 3);
    CHECK_THROWS_AS(hamming(BitString::parse("01"), BitString::parse("011")),
                    std::invalid_argument);
}

TEST_CASE("code parameters") {
    const Code c10 = family_code({2, 5, 6}, 10);
    const CodeParams raw = code_params(c10);
    CHECK(raw.n == 13);
    CHECK(raw.m == 6);
    CHECK(raw.min_distance == 2);

    const StripResult s = strip_common_leading_zeros(c10);
    const CodeParams stripped = code_params(s.code, s.k0);
    CHECK(stripped.n == 10);
    CHECK(stripped.m == 6);
    CHECK(stripped.min_distance == 2); // stripping never changes distances
    CHECK(stripped.k0 == 3);
    CHECK_FALSE(stripped.degenerate);
    CHECK_FALSE(stripped.has_duplicates);

    const StripResult s30 = strip_common_leading_zeros(family_code({2, 5, 6}, 30));
    CHECK(s30.k0 == 9);
    const CodeParams p30 = code_params(s30.code, s30.k0);
    CHECK(p30.n == 24);
    CHECK(p30.min_distance == 10);
    CHECK(s30.code.words[0].str() == "010010111101100100000000");

    const StripResult s50 = strip_common_leading_zeros(family_code({2, 5, 6}, 50));
    CHECK(s50.k0 == 15);
    const CodeParams p50 = code_params(s50.code, s50.k0);
    CHECK(p50.n == 38);
    CHECK(p50.min_distance == 16);

    // singleton codes report d = n and are flagged
    const CodeParams single = code_params(family_code({7}, 3));
    CHECK(single.degenerate);
    CHECK(single.min_distance == 4);

    // duplicates force d = 0 and are flagged, never silently removed
    Code dup;
    dup.sources = permutation_family({2, 5});
    dup.words.push_back(BitString::parse("0101"));
    dup.words.push_back(BitString::parse("0101"));
    const CodeParams dp = code_params(dup);
    CHECK(dp.min_distance == 0);
    CHECK(dp.has_duplicates);

    CHECK_THROWS_AS(code_params(Code{}), std::invalid_argument);
}

TEST_CASE("stripping never changes the minimum distance") {
    std::mt19937 rng(808);
    const std::vector<std::vector<Digit>> sets = {
        {2, 5, 6}, {0, 1}, {1, 3, 9}, {0, 2, 4, 8}};
    std::uniform_int_distribution<unsigned> level(0, 40);
    for (int i = 0; i < 40; ++i) {
        const auto& set = sets[static_cast<std::size_t>(i) % sets.size()];
        const Code raw = family_code(set, level(rng));
        const StripResult s = strip_common_leading_zeros(raw);
        CHECK(code_params(raw).min_distance ==
              code_params(s.code, s.k0).min_distance);
    }
}

TEST_CASE("level-1 collisions that motivate the k >= 3 conjecture") {
    const ScanReport report = conjecture_scan({2, 5, 6}, 1, 1);
    REQUIRE(report.collisions.size() == 3);
    CHECK(report.collisions[0].x.str() == "256");
    CHECK(report.collisions[0].y.str() == "652");
    CHECK(report.collisions[1].x.str() == "265");
    CHECK(report.collisions[1].y.str() == "625");
    CHECK(report.collisions[2].x.str() == "526");
    CHECK(report.collisions[2].y.str() == "562");
    for (const Collision& c : report.collisions)
        CHECK(c.k == 1);
    // 526 and 562 really do share 0010: 2630 vs 2810
    CHECK(parity_codeword(DigitString::parse("526"), 1).str() == "0010");
    CHECK(parity_codeword(DigitString::parse("562"), 1).str() == "0010");
}

TEST_CASE("level 3 of the 2,5,6 family is collision free") {
    const ScanReport report = conjecture_scan({2, 5, 6}, 3, 3);
    CHECK(report.collisions.empty());
    const Code c3 = family_code({2, 5, 6}, 3);
    CHECK(word_strings(c3) ==
          std::vector<std::string>{"010000", "011101", "001110", "010010",
                                   "010101", "001100"});
}

TEST_CASE("singleton families are vacuously collision free") {
    const ScanReport report = conjecture_scan({7}, 3, 10);
    CHECK(report.collisions.empty());
    CHECK(report.rows.size() == 8);
}

TEST_CASE("scan rows carry the stripped parameters") {
    const ScanReport report = conjecture_scan({2, 5, 6}, 3, 8);
    REQUIRE(report.rows.size() == 6);
    const ScanRow& r3 = report.rows[0];
    CHECK(r3.k == 3);
    CHECK(r3.raw_n == 6);
    CHECK(r3.k0 == 1);
    CHECK(r3.n == 5);
    CHECK(r3.min_distance == 1);
    for (const ScanRow& r : report.rows) {
        CHECK(r.raw_n == 3 + r.k);
        CHECK(r.n == r.raw_n - r.k0);
    }
}

TEST_CASE("distance series equals the scan rows") {
    const auto series = distance_series({2, 5, 6}, 1, 12);
    const ScanReport report = conjecture_scan({2, 5, 6}, 1, 12);
    REQUIRE(series.size() == report.rows.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        CHECK(series[i].k == report.rows[i].k);
        CHECK(series[i].raw_n == report.rows[i].raw_n);
        CHECK(series[i].k0 == report.rows[i].k0);
        CHECK(series[i].n == report.rows[i].n);
        CHECK(series[i].min_distance == report.rows[i].min_distance);
    }
    CHECK_THROWS_AS(distance_series({2, 5, 6}, 0, 5), std::invalid_argument);
}

TEST_CASE("cross-family scans cover every string of the width") {
    const ScanReport w1 = conjecture_scan_all(1, 1, 1);
    CHECK(w1.collisions.size() == 8); // {0,4,8},{1,5,9},{2,6},{3,7} at level 1
    const ScanReport w1deep = conjecture_scan_all(1, 3, 12);
    CHECK(w1deep.collisions.empty());

    // equal-parity products keep colliding across families, e.g. 000 vs 016
    const ScanReport w3 = conjecture_scan_all(3, 3, 3);
    CHECK_FALSE(w3.collisions.empty());

    CHECK_THROWS_AS(conjecture_scan_all(0, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(conjecture_scan_all(4, 1, 2), GuardError);
}

TEST_CASE("xor series match the codeword distances") {
    const auto at10 = xor_series(DigitString::parse("256"),
                                 DigitString::parse("625"), 10, 10);
    REQUIRE(at10.size() == 1);
    CHECK(at10[0].str() == "0000001111001");
    CHECK(at10[0].weight() == 5);

    const auto at5 = xor_series(DigitString::parse("256"),
                                DigitString::parse("625"), 5, 5);
    CHECK(at5[0].str() == "01111101");

    const auto self = xor_series(DigitString::parse("256"),
                                 DigitString::parse("256"), 1, 10);
    for (const BitString& w : self)
        CHECK(w.weight() == 0);

    CHECK_THROWS_AS(xor_series(DigitString::parse("25"),
                               DigitString::parse("256"), 1, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(xor_series(DigitString::parse("25"),
                               DigitString::parse("26"), 0, 3),
                    std::invalid_argument);

    std::mt19937 rng(606);
    std::uniform_int_distribution<unsigned> level(1, 60);
    for (int i = 0; i < 50; ++i) {
        const std::size_t d = 1 + static_cast<std::size_t>(i) % 5;
        const DigitString x = random_digits(rng, d);
        const DigitString y = random_digits(rng, d);
        const unsigned k = level(rng);
        const auto series = xor_series(x, y, k, k);
        CHECK(series[0].weight() ==
              hamming(parity_codeword(x, k), parity_codeword(y, k)));
    }
}
