// Binary codes from digit parities.  The level-k codeword of x is the
// parity pattern of x's k-th result row; a permutation family of t
// distinct digits yields t! codewords that form a block code once the
// common leading zeros are stripped.

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "digits.hpp"

namespace mz {

class BitString {
public:
    BitString() = default;
    explicit BitString(std::vector<std::uint8_t> bits);
    static BitString parse(std::string_view text); // '0'/'1' only

    std::size_t size() const { return bits_.size(); }
    int bit(std::size_t i) const { return bits_.at(i); }
    const std::vector<std::uint8_t>& bits() const { return bits_; }

    std::size_t weight() const;
    std::size_t leading_zeros() const; // all-zero word counts its full length
    BitString without_prefix(std::size_t n) const;
    std::string str() const;

    bool operator==(const BitString&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

// Bitwise XOR; lengths must match.
BitString operator^(const BitString& a, const BitString& b);

// Count of differing positions; lengths must match.
std::size_t hamming(const BitString& a, const BitString& b);

// Parity of result row k (k halvings of x); length size(x) + k.
BitString parity_codeword(const DigitString& x, unsigned k);

// Independent route to the same word: value(x) * 5^k rendered in decimal,
// zero-padded to size(x) + k, mapped to parities.  Shares no code with the
// halving path.
BitString oracle_codeword(const DigitString& x, unsigned k);

// Parity of step k's floor/fraction pairs, most significant pair first;
// length 2*(size(x) + k - 1).  k = 0 is out of range.
BitString intermediate_codeword(const DigitString& x, unsigned k);

// Codes are sometimes quoted by codeword length instead of level; a
// length-L code over t digits sits at level L - t.  All other calls here
// are level-based.
unsigned level_for_length(std::size_t codeword_length, std::size_t digit_count);

// All t! orderings of t distinct digits, lexicographic.  Orderings with a
// leading zero stay width-t digit strings.  Ten digits (10! words) are
// rejected unless allow_full_deck.
std::vector<DigitString> permutation_family(const std::vector<Digit>& digit_set,
                                            bool allow_full_deck = false);

struct Code {
    std::vector<DigitString> sources; // permutation order
    std::vector<BitString> words;     // same order, uniform length

    std::size_t size() const { return words.size(); }
    std::size_t length() const { return words.empty() ? 0 : words[0].size(); }
};

Code family_code(const std::vector<Digit>& digit_set, unsigned k,
                 bool allow_full_deck = false);

struct StripResult {
    Code code;
    std::size_t k0; // family-wide minimum of leading zero bits
};

// Removes the same k0 leading bits (all zero by construction) from every
// word, preserving uniform length and pairwise distances.
StripResult strip_common_leading_zeros(const Code& code);

struct CodeParams {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t min_distance = 0; // 0 when duplicate words exist
    std::size_t k0 = 0;
    bool degenerate = false;      // m == 1; min_distance reported as n
    bool has_duplicates = false;
};

CodeParams code_params(const Code& code, std::size_t k0 = 0);

struct ScanRow {
    unsigned k = 0;
    std::size_t raw_n = 0;        // width + k
    std::size_t k0 = 0;
    std::size_t n = 0;            // after stripping
    std::size_t min_distance = 0; // of the stripped code
};

struct Collision {
    unsigned k = 0;
    DigitString x, y;
};

struct ScanReport {
    unsigned k_from = 0, k_to = 0;
    std::vector<ScanRow> rows;         // one per level, ascending k
    std::vector<Collision> collisions; // ascending (k, source order)
};

// Scans levels k_from..k_to of the permutation family.  Colliding
// codewords are findings recorded in the report, never errors.
ScanReport conjecture_scan(const std::vector<Digit>& digit_set, unsigned k_from,
                           unsigned k_to, bool allow_full_deck = false);

// Per-level stripped code parameters; k_from >= 1.
std::vector<ScanRow> distance_series(const std::vector<Digit>& digit_set,
                                     unsigned k_from, unsigned k_to,
                                     bool allow_full_deck = false);

// Cross-family variant over every width-w digit string (all 10^w of them).
// Nothing like the family scan's distinctness holds here: any two inputs
// whose scaled values share a parity pattern collide.  Guarded to w <= 3.
ScanReport conjecture_scan_all(unsigned width, unsigned k_from, unsigned k_to);

// Level-by-level XOR of the two inputs' codewords; equal widths, k_from >= 1.
std::vector<BitString> xor_series(const DigitString& x, const DigitString& y,
                                  unsigned k_from, unsigned k_to);

} // namespace mz
