#include "codes.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

namespace mz {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (std::uint8_t b : bits_)
        if (b > 1)
            throw std::invalid_argument("bit value out of range");
}

BitString BitString::parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1')
            throw ParseError("non-bit character in \"" + std::string(text) + "\"");
        bits.push_back(c == '1');
    }
    return BitString(std::move(bits));
}

std::size_t BitString::weight() const {
    std::size_t w = 0;
    for (std::uint8_t b : bits_)
        w += b;
    return w;
}

std::size_t BitString::leading_zeros() const {
    std::size_t n = 0;
    while (n < bits_.size() && bits_[n] == 0)
        ++n;
    return n;
}

BitString BitString::without_prefix(std::size_t n) const {
    if (n > bits_.size())
        throw std::out_of_range("prefix longer than word");
    return BitString(std::vector<std::uint8_t>(
        bits_.begin() + static_cast<std::ptrdiff_t>(n), bits_.end()));
}

std::string BitString::str() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
        s[i] = bits_[i] ? '1' : '0';
    return s;
}

BitString operator^(const BitString& a, const BitString& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("bit string length mismatch");
    std::vector<std::uint8_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a.bit(i) ^ b.bit(i);
    return BitString(std::move(out));
}

std::size_t hamming(const BitString& a, const BitString& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("bit string length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d += a.bit(i) != b.bit(i);
    return d;
}

namespace {

BitString parity_of(const DigitString& row) {
    std::vector<std::uint8_t> bits(row.size());
    for (std::size_t i = 0; i < row.size(); ++i)
        bits[i] = row.msd(i) % 2;
    return BitString(std::move(bits));
}

} // namespace

BitString parity_codeword(const DigitString& x, unsigned k) {
    DigitString cur = x;
    for (unsigned r = 0; r < k; ++r)
        cur = halve(cur).result;
    return parity_of(cur);
}

BitString oracle_codeword(const DigitString& x, unsigned k) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 5, k);
    mpz_class v = x.value() * scale;
    return parity_of(DigitString::from_value(v, x.size() + k));
}

BitString intermediate_codeword(const DigitString& x, unsigned k) {
    if (k == 0)
        throw std::out_of_range("intermediate codeword needs k >= 1");
    DigitString cur = x;
    for (unsigned r = 1; r < k; ++r)
        cur = halve(cur).result;
    const HalvingTrace t = halve(cur);
    std::vector<std::uint8_t> bits;
    bits.reserve(2 * t.steps.size());
    for (const HalvingStep& s : t.steps) {
        bits.push_back(s.floor_half % 2);
        bits.push_back(s.fraction % 2);
    }
    return BitString(std::move(bits));
}

unsigned level_for_length(std::size_t codeword_length, std::size_t digit_count) {
    if (digit_count == 0 || codeword_length < digit_count)
        throw std::invalid_argument("codeword length must be at least the digit count");
    return static_cast<unsigned>(codeword_length - digit_count);
}

std::vector<DigitString> permutation_family(const std::vector<Digit>& digit_set,
                                            bool allow_full_deck) {
    if (digit_set.empty())
        throw std::invalid_argument("digit set must not be empty");
    std::vector<Digit> sorted = digit_set;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("digit set must not repeat digits");
    for (Digit d : sorted)
        if (d > 9)
            throw std::invalid_argument("digit value out of range 0..9");
    if (sorted.size() > 9 && !allow_full_deck)
        throw GuardError("sets of ten digits produce 10! words; pass the "
                         "full-deck override to allow this");

    std::vector<DigitString> family;
    do {
        family.emplace_back(sorted);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    return family;
}

Code family_code(const std::vector<Digit>& digit_set, unsigned k,
                 bool allow_full_deck) {
    Code code;
    code.sources = permutation_family(digit_set, allow_full_deck);
    code.words.reserve(code.sources.size());
    for (const DigitString& x : code.sources)
        code.words.push_back(parity_codeword(x, k));
    return code;
}

StripResult strip_common_leading_zeros(const Code& code) {
    if (code.words.empty())
        throw std::invalid_argument("code must contain at least one word");
    std::size_t k0 = code.words[0].leading_zeros();
    for (const BitString& w : code.words)
        k0 = std::min(k0, w.leading_zeros());
    Code out;
    out.sources = code.sources;
    out.words.reserve(code.words.size());
    for (const BitString& w : code.words)
        out.words.push_back(w.without_prefix(k0));
    return {std::move(out), k0};
}

CodeParams code_params(const Code& code, std::size_t k0) {
    if (code.words.empty())
        throw std::invalid_argument("code must contain at least one word");
    const std::size_t n = code.words[0].size();
    for (const BitString& w : code.words)
        if (w.size() != n)
            throw std::invalid_argument("codeword lengths differ");

    CodeParams p;
    p.n = n;
    p.m = code.words.size();
    p.k0 = k0;
    if (p.m == 1) {
        p.degenerate = true;
        p.min_distance = n; // convention for singleton codes
        return p;
    }

    // Pack into machine words so the pair loop stays a handful of popcounts
    // even for the 10^3-word cross scans.
    const std::size_t stride = n == 0 ? 1 : (n + 63) / 64;
    std::vector<std::uint64_t> packed(p.m * stride, 0);
    for (std::size_t i = 0; i < p.m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (code.words[i].bit(j))
                packed[i * stride + j / 64] |= std::uint64_t{1} << (j % 64);

    std::size_t best = n + 1;
    for (std::size_t i = 0; i < p.m && best > 0; ++i)
        for (std::size_t j = i + 1; j < p.m; ++j) {
            std::size_t d = 0;
            for (std::size_t w = 0; w < stride; ++w)
                d += static_cast<std::size_t>(std::popcount(
                    packed[i * stride + w] ^ packed[j * stride + w]));
            if (d < best) {
                best = d;
                if (best == 0)
                    break;
            }
        }
    p.min_distance = best == n + 1 ? 0 : best;
    p.has_duplicates = p.min_distance == 0;
    return p;
}

namespace {

ScanRow make_scan_row(unsigned k, const Code& code) {
    StripResult stripped = strip_common_leading_zeros(code);
    CodeParams p = code_params(stripped.code, stripped.k0);
    return {k, code.length(), stripped.k0, p.n, p.min_distance};
}

void collect_collisions(unsigned k, const std::vector<DigitString>& sources,
                        const std::vector<BitString>& words,
                        std::vector<Collision>& out) {
    std::unordered_map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < words.size(); ++i)
        groups[words[i].str()].push_back(i);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& [word, members] : groups)
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                pairs.emplace_back(members[a], members[b]);
    std::sort(pairs.begin(), pairs.end());
    for (const auto& [i, j] : pairs)
        out.push_back({k, sources[i], sources[j]});
}

ScanReport scan_levels(const std::vector<DigitString>& sources, unsigned k_from,
                       unsigned k_to) {
    if (k_from > k_to)
        throw std::invalid_argument("scan range is empty");

    ScanReport report;
    report.k_from = k_from;
    report.k_to = k_to;

    std::vector<DigitString> current = sources;
    for (unsigned level = 0;; ++level) {
        if (level >= k_from) {
            Code code;
            code.sources = sources;
            code.words.reserve(current.size());
            for (const DigitString& row : current)
                code.words.push_back(parity_of(row));
            report.rows.push_back(make_scan_row(level, code));
            collect_collisions(level, sources, code.words, report.collisions);
        }
        if (level == k_to)
            break;
        for (DigitString& row : current)
            row = halve(row).result;
    }
    return report;
}

} // namespace

ScanReport conjecture_scan(const std::vector<Digit>& digit_set, unsigned k_from,
                           unsigned k_to, bool allow_full_deck) {
    return scan_levels(permutation_family(digit_set, allow_full_deck), k_from,
                       k_to);
}

std::vector<ScanRow> distance_series(const std::vector<Digit>& digit_set,
                                     unsigned k_from, unsigned k_to,
                                     bool allow_full_deck) {
    if (k_from < 1)
        throw std::invalid_argument("distance series starts at k >= 1");
    return conjecture_scan(digit_set, k_from, k_to, allow_full_deck).rows;
}

ScanReport conjecture_scan_all(unsigned width, unsigned k_from, unsigned k_to) {
    if (width == 0)
        throw std::invalid_argument("width must be at least 1");
    if (width > 3)
        throw GuardError("cross-family scans are limited to width <= 3");

    std::size_t count = 1;
    for (unsigned i = 0; i < width; ++i)
        count *= 10;
    std::vector<DigitString> sources;
    sources.reserve(count);
    for (std::size_t v = 0; v < count; ++v) {
        std::string s = std::to_string(v);
        s.insert(0, width - s.size(), '0');
        sources.push_back(DigitString::parse(s));
    }
    return scan_levels(sources, k_from, k_to);
}

std::vector<BitString> xor_series(const DigitString& x, const DigitString& y,
                                  unsigned k_from, unsigned k_to) {
    if (x.size() != y.size())
        throw std::invalid_argument("inputs must have the same digit count");
    if (k_from < 1)
        throw std::invalid_argument("xor series starts at k >= 1");
    if (k_from > k_to)
        throw std::invalid_argument("xor series range is empty");

    std::vector<BitString> out;
    out.reserve(k_to - k_from + 1);
    DigitString a = x, b = y;
    for (unsigned level = 1; level <= k_to; ++level) {
        a = halve(a).result;
        b = halve(b).result;
        if (level >= k_from)
            out.push_back(parity_of(a) ^ parity_of(b));
    }
    return out;
}

} // namespace mz
