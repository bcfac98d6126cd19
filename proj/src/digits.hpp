// Digit-wise halving of decimal strings: the core step every other module
// builds on.  A digit a splits into (floor(a/2), 5*(a mod 2)); gluing the
// pieces of adjacent digits yields the quotient one digit at a time.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace mz {

using Digit = std::uint8_t; // always 0..9

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a tractability guard rejects an input (oversized cycle
// enumeration, full-deck permutation families, wide cross scans).
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fixed-width decimal string, most significant digit first.  Leading zeros
// are significant: result rows keep width d+r, so "007" and "7" are
// different strings and never normalized.
class DigitString {
public:
    explicit DigitString(std::vector<Digit> digits);

    static DigitString parse(std::string_view text); // ParseError on junk

    // Renders `v` as decimal, left-padded with zeros to `width`.
    static DigitString from_value(const mpz_class& v, std::size_t width);

    std::size_t size() const { return digits_.size(); }

    // i-th digit from the most significant end, i in [0, size()).
    Digit msd(std::size_t i) const { return digits_[i]; }

    // Digit at position pos, 0 = least significant.
    Digit at_position(std::size_t pos) const {
        return digits_[digits_.size() - 1 - pos];
    }

    const std::vector<Digit>& digits() const { return digits_; }

    std::string str() const;
    mpz_class value() const; // exact, any width

    bool operator==(const DigitString&) const = default;

private:
    std::vector<Digit> digits_;
};

// One digit through the halving step.
struct HalvingStep {
    Digit floor_half; // floor(a/2), 0..4
    Digit fraction;   // 5*(a mod 2), 0 or 5

    bool operator==(const HalvingStep&) const = default;
};

HalvingStep halve_digit(Digit a);

// Full halving of a width-d string.  steps are in input (most significant
// first) order; result has width d+1 and value exactly 5x the input.
struct HalvingTrace {
    DigitString input;
    std::vector<HalvingStep> steps;
    DigitString result;
};

HalvingTrace halve(const DigitString& x);

// Result digits with the decimal point before the last one ("187.5").
// The leading digit is printed even when zero.
std::string format_quotient(const HalvingTrace& t);

} // namespace mz
