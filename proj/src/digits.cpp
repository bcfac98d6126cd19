#include "digits.hpp"

namespace mz {

DigitString::DigitString(std::vector<Digit> digits) : digits_(std::move(digits)) {
    if (digits_.empty())
        throw ParseError("digit string must contain at least one digit");
    for (Digit d : digits_)
        if (d > 9)
            throw ParseError("digit value out of range 0..9");
}

DigitString DigitString::parse(std::string_view text) {
    if (text.empty())
        throw ParseError("empty digit string");
    std::vector<Digit> ds;
    ds.reserve(text.size());
    for (char c : text) {
        if (c < '0' || c > '9')
            throw ParseError("non-digit character in \"" + std::string(text) + "\"");
        ds.push_back(static_cast<Digit>(c - '0'));
    }
    return DigitString(std::move(ds));
}

DigitString DigitString::from_value(const mpz_class& v, std::size_t width) {
    if (v < 0)
        throw std::invalid_argument("negative value");
    std::string s = v.get_str();
    if (s.size() > width)
        throw std::invalid_argument("value does not fit in width " +
                                    std::to_string(width));
    s.insert(0, width - s.size(), '0');
    return parse(s);
}

std::string DigitString::str() const {
    std::string s(digits_.size(), '0');
    for (std::size_t i = 0; i < digits_.size(); ++i)
        s[i] = static_cast<char>('0' + digits_[i]);
    return s;
}

mpz_class DigitString::value() const {
    return mpz_class(str(), 10);
}

HalvingStep halve_digit(Digit a) {
    return {static_cast<Digit>(a / 2), static_cast<Digit>(5 * (a % 2))};
}

HalvingTrace halve(const DigitString& x) {
    const std::size_t d = x.size();
    std::vector<HalvingStep> steps(d);
    for (std::size_t i = 0; i < d; ++i)
        steps[i] = halve_digit(x.msd(i));

    // out[0] = floor half of the leading digit, out[d] = trailing fraction,
    // and in between each digit is a floor half plus the fraction carried
    // in from the digit one place up.  Every sum stays in 0..9.
    std::vector<Digit> out(d + 1);
    out[0] = steps[0].floor_half;
    for (std::size_t i = 1; i < d; ++i)
        out[i] = static_cast<Digit>(steps[i].floor_half + steps[i - 1].fraction);
    out[d] = steps[d - 1].fraction;

    return {x, std::move(steps), DigitString(std::move(out))};
}

std::string format_quotient(const HalvingTrace& t) {
    std::string s = t.result.str();
    s.insert(s.size() - 1, 1, '.');
    return s;
}

} // namespace mz
