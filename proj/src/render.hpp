// Deterministic artifacts: digit- and parity-colored bitmaps of the
// halving rows, XOR distance maps, binary PPM output, and the CSV schemas
// the scan tooling emits.  Identical inputs always produce identical bytes.

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "codes.hpp"

namespace mz {

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
    bool operator==(const Rgb&) const = default;
};

struct Palette {
    std::array<Rgb, 10> digit;
    Rgb background;

    // Ten fixed digit colors (0 black, 1 white) over a mid-gray background.
    static const Palette& standard();

    // Eleven "label R G B" lines; labels 0..9 and "background", each once.
    static Palette load(std::istream& is);
    static Palette load_file(const std::string& path);

    void validate() const; // all eleven colors pairwise distinct
};

class Image {
public:
    Image(std::size_t width, std::size_t height, Rgb fill);

    std::size_t width() const { return width_; }
    std::size_t height() const { return height_; }
    void set(std::size_t x, std::size_t y, Rgb c);
    Rgb get(std::size_t x, std::size_t y) const;
    const std::vector<std::uint8_t>& pixels() const { return pixels_; }

    bool operator==(const Image&) const = default;

private:
    std::size_t width_, height_;
    std::vector<std::uint8_t> pixels_; // row-major RGB
};

enum class Align { Right, Left };

// One pixel row per result row, one pixel per digit, rows right-aligned by
// default (the width grows by one digit per level).  Cells outside a row
// get the background color.  include_steps interleaves each step's
// floor/fraction pairs as an extra row between result rows.
Image digit_bitmap(const DigitString& x, unsigned k,
                   const Palette& palette = Palette::standard(),
                   Align align = Align::Right, bool include_steps = false);

// Same layout, digits colored by parity (palette entries 0 and 1).
Image binary_bitmap(const DigitString& x, unsigned k,
                    const Palette& palette = Palette::standard(),
                    Align align = Align::Right, bool include_steps = false);

// One row per level k_from..k_to: the XOR of the two inputs' codewords,
// right-aligned; set bits take the parity-1 color, clear bits parity-0.
Image xor_bitmap(const DigitString& x, const DigitString& y, unsigned k_from,
                 unsigned k_to, const Palette& palette = Palette::standard());

// Binary PPM: "P6\n{width} {height}\n255\n" + raw RGB.  Returns bytes written.
std::size_t write_ppm(const Image& img, std::ostream& os);
std::size_t write_ppm_file(const Image& img, const std::string& path);

// CSV emitters; header line first, "\n" endings, no trailing separators.
std::size_t write_series_csv(const std::vector<ScanRow>& rows, std::ostream& os);
std::size_t write_collisions_csv(const std::vector<Collision>& collisions,
                                 std::ostream& os);
// Histogram of offset = d - floor(n/2) over the rows, ascending offset.
std::size_t write_pie_csv(const std::vector<ScanRow>& rows, std::ostream& os);
// Per-level "k,distance" for two equal-width inputs.
std::size_t write_distance_csv(const DigitString& x, const DigitString& y,
                               unsigned k_from, unsigned k_to, std::ostream& os);

} // namespace mz
