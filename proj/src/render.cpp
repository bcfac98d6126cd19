#include "render.hpp"

#include <fstream>
#include <map>
#include <ostream>

namespace mz {

const Palette& Palette::standard() {
    static const Palette p = {
        {{{0x00, 0x00, 0x00},   // 0
          {0xFF, 0xFF, 0xFF},   // 1
          {0xE6, 0x19, 0x4B},   // 2
          {0x3C, 0xB4, 0x4B},   // 3
          {0xFF, 0xE1, 0x19},   // 4
          {0x43, 0x63, 0xD8},   // 5
          {0xF5, 0x82, 0x31},   // 6
          {0x91, 0x1E, 0xB4},   // 7
          {0x46, 0xF0, 0xF0},   // 8
          {0xF0, 0x32, 0xE6}}}, // 9
        {0x80, 0x80, 0x80},     // background
    };
    return p;
}

Palette Palette::load(std::istream& is) {
    Palette p{};
    std::array<bool, 11> seen{};
    std::string label;
    int r, g, b;
    std::size_t entries = 0;
    while (is >> label >> r >> g >> b) {
        if (r < 0 || r > 255 || g < 0 || g > 255 || b < 0 || b > 255)
            throw ParseError("palette channel out of range 0..255");
        const Rgb color{static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(g),
                        static_cast<std::uint8_t>(b)};
        std::size_t slot;
        if (label.size() == 1 && label[0] >= '0' && label[0] <= '9')
            slot = static_cast<std::size_t>(label[0] - '0');
        else if (label == "background")
            slot = 10;
        else
            throw ParseError("palette label must be 0..9 or background, got \"" +
                             label + "\"");
        if (seen[slot])
            throw ParseError("duplicate palette label \"" + label + "\"");
        seen[slot] = true;
        if (slot == 10)
            p.background = color;
        else
            p.digit[slot] = color;
        ++entries;
    }
    if (entries != 11)
        throw ParseError("palette needs exactly eleven \"label R G B\" lines");
    p.validate();
    return p;
}

Palette Palette::load_file(const std::string& path) {
    std::ifstream is(path);
    if (!is)
        throw IoError("cannot open palette file " + path);
    return load(is);
}

void Palette::validate() const {
    std::array<Rgb, 11> all;
    for (std::size_t i = 0; i < 10; ++i)
        all[i] = digit[i];
    all[10] = background;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (all[i] == all[j])
                throw ParseError("palette colors must be pairwise distinct");
}

Image::Image(std::size_t width, std::size_t height, Rgb fill)
    : width_(width), height_(height), pixels_(width * height * 3) {
    for (std::size_t i = 0; i < width * height; ++i) {
        pixels_[3 * i] = fill.r;
        pixels_[3 * i + 1] = fill.g;
        pixels_[3 * i + 2] = fill.b;
    }
}

void Image::set(std::size_t x, std::size_t y, Rgb c) {
    const std::size_t i = 3 * (y * width_ + x);
    pixels_.at(i) = c.r;
    pixels_[i + 1] = c.g;
    pixels_[i + 2] = c.b;
}

Rgb Image::get(std::size_t x, std::size_t y) const {
    const std::size_t i = 3 * (y * width_ + x);
    return {pixels_.at(i), pixels_[i + 1], pixels_[i + 2]};
}

namespace {

Image render_rows(const DigitString& x, unsigned k, const Palette& palette,
                  Align align, bool include_steps, bool binary) {
    palette.validate();
    const std::size_t d = x.size();

    std::vector<DigitString> rows{x};
    std::vector<std::vector<HalvingStep>> steps;
    rows.reserve(k + 1);
    for (unsigned r = 1; r <= k; ++r) {
        HalvingTrace t = halve(rows.back());
        steps.push_back(std::move(t.steps));
        rows.push_back(std::move(t.result));
    }

    auto color = [&](Digit dg) {
        return binary ? palette.digit[dg % 2] : palette.digit[dg];
    };

    const std::size_t width =
        include_steps && k >= 1 ? std::max(d + k, 2 * (d + k - 1)) : d + k;
    const std::size_t height = include_steps ? 2 * k + 1 : k + 1;
    Image img(width, height, palette.background);

    std::size_t y = 0;
    auto paint = [&](const std::vector<Digit>& cells) {
        const std::size_t x0 = align == Align::Right ? width - cells.size() : 0;
        for (std::size_t i = 0; i < cells.size(); ++i)
            img.set(x0 + i, y, color(cells[i]));
        ++y;
    };

    for (unsigned r = 0; r <= k; ++r) {
        if (include_steps && r >= 1) {
            std::vector<Digit> cells;
            cells.reserve(2 * steps[r - 1].size());
            for (const HalvingStep& s : steps[r - 1]) {
                cells.push_back(s.floor_half);
                cells.push_back(s.fraction);
            }
            paint(cells);
        }
        paint(rows[r].digits());
    }
    return img;
}

} // namespace

Image digit_bitmap(const DigitString& x, unsigned k, const Palette& palette,
                   Align align, bool include_steps) {
    return render_rows(x, k, palette, align, include_steps, false);
}

Image binary_bitmap(const DigitString& x, unsigned k, const Palette& palette,
                    Align align, bool include_steps) {
    return render_rows(x, k, palette, align, include_steps, true);
}

Image xor_bitmap(const DigitString& x, const DigitString& y, unsigned k_from,
                 unsigned k_to, const Palette& palette) {
    palette.validate();
    const std::vector<BitString> series = xor_series(x, y, k_from, k_to);
    const std::size_t width = x.size() + k_to;
    Image img(width, series.size(), palette.background);
    for (std::size_t row = 0; row < series.size(); ++row) {
        const BitString& bits = series[row];
        const std::size_t x0 = width - bits.size();
        for (std::size_t i = 0; i < bits.size(); ++i)
            img.set(x0 + i, row, palette.digit[bits.bit(i)]);
    }
    return img;
}

std::size_t write_ppm(const Image& img, std::ostream& os) {
    const std::string header = "P6\n" + std::to_string(img.width()) + " " +
                               std::to_string(img.height()) + "\n255\n";
    os.write(header.data(), static_cast<std::streamsize>(header.size()));
    os.write(reinterpret_cast<const char*>(img.pixels().data()),
             static_cast<std::streamsize>(img.pixels().size()));
    if (!os)
        throw IoError("ppm write failed");
    return header.size() + img.pixels().size();
}

std::size_t write_ppm_file(const Image& img, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw IoError("cannot open " + path);
    return write_ppm(img, os);
}

namespace {

std::size_t emit(std::ostream& os, const std::string& text) {
    os.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!os)
        throw IoError("csv write failed");
    return text.size();
}

} // namespace

std::size_t write_series_csv(const std::vector<ScanRow>& rows, std::ostream& os) {
    std::string text = "k,raw_n,k0,n,d\n";
    for (const ScanRow& r : rows)
        text += std::to_string(r.k) + "," + std::to_string(r.raw_n) + "," +
                std::to_string(r.k0) + "," + std::to_string(r.n) + "," +
                std::to_string(r.min_distance) + "\n";
    return emit(os, text);
}

std::size_t write_collisions_csv(const std::vector<Collision>& collisions,
                                 std::ostream& os) {
    std::string text = "k,x,y\n";
    for (const Collision& c : collisions)
        text += std::to_string(c.k) + "," + c.x.str() + "," + c.y.str() + "\n";
    return emit(os, text);
}

std::size_t write_pie_csv(const std::vector<ScanRow>& rows, std::ostream& os) {
    std::map<long long, std::size_t> histogram;
    for (const ScanRow& r : rows) {
        const long long offset = static_cast<long long>(r.min_distance) -
                                 static_cast<long long>(r.n / 2);
        ++histogram[offset];
    }
    std::string text = "offset,count\n";
    for (const auto& [offset, count] : histogram)
        text += std::to_string(offset) + "," + std::to_string(count) + "\n";
    return emit(os, text);
}

std::size_t write_distance_csv(const DigitString& x, const DigitString& y,
                               unsigned k_from, unsigned k_to, std::ostream& os) {
    const std::vector<BitString> series = xor_series(x, y, k_from, k_to);
    std::string text = "k,distance\n";
    for (std::size_t i = 0; i < series.size(); ++i)
        text += std::to_string(k_from + i) + "," +
                std::to_string(series[i].weight()) + "\n";
    return emit(os, text);
}

} // namespace mz
