#include "coeffpat/render.hpp"

#include <bit>
#include <stdexcept>

namespace coeffpat {

Bitmap::Bitmap(std::size_t width, std::size_t height)
    : width_(width), height_(height), stride_((width + 63) / 64), words_(stride_ * height, 0) {}

std::uint64_t Bitmap::ink() const noexcept {
    std::uint64_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::uint64_t>(std::popcount(w));
    return n;
}

std::string Bitmap::to_pbm() const {
    std::string out = "P1\n" + std::to_string(width_) + " " + std::to_string(height_) + "\n";
    out.reserve(out.size() + height_ * width_ * 2);
    for (std::size_t y = 0; y < height_; ++y) {
        for (std::size_t x = 0; x < width_; ++x) {
            if (x) out += ' ';
            out += get(x, y) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

Bitmap render_fractal(const FpPoly& f, std::size_t rows, std::uint64_t maxCells) {
    if (rows < 1) throw std::invalid_argument("render_fractal: rows must be >= 1");
    if (f.is_zero()) throw std::invalid_argument("render_fractal: zero polynomial");
    const std::uint64_t d = static_cast<std::uint64_t>(f.degree());
    const std::uint64_t width = (rows - 1) * d + 1;
    if (d && (rows - 1) > (maxCells - 1) / d) throw std::length_error("render_fractal: bitmap too large");
    if (width > maxCells / rows) {
        throw std::length_error("render_fractal: bitmap of " + std::to_string(width) + "x" + std::to_string(rows) +
                                " exceeds the cap of " + std::to_string(maxCells) + " cells");
    }
    Bitmap bm(static_cast<std::size_t>(width), rows);
    RowIterator it(f);
    for (std::size_t y = 0; y < rows; ++y) {
        const auto& digits = it.digits();
        for (std::size_t x = 0; x < digits.size(); ++x) {
            if (digits[x]) bm.set(x, y);
        }
        if (y + 1 < rows) it.advance();
    }
    return bm;
}

}  // namespace coeffpat
