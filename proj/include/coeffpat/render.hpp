#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "coeffpat/fpoly.hpp"

namespace coeffpat {

/// Row k holds the digits of f^k (nonzero -> 1), left-aligned.
class Bitmap {
public:
    Bitmap(std::size_t width, std::size_t height);

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    bool get(std::size_t x, std::size_t y) const noexcept {
        return (words_[y * stride_ + x / 64] >> (x % 64)) & 1u;
    }
    void set(std::size_t x, std::size_t y) noexcept { words_[y * stride_ + x / 64] |= std::uint64_t{1} << (x % 64); }
    std::uint64_t ink() const noexcept;

    /// Plain PBM: "P1", "width height", then one line of space-separated 0/1 per row.
    std::string to_pbm() const;

private:
    std::size_t width_, height_, stride_;
    std::vector<std::uint64_t> words_;
};

inline constexpr std::uint64_t kDefaultBitmapCap = std::uint64_t{1} << 30;

/// Throws std::length_error when width * height exceeds maxCells.
Bitmap render_fractal(const FpPoly& f, std::size_t rows, std::uint64_t maxCells = kDefaultBitmapCap);

}  // namespace coeffpat
