#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace impulse {

using Intensity = std::uint8_t;

struct PixelCoord {
    std::size_t row = 0;
    std::size_t col = 0;

    friend bool operator==(const PixelCoord&, const PixelCoord&) = default;
};

/// 8-bit grayscale raster, row-major.
class GrayImage {
public:
    /// Throws InvalidArgument when a dimension is zero or the pixel count
    /// does not match width * height.
    GrayImage(std::size_t width, std::size_t height, std::vector<Intensity> pixels);

    /// Image filled with a single value.
    static GrayImage filled(std::size_t width, std::size_t height, Intensity value);

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    std::size_t size() const noexcept { return pixels_.size(); }

    Intensity operator()(std::size_t row, std::size_t col) const noexcept {
        return pixels_[row * width_ + col];
    }
    /// Bounds-checked access; throws BoundsError.
    Intensity at(PixelCoord c) const;

    std::span<const Intensity> pixels() const noexcept { return pixels_; }

    bool same_shape(const GrayImage& other) const noexcept {
        return width_ == other.width_ && height_ == other.height_;
    }

    friend bool operator==(const GrayImage&, const GrayImage&) = default;

private:
    std::size_t width_;
    std::size_t height_;
    std::vector<Intensity> pixels_;
};

/// A 3x3 neighbourhood read row-major. Index 4 is the pixel under test.
struct Window9 {
    std::array<Intensity, 9> values{};

    static constexpr std::size_t kCenter = 4;

    Intensity center() const noexcept { return values[kCenter]; }
    /// The 8 values surrounding the center, in row-major order.
    std::array<Intensity, 8> neighbors() const noexcept;

    friend bool operator==(const Window9&, const Window9&) = default;
};

/// Full 3x3 block centred on `at`. Border coordinates have no full
/// neighbourhood and raise BoundsError.
Window9 window_at(const GrayImage& img, PixelCoord at);

/// 3x3 block centred on any in-range coordinate, with out-of-range taps
/// mirrored about the edge without repeating it (reflect-101: -1 -> 1,
/// n -> n-2). Requires width and height >= 2.
Window9 window_reflect(const GrayImage& img, PixelCoord at);

/// Accepts binary P5 or ASCII P2 with maxval <= 255 and '#' header comments.
GrayImage read_pgm(std::span<const std::byte> bytes);
GrayImage read_pgm_file(const std::string& path);

/// Always binary P5, maxval 255, no comments.
std::vector<std::byte> write_pgm(const GrayImage& img);
void write_pgm_file(const GrayImage& img, const std::string& path);

}  // namespace impulse
