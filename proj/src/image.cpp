#include "impulse/image.hpp"

#include <utility>

#include "impulse/errors.hpp"

namespace impulse {

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<Intensity> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    if (width_ == 0 || height_ == 0) {
        throw InvalidArgument("image dimensions must be at least 1x1");
    }
    if (pixels_.size() != width_ * height_) {
        throw InvalidArgument("pixel count " + std::to_string(pixels_.size()) +
                              " does not match " + std::to_string(width_) + "x" +
                              std::to_string(height_));
    }
}

GrayImage GrayImage::filled(std::size_t width, std::size_t height, Intensity value) {
    return GrayImage(width, height, std::vector<Intensity>(width * height, value));
}

Intensity GrayImage::at(PixelCoord c) const {
    if (c.row >= height_ || c.col >= width_) {
        throw BoundsError("pixel (" + std::to_string(c.row) + ", " + std::to_string(c.col) +
                          ") outside " + std::to_string(width_) + "x" + std::to_string(height_) +
                          " image");
    }
    return (*this)(c.row, c.col);
}

std::array<Intensity, 8> Window9::neighbors() const noexcept {
    std::array<Intensity, 8> out{};
    for (std::size_t i = 0, k = 0; i < values.size(); ++i) {
        if (i != kCenter) {
            out[k++] = values[i];
        }
    }
    return out;
}

Window9 window_at(const GrayImage& img, PixelCoord at) {
    if (at.row < 1 || at.col < 1 || at.row + 1 >= img.height() || at.col + 1 >= img.width()) {
        throw BoundsError("no full 3x3 neighbourhood at (" + std::to_string(at.row) + ", " +
                          std::to_string(at.col) + ") in " + std::to_string(img.width()) + "x" +
                          std::to_string(img.height()) + " image");
    }
    Window9 w;
    std::size_t k = 0;
    for (std::size_t r = at.row - 1; r <= at.row + 1; ++r) {
        for (std::size_t c = at.col - 1; c <= at.col + 1; ++c) {
            w.values[k++] = img(r, c);
        }
    }
    return w;
}

namespace {

std::size_t reflect101(std::ptrdiff_t i, std::size_t n) {
    if (i < 0) {
        return static_cast<std::size_t>(-i);
    }
    if (static_cast<std::size_t>(i) >= n) {
        return 2 * n - 2 - static_cast<std::size_t>(i);
    }
    return static_cast<std::size_t>(i);
}

}  // namespace

Window9 window_reflect(const GrayImage& img, PixelCoord at) {
    if (at.row >= img.height() || at.col >= img.width()) {
        throw BoundsError("pixel (" + std::to_string(at.row) + ", " + std::to_string(at.col) +
                          ") outside image");
    }
    if (img.width() < 2 || img.height() < 2) {
        throw BoundsError("reflected window needs an image of at least 2x2");
    }
    Window9 w;
    std::size_t k = 0;
    const auto row = static_cast<std::ptrdiff_t>(at.row);
    const auto col = static_cast<std::ptrdiff_t>(at.col);
    for (std::ptrdiff_t dr = -1; dr <= 1; ++dr) {
        const std::size_t r = reflect101(row + dr, img.height());
        for (std::ptrdiff_t dc = -1; dc <= 1; ++dc) {
            w.values[k++] = img(r, reflect101(col + dc, img.width()));
        }
    }
    return w;
}

}  // namespace impulse
