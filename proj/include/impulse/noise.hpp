#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "impulse/image.hpp"

namespace impulse {

/// Salt-and-pepper corruption parameters.
struct NoiseSpec {
    double density = 0.0;     ///< fraction of pixels corrupted, [0, 1]
    double salt_ratio = 0.5;  ///< fraction of corrupted pixels set to 255, [0, 1]
    std::uint64_t seed = 0;

    /// Throws InvalidArgument when a fraction lies outside [0, 1].
    void validate() const;
};

/// Ground truth of which pixels an injection touched.
class NoiseMask {
public:
    NoiseMask(std::size_t width, std::size_t height, std::vector<bool> flags);

    static NoiseMask none(std::size_t width, std::size_t height);
    static NoiseMask all(std::size_t width, std::size_t height);

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    std::size_t size() const noexcept { return flags_.size(); }

    bool operator[](std::size_t index) const { return flags_[index]; }
    bool at(std::size_t row, std::size_t col) const { return flags_[row * width_ + col]; }

    bool matches(const GrayImage& img) const noexcept {
        return width_ == img.width() && height_ == img.height();
    }

    friend bool operator==(const NoiseMask&, const NoiseMask&) = default;

private:
    std::size_t width_;
    std::size_t height_;
    std::vector<bool> flags_;
};

struct Corruption {
    GrayImage image;
    NoiseMask mask;
};

/// Corrupts exactly round(density * N) distinct pixels chosen without
/// replacement. The first round(salt_ratio * n) chosen positions become 255,
/// the rest 0. Same (img, spec) always produces the same result.
///
/// Selection: std::mt19937_64 seeded with splitmix64(spec.seed) drives a
/// partial Fisher-Yates shuffle of the row-major indices; each swap index is
/// drawn by rejection sampling so the stream is identical on every platform.
Corruption inject_salt_pepper(const GrayImage& img, const NoiseSpec& spec);

std::size_t corrupted_count(const NoiseMask& mask);

/// Mask persisted as a P5 image: 255 = corrupted, 0 = clean.
GrayImage mask_to_image(const NoiseMask& mask);
/// Inverse of mask_to_image. Any value other than 0 or 255 is an InvalidArgument.
NoiseMask mask_from_image(const GrayImage& img);

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed for one (level, trial) cell of an experiment. Levels are keyed by
/// thousandths of a percent so adding a level never moves another's seed.
std::uint64_t derive_seed(std::uint64_t base, double noise_percent, std::uint32_t trial) noexcept;

}  // namespace impulse
