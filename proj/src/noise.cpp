#include "impulse/noise.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "impulse/errors.hpp"

namespace impulse {

void NoiseSpec::validate() const {
    if (!(density >= 0.0 && density <= 1.0)) {
        throw InvalidArgument("noise density must lie in [0, 1]");
    }
    if (!(salt_ratio >= 0.0 && salt_ratio <= 1.0)) {
        throw InvalidArgument("salt ratio must lie in [0, 1]");
    }
}

NoiseMask::NoiseMask(std::size_t width, std::size_t height, std::vector<bool> flags)
    : width_(width), height_(height), flags_(std::move(flags)) {
    if (width_ == 0 || height_ == 0 || flags_.size() != width_ * height_) {
        throw InvalidArgument("mask flag count does not match its dimensions");
    }
}

NoiseMask NoiseMask::none(std::size_t width, std::size_t height) {
    return NoiseMask(width, height, std::vector<bool>(width * height, false));
}

NoiseMask NoiseMask::all(std::size_t width, std::size_t height) {
    return NoiseMask(width, height, std::vector<bool>(width * height, true));
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, double noise_percent, std::uint32_t trial) noexcept {
    const auto level_key = static_cast<std::uint64_t>(std::llround(noise_percent * 1000.0));
    return splitmix64(base ^ splitmix64(level_key ^ splitmix64(std::uint64_t{trial} + 1)));
}

namespace {

// Uniform in [0, bound) by rejection, so the sequence depends only on the
// engine, never on the standard library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = gen();
        if (r >= threshold) {
            return r % bound;
        }
    }
}

}  // namespace

Corruption inject_salt_pepper(const GrayImage& img, const NoiseSpec& spec) {
    spec.validate();
    const std::size_t total = img.size();
    const auto corrupt = static_cast<std::size_t>(std::llround(spec.density * static_cast<double>(total)));
    const auto salt = static_cast<std::size_t>(std::llround(spec.salt_ratio * static_cast<double>(corrupt)));

    std::vector<std::size_t> order(total);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937_64 gen(splitmix64(spec.seed));
    for (std::size_t i = 0; i < corrupt; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(uniform_below(gen, total - i));
        std::swap(order[i], order[j]);
    }

    std::vector<Intensity> pixels(img.pixels().begin(), img.pixels().end());
    std::vector<bool> flags(total, false);
    for (std::size_t i = 0; i < corrupt; ++i) {
        pixels[order[i]] = i < salt ? Intensity{255} : Intensity{0};
        flags[order[i]] = true;
    }
    return Corruption{GrayImage(img.width(), img.height(), std::move(pixels)),
                      NoiseMask(img.width(), img.height(), std::move(flags))};
}

std::size_t corrupted_count(const NoiseMask& mask) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < mask.size(); ++i) {
        n += mask[i] ? 1 : 0;
    }
    return n;
}

GrayImage mask_to_image(const NoiseMask& mask) {
    std::vector<Intensity> pixels(mask.size());
    for (std::size_t i = 0; i < mask.size(); ++i) {
        pixels[i] = mask[i] ? 255 : 0;
    }
    return GrayImage(mask.width(), mask.height(), std::move(pixels));
}

NoiseMask mask_from_image(const GrayImage& img) {
    std::vector<bool> flags(img.size());
    const auto px = img.pixels();
    for (std::size_t i = 0; i < px.size(); ++i) {
        if (px[i] != 0 && px[i] != 255) {
            throw InvalidArgument("mask pixel " + std::to_string(i) + " has value " +
                                  std::to_string(px[i]) + ", expected 0 or 255");
        }
        flags[i] = px[i] == 255;
    }
    return NoiseMask(img.width(), img.height(), std::move(flags));
}

}  // namespace impulse
