#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "impulse/errors.hpp"
#include "impulse/noise.hpp"
#include "reference.hpp"

namespace impulse {
namespace {

GrayImage gradient(std::size_t w, std::size_t h) {
    std::vector<Intensity> px(w * h);
    for (std::size_t i = 0; i < px.size(); ++i) px[i] = static_cast<Intensity>(20 + (i * 7) % 200);
    return GrayImage(w, h, px);
}

TEST(Splitmix, KnownFirstOutput) {
    // First output of the reference SplitMix64 generator seeded with 0.
    EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
}

TEST(Inject, ZeroDensityIsIdentity) {
    const GrayImage img = gradient(9, 7);
    const Corruption c = inject_salt_pepper(img, {0.0, 0.5, 3});
    EXPECT_EQ(c.image, img);
    EXPECT_EQ(c.mask, NoiseMask::none(9, 7));
}

TEST(Inject, FullSaltDensity) {
    const Corruption c = inject_salt_pepper(gradient(5, 5), {1.0, 1.0, 3});
    for (Intensity v : c.image.pixels()) EXPECT_EQ(v, 255);
    EXPECT_EQ(c.mask, NoiseMask::all(5, 5));
}

TEST(Inject, QuarterDensityHalfSalt) {
    for (std::uint64_t seed : {0ULL, 1ULL, 77ULL, 123456789ULL}) {
        const GrayImage img = GrayImage::filled(16, 16, 100);
        const Corruption c = inject_salt_pepper(img, {0.25, 0.5, seed});
        EXPECT_EQ(corrupted_count(c.mask), 64u);
        int salt = 0, pepper = 0;
        for (Intensity v : c.image.pixels()) {
            salt += v == 255;
            pepper += v == 0;
        }
        EXPECT_EQ(salt, 32);
        EXPECT_EQ(pepper, 32);
    }
}

TEST(Inject, RejectsOutOfRangeSpec) {
    const GrayImage img = gradient(4, 4);
    EXPECT_THROW(inject_salt_pepper(img, {1.5, 0.5, 0}), InvalidArgument);
    EXPECT_THROW(inject_salt_pepper(img, {0.5, -0.1, 0}), InvalidArgument);
}

TEST(Inject, MatchesDocumentedProcedure) {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        const GrayImage img = reference::random_image(rng, 3 + trial % 11, 2 + trial % 7);
        const NoiseSpec spec{0.03 * trial, 0.3 + 0.02 * trial, 1000u + static_cast<unsigned>(trial)};
        const Corruption c = inject_salt_pepper(img, spec);

        const std::size_t n = static_cast<std::size_t>(std::llround(spec.density * img.size()));
        const std::size_t salt = static_cast<std::size_t>(std::llround(spec.salt_ratio * n));
        const auto chosen = reference::selected_positions(img.size(), n, spec.seed);
        std::vector<Intensity> expected(img.pixels().begin(), img.pixels().end());
        std::vector<bool> flags(img.size(), false);
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            expected[chosen[i]] = i < salt ? 255 : 0;
            flags[chosen[i]] = true;
        }
        EXPECT_EQ(c.image, GrayImage(img.width(), img.height(), expected));
        EXPECT_EQ(c.mask, NoiseMask(img.width(), img.height(), flags));
    }
}

TEST(Inject, Properties) {
    std::mt19937 rng(4);
    std::uniform_real_distribution<double> frac(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const GrayImage img = reference::random_image(rng, 1 + trial % 13, 1 + trial % 9);
        const NoiseSpec spec{frac(rng), frac(rng), static_cast<std::uint64_t>(trial) * 7919u};
        const Corruption a = inject_salt_pepper(img, spec);
        const Corruption b = inject_salt_pepper(img, spec);
        // Determinism.
        EXPECT_EQ(a.image, b.image);
        EXPECT_EQ(a.mask, b.mask);
        // Exact count.
        EXPECT_EQ(corrupted_count(a.mask),
                  static_cast<std::size_t>(std::llround(spec.density * static_cast<double>(img.size()))));
        for (std::size_t i = 0; i < img.size(); ++i) {
            if (a.mask[i]) {
                EXPECT_TRUE(a.image.pixels()[i] == 0 || a.image.pixels()[i] == 255);
            } else {
                EXPECT_EQ(a.image.pixels()[i], img.pixels()[i]);
            }
        }
    }
}

TEST(Inject, SeedChangesRealization) {
    const GrayImage img = gradient(32, 32);
    EXPECT_NE(inject_salt_pepper(img, {0.2, 0.5, 1}).mask, inject_salt_pepper(img, {0.2, 0.5, 2}).mask);
}

TEST(CorruptedCount, Examples) {
    EXPECT_EQ(corrupted_count(NoiseMask::none(3, 3)), 0u);
    EXPECT_EQ(corrupted_count(NoiseMask::all(4, 4)), 16u);
    const Corruption c = inject_salt_pepper(GrayImage::filled(16, 16, 9), {0.25, 0.5, 5});
    EXPECT_EQ(corrupted_count(c.mask), 64u);
}

TEST(MaskImage, RoundTripAndValidation) {
    const Corruption c = inject_salt_pepper(gradient(10, 6), {0.4, 0.5, 17});
    const GrayImage as_image = mask_to_image(c.mask);
    for (Intensity v : as_image.pixels()) EXPECT_TRUE(v == 0 || v == 255);
    EXPECT_EQ(mask_from_image(as_image), c.mask);
    EXPECT_EQ(mask_from_image(read_pgm(write_pgm(as_image))), c.mask);
    EXPECT_THROW(mask_from_image(GrayImage(2, 1, {0, 128})), InvalidArgument);
}

TEST(DeriveSeed, DistinctPerCellAndStable) {
    EXPECT_EQ(derive_seed(42, 30, 0), derive_seed(42, 30, 0));
    EXPECT_NE(derive_seed(42, 30, 0), derive_seed(42, 30, 1));
    EXPECT_NE(derive_seed(42, 30, 0), derive_seed(42, 25, 0));
    EXPECT_NE(derive_seed(42, 30, 0), derive_seed(43, 30, 0));
    EXPECT_NE(derive_seed(42, 12.5, 0), derive_seed(42, 12.0, 0));
}

}  // namespace
}  // namespace impulse
