#include <gtest/gtest.h>

#include <random>
#include <string>

#include "impulse/errors.hpp"
#include "impulse/image.hpp"
#include "reference.hpp"

namespace impulse {
namespace {

std::vector<std::byte> bytes_of(const std::string& s) {
    std::vector<std::byte> out;
    for (char ch : s) out.push_back(static_cast<std::byte>(ch));
    return out;
}

GrayImage ramp3x3() {
    return GrayImage(3, 3, {10, 20, 30, 40, 50, 60, 70, 80, 90});
}

TEST(GrayImage, RejectsBadDimensions) {
    EXPECT_THROW(GrayImage(0, 1, {}), InvalidArgument);
    EXPECT_THROW(GrayImage(2, 2, {1, 2, 3}), InvalidArgument);
}

TEST(GrayImage, AtIsBoundsChecked) {
    const GrayImage img = ramp3x3();
    EXPECT_EQ(img.at({2, 1}), 80);
    EXPECT_THROW(img.at({3, 0}), BoundsError);
    EXPECT_THROW(img.at({0, 3}), BoundsError);
}

TEST(WindowAt, WholeImageOf3x3) {
    const Window9 w = window_at(ramp3x3(), {1, 1});
    EXPECT_EQ(w.values, (std::array<Intensity, 9>{10, 20, 30, 40, 50, 60, 70, 80, 90}));
    EXPECT_EQ(w.center(), 50);
}

TEST(WindowAt, ConstantImage) {
    const GrayImage img = GrayImage::filled(6, 5, 7);
    for (std::size_t r = 1; r < 4; ++r) {
        for (std::size_t c = 1; c < 5; ++c) {
            const Window9 w = window_at(img, {r, c});
            for (Intensity v : w.values) EXPECT_EQ(v, 7);
            EXPECT_EQ(w.center(), 7);
        }
    }
}

TEST(WindowAt, FormulaImage) {
    std::vector<Intensity> px;
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) px.push_back(static_cast<Intensity>(10 * r + c));
    const Window9 w = window_at(GrayImage(5, 5, px), {2, 3});
    EXPECT_EQ(w.values, (std::array<Intensity, 9>{12, 13, 14, 22, 23, 24, 32, 33, 34}));
    EXPECT_EQ(w.center(), 23);
}

TEST(WindowAt, BorderAndOutsideAreErrors) {
    const GrayImage img = GrayImage::filled(5, 4, 1);
    EXPECT_THROW(window_at(img, {0, 2}), BoundsError);
    EXPECT_THROW(window_at(img, {2, 0}), BoundsError);
    EXPECT_THROW(window_at(img, {3, 2}), BoundsError);
    EXPECT_THROW(window_at(img, {2, 4}), BoundsError);
    EXPECT_THROW(window_at(img, {10, 10}), BoundsError);
    EXPECT_NO_THROW(window_at(img, {2, 3}));
}

TEST(WindowAt, CenterMatchesPixelEverywhere) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const GrayImage img = reference::random_image(rng, 3 + trial % 5, 3 + trial % 4);
        for (std::size_t r = 1; r + 1 < img.height(); ++r)
            for (std::size_t c = 1; c + 1 < img.width(); ++c)
                EXPECT_EQ(window_at(img, {r, c}).center(), img(r, c));
    }
}

TEST(WindowReflect, MatchesFullWindowInside) {
    std::mt19937 rng(5);
    const GrayImage img = reference::random_image(rng, 7, 6);
    for (std::size_t r = 1; r < 5; ++r)
        for (std::size_t c = 1; c < 6; ++c) EXPECT_EQ(window_reflect(img, {r, c}), window_at(img, {r, c}));
}

TEST(WindowReflect, MirrorsWithoutRepeatingEdge) {
    const Window9 w = window_reflect(ramp3x3(), {0, 0});
    // Row -1 mirrors to row 1, column -1 mirrors to column 1.
    EXPECT_EQ(w.values, (std::array<Intensity, 9>{50, 40, 50, 20, 10, 20, 50, 40, 50}));
    EXPECT_THROW(window_reflect(ramp3x3(), {3, 0}), BoundsError);
}

TEST(ReadPgm, BinaryP5) {
    auto data = bytes_of("P5 2 2 255 ");
    for (int v : {0, 128, 255, 7}) data.push_back(static_cast<std::byte>(v));
    const GrayImage img = read_pgm(data);
    EXPECT_EQ(img.width(), 2u);
    EXPECT_EQ(img.height(), 2u);
    EXPECT_EQ(std::vector<Intensity>(img.pixels().begin(), img.pixels().end()),
              (std::vector<Intensity>{0, 128, 255, 7}));
}

TEST(ReadPgm, AsciiP2) {
    const GrayImage img = read_pgm(bytes_of("P2\n1 1\n255\n42\n"));
    EXPECT_EQ(img, GrayImage(1, 1, {42}));
}

TEST(ReadPgm, CommentsInHeader) {
    const GrayImage img = read_pgm(bytes_of("P2\n# made by hand\n2 1 # width height\n# max\n255\n3 4\n"));
    EXPECT_EQ(img, GrayImage(2, 1, {3, 4}));
}

TEST(ReadPgm, SixteenBitMaxvalRejected) {
    try {
        read_pgm(bytes_of("P5\n1 1\n65535\n\x01\x02"));
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 7u);
    }
}

TEST(ReadPgm, BadMagic) {
    try {
        read_pgm(bytes_of("P6\n1 1\n255\n\x01"));
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 0u);
    }
    EXPECT_THROW(read_pgm(bytes_of("")), ParseError);
    EXPECT_THROW(read_pgm(bytes_of("P55 1 1 255 x")), ParseError);
}

TEST(ReadPgm, TruncatedPixels) {
    try {
        read_pgm(bytes_of("P5\n2 2\n255\n\x01\x02\x03"));
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 14u);
    }
    EXPECT_THROW(read_pgm(bytes_of("P2\n2 2\n255\n1 2 3\n")), ParseError);
}

TEST(ReadPgm, NonNumericHeaderToken) {
    try {
        read_pgm(bytes_of("P5\nabc 2\n255\n"));
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 3u);
    }
    EXPECT_THROW(read_pgm(bytes_of("P2\n2x 2\n255\n")), ParseError);
}

TEST(ReadPgm, ValueAboveMaxval) {
    EXPECT_THROW(read_pgm(bytes_of("P2\n1 1\n100\n101\n")), ParseError);
    EXPECT_EQ(read_pgm(bytes_of("P2\n1 1\n100\n100\n")), GrayImage(1, 1, {100}));
}

TEST(WritePgm, SinglePixel) {
    auto expected = bytes_of("P5\n1 1\n255\n");
    expected.push_back(std::byte{42});
    EXPECT_EQ(write_pgm(GrayImage(1, 1, {42})), expected);
}

TEST(WritePgm, PayloadBytes) {
    const auto out = write_pgm(GrayImage(2, 2, {0, 128, 255, 7}));
    const std::string header = "P5\n2 2\n255\n";
    ASSERT_EQ(out.size(), header.size() + 4);
    EXPECT_EQ(std::vector<std::byte>(out.begin() + static_cast<std::ptrdiff_t>(header.size()), out.end()),
              (std::vector<std::byte>{std::byte{0}, std::byte{128}, std::byte{255}, std::byte{7}}));
}

TEST(WritePgm, RoundTripRandomImages) {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> dim(1, 9);
    for (int i = 0; i < 100; ++i) {
        const GrayImage img = reference::random_image(rng, dim(rng), dim(rng));
        EXPECT_EQ(read_pgm(write_pgm(img)), img);
    }
}

}  // namespace
}  // namespace impulse
