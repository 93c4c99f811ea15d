#include <cctype>
#include <fstream>
#include <iterator>
#include <string>

#include "impulse/errors.hpp"
#include "impulse/image.hpp"

namespace impulse {

namespace {

class PgmCursor {
public:
    explicit PgmCursor(std::span<const std::byte> bytes) : bytes_(bytes) {}

    std::size_t offset() const noexcept { return pos_; }
    bool at_end() const noexcept { return pos_ >= bytes_.size(); }
    int peek() const { return static_cast<unsigned char>(bytes_[pos_]); }
    int next() { return static_cast<unsigned char>(bytes_[pos_++]); }

    void skip_space_and_comments() {
        while (!at_end()) {
            const int ch = peek();
            if (ch == '#') {
                while (!at_end() && peek() != '\n' && peek() != '\r') {
                    ++pos_;
                }
            } else if (std::isspace(ch)) {
                ++pos_;
            } else {
                return;
            }
        }
    }

    unsigned long read_number(const char* what) {
        skip_space_and_comments();
        if (at_end()) {
            throw ParseError(std::string("unexpected end of data reading ") + what, pos_);
        }
        if (!std::isdigit(peek())) {
            throw ParseError(std::string("non-numeric token for ") + what, pos_);
        }
        const std::size_t start = pos_;
        unsigned long value = 0;
        while (!at_end() && std::isdigit(peek())) {
            value = value * 10 + static_cast<unsigned long>(next() - '0');
            if (value > 1'000'000'000UL) {
                throw ParseError(std::string("value too large for ") + what, start);
            }
        }
        if (!at_end() && !std::isspace(peek()) && peek() != '#') {
            throw ParseError(std::string("non-numeric token for ") + what, pos_);
        }
        return value;
    }

private:
    std::span<const std::byte> bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

GrayImage read_pgm(std::span<const std::byte> bytes) {
    PgmCursor cur(bytes);
    if (bytes.size() < 2 || static_cast<char>(bytes[0]) != 'P' ||
        (static_cast<char>(bytes[1]) != '5' && static_cast<char>(bytes[1]) != '2')) {
        throw ParseError("bad magic number, expected P5 or P2", 0);
    }
    const bool binary = static_cast<char>(bytes[1]) == '5';
    cur.next();
    cur.next();
    if (!cur.at_end() && !std::isspace(cur.peek()) && cur.peek() != '#') {
        throw ParseError("bad magic number, expected P5 or P2", 0);
    }

    cur.skip_space_and_comments();
    const std::size_t width_at = cur.offset();
    const unsigned long width = cur.read_number("width");
    const unsigned long height = cur.read_number("height");
    if (width == 0 || height == 0) {
        throw ParseError("zero image dimension", width_at);
    }
    cur.skip_space_and_comments();
    const std::size_t maxval_at = cur.offset();
    const unsigned long maxval = cur.read_number("maxval");
    if (maxval == 0 || maxval > 255) {
        throw ParseError("maxval " + std::to_string(maxval) + " not in 1..255", maxval_at);
    }

    const std::size_t count = static_cast<std::size_t>(width) * height;
    std::vector<Intensity> pixels;
    pixels.reserve(count);
    if (binary) {
        // Exactly one whitespace byte separates maxval from the raster.
        if (cur.at_end()) {
            throw ParseError("truncated pixel data", cur.offset());
        }
        cur.next();
        for (std::size_t i = 0; i < count; ++i) {
            if (cur.at_end()) {
                throw ParseError("truncated pixel data: " + std::to_string(i) + " of " +
                                     std::to_string(count) + " pixels",
                                 cur.offset());
            }
            const std::size_t at = cur.offset();
            const int v = cur.next();
            if (static_cast<unsigned long>(v) > maxval) {
                throw ParseError("pixel value exceeds maxval", at);
            }
            pixels.push_back(static_cast<Intensity>(v));
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            cur.skip_space_and_comments();
            if (cur.at_end()) {
                throw ParseError("truncated pixel data: " + std::to_string(i) + " of " +
                                     std::to_string(count) + " pixels",
                                 cur.offset());
            }
            const std::size_t at = cur.offset();
            const unsigned long v = cur.read_number("pixel");
            if (v > maxval) {
                throw ParseError("pixel value exceeds maxval", at);
            }
            pixels.push_back(static_cast<Intensity>(v));
        }
    }
    return GrayImage(width, height, std::move(pixels));
}

std::vector<std::byte> write_pgm(const GrayImage& img) {
    const std::string header =
        "P5\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
    std::vector<std::byte> out;
    out.reserve(header.size() + img.size());
    for (char ch : header) {
        out.push_back(static_cast<std::byte>(ch));
    }
    for (Intensity v : img.pixels()) {
        out.push_back(static_cast<std::byte>(v));
    }
    return out;
}

GrayImage read_pgm_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path);
    }
    const std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return read_pgm(std::as_bytes(std::span(data.data(), data.size())));
}

void write_pgm_file(const GrayImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write " + path);
    }
    const auto bytes = write_pgm(img);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw Error("write failed for " + path);
    }
}

}  // namespace impulse
