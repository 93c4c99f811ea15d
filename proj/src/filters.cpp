#include "impulse/filters.hpp"

#include <algorithm>
#include <charconv>
#include <span>
#include <vector>

#include "impulse/errors.hpp"

namespace impulse {

CwmGain::CwmGain(int gain) : k(gain) {
    if (gain < 1) {
        throw InvalidArgument("CWM gain must be >= 1, got " + std::to_string(gain));
    }
}

int center_copies(CwmGain gain, CenterWeight mapping) noexcept {
    return mapping == CenterWeight::Doubled ? 2 * gain.k : 2 * gain.k + 1;
}

Intensity median9(const Window9& window) {
    auto v = window.values;
    std::nth_element(v.begin(), v.begin() + 4, v.end());
    return v[4];
}

Intensity weighted_median_center(const Window9& window, int copies) {
    if (copies < 1) {
        throw InvalidArgument("center must be counted at least once");
    }
    auto nb = window.neighbors();
    std::sort(nb.begin(), nb.end());
    const Intensity center = window.center();
    const auto below = static_cast<std::size_t>(
        std::lower_bound(nb.begin(), nb.end(), center) - nb.begin());
    const auto n_copies = static_cast<std::size_t>(copies);
    // Sorted multiset: nb[0..below), center x copies, nb[below..8).
    const std::size_t mid = (nb.size() + n_copies - 1) / 2;
    if (mid < below) {
        return nb[mid];
    }
    if (mid < below + n_copies) {
        return center;
    }
    return nb[mid - n_copies];
}

Intensity weighted_median_center(const Window9& window, CwmGain gain, CenterWeight mapping) {
    return weighted_median_center(window, center_copies(gain, mapping));
}

bool is_minmax_outlier(const Window9& window) {
    const auto nb = window.neighbors();
    const auto [lo, hi] = std::minmax_element(nb.begin(), nb.end());
    return window.center() < *lo || window.center() > *hi;
}

bool is_minmax_extreme(const Window9& window) {
    const auto nb = window.neighbors();
    const auto [lo, hi] = std::minmax_element(nb.begin(), nb.end());
    return window.center() <= *lo || window.center() >= *hi;
}

bool detects_impulse(const Window9& window, Detection detection) {
    return detection == Detection::Strict ? is_minmax_outlier(window) : is_minmax_extreme(window);
}

namespace {

void require_filterable(const GrayImage& img) {
    if (img.width() < 3 || img.height() < 3) {
        throw SizeError("3x3 filtering needs an image of at least 3x3, got " +
                        std::to_string(img.width()) + "x" + std::to_string(img.height()));
    }
}

std::size_t mirror(std::ptrdiff_t i, std::size_t n) {
    if (i < 0) {
        return static_cast<std::size_t>(-i);
    }
    if (static_cast<std::size_t>(i) >= n) {
        return 2 * n - 2 - static_cast<std::size_t>(i);
    }
    return static_cast<std::size_t>(i);
}

Window9 gather(std::span<const Intensity> buf, std::size_t width, std::size_t height,
               std::size_t row, std::size_t col) {
    Window9 w;
    std::size_t k = 0;
    for (std::ptrdiff_t dr = -1; dr <= 1; ++dr) {
        const std::size_t r = mirror(static_cast<std::ptrdiff_t>(row) + dr, height);
        for (std::ptrdiff_t dc = -1; dc <= 1; ++dc) {
            w.values[k++] = buf[r * width + mirror(static_cast<std::ptrdiff_t>(col) + dc, width)];
        }
    }
    return w;
}

// Applies `rule` to every filtered pixel in raster order. With `in_place` the
// windows read the output buffer, so earlier replacements feed later windows.
template <typename Rule>
GrayImage sweep(const GrayImage& img, Border border, bool in_place, Rule rule) {
    require_filterable(img);
    const std::size_t width = img.width();
    const std::size_t height = img.height();
    const std::size_t margin = border == Border::Copy ? 1 : 0;

    std::vector<Intensity> out(img.pixels().begin(), img.pixels().end());
    const std::span<const Intensity> src = img.pixels();
    for (std::size_t r = margin; r < height - margin; ++r) {
        for (std::size_t c = margin; c < width - margin; ++c) {
            const Window9 w = gather(in_place ? std::span<const Intensity>(out) : src, width,
                                     height, r, c);
            out[r * width + c] = rule(w);
        }
    }
    return GrayImage(width, height, std::move(out));
}

}  // namespace

GrayImage median_filter(const GrayImage& img, const FilterOptions& options) {
    return sweep(img, options.border, false, [](const Window9& w) { return median9(w); });
}

GrayImage cwm_filter(const GrayImage& img, CwmGain gain, const FilterOptions& options) {
    const int copies = center_copies(gain, options.center_weight);
    return sweep(img, options.border, false,
                 [copies](const Window9& w) { return weighted_median_center(w, copies); });
}

GrayImage mdb_filter(const GrayImage& img, const FilterOptions& options) {
    const Detection detection = options.detection;
    return sweep(img, options.border, options.scan == Scan::InPlace,
                 [detection](const Window9& w) {
                     return detects_impulse(w, detection) ? median9(w) : w.center();
                 });
}

FilterSpec FilterSpec::parse(const std::string& text) {
    if (text == "median") {
        return FilterSpec{FilterKind::Median, 1};
    }
    if (text == "mdb") {
        return FilterSpec{FilterKind::Mdb, 1};
    }
    if (text.rfind("cwm:", 0) == 0) {
        const std::string digits = text.substr(4);
        int gain = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), gain);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
            throw InvalidArgument("bad CWM gain in filter '" + text + "'");
        }
        CwmGain checked(gain);
        return FilterSpec{FilterKind::Cwm, checked.k};
    }
    throw InvalidArgument("unknown filter '" + text + "' (expected median, cwm:K or mdb)");
}

std::string FilterSpec::name() const {
    switch (kind) {
        case FilterKind::Median:
            return "median";
        case FilterKind::Cwm:
            return "cwm:" + std::to_string(gain);
        case FilterKind::Mdb:
            return "mdb";
    }
    return "unknown";
}

GrayImage apply_filter(const GrayImage& img, const FilterSpec& spec, const FilterOptions& options,
                       int passes) {
    if (passes < 1) {
        throw InvalidArgument("passes must be >= 1");
    }
    GrayImage current = img;
    for (int p = 0; p < passes; ++p) {
        switch (spec.kind) {
            case FilterKind::Median:
                current = median_filter(current, options);
                break;
            case FilterKind::Cwm:
                current = cwm_filter(current, CwmGain(spec.gain), options);
                break;
            case FilterKind::Mdb:
                current = mdb_filter(current, options);
                break;
        }
    }
    return current;
}

}  // namespace impulse
