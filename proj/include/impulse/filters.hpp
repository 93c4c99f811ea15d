#pragma once

#include <cstddef>
#include <string>

#include "impulse/image.hpp"

namespace impulse {

/// How filters treat pixels without a full 3x3 neighbourhood.
enum class Border {
    Reflect,  ///< filter every pixel, mirroring taps past the edge (reflect-101)
    Copy,     ///< leave the one-pixel frame as it was in the input
};

/// CWM gain K. Must be >= 1.
struct CwmGain {
    int k = 1;

    explicit CwmGain(int gain);
};

/// Maps a gain to the number of times the center is counted.
enum class CenterWeight {
    Doubled,      ///< 2K copies; even multisets take the lower median
    OddExtended,  ///< 2K + 1 copies; multiset size is always odd
};

int center_copies(CwmGain gain, CenterWeight mapping) noexcept;

/// Minmax detector comparison.
enum class Detection {
    Inclusive,  ///< center <= min or center >= max of the neighbours
    Strict,     ///< center < min or center > max
};

/// Order in which MDB reads its windows.
enum class Scan {
    InPlace,   ///< raster order, each window sees pixels already restored
    Parallel,  ///< every window reads the unmodified input
};

struct FilterOptions {
    Border border = Border::Reflect;
    CenterWeight center_weight = CenterWeight::Doubled;
    Detection detection = Detection::Inclusive;
    Scan scan = Scan::InPlace;
};

/// 5th smallest of the nine values.
Intensity median9(const Window9& window);

/// Lower median of the 8 neighbours plus `copies` instances of the center.
Intensity weighted_median_center(const Window9& window, int copies);
Intensity weighted_median_center(const Window9& window, CwmGain gain,
                                 CenterWeight mapping = CenterWeight::Doubled);

/// Strict minmax test: the center lies strictly below every neighbour or
/// strictly above every neighbour. A tie with an extremum is not an outlier.
bool is_minmax_outlier(const Window9& window);

/// Inclusive minmax test: the center is <= every neighbour or >= every
/// neighbour. Fires on constant windows (harmlessly, the median is unchanged).
bool is_minmax_extreme(const Window9& window);

bool detects_impulse(const Window9& window, Detection detection);

// All three require width, height >= 3 and throw SizeError otherwise.
GrayImage median_filter(const GrayImage& img, const FilterOptions& options = {});
GrayImage cwm_filter(const GrayImage& img, CwmGain gain, const FilterOptions& options = {});
GrayImage mdb_filter(const GrayImage& img, const FilterOptions& options = {});

enum class FilterKind { Median, Cwm, Mdb };

/// A filter as named on the command line: "median", "cwm:K" or "mdb".
struct FilterSpec {
    FilterKind kind = FilterKind::Mdb;
    int gain = 1;  ///< only meaningful for Cwm

    static FilterSpec parse(const std::string& text);
    std::string name() const;

    friend bool operator==(const FilterSpec&, const FilterSpec&) = default;
};

GrayImage apply_filter(const GrayImage& img, const FilterSpec& spec,
                       const FilterOptions& options = {}, int passes = 1);

}  // namespace impulse
