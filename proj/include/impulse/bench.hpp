#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "impulse/filters.hpp"
#include "impulse/image.hpp"
#include "impulse/metrics.hpp"

namespace impulse {

inline constexpr const char* kToolVersion = "1.0.0";

struct ExperimentSpec {
    GrayImage image = GrayImage::filled(3, 3, 0);
    std::string image_label;
    std::vector<double> noise_levels{5, 10, 15, 20, 25, 30};
    std::vector<FilterSpec> filters;
    FilterOptions options;
    double salt_ratio = 0.5;
    std::uint64_t seed = 42;
    std::uint32_t trials = 1;

    /// Throws InvalidArgument on an empty filter list, a level outside
    /// (0, 100], zero trials or a bad salt ratio; SizeError when the image is
    /// smaller than 3x3.
    void validate() const;
};

struct BenchMetadata {
    std::string image_label;
    std::size_t width = 0;
    std::size_t height = 0;
    std::uint64_t seed = 0;
    double salt_ratio = 0.5;
    std::uint32_t trials = 1;
    std::string tool_version = kToolVersion;
};

struct BenchReport {
    std::vector<MetricsRow> rows;  ///< ordered by filter (as listed), then noise level
    BenchMetadata metadata;
};

/// Per-trial rows for one (filter, level) cell, before averaging.
struct TrialRows {
    FilterSpec filter;
    double noise_percent = 0.0;
    std::vector<MetricsRow> trials;
};

/// Every filter sees the same corrupted image for a given (level, trial).
/// Trial seeds come from derive_seed(spec.seed, level, trial).
std::vector<TrialRows> run_trials(const ExperimentSpec& spec);

/// Averages each cell of run_trials into one row.
BenchReport run_experiment(const ExperimentSpec& spec);

MetricsRow average_rows(const std::vector<MetricsRow>& rows);

inline constexpr const char* kCsvHeader =
    "filter,noise_percent,pona,posp,snr_restored_db,snr_noisy_db,snri_db,psnr_db";

/// Header plus one line per row, fixed 4 decimals, "inf"/"-inf" for infinite
/// values, '\n' line endings. Independent of the global locale.
std::string emit_csv(const BenchReport& report);

/// Parses emit_csv output back into rows.
std::vector<MetricsRow> parse_csv(const std::string& text);

/// Fig. 1 (PONA) and Fig. 2 (PSNR) series: one two-column CSV per filter.
struct PlotSeries {
    std::string file_name;
    std::string csv;
};
std::vector<PlotSeries> plot_series(const BenchReport& report);

std::string metadata_json(const BenchMetadata& metadata);

/// Shortest decimal text for a noise level ("30", "12.5").
std::string format_level(double percent);

}  // namespace impulse
