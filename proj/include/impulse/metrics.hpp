#pragma once

#include <limits>
#include <string>

#include "impulse/image.hpp"
#include "impulse/noise.hpp"

namespace impulse {

/// A level in dB, or the distinguished value for a zero error sum.
class Decibels {
public:
    constexpr Decibels() = default;
    constexpr explicit Decibels(double value) : value_(value) {}

    /// Perfect reconstruction. `sign` < 0 yields negative infinity, which only
    /// SNRI produces (noisy image perfect, restored not).
    static constexpr Decibels infinite(int sign = 1) {
        return Decibels(sign < 0 ? -std::numeric_limits<double>::infinity()
                                 : std::numeric_limits<double>::infinity());
    }

    constexpr double value() const noexcept { return value_; }
    constexpr bool is_infinite() const noexcept {
        return value_ == std::numeric_limits<double>::infinity() ||
               value_ == -std::numeric_limits<double>::infinity();
    }

    friend constexpr bool operator==(Decibels, Decibels) = default;

private:
    double value_ = 0.0;
};

/// A value in [0, 100].
class Percent {
public:
    constexpr Percent() = default;
    /// Throws InvalidArgument outside [0, 100].
    explicit Percent(double value);

    constexpr double value() const noexcept { return value_; }

    friend constexpr bool operator==(Percent, Percent) = default;

private:
    double value_ = 0.0;
};

/// One (filter, noise level) result.
struct MetricsRow {
    double noise_percent = 0.0;
    std::string filter_name;
    Percent pona;
    Percent posp;
    Decibels snr_restored;
    Decibels snr_noisy;
    Decibels snri;
    Decibels psnr;
};

/// 10 log10(N * 255^2 / sum (S - R)^2).
Decibels psnr(const GrayImage& original, const GrayImage& restored);

/// 10 log10(sum S^2 / sum (S - O)^2). Throws DegenerateError for an all-zero reference.
Decibels snr_db(const GrayImage& reference, const GrayImage& other);

/// snr_db(original, restored) - snr_db(original, noisy).
Decibels snri(const GrayImage& original, const GrayImage& noisy, const GrayImage& restored);

/// Share of clean pixels whose value the filter changed.
/// Throws DegenerateError when every pixel is flagged.
Percent posp(const GrayImage& original, const GrayImage& restored, const NoiseMask& mask);

/// Share of corrupted pixels whose absolute error strictly decreased.
/// Throws DegenerateError when no pixel is flagged.
Percent pona(const GrayImage& original, const GrayImage& noisy, const GrayImage& restored,
             const NoiseMask& mask);

struct RowLabels {
    double noise_percent = 0.0;
    std::string filter_name;
};

MetricsRow evaluate(const GrayImage& original, const GrayImage& noisy, const GrayImage& restored,
                    const NoiseMask& mask, RowLabels labels);

}  // namespace impulse
