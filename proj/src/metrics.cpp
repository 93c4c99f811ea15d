#include "impulse/metrics.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>

#include "impulse/errors.hpp"

namespace impulse {

Percent::Percent(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 100.0)) {
        throw InvalidArgument("percentage outside [0, 100]");
    }
}

namespace {

void require_same_shape(const GrayImage& a, const GrayImage& b, const char* what) {
    if (!a.same_shape(b)) {
        throw ShapeError(std::string(what) + ": " + std::to_string(a.width()) + "x" +
                         std::to_string(a.height()) + " vs " + std::to_string(b.width()) + "x" +
                         std::to_string(b.height()));
    }
}

void require_mask_shape(const GrayImage& img, const NoiseMask& mask, const char* what) {
    if (!mask.matches(img)) {
        throw ShapeError(std::string(what) + ": mask dimensions differ from image");
    }
}

std::uint64_t squared_error(const GrayImage& a, const GrayImage& b) {
    std::uint64_t sum = 0;
    const auto pa = a.pixels();
    const auto pb = b.pixels();
    for (std::size_t i = 0; i < pa.size(); ++i) {
        const std::int64_t d = std::int64_t{pa[i]} - std::int64_t{pb[i]};
        sum += static_cast<std::uint64_t>(d * d);
    }
    return sum;
}

Decibels ratio_db(std::uint64_t numerator, std::uint64_t denominator) {
    if (denominator == 0) {
        return Decibels::infinite();
    }
    return Decibels(10.0 * std::log10(static_cast<double>(numerator) /
                                      static_cast<double>(denominator)));
}

}  // namespace

Decibels psnr(const GrayImage& original, const GrayImage& restored) {
    require_same_shape(original, restored, "psnr");
    const std::uint64_t peak = static_cast<std::uint64_t>(original.size()) * 255u * 255u;
    return ratio_db(peak, squared_error(original, restored));
}

Decibels snr_db(const GrayImage& reference, const GrayImage& other) {
    require_same_shape(reference, other, "snr");
    std::uint64_t energy = 0;
    for (Intensity v : reference.pixels()) {
        energy += std::uint64_t{v} * v;
    }
    if (energy == 0) {
        throw DegenerateError("snr: reference image is all zero");
    }
    return ratio_db(energy, squared_error(reference, other));
}

Decibels snri(const GrayImage& original, const GrayImage& noisy, const GrayImage& restored) {
    const Decibels restored_db = snr_db(original, restored);
    const Decibels noisy_db = snr_db(original, noisy);
    if (restored_db.is_infinite() && noisy_db.is_infinite()) {
        return Decibels(0.0);
    }
    if (restored_db.is_infinite()) {
        return Decibels::infinite(+1);
    }
    if (noisy_db.is_infinite()) {
        return Decibels::infinite(-1);
    }
    return Decibels(restored_db.value() - noisy_db.value());
}

Percent posp(const GrayImage& original, const GrayImage& restored, const NoiseMask& mask) {
    require_same_shape(original, restored, "posp");
    require_mask_shape(original, mask, "posp");
    std::size_t clean = 0;
    std::size_t spoiled = 0;
    const auto po = original.pixels();
    const auto pr = restored.pixels();
    for (std::size_t i = 0; i < po.size(); ++i) {
        if (!mask[i]) {
            ++clean;
            spoiled += po[i] != pr[i] ? 1 : 0;
        }
    }
    if (clean == 0) {
        throw DegenerateError("posp: every pixel is marked corrupted");
    }
    return Percent(100.0 * static_cast<double>(spoiled) / static_cast<double>(clean));
}

Percent pona(const GrayImage& original, const GrayImage& noisy, const GrayImage& restored,
             const NoiseMask& mask) {
    require_same_shape(original, noisy, "pona");
    require_same_shape(original, restored, "pona");
    require_mask_shape(original, mask, "pona");
    std::size_t corrupted = 0;
    std::size_t improved = 0;
    const auto po = original.pixels();
    const auto pn = noisy.pixels();
    const auto pr = restored.pixels();
    for (std::size_t i = 0; i < po.size(); ++i) {
        if (mask[i]) {
            ++corrupted;
            const int before = std::abs(int{pn[i]} - int{po[i]});
            const int after = std::abs(int{pr[i]} - int{po[i]});
            improved += after < before ? 1 : 0;
        }
    }
    if (corrupted == 0) {
        throw DegenerateError("pona: no pixel is marked corrupted");
    }
    return Percent(100.0 * static_cast<double>(improved) / static_cast<double>(corrupted));
}

MetricsRow evaluate(const GrayImage& original, const GrayImage& noisy, const GrayImage& restored,
                    const NoiseMask& mask, RowLabels labels) {
    MetricsRow row;
    row.noise_percent = labels.noise_percent;
    row.filter_name = std::move(labels.filter_name);
    row.pona = pona(original, noisy, restored, mask);
    row.posp = posp(original, restored, mask);
    row.snr_restored = snr_db(original, restored);
    row.snr_noisy = snr_db(original, noisy);
    row.snri = snri(original, noisy, restored);
    row.psnr = psnr(original, restored);
    return row;
}

}  // namespace impulse
