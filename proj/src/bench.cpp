#include "impulse/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "impulse/errors.hpp"
#include "impulse/noise.hpp"

namespace impulse {

void ExperimentSpec::validate() const {
    if (filters.empty()) {
        throw InvalidArgument("experiment needs at least one filter");
    }
    if (noise_levels.empty()) {
        throw InvalidArgument("experiment needs at least one noise level");
    }
    for (double level : noise_levels) {
        if (!(level > 0.0 && level <= 100.0)) {
            throw InvalidArgument("noise level " + format_level(level) + " not in (0, 100]");
        }
    }
    if (trials < 1) {
        throw InvalidArgument("trials must be >= 1");
    }
    if (!(salt_ratio >= 0.0 && salt_ratio <= 1.0)) {
        throw InvalidArgument("salt ratio must lie in [0, 1]");
    }
    if (image.width() < 3 || image.height() < 3) {
        throw SizeError("experiment image must be at least 3x3");
    }
}

std::vector<TrialRows> run_trials(const ExperimentSpec& spec) {
    spec.validate();
    std::vector<double> levels = spec.noise_levels;
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    std::vector<TrialRows> cells;
    cells.reserve(spec.filters.size() * levels.size());
    for (const FilterSpec& f : spec.filters) {
        for (double level : levels) {
            cells.push_back(TrialRows{f, level, {}});
        }
    }

    for (std::size_t li = 0; li < levels.size(); ++li) {
        for (std::uint32_t t = 0; t < spec.trials; ++t) {
            const NoiseSpec noise{levels[li] / 100.0, spec.salt_ratio,
                                  derive_seed(spec.seed, levels[li], t)};
            const Corruption corrupted = inject_salt_pepper(spec.image, noise);
            for (std::size_t fi = 0; fi < spec.filters.size(); ++fi) {
                const FilterSpec& f = spec.filters[fi];
                const GrayImage restored = apply_filter(corrupted.image, f, spec.options);
                cells[fi * levels.size() + li].trials.push_back(
                    evaluate(spec.image, corrupted.image, restored, corrupted.mask,
                             RowLabels{levels[li], f.name()}));
            }
        }
    }
    return cells;
}

namespace {

Decibels mean_db(const std::vector<MetricsRow>& rows, Decibels MetricsRow::*field) {
    double sum = 0.0;
    for (const MetricsRow& r : rows) {
        const Decibels v = r.*field;
        if (v.is_infinite()) {
            return v;
        }
        sum += v.value();
    }
    return Decibels(sum / static_cast<double>(rows.size()));
}

Percent mean_percent(const std::vector<MetricsRow>& rows, Percent MetricsRow::*field) {
    double sum = 0.0;
    for (const MetricsRow& r : rows) {
        sum += (r.*field).value();
    }
    return Percent(std::clamp(sum / static_cast<double>(rows.size()), 0.0, 100.0));
}

}  // namespace

MetricsRow average_rows(const std::vector<MetricsRow>& rows) {
    if (rows.empty()) {
        throw InvalidArgument("cannot average zero rows");
    }
    if (rows.size() == 1) {
        return rows.front();
    }
    MetricsRow out;
    out.noise_percent = rows.front().noise_percent;
    out.filter_name = rows.front().filter_name;
    out.pona = mean_percent(rows, &MetricsRow::pona);
    out.posp = mean_percent(rows, &MetricsRow::posp);
    out.snr_restored = mean_db(rows, &MetricsRow::snr_restored);
    out.snr_noisy = mean_db(rows, &MetricsRow::snr_noisy);
    out.psnr = mean_db(rows, &MetricsRow::psnr);
    if (!out.snr_restored.is_infinite() && !out.snr_noisy.is_infinite()) {
        out.snri = Decibels(out.snr_restored.value() - out.snr_noisy.value());
    } else {
        out.snri = mean_db(rows, &MetricsRow::snri);
    }
    return out;
}

BenchReport run_experiment(const ExperimentSpec& spec) {
    BenchReport report;
    for (const TrialRows& cell : run_trials(spec)) {
        report.rows.push_back(average_rows(cell.trials));
    }
    report.metadata.image_label = spec.image_label;
    report.metadata.width = spec.image.width();
    report.metadata.height = spec.image.height();
    report.metadata.seed = spec.seed;
    report.metadata.salt_ratio = spec.salt_ratio;
    report.metadata.trials = spec.trials;
    return report;
}

std::string format_level(double percent) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, percent);
    return std::string(buf, end);
}

namespace {

std::string fixed4(double value) {
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, 4);
    std::string text(buf, end);
    if (text == "-0.0000") {
        text = "0.0000";
    }
    return text;
}

double parse_double(const std::string& field, std::size_t line) {
    if (field == "inf") {
        return std::numeric_limits<double>::infinity();
    }
    if (field == "-inf") {
        return -std::numeric_limits<double>::infinity();
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw InvalidArgument("csv line " + std::to_string(line) + ": bad number '" + field + "'");
    }
    return value;
}

}  // namespace

std::string emit_csv(const BenchReport& report) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const MetricsRow& r : report.rows) {
        out += r.filter_name;
        out += ',' + format_level(r.noise_percent);
        out += ',' + fixed4(r.pona.value());
        out += ',' + fixed4(r.posp.value());
        out += ',' + fixed4(r.snr_restored.value());
        out += ',' + fixed4(r.snr_noisy.value());
        out += ',' + fixed4(r.snri.value());
        out += ',' + fixed4(r.psnr.value());
        out += '\n';
    }
    return out;
}

std::vector<MetricsRow> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw InvalidArgument("csv: missing or unexpected header");
    }
    std::vector<MetricsRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            fields.push_back(cell);
        }
        if (fields.size() != 8) {
            throw InvalidArgument("csv line " + std::to_string(line_no) + ": expected 8 fields");
        }
        MetricsRow r;
        r.filter_name = fields[0];
        r.noise_percent = parse_double(fields[1], line_no);
        r.pona = Percent(parse_double(fields[2], line_no));
        r.posp = Percent(parse_double(fields[3], line_no));
        r.snr_restored = Decibels(parse_double(fields[4], line_no));
        r.snr_noisy = Decibels(parse_double(fields[5], line_no));
        r.snri = Decibels(parse_double(fields[6], line_no));
        r.psnr = Decibels(parse_double(fields[7], line_no));
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<PlotSeries> plot_series(const BenchReport& report) {
    std::vector<std::string> names;
    for (const MetricsRow& r : report.rows) {
        if (std::find(names.begin(), names.end(), r.filter_name) == names.end()) {
            names.push_back(r.filter_name);
        }
    }
    std::vector<PlotSeries> out;
    for (const std::string& name : names) {
        std::string stem = name;
        std::replace(stem.begin(), stem.end(), ':', '_');
        PlotSeries fig1{"fig1_pona_" + stem + ".csv", "noise_percent,pona\n"};
        PlotSeries fig2{"fig2_psnr_" + stem + ".csv", "noise_percent,psnr_db\n"};
        for (const MetricsRow& r : report.rows) {
            if (r.filter_name != name) {
                continue;
            }
            fig1.csv += format_level(r.noise_percent) + ',' + fixed4(r.pona.value()) + '\n';
            fig2.csv += format_level(r.noise_percent) + ',' + fixed4(r.psnr.value()) + '\n';
        }
        out.push_back(std::move(fig1));
        out.push_back(std::move(fig2));
    }
    return out;
}

std::string metadata_json(const BenchMetadata& metadata) {
    nlohmann::ordered_json j;
    j["image"] = metadata.image_label;
    j["width"] = metadata.width;
    j["height"] = metadata.height;
    j["seed"] = metadata.seed;
    j["salt_ratio"] = metadata.salt_ratio;
    j["trials"] = metadata.trials;
    j["tool_version"] = metadata.tool_version;
    return j.dump(2) + "\n";
}

}  // namespace impulse
