#include "impulse/cli.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "impulse/bench.hpp"
#include "impulse/errors.hpp"
#include "impulse/filters.hpp"
#include "impulse/image.hpp"
#include "impulse/metrics.hpp"
#include "impulse/noise.hpp"

namespace impulse {

namespace {

void add_filter_options(CLI::App* cmd, FilterOptions& options) {
    const std::map<std::string, Border> borders{{"reflect", Border::Reflect},
                                                {"copy", Border::Copy}};
    const std::map<std::string, Detection> detections{{"inclusive", Detection::Inclusive},
                                                      {"strict", Detection::Strict}};
    const std::map<std::string, Scan> scans{{"inplace", Scan::InPlace},
                                            {"parallel", Scan::Parallel}};
    const std::map<std::string, CenterWeight> weights{{"doubled", CenterWeight::Doubled},
                                                      {"odd", CenterWeight::OddExtended}};
    cmd->add_option("--border", options.border, "Border handling: reflect or copy")
        ->transform(CLI::CheckedTransformer(borders));
    cmd->add_option("--detector", options.detection, "MDB comparison: inclusive or strict")
        ->transform(CLI::CheckedTransformer(detections));
    cmd->add_option("--scan", options.scan, "MDB scan: inplace or parallel")
        ->transform(CLI::CheckedTransformer(scans));
    cmd->add_option("--cwm-weight", options.center_weight,
                    "CWM center copies: doubled (2K) or odd (2K+1)")
        ->transform(CLI::CheckedTransformer(weights));
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw Error("cannot write " + path);
    }
    f << text;
    if (!f) {
        throw Error("write failed for " + path);
    }
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Salt-and-pepper noise injection, median/CWM/MDB restoration and metrics",
                 "impulse"};
    app.require_subcommand(1);

    FilterOptions options;

    // corrupt
    std::string corrupt_in, corrupt_out, corrupt_mask;
    double corrupt_percent = 0.0;
    double salt_ratio = 0.5;
    std::uint64_t seed = 42;
    auto* corrupt = app.add_subcommand("corrupt", "Inject salt-and-pepper noise");
    corrupt->add_option("--in", corrupt_in, "Clean PGM")->required();
    corrupt->add_option("--out", corrupt_out, "Noisy PGM to write")->required();
    corrupt->add_option("--mask", corrupt_mask, "Mask PGM to write (255 = corrupted)")->required();
    corrupt->add_option("--noise", corrupt_percent, "Impulse density in percent")
        ->required()
        ->check(CLI::Range(0.0, 100.0));
    corrupt->add_option("--salt-ratio", salt_ratio, "Fraction of impulses set to 255")
        ->check(CLI::Range(0.0, 1.0));
    corrupt->add_option("--seed", seed, "Noise seed");

    // filter
    std::string filter_in, filter_out, filter_name;
    int passes = 1;
    auto* filter = app.add_subcommand("filter", "Restore a noisy PGM");
    filter->add_option("--in", filter_in, "Noisy PGM")->required();
    filter->add_option("--out", filter_out, "Restored PGM to write")->required();
    filter->add_option("--filter", filter_name, "median, cwm:K or mdb")->required();
    filter->add_option("--passes", passes, "Number of times to apply the filter")
        ->check(CLI::PositiveNumber);
    add_filter_options(filter, options);

    // metrics
    std::string m_original, m_noisy, m_restored, m_mask, m_label = "restored";
    double m_percent = -1.0;
    auto* metrics = app.add_subcommand("metrics", "Score one restoration as a CSV row");
    metrics->add_option("--original", m_original, "Clean PGM")->required();
    metrics->add_option("--noisy", m_noisy, "Noisy PGM")->required();
    metrics->add_option("--restored", m_restored, "Restored PGM")->required();
    metrics->add_option("--mask", m_mask, "Mask PGM written by corrupt")->required();
    metrics->add_option("--filter-name", m_label, "Label for the filter column");
    metrics->add_option("--noise-percent", m_percent,
                        "Label for the noise column (default: measured from the mask)");

    // bench
    std::string b_image, b_out, b_plot, b_meta;
    std::vector<std::string> b_filters{"cwm:1", "cwm:2", "mdb"};
    std::vector<double> b_levels{5, 10, 15, 20, 25, 30};
    std::uint32_t b_trials = 1;
    auto* bench = app.add_subcommand("bench", "Sweep noise levels and filters, emit CSV");
    bench->add_option("--image", b_image, "Clean PGM")->required();
    bench->add_option("--filters", b_filters, "Comma-separated filters")->delimiter(',');
    bench->add_option("--noise-levels", b_levels, "Comma-separated percents")->delimiter(',');
    bench->add_option("--seed", seed, "Base seed");
    bench->add_option("--salt-ratio", salt_ratio, "Fraction of impulses set to 255")
        ->check(CLI::Range(0.0, 1.0));
    bench->add_option("--trials", b_trials, "Seeds averaged per cell")->check(CLI::PositiveNumber);
    bench->add_option("--out", b_out, "CSV file (default: standard output)");
    bench->add_option("--plot-data", b_plot, "Directory for Fig. 1/2 series");
    bench->add_option("--meta", b_meta, "JSON file for run metadata");
    add_filter_options(bench, options);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "impulse: " << e.what() << "\n";
        const auto used = app.get_subcommands();
        err << (used.empty() ? app.help() : used.front()->help());
        return 2;
    }

    try {
        if (*corrupt) {
            const GrayImage clean = read_pgm_file(corrupt_in);
            const Corruption c =
                inject_salt_pepper(clean, NoiseSpec{corrupt_percent / 100.0, salt_ratio, seed});
            write_pgm_file(c.image, corrupt_out);
            write_pgm_file(mask_to_image(c.mask), corrupt_mask);
        } else if (*filter) {
            const GrayImage noisy = read_pgm_file(filter_in);
            write_pgm_file(apply_filter(noisy, FilterSpec::parse(filter_name), options, passes),
                           filter_out);
        } else if (*metrics) {
            const GrayImage original = read_pgm_file(m_original);
            const GrayImage noisy = read_pgm_file(m_noisy);
            const GrayImage restored = read_pgm_file(m_restored);
            const NoiseMask mask = mask_from_image(read_pgm_file(m_mask));
            const double percent =
                m_percent >= 0.0 ? m_percent
                                 : 100.0 * static_cast<double>(corrupted_count(mask)) /
                                       static_cast<double>(mask.size());
            BenchReport report;
            report.rows.push_back(
                evaluate(original, noisy, restored, mask, RowLabels{percent, m_label}));
            out << emit_csv(report);
        } else if (*bench) {
            ExperimentSpec spec;
            spec.image = read_pgm_file(b_image);
            spec.image_label = b_image;
            spec.noise_levels = b_levels;
            spec.filters.clear();
            for (const std::string& f : b_filters) {
                spec.filters.push_back(FilterSpec::parse(f));
            }
            spec.options = options;
            spec.salt_ratio = salt_ratio;
            spec.seed = seed;
            spec.trials = b_trials;
            const BenchReport report = run_experiment(spec);
            const std::string csv = emit_csv(report);
            if (b_out.empty()) {
                out << csv;
            } else {
                write_text(b_out, csv);
            }
            if (!b_plot.empty()) {
                std::filesystem::create_directories(b_plot);
                for (const PlotSeries& s : plot_series(report)) {
                    write_text((std::filesystem::path(b_plot) / s.file_name).string(), s.csv);
                }
            }
            if (!b_meta.empty()) {
                write_text(b_meta, metadata_json(report.metadata));
            }
        }
    } catch (const std::exception& e) {
        err << "impulse: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace impulse
