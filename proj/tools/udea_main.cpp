// udea: efficiency scores and minimum uncertainty to efficiency for DEA data.
//
//   udea <mode> --data <csv> [--sigma S] [--nu V] [--step T] [--eps E]
//        [--scale var=factor ...] [--preset radiotherapy] [--out path]
//        [--jobs K] [--format csv|text]
//
// Exit codes: 0 success, 2 data error, 3 dataset too large for exact mode.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>

#include "udea/csv_io.hpp"
#include "udea/report.hpp"

namespace {

constexpr int kExitDataError = 2;
constexpr int kExitSizeLimit = 3;

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw udea::DataError("cannot write '" + path.string() + "'");
  out << text;
}

std::filesystem::path default_plot_path(const std::filesystem::path& out) {
  auto p = out;
  p.replace_filename(out.stem().string() + "_plot.csv");
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Efficiency and minimum uncertainty to efficiency for DEA data under box uncertainty"};
  app.set_version_flag("--version", "udea 1.0.0");

  std::string mode_text;
  std::string data_path;
  std::vector<std::string> scale_specs;
  std::string preset;
  std::string out_path;
  std::string plot_path;
  std::string format_text = "csv";
  std::string nu_text;
  udea::report::RunConfig config;

  app.add_option("mode", mode_text, "nominal | robust | sweep | exact | iterative")
      ->required()
      ->check(CLI::IsMember({"nominal", "robust", "sweep", "exact", "iterative"}));
  app.add_option("--data", data_path, "Dataset CSV (dmu, in:*, out:*, env:* columns)")->required();
  app.add_option("--sigma", config.sigma, "Box half-width for robust mode")->check(CLI::NonNegativeNumber);
  app.add_option("--nu", nu_text, "Uncertainty cap (number or 'inf'; default 3.6)");
  app.add_option("--step", config.step, "Grid step for iterative and sweep modes (default 0.01)")
      ->check(CLI::PositiveNumber);
  app.add_option("--eps", config.floor, "Floor for perturbed inputs (default 1e-9)")->check(CLI::NonNegativeNumber);
  app.add_option("--scale", scale_specs, "Scale a variable before solving, as name=factor (repeatable)");
  app.add_option("--preset", preset, "Named scaling preset")->check(CLI::IsMember({"radiotherapy"}));
  app.add_option("--grid", config.grid, "Comma-separated sigma values for sweep mode")->delimiter(',');
  app.add_option("--dmu", config.dmus, "Only report these DMUs (repeatable)");
  app.add_option("--out", out_path, "Report path (default: stdout)");
  app.add_option("--plot", plot_path, "Plot-data CSV path (default: <out>_plot.csv when --out is given)");
  app.add_option("--jobs", config.jobs, "Worker threads (default: all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--format", format_text, "csv | text")->check(CLI::IsMember({"csv", "text"}));
  app.add_flag("--full-precision", config.full_precision, "Print numbers with 17 significant digits");
  app.add_flag("--refine", config.refine, "Bisect the iterative bracket down to 1e-6");
  app.add_option("--max-dimension", config.limits.max_dimension, "Exact mode: largest N + M");
  app.add_option("--max-dmus", config.limits.max_dmus, "Exact mode: largest DMU count");

  CLI11_PARSE(app, argc, argv);

  try {
    config.mode = udea::report::parse_mode(mode_text);
    config.format = format_text == "text" ? udea::report::Format::text : udea::report::Format::csv;
    config.radiotherapy_preset = preset == "radiotherapy";
    if (!nu_text.empty()) {
      config.cap = nu_text == "inf" ? std::numeric_limits<double>::infinity() : std::stod(nu_text);
    }
    for (const auto& spec : scale_specs) {
      const auto eq = spec.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("--scale expects name=factor, got '" + spec + "'");
      config.scale.emplace_back(spec.substr(0, eq), std::stod(spec.substr(eq + 1)));
    }

    const auto raw = udea::io::read_dataset_csv(data_path);
    const auto ds = udea::report::prepare_dataset(config, raw);
    const auto result = udea::report::run(config, ds);

    const auto text = udea::report::render(result.main, config.format);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      write_text(out_path, text);
    }
    if (result.plot) {
      if (plot_path.empty() && !out_path.empty()) plot_path = default_plot_path(out_path).string();
      if (!plot_path.empty()) write_text(plot_path, udea::report::render(*result.plot, udea::report::Format::csv));
    }
  } catch (const udea::SizeLimitExceeded& e) {
    std::cerr << "udea: " << e.what() << '\n';
    return kExitSizeLimit;
  } catch (const udea::DataError& e) {
    std::cerr << "udea: " << e.what() << '\n';
    return kExitDataError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "udea: " << e.what() << '\n';
    return kExitDataError;
  } catch (const std::exception& e) {
    std::cerr << "udea: " << e.what() << '\n';
    return EXIT_FAILURE;
  }
  return EXIT_SUCCESS;
}
