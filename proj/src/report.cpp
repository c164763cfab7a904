#include "udea/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "udea/dea.hpp"
#include "udea/udea.hpp"

namespace udea::report {

Mode parse_mode(const std::string& text) {
  if (text == "nominal") return Mode::nominal;
  if (text == "robust") return Mode::robust;
  if (text == "sweep") return Mode::sweep;
  if (text == "exact") return Mode::exact;
  if (text == "iterative") return Mode::iterative;
  throw std::invalid_argument("unknown mode '" + text + "'");
}

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::nominal: return "nominal";
    case Mode::robust: return "robust";
    case Mode::sweep: return "sweep";
    case Mode::exact: return "exact";
    case Mode::iterative: return "iterative";
  }
  return "unknown";
}

Dataset prepare_dataset(const RunConfig& config, const Dataset& ds) {
  std::vector<double> factors(ds.dimension(), 1.0);
  if (config.radiotherapy_preset) {
    for (std::size_t n = 0; n < ds.num_inputs(); ++n) factors[n] = kRadiotherapyInputFactor;
    for (std::size_t m = 0; m < ds.num_outputs(); ++m) {
      if (!ds.is_environmental(m)) factors[ds.num_inputs() + m] = kRadiotherapyOutputFactor;
    }
  }
  for (const auto& [name, factor] : config.scale) {
    const auto k = ds.find_variable(name);
    if (!k) throw DataError("--scale names unknown variable '" + name + "'");
    factors[*k] = factor;
  }
  return scale_dataset(ds, factors);
}

namespace {

class Formatter {
 public:
  explicit Formatter(bool full) : full_(full) {}

  [[nodiscard]] std::string operator()(double v) const {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, full_ ? "%.17g" : "%.6f", v);
    return buf;
  }

 private:
  bool full_;
};

std::string join_names(const Dataset& ds, const std::vector<std::size_t>& idx) {
  std::string out;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) out += ';';
    out += ds.dmu_names()[idx[k]];
  }
  return out;
}

const char* flag(bool b) { return b ? "true" : "false"; }

std::vector<std::size_t> selected_dmus(const RunConfig& config, const Dataset& ds) {
  std::vector<std::size_t> picked;
  if (config.dmus.empty()) {
    for (std::size_t i = 0; i < ds.num_dmus(); ++i) picked.push_back(i);
    return picked;
  }
  for (const auto& name : config.dmus) {
    const auto i = ds.find_dmu(name);
    if (!i) throw DataError("unknown DMU '" + name + "'");
    picked.push_back(*i);
  }
  return picked;
}

std::string facet_kind_name(FacetKind kind) {
  switch (kind) {
    case FacetKind::interior: return "interior";
    case FacetKind::input_axis: return "input_axis";
    case FacetKind::output_axis: return "output_axis";
  }
  return "unknown";
}

Table plot_table() { return {{"dmu", "nominal_score", "upsilon_star", "capable"}, {}}; }

}  // namespace

RunReport run(const RunConfig& config, const Dataset& ds) {
  const Formatter num(config.full_precision);
  const Parallelism par{config.jobs};
  const auto picked = selected_dmus(config, ds);
  UncertaintyConfig ucfg;
  ucfg.sigma = config.sigma;
  ucfg.cap = config.cap;
  ucfg.step = config.step;
  ucfg.floor = config.floor;
  if (config.mode != Mode::robust) ucfg.sigma = 0.0;
  ucfg.validate();

  RunReport report;
  Table& t = report.main;
  switch (config.mode) {
    case Mode::nominal: {
      t.columns = {"dmu", "score", "efficient", "peers"};
      for (const auto& name : ds.input_names()) t.columns.push_back("slack_in:" + name);
      for (const auto& name : ds.output_names()) t.columns.push_back("slack_out:" + name);
      std::vector<EfficiencyResult> results(picked.size());
      parallel_for(picked.size(), par, [&](std::size_t k) { results[k] = solve_nominal(ds, picked[k]); });
      for (const auto& r : results) {
        std::vector<std::string> row{ds.dmu_names()[r.dmu], num(r.score), flag(r.efficient), join_names(ds, r.peers)};
        for (double s : r.input_slack) row.push_back(num(s));
        for (double s : r.output_slack) row.push_back(num(s));
        t.rows.push_back(std::move(row));
      }
      break;
    }
    case Mode::robust: {
      t.columns = {"dmu", "sigma", "score", "efficient", "peers"};
      std::vector<EfficiencyResult> results(picked.size());
      parallel_for(picked.size(), par,
                   [&](std::size_t k) { results[k] = robust_efficiency(ds, picked[k], ucfg.sigma, ucfg.floor); });
      for (const auto& r : results) {
        t.rows.push_back(
            {ds.dmu_names()[r.dmu], num(ucfg.sigma), num(r.score), flag(r.efficient), join_names(ds, r.peers)});
      }
      break;
    }
    case Mode::sweep: {
      t.columns = {"dmu", "sigma", "score"};
      const auto grid = config.grid.empty() ? sigma_grid(ucfg.cap, ucfg.step) : config.grid;
      for (double s : grid) {
        if (!(s >= 0.0)) throw std::invalid_argument("sweep grid values must be non-negative");
      }
      std::vector<std::vector<double>> scores(picked.size(), std::vector<double>(grid.size()));
      parallel_for(picked.size(), par, [&](std::size_t k) {
        for (std::size_t g = 0; g < grid.size(); ++g) {
          scores[k][g] = robust_efficiency(ds, picked[k], grid[g], ucfg.floor).score;
        }
      });
      for (std::size_t k = 0; k < picked.size(); ++k) {
        for (std::size_t g = 0; g < grid.size(); ++g) {
          t.rows.push_back({ds.dmu_names()[picked[k]], num(grid[g]), num(scores[k][g])});
        }
      }
      break;
    }
    case Mode::exact: {
      t.columns = {"dmu", "nominal_score", "upsilon_star", "strict", "capable", "gamma", "facet", "facet_kind"};
      const auto facets = enumerate_efficient_facets(ds, config.limits, par);
      std::vector<UdeaOutcome> outcomes(picked.size());
      std::vector<double> nominal(picked.size());
      parallel_for(picked.size(), par, [&](std::size_t k) {
        outcomes[k] = exact_udea(ds, facets, picked[k], ucfg.cap);
        nominal[k] = solve_nominal(ds, picked[k]).score;
      });
      Table plot = plot_table();
      for (std::size_t k = 0; k < picked.size(); ++k) {
        const auto& o = outcomes[k];
        const std::size_t f = *o.facet;
        const bool capable = o.capability == Capability::capable;
        t.rows.push_back({ds.dmu_names()[o.dmu], num(nominal[k]), num(*o.upsilon), flag(o.strict), flag(capable),
                          num(o.gamma), join_names(ds, facets.generators[f]),
                          facet_kind_name(facets.facets[f].kind())});
        plot.rows.push_back({ds.dmu_names()[o.dmu], num(nominal[k]), num(*o.upsilon), flag(capable)});
      }
      report.plot = std::move(plot);
      break;
    }
    case Mode::iterative: {
      t.columns = {"dmu", "nominal_score", "upsilon_star", "bracket_lower", "bracket_upper", "capable", "gamma"};
      IterativeOptions options;
      options.refine = config.refine;
      std::vector<UdeaOutcome> outcomes(picked.size());
      parallel_for(picked.size(), par,
                   [&](std::size_t k) { outcomes[k] = iterative_udea(ds, picked[k], ucfg, options); });
      Table plot = plot_table();
      for (const auto& o : outcomes) {
        const bool capable = o.capability == Capability::capable;
        const std::string upsilon = o.upsilon ? num(*o.upsilon) : "";
        const double nominal = o.trace.front().score;
        t.rows.push_back({ds.dmu_names()[o.dmu], num(nominal), upsilon, o.bracket ? num(o.bracket->lower) : "",
                          o.bracket ? num(o.bracket->upper) : "", flag(capable), num(o.gamma)});
        plot.rows.push_back({ds.dmu_names()[o.dmu], num(nominal), upsilon, flag(capable)});
      }
      report.plot = std::move(plot);
      break;
    }
  }
  return report;
}

std::string render(const Table& table, Format format) {
  std::ostringstream out;
  if (format == Format::csv) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
      out << '\n';
    }
    return out.str();
  }
  // One block per row: the first column as a header line, the rest indented.
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    if (r) out << '\n';
    const auto& row = table.rows[r];
    out << table.columns[0] << ": " << row[0] << '\n';
    for (std::size_t c = 1; c < row.size(); ++c) out << "  " << table.columns[c] << ": " << row[c] << '\n';
  }
  return out.str();
}

}  // namespace udea::report
