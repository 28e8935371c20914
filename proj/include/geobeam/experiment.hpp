#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "geobeam/geometry.hpp"
#include "geobeam/montecarlo.hpp"

namespace geobeam {

enum class ExperimentKind {
  kBeamGain,
  kFig2Sweep,
  kLemma1Validate,
  kTheorem1Check,
  kTheorem3Check,
  kRateBounds,
};

const char* to_string(ExperimentKind kind);

// Full experiment description. Loadable from flat key=value text or from JSON
// with the same dotted schema; every field has a usable default. A run's
// manifest embeds the resolved config and is itself loadable.
struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::kFig2Sweep;
  std::string kernel = "auto";  // auto | scalar | avx2

  SystemConfig system;
  ScalingParams scaling;
  SelectionConfig selection{/*group_size=*/0, /*radius_m=*/kAutoRadius,
                            SelectionPolicy::kNearestN};  // 0 = derive
  McConfig mc;

  // beam_gain.*
  std::vector<double> beam_gain_m_values{64, 128, 256};
  std::vector<double> beam_gain_phi_values{0.0, M_PI / 8.0, M_PI / 4.0};
  int beam_gain_r_points = 400;
  double beam_gain_r_max_m = 0.0;  // 0 = auto (past the widest first null)

  // sweep.*
  std::vector<double> sweep_t_values{0.0, 0.5, 1.0};
  std::vector<double> sweep_q_values{1.1, 1.3, 1.5, 1.7, 1.9, 2.1, 2.3, 2.5,
                                     2.7, 2.9};
  bool sweep_both_policies = true;

  // lemma1.*
  int lemma1_group_size = 5;
  double lemma1_expected_points = 50.0;
  std::uint64_t lemma1_draws = 10'000;

  // theorem1.* / theorem3.* / rate_bounds.*
  std::vector<double> theorem1_m_values{1024, 4096, 16384};
  std::vector<double> theorem3_m_values{1024};
  int theorem3_beam_n = 1;
  int theorem3_beam_m = 0;
  std::vector<double> rate_bounds_m_values{2048, 4096, 8192, 16384};

  static ExperimentConfig load_file(const std::filesystem::path& path);
  static ExperimentConfig from_flat(const std::map<std::string, std::string>& kv);

  void apply(const std::string& key, const std::string& value);
  void validate() const;  // fail-fast before any computation
  std::vector<std::string> warnings() const;

  // The resolved flat view that goes into the manifest.
  std::map<std::string, std::string> flatten() const;
};

struct RunResult {
  std::vector<std::filesystem::path> outputs;  // CSV files
  std::filesystem::path manifest;
};

// Executes the experiment, writing <experiment>.csv and manifest.json under
// out_dir (created if missing). Nothing is written outside out_dir.
RunResult run_experiment(const ExperimentConfig& cfg,
                         const std::filesystem::path& out_dir);

// Generates a standalone gnuplot script next to the CSV (or at out_path).
// Knows the fig2_sweep and beam_gain schemas; anything else is an error.
// An empty CSV is an error and no file is written.
std::filesystem::path emit_plot_script(const std::filesystem::path& csv_path,
                                       const std::filesystem::path& out_path = {});

std::string format_double(double v);  // round-trip exact, %.17g

}  // namespace geobeam
