#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcmgate/consistency.hpp"
#include "pcmgate/priority.hpp"
#include "pcmgate/search.hpp"
#include "pcmgate/weights.hpp"

namespace pcmgate {

enum class SearchEngine : std::uint8_t { Exhaustive, Ga };

/// One calibration point: worst-case deviation and worst-case (minimum)
/// consistency index at a fixed perturbation strength.
struct SweepPoint {
  double delta = 0.0;          // perturbation fraction
  double delta_max_pct = 0.0;  // largest achievable deviation, percent
  double i_min = 1.0;          // smallest achievable consistency index
};

/// What produced a curve; gating validates this against its own settings.
struct SweepProvenance {
  std::vector<double> weights;
  PerturbationMode mode = PerturbationMode::PlusMinus;
  bool half_matrix = true;
  SearchEngine engine = SearchEngine::Exhaustive;
  std::string consistency_tags;
  std::uint64_t seed = 0;  // meaningful for the GA engine only
};

struct SweepCurve {
  std::vector<SweepPoint> points;  // strictly increasing delta
  SweepProvenance provenance;
};

struct SweepConfig {
  std::vector<double> grid;  // empty means default_delta_grid()
  PerturbationMode mode = PerturbationMode::PlusMinus;
  bool half_matrix = true;
  SearchEngine engine = SearchEngine::Exhaustive;
  GaConfig ga{};
  ConsistencyConfig consistency{};
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  int node_cap = kDefaultNodeCap;
};

/// 0 to 0.5 in steps of 0.025.
std::vector<double> default_delta_grid();

/// Deviation requirements 10% to 50% in steps of 5%.
std::vector<double> default_requirements();

/// Runs the worst-case searches (MaxDeviation and MinConsistency) at every
/// grid delta. With the GA engine, point k uses seeds seed + 2k and
/// seed + 2k + 1 for the two searches, so the whole sweep is reproducible
/// from one seed.
SweepCurve run_sweep(const Weights& w, const SweepConfig& cfg = {});

struct ThresholdRow {
  double delta_pct = 0.0;   // required reliability: permitted deviation, percent
  double threshold = 1.0;   // consistency index that guarantees it
};

/// Consistency threshold as a function of the required reliability, plus a
/// floor used for requirements stricter than the smallest tabulated one.
struct ThresholdTable {
  std::vector<ThresholdRow> rows;  // ascending delta_pct
  double floor_threshold = 1.0;
  std::string consistency_tags;
};

/// For each requested deviation, inverts the deviation curve by piecewise
/// linear interpolation to find the perturbation strength reaching it, and
/// tabulates the index curve's value there. Requirements above the curve's
/// reach clamp to the last point. The floor is the same interpolation taken
/// at half the smallest requirement.
ThresholdTable build_threshold_table(const SweepCurve& curve,
                                     const std::vector<double>& requirements = {});

/// Piecewise-linear lookup: exact at tabulated requirements, the floor below
/// the first row, clamped to the last row above.
double interpolate_threshold(const ThresholdTable& table, double delta_requirement_pct);

struct TrendFit {
  double slope = 0.0;      // index percent per deviation percent
  double intercept = 0.0;  // index percent at zero deviation
  double residual_rms = 0.0;
};

/// Ordinary least squares on (deviation %, index %) points. Throws
/// DomainError when fewer than two distinct x values are present.
TrendFit fit_linear_trend(const std::vector<std::pair<double, double>>& points);

double pearson_correlation(const std::vector<double>& xs, const std::vector<double>& ys);

struct GateVerdict {
  double index = 1.0;       // overall consistency of the submitted matrix
  double threshold = 1.0;   // required for the stated reliability
  bool accept = false;      // index >= threshold
  int weakest_alternative = 0;  // argmin alternative, 0-based; feedback target
  std::optional<PriorityVector> aggregated;  // present only on accept
};

/// The gate: compares the matrix's consistency index against the calibrated
/// threshold for the required reliability. Refuses (ContractError) a table
/// whose consistency provenance differs from the supplied config, so a
/// matrix is never gated with an index other than the calibrating one.
GateVerdict gate_decision(const Pcm& pcm, double delta_requirement_pct,
                          const ThresholdTable& table, const ConsistencyConfig& ccfg = {});

/// Baseline thresholds for side-by-side comparison in calibration reports.
const ThresholdTable& baseline_thresholds();

}  // namespace pcmgate
