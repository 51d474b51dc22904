#pragma once

#include <filesystem>

#include "pcmgate/pcm.hpp"
#include "pcmgate/pipeline.hpp"

namespace pcmgate {

struct ParsedPcm {
  Pcm pcm;
  bool reciprocal = true;  // reported, not enforced
};

/// Reads n lines of n whitespace-separated positive decimals. The diagonal
/// must be 1 within kDiagonalTol; reciprocity is only reported.
ParsedPcm parse_pcm_file(const std::filesystem::path& path);

void write_pcm_file(const Pcm& pcm, const std::filesystem::path& path);

/// Header `delta,delta_max_pct,i_min`, one row per point, nine decimal
/// places. Reading the file back reproduces the points at that precision.
void write_curve_csv(const SweepCurve& curve, const std::filesystem::path& path);
SweepCurve read_curve_csv(const std::filesystem::path& path);

/// Header `delta_pct,threshold`; the first data row carries `floor` in the
/// delta_pct column. A leading `# consistency = ...` comment records the
/// index provenance the gate checks against.
void write_table_csv(const ThresholdTable& table, const std::filesystem::path& path);
ThresholdTable read_table_csv(const std::filesystem::path& path);

/// One-row CSV: slope, intercept, residual RMS.
void write_trend_csv(const TrendFit& fit, const std::filesystem::path& path);

}  // namespace pcmgate
