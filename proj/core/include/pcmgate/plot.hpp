#pragma once

#include <filesystem>
#include <optional>

#include "pcmgate/pipeline.hpp"

namespace pcmgate {

/// SVG line chart of a calibration sweep with three series against the
/// perturbation strength in percent: (1) the worst-case deviation,
/// (2) the inconsistency 100 - I, (3) the consistency index, all in percent.
/// Polyline points are written in data coordinates inside a y-flipped group,
/// so the file doubles as a readable record of the series. Needs at least
/// two points to draw a line (ContractError otherwise).
void render_plot(const SweepCurve& curve, const std::filesystem::path& path);

/// SVG chart of threshold versus required deviation, with an optional fitted
/// trend line.
void render_threshold_plot(const ThresholdTable& table, const std::optional<TrendFit>& fit,
                           const std::filesystem::path& path);

}  // namespace pcmgate
