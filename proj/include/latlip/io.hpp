#pragma once

#include "latlip/eigensearch.hpp"
#include "latlip/extension.hpp"
#include "latlip/metrics.hpp"
#include "latlip/types.hpp"

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace latlip::io {

/// Shortest decimal that parses back to the identical double. Used for
/// every number we emit so that reruns produce byte-identical files and
/// import is lossless.
std::string format_double(double v);

// CSV artifacts ('.' decimal separator, LF line endings, header row).

/// Header x1,...,xn,lambda,epsilon; one row per sample.
std::string cloud_csv(const EigenCloud& cloud);
EigenCloud read_cloud_csv(const std::string& text);

/// Header step,mean_epsilon; entry 0 is the state at selection.
std::string history_csv(const EigenCloud& cloud);

/// Header x1..xn,fhat1..fhatn,bound1..boundn over a grid_per_axis^n
/// lattice on the box: ambient point, ambient model value, per-frame-
/// coordinate error bound.
std::string grid_csv(const ExtensionModel& model, const Box& box, int grid_per_axis);

// JSON artifacts.

std::string frame_json(const BasisFrame& frame);
BasisFrame read_frame_json(const std::string& text);

/// {"frame": {...}, "samples": [{"z": [...], "tz": [...]}, ...],
///  "K": [...], "alpha": a}. Import re-verifies the certified inequality.
std::string model_json(const ExtensionModel& model);
ExtensionModel read_model_json(const std::string& text);

std::string report_json(const ErrorReport& report, const ExtensionModel& model,
                        long audit_violations, int audit_grid);
std::string report_csv(const ErrorReport& report, const ExtensionModel& model,
                       long audit_violations, int audit_grid);
std::string cloud_stats_json(const CloudStats& stats);

// File helpers.
void write_file(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

}  // namespace latlip::io
