#pragma once

#include <string>
#include <vector>

#include "mms/curve.hpp"
#include "mms/functional.hpp"
#include "mms/gradient.hpp"
#include "mms/measure.hpp"
#include "mms/metric.hpp"
#include "mms/space.hpp"
#include "mms/verify.hpp"

namespace mms::io {

/// File formats (all JSON unless noted):
///   space:    {"dist": [[...]], "weight": [...], "coords": [[...]]?}
///   measure:  {"density": [...], "space": "<path>"?}
///   function: {"values": [...]}
///   curve:    {"times": [...], "densities": [[...]], "lip_cert": x}
///   field:    {"values": [...], "rho": x, "scales": [...], "excluded": [...]}
/// Parse failures raise ParseError; size mismatches raise MismatchError.

SpacePtr load_space(const std::string& path);
void save_space(const MetricSpace& space, const std::string& path);

Measure load_measure(const std::string& path, const SpacePtr& space);
void save_measure(const Measure& m, const std::string& path,
                  const std::string& space_path = "");

PointFunction load_point_function(const std::string& path, const MetricSpace& space);
void save_point_function(const PointFunction& f, const std::string& path);

Curve load_curve(const std::string& path, const SpacePtr& space);
void save_curve(const Curve& curve, const std::string& path);

void save_gradient_field(const GradientField& field, const std::string& path);
/// CSV rows "point,g_est,fd_grad,abs_err".
void save_compare_csv(const CompareReport& report, const std::string& path);

std::string dm_result_json(const DmResult& result, bool include_plan);
/// {"norm": x, "partition": [[...], ...]?}
std::string norm_result_json(const PartitionNorm& result, bool include_partition);
std::string w1_result_json(double value);
std::string curve_verdict_json(const Curve& curve);
std::string report_json(const std::vector<SuiteReport>& reports);

/// Atomic-ish write: the file appears only with its full content.
void write_text(const std::string& path, const std::string& content);

}  // namespace mms::io
