#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "vg3d/executor.hpp"
#include "vg3d/scene.hpp"

namespace vg3d {

// One benchmark query: ground truth as an object id, a box, or both.
// Recognized tags: easy/hard and view_dep/view_indep (mutually exclusive
// within each pair).
struct GroundingRecord {
  std::string scene_id;
  std::string query;
  std::optional<int> gt_object_id;
  std::optional<Aabb> gt_box;
  std::set<std::string> tags;

  void validate() const;  // throws EvalError
};

struct Dataset {
  std::vector<GroundingRecord> records;
};

Dataset load_dataset(const std::string& text);
Dataset load_dataset_file(const std::filesystem::path& path);

// Per-split accuracy bundle; accuracies are only meaningful when the matching
// denominator is nonzero.
struct SplitStats {
  int n = 0;
  std::map<double, double> acc;  // IoU threshold -> accuracy (over gt_box records)
  int acc_n = 0;
  double top1 = 0.0;  // over gt_object_id records
  int top1_n = 0;
};

struct EvalReport {
  int n = 0;
  std::map<double, double> acc;
  int acc_n = 0;
  double top1 = 0.0;
  int top1_n = 0;
  std::map<std::string, SplitStats> splits;  // unique/multiple/easy/hard/view_dep/view_indep
  std::map<std::string, int> error_breakdown;  // failure stage (or wrong-target) -> count
  nlohmann::json to_json() const;
};

// Fraction of records whose predicted box IoU with the ground-truth box
// strictly exceeds the threshold; failed traces count as incorrect. Every
// record must carry gt_box; threshold must lie in (0,1). Throws EvalError.
double acc_at(const std::vector<GroundingRecord>& records,
              const std::vector<Trace>& traces, double iou_threshold);

// Fraction with predicted id == gt id; every record must carry gt_object_id.
double top1_accuracy(const std::vector<GroundingRecord>& records,
                     const std::vector<Trace>& traces);

enum class SceneSplit { Unique, Multiple };

// Unique iff exactly one scene object shares the ground-truth object's label
// (case-insensitive). Throws EvalError when the gt id is absent from the scene.
SceneSplit unique_multiple_split(const Scene& scene, const GroundingRecord& record);

// Aggregates all metrics, splits, and the error breakdown. Records lacking a
// ground-truth box (or id) contribute only to the applicable metrics. The
// breakdown tallies trace failure stages plus "wrong-target" for traces that
// succeeded on the wrong object; its counts sum to the incorrect-record count.
EvalReport report(const Dataset& dataset,
                  const std::map<std::string, Scene>& scenes,
                  const std::vector<Trace>& traces,
                  const std::vector<double>& iou_thresholds = {0.25, 0.5});

// Per-record result rows for the emitted report document.
nlohmann::json record_rows(const Dataset& dataset,
                           const std::map<std::string, Scene>& scenes,
                           const std::vector<Trace>& traces,
                           const std::vector<double>& iou_thresholds = {0.25, 0.5});

}  // namespace vg3d
