#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vg3d/loc.hpp"
#include "vg3d/program.hpp"
#include "vg3d/relations.hpp"
#include "vg3d/scene.hpp"

namespace vg3d {

// Error taxonomy stages for failed groundings.
enum class FailureStage { ProgramGeneration, Grounding, Relation, EmptyResult };

const char* failure_stage_name(FailureStage stage);

struct TraceStep {
  std::string var;
  std::string op;
  std::vector<std::string> args;  // rendered in canonical arg syntax
  std::vector<int> result_ids;
  std::optional<double> result_number;
  bool fallback_used = false;
  std::string note;  // e.g. "open-vocabulary", "synonym FACING"
};

// Full record of one program execution. On success the predicted object is
// target_id (lowest id of the final set, ambiguous flagged when that set had
// more than one member). Failures record the stage at the aborting step.
struct Trace {
  std::string query;
  std::string program_text;
  std::vector<TraceStep> steps;
  bool success = false;
  std::optional<int> target_id;
  std::optional<Aabb> target_box;
  bool ambiguous = false;
  std::optional<FailureStage> failure_stage;
  std::string failure_message;

  nlohmann::json to_json() const;
};

struct ExecOptions {
  RelationConfig relations;
  LocConfig loc;
  const Verifier* verifier = nullptr;
};

// Interprets the program over the scene. Statements run in order; LOC
// dispatches to the grounder, relations to the relation engine, MIN/MAX to
// the extremal selector. Errors never propagate past this boundary; they are
// recorded as the trace outcome instead.
Trace execute(const Program& program, const Scene& scene,
              const ExecOptions& options = {});

// Convenience for pipeline stages that fail before execution starts
// (e.g. program generation).
Trace failure_trace(const std::string& query, FailureStage stage,
                    const std::string& message);

// Box of the predicted object. Throws Error when the trace is a failure.
Aabb predicted_box(const Trace& trace);

}  // namespace vg3d
