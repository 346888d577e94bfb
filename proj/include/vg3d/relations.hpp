#pragma once

#include <optional>
#include <vector>

#include "vg3d/geometry.hpp"
#include "vg3d/program.hpp"
#include "vg3d/scene.hpp"

namespace vg3d {

// An ordered subset of one scene's objects (ascending id, no duplicates).
struct ObjectSet {
  const Scene* scene = nullptr;
  std::vector<int> ids;

  bool empty() const { return ids.empty(); }
  std::size_t size() const { return ids.size(); }
  const ObjectInstance& object(std::size_t index) const {
    return *scene->find(ids[index]);
  }

  static ObjectSet all(const Scene& scene);
  static ObjectSet of(const Scene& scene, std::vector<int> ids);

  bool operator==(const ObjectSet& o) const {
    return scene == o.scene && ids == o.ids;
  }
};

// Thresholds at indoor-furniture scale; the relation definitions themselves
// carry no tunable state beyond these.
struct RelationConfig {
  double near_threshold = 1.5;      // meters
  double contact_gap = 0.15;        // meters
  double lr_deadzone = 0.0;         // u-units
  double between_max_offset = 1.0;  // meters

  void validate() const;  // throws ConfigError when any value is negative
};

// Filter ops fall back to the single best-ranked candidate instead of
// returning empty; fallback_used records that for the trace.
struct RelationResult {
  ObjectSet set;
  bool fallback_used = false;
};

// Egocentric camera for view-dependent relations: eye at the room center,
// looking at the centroid of the anchor box centers, up = +z. When the anchor
// centroid coincides with the room center (within 1e-9) the eye is nudged by
// 1e-3 m along -y so the pose stays defined and deterministic.
CameraPose relation_camera(const Scene& scene, const ObjectSet& anchors);

// Signed image coordinate u and depth w of each member's box center under
// relation_camera(scene, anchors).
std::vector<Projection> project_members(const ObjectSet& members,
                                        const CameraPose& camera);

// --- view-independent -------------------------------------------------------

RelationResult closest(const ObjectSet& targets, const ObjectSet& anchors);
RelationResult farthest(const ObjectSet& targets, const ObjectSet& anchors);
RelationResult near(const ObjectSet& targets, const ObjectSet& anchors,
                    const RelationConfig& cfg,
                    std::optional<double> threshold = std::nullopt);
RelationResult far(const ObjectSet& targets, const ObjectSet& anchors,
                   const RelationConfig& cfg,
                   std::optional<double> threshold = std::nullopt);
RelationResult above(const ObjectSet& targets, const ObjectSet& anchors);
RelationResult below(const ObjectSet& targets, const ObjectSet& anchors);
RelationResult on(const ObjectSet& targets, const ObjectSet& anchors,
                  const RelationConfig& cfg);
RelationResult higher(const ObjectSet& targets);
RelationResult lower(const ObjectSet& targets);
// Target nearest the centroid of the anchor centers; callers pass
// ObjectSet::all(scene) when the program omits anchors.
RelationResult middle(const ObjectSet& targets, const ObjectSet& anchors);

// --- view-dependent ---------------------------------------------------------

// With distinct anchors: keep targets left (u < -deadzone) / right
// (u > +deadzone) of the anchor centroid, falling back to the extreme-u
// candidate. With anchors == targets (same id set): leftmost/rightmost
// selector semantics.
RelationResult left(const ObjectSet& targets, const ObjectSet& anchors,
                    const RelationConfig& cfg);
RelationResult right(const ObjectSet& targets, const ObjectSet& anchors,
                     const RelationConfig& cfg);
RelationResult leftmost(const ObjectSet& targets);
RelationResult rightmost(const ObjectSet& targets);

// Depth split against the anchor centroid depth: front keeps w < w_anchor
// (strict), behind keeps w > w_anchor.
RelationResult front(const ObjectSet& targets, const ObjectSet& anchors);
RelationResult behind(const ObjectSet& targets, const ObjectSet& anchors);

// Targets whose projection onto segment AB (A, B = anchor-set centroids)
// lands inside the segment (s in [0,1]) within between_max_offset of it.
// Throws RelationError when A == B within 1e-9.
RelationResult between(const ObjectSet& targets, const ObjectSet& anchors_a,
                       const ObjectSet& anchors_b, const RelationConfig& cfg);

// --- functional ------------------------------------------------------------

enum class ExtremalKind { Min, Max };

// SIZE = box volume, LENGTH/WIDTH = max/min horizontal extent,
// HEIGHT = vertical extent. Ties resolve to the lowest id.
RelationResult extremal(const ObjectSet& targets, ExtremalKind which,
                        BoxProperty property);

}  // namespace vg3d
