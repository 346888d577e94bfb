#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "vg3d/geometry.hpp"

namespace vg3d {

// One labeled instance detected in a room. Labels and attributes are
// lowercase; attributes stand in for appearance cues (e.g. "round", "blue").
struct ObjectInstance {
  int id = 0;
  std::string label;
  Aabb box;
  std::vector<std::string> attributes;  // kept sorted and deduplicated
  std::vector<std::string> image_refs;  // opaque resource ids, order preserved

  bool operator==(const ObjectInstance& o) const {
    return id == o.id && label == o.label && box == o.box &&
           attributes == o.attributes && image_refs == o.image_refs;
  }
};

// A room as an immutable set of labeled boxes, ordered by ascending id.
// The up axis is fixed to z. Safe for concurrent read access.
class Scene {
public:
  // Validates all invariants: nonempty, unique non-negative ids, nonempty
  // lowercase labels, positive finite sizes. Throws SceneError.
  Scene(std::string scene_id, std::vector<ObjectInstance> objects);

  const std::string& scene_id() const { return scene_id_; }
  const std::vector<ObjectInstance>& objects() const { return objects_; }

  // nullptr when the id is not present.
  const ObjectInstance* find(int id) const;

  // Tightest box enclosing all object boxes.
  const Aabb& bounds() const { return bounds_; }

  bool operator==(const Scene& o) const {
    return scene_id_ == o.scene_id_ && objects_ == o.objects_;
  }

private:
  std::string scene_id_;
  std::vector<ObjectInstance> objects_;
  Aabb bounds_;
};

// Scene interchange document (JSON): {scene_id, up_axis:"z",
// objects:[{id,label,center:[x,y,z],size:[w,l,h],attributes?,image_refs?}]}.
Scene load_scene(const std::string& text);
Scene load_scene_file(const std::filesystem::path& path);
std::string save_scene(const Scene& scene);

// Center of the tightest enclosing box of all object boxes.
Vec3 room_center(const Scene& scene);

// One line per object in ascending id order:
//   Object <id> is a <category> located at (x, y, z) with sizes (w, l, h).
// with all values rendered to two decimal places.
std::string narrate(const Scene& scene);

}  // namespace vg3d
