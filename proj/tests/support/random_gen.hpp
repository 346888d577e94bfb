#pragma once

// Deterministic random generators for property tests. Coordinates are
// continuous so exact metric ties (which would make tie-breaking sensitive to
// floating-point noise under rigid motions) occur with probability zero.

#include <random>
#include <string>
#include <vector>

#include "vg3d/program.hpp"
#include "vg3d/scene.hpp"

namespace testgen {

using Rng = std::mt19937_64;

inline vg3d::Scene random_scene(Rng& rng, int min_objects = 1, int max_objects = 10) {
  std::uniform_int_distribution<int> count(min_objects, max_objects);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  std::uniform_real_distribution<double> height(0.0, 3.0);
  std::uniform_real_distribution<double> extent(0.1, 2.0);
  static const std::vector<std::string> labels = {
      "chair", "table", "lamp", "door", "window", "shelf", "sofa", "bed"};
  std::uniform_int_distribution<std::size_t> label_pick(0, labels.size() - 1);

  const int n = count(rng);
  std::vector<vg3d::ObjectInstance> objects;
  objects.reserve(n);
  for (int i = 0; i < n; ++i) {
    vg3d::ObjectInstance o;
    o.id = i;
    o.label = labels[label_pick(rng)];
    o.box.center = {coord(rng), coord(rng), height(rng)};
    o.box.size = {extent(rng), extent(rng), extent(rng)};
    objects.push_back(std::move(o));
  }
  return vg3d::Scene("random", std::move(objects));
}

// Nonempty random subset of the scene's ids, ascending.
inline std::vector<int> random_subset(Rng& rng, const vg3d::Scene& scene) {
  std::bernoulli_distribution keep(0.5);
  std::vector<int> ids;
  for (const auto& o : scene.objects())
    if (keep(rng)) ids.push_back(o.id);
  if (ids.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, scene.objects().size() - 1);
    ids.push_back(scene.objects()[pick(rng)].id);
  }
  return ids;
}

// Random well-formed program AST (single assignment, def-before-use).
inline vg3d::Program random_program(Rng& rng) {
  using vg3d::Arg;
  using vg3d::Op;
  static const std::vector<Op> ops = {
      Op::Loc,     Op::Closest,  Op::Farthest, Op::Near,     Op::Far,
      Op::Above,   Op::Below,    Op::On,       Op::Middle,   Op::Higher,
      Op::Lower,   Op::Left,     Op::Right,    Op::Leftmost, Op::Rightmost,
      Op::Front,   Op::Behind,   Op::Between,  Op::Min,      Op::Max};
  static const std::vector<std::string> phrases = {
      "round cocktail table", "blue and yellow poster", "keyboard", "door",
      "office chair",         "trash can",              "window"};
  static const std::vector<vg3d::BoxProperty> props = {
      vg3d::BoxProperty::Size, vg3d::BoxProperty::Length,
      vg3d::BoxProperty::Width, vg3d::BoxProperty::Height};

  std::uniform_int_distribution<int> stmt_count(1, 6);
  std::uniform_int_distribution<std::size_t> phrase_pick(0, phrases.size() - 1);
  std::uniform_int_distribution<std::size_t> prop_pick(0, props.size() - 1);
  std::uniform_real_distribution<double> threshold(0.1, 5.0);
  std::bernoulli_distribution coin(0.5);

  vg3d::Program p;
  std::vector<std::string> defined;
  const int n = stmt_count(rng);
  for (int i = 0; i < n; ++i) {
    vg3d::Statement st;
    st.output_var = (i == n - 1) ? "TARGET" : "BOX" + std::to_string(i);

    auto pick_var = [&]() -> std::string {
      std::uniform_int_distribution<std::size_t> pick(0, defined.size() - 1);
      return defined[pick(rng)];
    };

    if (defined.empty()) {
      st.op = Op::Loc;
      st.args.push_back(Arg::string(phrases[phrase_pick(rng)]));
    } else {
      std::uniform_int_distribution<std::size_t> op_pick(0, ops.size() - 1);
      st.op = ops[op_pick(rng)];
      switch (st.op) {
        case Op::Loc:
          st.args.push_back(Arg::string(phrases[phrase_pick(rng)]));
          break;
        case Op::Closest:
        case Op::Farthest:
        case Op::Above:
        case Op::Below:
        case Op::On:
          st.args.push_back(Arg::var(pick_var()));
          st.args.push_back(Arg::var(pick_var()));
          break;
        case Op::Near:
        case Op::Far:
          st.args.push_back(Arg::var(pick_var()));
          st.args.push_back(Arg::var(pick_var()));
          if (coin(rng)) st.args.push_back(Arg::num(threshold(rng)));
          break;
        case Op::Middle:
        case Op::Higher:
        case Op::Lower:
        case Op::Left:
        case Op::Right:
        case Op::Front:
        case Op::Behind:
          st.args.push_back(Arg::var(pick_var()));
          if (coin(rng)) st.args.push_back(Arg::var(pick_var()));
          break;
        case Op::Leftmost:
        case Op::Rightmost:
          st.args.push_back(Arg::var(pick_var()));
          break;
        case Op::Between:
          st.args.push_back(Arg::var(pick_var()));
          st.args.push_back(Arg::var(pick_var()));
          st.args.push_back(Arg::var(pick_var()));
          break;
        case Op::Min:
        case Op::Max:
          st.args.push_back(Arg::var(pick_var()));
          st.args.push_back(Arg::prop(props[prop_pick(rng)]));
          break;
      }
    }
    defined.push_back(st.output_var);
    p.statements.push_back(std::move(st));
  }
  return p;
}

}  // namespace testgen
