#pragma once

#include <filesystem>
#include <memory>
#include <string>

#include "vg3d/llm.hpp"
#include "vg3d/loc.hpp"
#include "vg3d/relations.hpp"

namespace vg3d {

enum class BackendKind { Canned, Echo, Remote };
enum class VerifierKind { None, LabelExact, AttributeKeyword, External };
enum class GroundingMode { Program, Dialog };

// Everything the CLI needs to wire the pipeline together. Loadable from a
// JSON document; all referenced paths are checked at load time. Remote
// credentials come only from the environment, never from this file.
struct EngineConfig {
  RelationConfig relations;
  LocConfig loc;
  VerifierKind verifier = VerifierKind::AttributeKeyword;
  BackendKind backend = BackendKind::Canned;
  std::filesystem::path fixture_path;  // canned backend responses
  std::string echo_template = "{prompt}";
  std::filesystem::path prompt_path;   // prompt asset (defaults to bundled file)
  int num_examples = 16;
  int votes = 1;
  GroundingMode mode = GroundingMode::Program;

  void validate() const;  // throws ConfigError

  static EngineConfig load_file(const std::filesystem::path& path);

  // Instantiates the configured verifier; None yields nullptr. The external
  // verifier reads VERIFIER_ENDPOINT from the environment.
  std::unique_ptr<Verifier> make_verifier() const;

  // Instantiates the configured LLM backend.
  std::unique_ptr<LlmBackend> make_backend() const;
};

BackendKind backend_kind_from_string(const std::string& name);
VerifierKind verifier_kind_from_string(const std::string& name);

}  // namespace vg3d
