#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "vg3d/scene.hpp"

namespace vg3d {

struct PromptExample {
  std::string description;
  std::string program;
};

// The four-part program-generation prompt: task explanation, function and
// variable definitions, in-context examples, and best-practice tips.
struct PromptSpec {
  std::string task_explanation;
  std::string function_definitions;
  std::vector<PromptExample> examples;
  std::string tips;
  int num_examples = 1;

  void validate() const;  // throws ConfigError

  // Loads the versioned prompt asset (JSON with the four fields above).
  static PromptSpec load_file(const std::filesystem::path& path);
};

// Text-generation backend; may be nondeterministic (the remote one is).
class LlmBackend {
public:
  virtual ~LlmBackend() = default;
  virtual std::string generate(const std::string& prompt) = 0;
};

// Deterministic, byte-for-byte prompt assembly. Throws ConfigError when
// spec.num_examples exceeds the available examples.
std::string build_program_prompt(const PromptSpec& spec,
                                 const std::string& description);

// Task framing + scene narrative + query + answer-format instruction.
std::string build_dialog_prompt(const Scene& scene, const std::string& description);

// First occurrence of "Object <integer>" whose integer is a valid scene id.
// Throws BackendError when no valid id is found (dialog-answer failure).
int parse_dialog_answer(const std::string& raw, const Scene& scene);

struct VoteResult {
  int winner_object_id = -1;
  std::map<int, int> tally;
  int runs = 0;
};

// Plurality winner over per-run object ids; ties resolve to the lowest id.
// Throws Error when run_outputs is empty or its length differs from k.
VoteResult vote(const std::vector<int>& run_outputs, int k);

// Fixture map from exact description to response text. generate() picks the
// known description that occurs latest in the prompt (program prompts end
// with the query description; dialog prompts embed it), longest match on
// position ties. Throws BackendError when no description matches.
class CannedBackend : public LlmBackend {
public:
  explicit CannedBackend(std::map<std::string, std::string> responses);
  static CannedBackend load_file(const std::filesystem::path& path);
  std::string generate(const std::string& prompt) override;

private:
  std::map<std::string, std::string> responses_;
};

// Returns the template with "{prompt}" replaced by the full prompt text;
// for prompt-shape tests.
class ScriptedEchoBackend : public LlmBackend {
public:
  explicit ScriptedEchoBackend(std::string response_template);
  std::string generate(const std::string& prompt) override;

private:
  std::string template_;
};

// POSTs {"model": ..., "prompt": ...} to an HTTP endpoint and returns the
// response's "text" field. Endpoint/credential/model come from the
// environment (LLM_ENDPOINT, LLM_API_KEY, LLM_MODEL).
class RemoteBackend : public LlmBackend {
public:
  RemoteBackend(std::string endpoint, std::string api_key, std::string model);
  static RemoteBackend from_env();  // throws ConfigError when LLM_ENDPOINT is unset
  std::string generate(const std::string& prompt) override;

private:
  std::string endpoint_;
  std::string api_key_;
  std::string model_;
};

}  // namespace vg3d
