#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "vg3d/relations.hpp"
#include "vg3d/scene.hpp"

namespace vg3d {

// A free-form noun phrase plus its normalized token form (lowercased,
// punctuation stripped).
struct Query {
  std::string raw;
  std::vector<std::string> tokens;

  // Throws GroundingError when nothing remains after normalization.
  static Query parse(const std::string& raw);
};

// Splits on whitespace after lowercasing and dropping punctuation.
std::vector<std::string> normalize_tokens(const std::string& text);

// Pluggable 2D/multimodal verification: deterministic score in [0,1] per
// (query, object) pair.
class Verifier {
public:
  virtual ~Verifier() = default;
  virtual double score(const Query& query, const ObjectInstance& object) const = 0;
};

struct LocConfig {
  double accept_threshold = 0.5;

  void validate() const;  // throws ConfigError when outside [0,1]
};

struct LocResult {
  ObjectSet set;
  bool open_vocabulary = false;  // no closed-set label matched the query
  bool fallback_used = false;    // verify kept only the argmax candidate
};

// Objects whose label occurs (as a token sequence) inside the query tokens;
// only the longest matching labels are kept. When nothing matches, every
// scene object is a candidate (open-vocabulary path) and *open_vocabulary is
// set when provided.
ObjectSet base_label_match(const Query& query, const Scene& scene,
                           bool* open_vocabulary = nullptr);

// Keeps candidates scoring >= cfg.accept_threshold; when none pass, keeps the
// argmax-score candidate (lowest id on ties) and sets *fallback_used. A null
// verifier returns the candidates unchanged.
ObjectSet verify(const ObjectSet& candidates, const Query& query,
                 const Verifier* verifier, const LocConfig& cfg,
                 bool* fallback_used = nullptr);

// The full language-object correlation: label filter then verification.
// Throws GroundingError on an empty scene or empty query.
LocResult loc(const std::string& query_text, const Scene& scene,
              const Verifier* verifier, const LocConfig& cfg);

// Exactly "Is there a " + query + "?".
std::string vqa_question(const std::string& query_text);

// [query_text, base_label] with the duplicate collapsed; query first.
std::vector<std::string> dynamic_vocabulary(const std::string& query_text,
                                            const std::string& base_label);

// Score 1 when the object's label token sequence occurs in the query, else 0.
class LabelExactVerifier : public Verifier {
public:
  double score(const Query& query, const ObjectInstance& object) const override;
};

// Score = |query tokens ∩ attributes| / |distinct non-label query tokens|,
// clamped to [0,1]; 1 when the query has no non-label tokens.
class AttributeKeywordVerifier : public Verifier {
public:
  double score(const Query& query, const ObjectInstance& object) const override;
};

// POSTs {question, image_refs, vocabulary} as JSON to the configured endpoint
// and reads either {"answer":"yes"|"no"} or {"score": x}. Throws
// GroundingError on transport or malformed-response failures.
class ExternalServiceVerifier : public Verifier {
public:
  explicit ExternalServiceVerifier(std::string endpoint);
  double score(const Query& query, const ObjectInstance& object) const override;

private:
  std::string endpoint_;
};

}  // namespace vg3d
