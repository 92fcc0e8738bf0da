#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wiener/classify.hpp"
#include "wiener/graph.hpp"

namespace wiener {

class VerifyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Values of one sweep parameter, e.g. "a=1..50" or "a=2,3,5,6".
struct ParamRange {
  std::string key;
  std::vector<std::int64_t> values;
};

using ParamRanges = std::vector<ParamRange>;

ParamRange parse_range(std::string_view text);

// Parameter keys of a theorem with their default sweeps.
ParamRanges default_ranges(TheoremId id);

enum class Outcome { kAgree, kNoVerdict, kMismatch };
enum class Severity { kError, kPaperDiscrepancy };

std::string_view to_string(Outcome o);
std::string_view to_string(Severity s);
std::optional<Outcome> outcome_from_string(std::string_view text);
std::optional<Severity> severity_from_string(std::string_view text);

struct CollisionWitness {
  Vertex u = 0;
  Vertex v = 0;
  Transmission value = 0;
  friend bool operator==(const CollisionWitness&, const CollisionWitness&) = default;
};

struct PointResult {
  std::string key;  // "a=2,k=3"; the resume key
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::string instance;  // rendered family expression or tree edge list
  Outcome outcome = Outcome::kAgree;
  std::optional<Severity> severity;  // set on mismatches only
  std::optional<Status> claimed;     // unset for pure closed-form checks
  std::optional<bool> oracle_irregular;
  std::vector<CollisionWitness> collisions;
  std::string detail;

  friend bool operator==(const PointResult&, const PointResult&) = default;
};

struct VerificationReport {
  TheoremId theorem = TheoremId::kNone;
  std::size_t points = 0;
  std::size_t agreements = 0;
  std::size_t no_verdict = 0;
  std::vector<PointResult> mismatches;
  std::vector<PointResult> results;  // every point, in sweep order
  std::int64_t elapsed_ms = 0;

  std::size_t errors() const;
  std::size_t discrepancies() const;
  // 0 clean, 1 error-level mismatch, 3 printed-formula discrepancies only.
  int exit_code() const;
};

struct VerifyOptions {
  unsigned jobs = 1;
  // JSON Lines log; existing records with matching keys are reused.
  std::optional<std::filesystem::path> out;
};

// Missing keys fall back to the defaults; unknown keys and values outside a
// theorem's domain throw VerifyError.
VerificationReport verify(TheoremId id, const ParamRanges& ranges, const VerifyOptions& opts = {});

}  // namespace wiener
