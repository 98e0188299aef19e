#pragma once

#include <string>
#include <vector>

#include "tradekit/family.hpp"

namespace tradekit {

enum class FailureKind {
  VolumeMismatch,
  BlockSize,
  SharedBlock,
  FoundationMismatch,
  CoverageMismatch,
  SteinerViolation,
  SolelyBalancedViolation,
};

std::string to_string(FailureKind kind);

struct Failure {
  FailureKind kind;
  std::vector<int> witness;  // offending subset / block, element ids
  std::vector<int> counts;   // per-collection counts for the witness
  std::string note;
};

// Structured pass/fail evidence. valid is true iff no structural failure
// (volume, block size, shared block, foundation, coverage) was recorded;
// steiner and solely-balanced findings are informational.
struct VerificationReport {
  bool valid = false;
  bool steiner = false;
  // Only meaningful when steiner holds; false otherwise.
  bool solely_balanced = false;
  // A collection repeats a block. Allowed (multisets), surfaced for callers.
  bool repeated_blocks = false;
  std::vector<Failure> failures;

  bool has(FailureKind kind) const;
};

// Checks, in order: equal volumes, uniform block size k, pairwise
// collection disjointness, identical foundation per collection, and
// coverage equality for the declared t across all collections. Steiner
// (every t-subset at most once per collection) and t-solely-balanced (no
// (t+1)-subset shared between two collections) are evaluated on top.
VerificationReport verify(const TradeFamily& family);

}  // namespace tradekit
