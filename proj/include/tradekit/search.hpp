#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tradekit/family.hpp"

namespace tradekit {

// Raised when a search exhausts a domain that a proven result says must
// contain a witness.
class SearchInconsistency : public Error {
public:
  explicit SearchInconsistency(const std::string& what) : Error(what) {}
};

// Largest possible foundation of a mu-way (v,k,2) trade of volume m: each
// collection has k*m incidences and every element has replication >= 2
// (a volume-one star at level t-1 = 1 is impossible), so |found| <=
// floor(k*m/2). Clamped from below by k+2, the minimum feasible foundation
// of any nonvoid trade with t >= 1. The replication argument needs t >= 2;
// do not use this bound for t = 1 domains.
int foundation_bound(int m, int k);

enum class SearchMode { FirstWitness, CountClasses, ExhaustiveNone };
enum class SearchStatus { WitnessFound, ExhaustedNone, ExhaustedClasses, Aborted };

std::string to_string(SearchMode mode);
std::string to_string(SearchStatus status);

struct SearchProblem {
  int mu = 3;
  int k = 3;
  int t = 2;
  int m = 0;
  bool steiner = false;
  // Completeness domain: all families with |foundation| <= max_foundation.
  int max_foundation = 0;
  SearchMode mode = SearchMode::FirstWitness;
  std::uint64_t max_nodes = 0;  // 0 = unlimited
  std::int64_t max_millis = 0;  // 0 = unlimited
  int threads = 0;              // 0 = hardware concurrency
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::Aborted;
  // FirstWitness / ExhaustiveNone: at most one entry (the witness).
  // CountClasses: one canonical representative per isomorphism class.
  std::vector<TradeFamily> witnesses;
  std::uint64_t nodes = 0;
  double wall_ms = 0.0;
  std::string certificate_note;

  std::size_t class_count() const { return witnesses.size(); }
};

// Depth-first construction of T1 over elements introduced in first-use
// order, then each further collection matched against T1's exact t-subset
// coverage multiset with residual pruning. Complete up to isomorphism over
// the declared foundation domain; node/time limits yield Aborted, never an
// exhaustion claim.
SearchOutcome search(const SearchProblem& problem);

// First Steiner (v,k,2) witness of the given volume, trying foundation
// sizes ascending. Exhaustion up to foundation_bound raises
// SearchInconsistency.
TradeFamily mine_base(int volume, int k);

}  // namespace tradekit
