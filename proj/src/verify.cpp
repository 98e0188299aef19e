#include "tradekit/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tradekit {

std::string to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::VolumeMismatch: return "volume-mismatch";
    case FailureKind::BlockSize: return "block-size";
    case FailureKind::SharedBlock: return "shared-block";
    case FailureKind::FoundationMismatch: return "foundation-mismatch";
    case FailureKind::CoverageMismatch: return "coverage-mismatch";
    case FailureKind::SteinerViolation: return "steiner-violation";
    case FailureKind::SolelyBalancedViolation: return "solely-balanced-violation";
  }
  return "?";
}

bool VerificationReport::has(FailureKind kind) const {
  return std::any_of(failures.begin(), failures.end(),
                     [kind](const Failure& f) { return f.kind == kind; });
}

VerificationReport verify(const TradeFamily& family) {
  VerificationReport report;
  const auto& cols = family.collections();
  const int mu = family.mu();
  const int m = family.volume();

  for (int i = 0; i < mu; ++i) {
    if (cols[i].volume() != m) {
      report.failures.push_back(
          {FailureKind::VolumeMismatch,
           {},
           {},
           "collection " + std::to_string(i + 1) + " has " +
               std::to_string(cols[i].volume()) + " blocks, expected " +
               std::to_string(m)});
    }
  }

  for (int i = 0; i < mu; ++i) {
    for (const Block& b : cols[i].blocks()) {
      if (b.size() != family.k()) {
        report.failures.push_back(
            {FailureKind::BlockSize, b.elems(),
             {i + 1},
             "block of size " + std::to_string(b.size()) + " in collection " +
                 std::to_string(i + 1)});
      }
    }
  }

  // Cross-collection disjointness: a block value appearing in two distinct
  // collections is shared, regardless of multiplicities.
  {
    std::map<Block, std::vector<int>> owners;
    for (int i = 0; i < mu; ++i) {
      std::set<Block> seen;
      for (const Block& b : cols[i].blocks()) {
        if (!seen.insert(b).second) report.repeated_blocks = true;
      }
      for (const Block& b : seen) owners[b].push_back(i);
    }
    for (const auto& [block, where] : owners) {
      if (where.size() > 1) {
        std::vector<int> counts(mu, 0);
        for (int i = 0; i < mu; ++i)
          counts[i] = static_cast<int>(std::count(cols[i].blocks().begin(),
                                                  cols[i].blocks().end(), block));
        report.failures.push_back({FailureKind::SharedBlock, block.elems(),
                                   counts, "block occurs in multiple collections"});
      }
    }
  }

  // Collections of a t >= 1 trade must cover the same element set (forced by
  // coverage equality, reported with a sharper witness here). At t = 0 the
  // requirement is dropped: stars and derived trades of t = 1 families are
  // legitimate t = 0 trades with differing supports.
  if (family.t() >= 1) {
    std::vector<std::set<int>> founds(mu);
    for (int i = 0; i < mu; ++i) founds[i] = cols[i].element_set();
    for (int i = 1; i < mu; ++i) {
      if (founds[i] != founds[0]) {
        std::vector<int> diff;
        std::set_symmetric_difference(founds[0].begin(), founds[0].end(),
                                      founds[i].begin(), founds[i].end(),
                                      std::back_inserter(diff));
        report.failures.push_back(
            {FailureKind::FoundationMismatch, diff,
             {1, i + 1},
             "collections 1 and " + std::to_string(i + 1) +
                 " cover different element sets"});
      }
    }
  }

  // Coverage equality at the declared t. Tolerate undersized blocks (already
  // reported) by skipping them rather than aborting.
  const int t = family.t();
  std::map<std::vector<int>, std::vector<int>> counts;
  for (int i = 0; i < mu; ++i) {
    for (const Block& b : cols[i].blocks()) {
      if (b.size() < t) continue;
      detail::for_each_subset(b.elems(), t, [&](const std::vector<int>& s) {
        auto& row = counts[s];
        if (row.empty()) row.assign(mu, 0);
        ++row[i];
      });
    }
  }
  for (const auto& [subset, row] : counts) {
    if (std::adjacent_find(row.begin(), row.end(), std::not_equal_to<>()) !=
        row.end()) {
      report.failures.push_back({FailureKind::CoverageMismatch, subset, row,
                                 "t-subset covered unequally"});
    }
  }

  report.valid = report.failures.empty();

  report.steiner = true;
  for (const auto& [subset, row] : counts) {
    for (int i = 0; i < mu; ++i) {
      if (row[i] > 1) {
        report.steiner = false;
        report.failures.push_back({FailureKind::SteinerViolation, subset, row,
                                   "t-subset repeated within collection " +
                                       std::to_string(i + 1)});
        break;
      }
    }
  }

  if (report.steiner && t + 1 <= family.k()) {
    std::map<std::vector<int>, std::vector<int>> up;
    for (int i = 0; i < mu; ++i) {
      for (const Block& b : cols[i].blocks()) {
        if (b.size() < t + 1) continue;
        detail::for_each_subset(b.elems(), t + 1, [&](const std::vector<int>& s) {
          auto& row = up[s];
          if (row.empty()) row.assign(mu, 0);
          ++row[i];
        });
      }
    }
    report.solely_balanced = true;
    for (const auto& [subset, row] : up) {
      int spread = 0;
      for (int c : row)
        if (c > 0) ++spread;
      if (spread > 1) {
        report.solely_balanced = false;
        report.failures.push_back({FailureKind::SolelyBalancedViolation, subset,
                                   row, "(t+1)-subset shared between collections"});
      }
    }
  }

  return report;
}

}  // namespace tradekit
