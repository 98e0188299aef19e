#include "tradekit/family.hpp"

#include <algorithm>

namespace tradekit {

Block::Block(std::vector<int> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  for (size_t i = 0; i + 1 < elems_.size(); ++i) {
    if (elems_[i] == elems_[i + 1])
      throw Error("repeated element " + std::to_string(elems_[i]) + " in block");
  }
  for (int e : elems_) {
    if (e < 0) throw Error("negative element id in block");
  }
}

bool Block::contains(int x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

bool Block::contains_all(const std::vector<int>& subset) const {
  return std::all_of(subset.begin(), subset.end(),
                     [this](int x) { return contains(x); });
}

Collection::Collection(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  std::sort(blocks_.begin(), blocks_.end());
}

std::set<int> Collection::element_set() const {
  std::set<int> out;
  for (const Block& b : blocks_) out.insert(b.elems().begin(), b.elems().end());
  return out;
}

TradeFamily::TradeFamily(int k, int t, std::vector<Collection> collections,
                         std::map<int, std::string> labels)
    : k_(k), t_(t), collections_(std::move(collections)), labels_(std::move(labels)) {
  if (k_ < 1) throw Error("block size k must be positive");
  if (t_ < 0 || t_ >= k_) throw Error("parameter t must satisfy 0 <= t < k");
  if (collections_.size() < 2) throw Error("a trade needs at least two collections");
}

int TradeFamily::volume() const {
  return collections_.empty() ? 0 : collections_.front().volume();
}

std::string TradeFamily::label_of(int id) const {
  auto it = labels_.find(id);
  return it != labels_.end() ? it->second : std::to_string(id);
}

TradeFamily make_family(int k, int t,
                        const std::vector<std::vector<std::vector<int>>>& cols,
                        std::map<int, std::string> labels) {
  std::vector<Collection> collections;
  collections.reserve(cols.size());
  for (const auto& col : cols) {
    std::vector<Block> blocks;
    blocks.reserve(col.size());
    for (const auto& b : col) blocks.emplace_back(b);
    collections.emplace_back(std::move(blocks));
  }
  return TradeFamily(k, t, std::move(collections), std::move(labels));
}

TradeFamily void_family(int mu, int k, int t) {
  return TradeFamily(k, t, std::vector<Collection>(static_cast<size_t>(mu)));
}

std::vector<int> foundation(const TradeFamily& family) {
  std::set<int> all;
  for (const Collection& c : family.collections()) {
    auto s = c.element_set();
    all.insert(s.begin(), s.end());
  }
  return {all.begin(), all.end()};
}

std::map<std::vector<int>, int> coverage(const Collection& collection, int t) {
  if (t < 0) throw Error("coverage: t must be non-negative");
  std::map<std::vector<int>, int> counts;
  for (const Block& b : collection.blocks()) {
    if (t > b.size())
      throw Error("coverage: t exceeds block size");
    detail::for_each_subset(b.elems(), t,
                            [&](const std::vector<int>& s) { ++counts[s]; });
  }
  return counts;
}

int replication(const TradeFamily& family, int x) {
  if (family.collections().empty()) return 0;
  int r = 0;
  for (const Block& b : family.collections().front().blocks())
    if (b.contains(x)) ++r;
  return r;
}

int pair_frequency(const TradeFamily& family, int x, int y) {
  if (x == y) throw Error("pair_frequency: elements must be distinct");
  if (family.collections().empty()) return 0;
  int n = 0;
  for (const Block& b : family.collections().front().blocks())
    if (b.contains(x) && b.contains(y)) ++n;
  return n;
}

StarSplit star_split(const TradeFamily& family, int x) {
  auto found = foundation(family);
  if (!std::binary_search(found.begin(), found.end(), x))
    throw Error("star_split: element " + std::to_string(x) + " not in foundation");
  if (family.t() < 1) throw Error("star_split: requires t >= 1");
  std::vector<Collection> stars, rests;
  for (const Collection& c : family.collections()) {
    std::vector<Block> in, out;
    for (const Block& b : c.blocks())
      (b.contains(x) ? in : out).push_back(b);
    stars.emplace_back(std::move(in));
    rests.emplace_back(std::move(out));
  }
  return {TradeFamily(family.k(), family.t() - 1, std::move(stars), family.labels()),
          TradeFamily(family.k(), family.t() - 1, std::move(rests), family.labels())};
}

TradeFamily derived(const TradeFamily& family, int x) {
  if (family.k() < 2) throw Error("derived: requires k >= 2");
  if (family.t() < 1) throw Error("derived: requires t >= 1");
  StarSplit split = star_split(family, x);
  std::vector<Collection> cols;
  for (const Collection& c : split.star.collections()) {
    std::vector<Block> blocks;
    for (const Block& b : c.blocks()) {
      std::vector<int> e;
      for (int v : b.elems())
        if (v != x) e.push_back(v);
      blocks.emplace_back(std::move(e));
    }
    cols.emplace_back(std::move(blocks));
  }
  auto labels = family.labels();
  labels.erase(x);
  return TradeFamily(family.k() - 1, family.t() - 1, std::move(cols), std::move(labels));
}

}  // namespace tradekit
