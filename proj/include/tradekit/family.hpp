#pragma once

#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Data model for mu-way trades: collections of fixed-size blocks over an
// integer ground set, plus the counting primitives everything else is built
// on. All values are immutable after construction.

namespace tradekit {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A k-subset of the ground set, stored sorted ascending.
class Block {
public:
  Block() = default;
  explicit Block(std::vector<int> elems);

  const std::vector<int>& elems() const { return elems_; }
  int size() const { return static_cast<int>(elems_.size()); }
  bool contains(int x) const;
  bool contains_all(const std::vector<int>& subset) const;

  auto operator<=>(const Block&) const = default;

private:
  std::vector<int> elems_;
};

// A multiset of blocks, stored in lexicographic order. Repeated blocks are
// permitted; whether they invalidate a family is verify's business.
class Collection {
public:
  Collection() = default;
  explicit Collection(std::vector<Block> blocks);

  const std::vector<Block>& blocks() const { return blocks_; }
  int volume() const { return static_cast<int>(blocks_.size()); }
  std::set<int> element_set() const;

  auto operator<=>(const Collection&) const = default;

private:
  std::vector<Block> blocks_;
};

// mu collections with declared parameters k and t. The declared t is a
// parameter of the family, not inferred; block-size and volume uniformity
// are verified, not enforced here.
class TradeFamily {
public:
  TradeFamily(int k, int t, std::vector<Collection> collections,
              std::map<int, std::string> labels = {});

  int k() const { return k_; }
  int t() const { return t_; }
  int mu() const { return static_cast<int>(collections_.size()); }
  // Common collection size; collections are checked for equal volumes by
  // verify, this reports the first one's.
  int volume() const;
  const std::vector<Collection>& collections() const { return collections_; }
  const std::map<int, std::string>& labels() const { return labels_; }

  std::string label_of(int id) const;

  bool operator==(const TradeFamily&) const = default;

private:
  int k_ = 0;
  int t_ = 0;
  std::vector<Collection> collections_;
  std::map<int, std::string> labels_;
};

// Convenience builder from raw nested vectors.
TradeFamily make_family(int k, int t,
                        const std::vector<std::vector<std::vector<int>>>& cols,
                        std::map<int, std::string> labels = {});

// The empty trade with the given parameters.
TradeFamily void_family(int mu, int k, int t);

// Union of all elements over all collections, sorted ascending.
std::vector<int> foundation(const TradeFamily& family);

// For every t-subset of the collection's elements, the number of blocks
// (with multiplicity) containing it; subsets with count 0 are omitted.
std::map<std::vector<int>, int> coverage(const Collection& collection, int t);

// r_x: number of blocks of collection 1 containing x (0 if absent).
int replication(const TradeFamily& family, int x);

// lambda_xy: number of blocks of collection 1 containing both x and y.
int pair_frequency(const TradeFamily& family, int x, int y);

// Split at an element: blocks containing x (the star T_x) and the remaining
// blocks, both with declared parameter t-1.
struct StarSplit {
  TradeFamily star;
  TradeFamily rest;
};
StarSplit star_split(const TradeFamily& family, int x);

// Star with x deleted from every block: parameters (k-1, t-1).
TradeFamily derived(const TradeFamily& family, int x);

namespace detail {
// Visit all t-element subsets of a sorted element list.
template <typename F>
void for_each_subset(const std::vector<int>& elems, int t, F&& fn) {
  const int n = static_cast<int>(elems.size());
  if (t < 0 || t > n) return;
  std::vector<int> idx(t);
  for (int i = 0; i < t; ++i) idx[i] = i;
  std::vector<int> subset(t);
  while (true) {
    for (int i = 0; i < t; ++i) subset[i] = elems[idx[i]];
    fn(subset);
    int i = t - 1;
    while (i >= 0 && idx[i] == n - t + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}
}  // namespace detail

}  // namespace tradekit
