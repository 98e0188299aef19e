#include "tradekit/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace tradekit {

TradeFamily relabel(const TradeFamily& family, const std::map<int, int>& mapping) {
  auto image = [&](int x) {
    auto it = mapping.find(x);
    return it != mapping.end() ? it->second : x;
  };
  auto found = foundation(family);
  std::set<int> seen;
  for (int x : found) {
    if (!seen.insert(image(x)).second)
      throw Error("relabel: mapping is not injective on the foundation");
  }
  std::vector<Collection> cols;
  for (const Collection& c : family.collections()) {
    std::vector<Block> blocks;
    for (const Block& b : c.blocks()) {
      std::vector<int> e;
      e.reserve(b.elems().size());
      for (int x : b.elems()) e.push_back(image(x));
      blocks.emplace_back(std::move(e));
    }
    cols.emplace_back(std::move(blocks));
  }
  std::map<int, std::string> labels;
  for (const auto& [id, name] : family.labels()) labels[image(id)] = name;
  return TradeFamily(family.k(), family.t(), std::move(cols), std::move(labels));
}

TradeFamily relabel_offset(const TradeFamily& family, int offset) {
  std::map<int, int> mapping;
  for (int x : foundation(family)) mapping[x] = x + offset;
  return relabel(family, mapping);
}

namespace {

// Orderly minimization: labels are assigned while emitting blocks in output
// order; at every position only blocks realizing the minimal possible image
// are explored, so comparisons against the incumbent are exact prefix
// comparisons and branching is limited to genuine ties.
struct Canonicalizer {
  int mu, k, t, n;
  std::vector<std::vector<std::vector<int>>> cols;  // dense old ids
  std::vector<int> degree;  // total occurrences per element

  std::vector<int> best;
  bool have_best = false;

  // DFS state
  std::vector<int> order;        // collection order being tried
  std::vector<int> new_label;    // old -> new, -1 unassigned
  int next_new = 0;
  std::vector<std::vector<char>> used;  // per collection, block consumed
  std::vector<int> cur;

  explicit Canonicalizer(const TradeFamily& family) {
    mu = family.mu();
    k = family.k();
    t = family.t();
    auto found = foundation(family);
    n = static_cast<int>(found.size());
    std::map<int, int> dense;
    for (int i = 0; i < n; ++i) dense[found[i]] = i;
    for (const Collection& c : family.collections()) {
      std::vector<std::vector<int>> col;
      for (const Block& b : c.blocks()) {
        std::vector<int> e;
        for (int x : b.elems()) e.push_back(dense[x]);
        col.push_back(std::move(e));
      }
      cols.push_back(std::move(col));
    }
    degree.assign(n, 0);
    for (const auto& col : cols)
      for (const auto& b : col)
        for (int e : b) ++degree[e];
  }

  // -1 already strictly below the incumbent, 0 still equal, +1 prune.
  int compare_segment(size_t from, int state) const {
    if (!have_best || state < 0) return -1;
    for (size_t i = from; i < cur.size(); ++i) {
      if (i >= best.size() || cur[i] > best[i]) return 1;
      if (cur[i] < best[i]) return -1;
    }
    return 0;
  }

  // Image of a block under the partial labeling, fresh labels filling in.
  std::vector<int> image_of(const std::vector<int>& block) const {
    std::vector<int> img;
    img.reserve(block.size());
    int fresh = next_new;
    for (int e : block)
      if (new_label[e] < 0) img.push_back(fresh++);
    for (int e : block)
      if (new_label[e] >= 0) img.push_back(new_label[e]);
    std::sort(img.begin(), img.end());
    return img;
  }

  void run() {
    std::vector<int> perm(mu);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      order.assign(perm.begin(), perm.end());
      new_label.assign(n, -1);
      next_new = 0;
      used.assign(mu, {});
      for (int c = 0; c < mu; ++c)
        used[c].assign(cols[c].size(), 0);
      cur.clear();
      cur.push_back(mu);
      cur.push_back(k);
      cur.push_back(t);
      int state = compare_segment(0, 0);
      if (state <= 0) place(0, 0, state);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  void place(int ci, int pos, int state) {
    if (ci == mu) {
      if (state < 0 || !have_best) {
        best = cur;
        have_best = true;
      }
      return;
    }
    const auto& col = cols[order[ci]];
    if (pos == 0) {
      size_t at = cur.size();
      cur.push_back(static_cast<int>(col.size()));
      int s = compare_segment(at, state);
      if (s <= 0) place_block(ci, 0, s);
      cur.pop_back();
      return;
    }
    place_block(ci, pos, state);
  }

  void place_block(int ci, int pos, int state) {
    const auto& col = cols[order[ci]];
    if (pos == static_cast<int>(col.size())) {
      place(ci + 1, 0, state);
      return;
    }

    // Minimal achievable image among unused blocks.
    std::vector<int> min_img;
    std::vector<int> ties;
    for (size_t b = 0; b < col.size(); ++b) {
      if (used[order[ci]][b]) continue;
      std::vector<int> img = image_of(col[b]);
      // length-first to keep ragged families well ordered
      auto less = [](const std::vector<int>& x, const std::vector<int>& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
      };
      if (min_img.empty() || less(img, min_img)) {
        min_img = std::move(img);
        ties.assign(1, static_cast<int>(b));
      } else if (img == min_img) {
        ties.push_back(static_cast<int>(b));
      }
    }

    size_t at = cur.size();
    cur.push_back(static_cast<int>(min_img.size()));
    cur.insert(cur.end(), min_img.begin(), min_img.end());
    int s = compare_segment(at, state);
    if (s <= 0) {
      // Heavily used elements tend to take small labels in the minimum, so
      // explore that distribution first; pruning then cuts at the first
      // divergence from the incumbent.
      auto heavier = [&](int x, int y) {
        return degree[x] != degree[y] ? degree[x] > degree[y] : x < y;
      };
      for (int b : ties) {
        // Fresh labels can be distributed over the unassigned elements of
        // the block in any order; each distribution is a branch.
        std::vector<int> unassigned;
        for (int e : col[b])
          if (new_label[e] < 0) unassigned.push_back(e);
        std::sort(unassigned.begin(), unassigned.end(), heavier);
        used[order[ci]][b] = 1;
        do {
          for (size_t i = 0; i < unassigned.size(); ++i)
            new_label[unassigned[i]] = next_new + static_cast<int>(i);
          next_new += static_cast<int>(unassigned.size());
          place_block(ci, pos + 1, s);
          next_new -= static_cast<int>(unassigned.size());
          for (int e : unassigned) new_label[e] = -1;
        } while (std::next_permutation(unassigned.begin(), unassigned.end(), heavier));
        used[order[ci]][b] = 0;
      }
    }
    cur.resize(at);
  }
};

}  // namespace

std::vector<int> canonical_key(const TradeFamily& family) {
  Canonicalizer cz(family);
  cz.run();
  return cz.best;
}

TradeFamily canonical_form(const TradeFamily& family) {
  std::vector<int> enc = canonical_key(family);
  size_t pos = 0;
  int mu = enc[pos++];
  int k = enc[pos++];
  int t = enc[pos++];
  std::vector<std::vector<std::vector<int>>> cols;
  for (int i = 0; i < mu; ++i) {
    int m = enc[pos++];
    std::vector<std::vector<int>> col;
    for (int j = 0; j < m; ++j) {
      int len = enc[pos++];
      col.emplace_back(enc.begin() + pos, enc.begin() + pos + len);
      pos += len;
    }
    cols.push_back(std::move(col));
  }
  return make_family(k, t, cols);
}

bool isomorphic(const TradeFamily& a, const TradeFamily& b) {
  if (a.mu() != b.mu() || a.k() != b.k() || a.t() != b.t()) return false;
  if (a.volume() != b.volume()) return false;
  if (foundation(a).size() != foundation(b).size()) return false;
  return canonical_key(a) == canonical_key(b);
}

}  // namespace tradekit
