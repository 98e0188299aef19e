#include "tradekit/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <set>
#include <thread>

#include "tradekit/canonical.hpp"
#include "tradekit/verify.hpp"

namespace tradekit {

int foundation_bound(int m, int k) {
  if (m < 1) throw Error("foundation_bound: volume must be positive");
  if (k < 2) throw Error("foundation_bound: k must be at least 2");
  return std::max(k * m / 2, k + 2);
}

std::string to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::FirstWitness: return "first-witness";
    case SearchMode::CountClasses: return "count-classes";
    case SearchMode::ExhaustiveNone: return "exhaustive-none";
  }
  return "?";
}

std::string to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::WitnessFound: return "witness-found";
    case SearchStatus::ExhaustedNone: return "exhausted-none";
    case SearchStatus::ExhaustedClasses: return "exhausted-classes";
    case SearchStatus::Aborted: return "aborted";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

struct BlockInfo {
  std::vector<int> elems;
  std::uint32_t mask = 0;
  std::vector<int> subs;  // ids of its t-subsets
  int prefix = -1;        // id of its first t elements
};

struct Tables {
  int n, k, t;
  std::vector<BlockInfo> blocks;
  std::vector<std::vector<int>> subsets;        // id -> elements (lex order)
  std::vector<std::vector<int>> subs_of_elem;   // element -> subset ids
  std::vector<int> pair_id;                     // t == 2: a*n + b -> id
  std::map<std::vector<int>, int> subset_rank;  // generic lookup
  std::vector<std::pair<int, int>> prefix_range;  // subset id -> [lo,hi)

  int sub_id(const std::vector<int>& s) const {
    if (t == 2) return pair_id[s[0] * n + s[1]];
    if (t == 1) return s[0];
    return subset_rank.at(s);
  }
};

Tables build_tables(int n, int k, int t) {
  Tables tab;
  tab.n = n;
  tab.k = k;
  tab.t = t;

  std::vector<int> cur;
  auto gen = [&](auto&& self, int start, int left,
                 std::vector<std::vector<int>>& out) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int e = start; e <= n - left; ++e) {
      cur.push_back(e);
      self(self, e + 1, left - 1, out);
      cur.pop_back();
    }
  };

  gen(gen, 0, t, tab.subsets);
  tab.subs_of_elem.assign(n, {});
  for (size_t id = 0; id < tab.subsets.size(); ++id) {
    tab.subset_rank[tab.subsets[id]] = static_cast<int>(id);
    for (int e : tab.subsets[id])
      tab.subs_of_elem[e].push_back(static_cast<int>(id));
  }
  if (t == 2) {
    tab.pair_id.assign(n * n, -1);
    for (size_t id = 0; id < tab.subsets.size(); ++id) {
      int a = tab.subsets[id][0], b = tab.subsets[id][1];
      tab.pair_id[a * n + b] = static_cast<int>(id);
      tab.pair_id[b * n + a] = static_cast<int>(id);
    }
  }

  std::vector<std::vector<int>> raw;
  gen(gen, 0, k, raw);
  tab.blocks.reserve(raw.size());
  for (auto& e : raw) {
    BlockInfo b;
    b.elems = e;
    for (int x : e) b.mask |= 1u << x;
    detail::for_each_subset(e, t, [&](const std::vector<int>& s) {
      b.subs.push_back(tab.sub_id(s));
    });
    b.prefix = tab.sub_id(std::vector<int>(e.begin(), e.begin() + t));
    tab.blocks.push_back(std::move(b));
  }

  tab.prefix_range.assign(tab.subsets.size(), {0, 0});
  for (int i = 0; i < static_cast<int>(tab.blocks.size());) {
    int j = i;
    while (j < static_cast<int>(tab.blocks.size()) &&
           tab.blocks[j].prefix == tab.blocks[i].prefix)
      ++j;
    tab.prefix_range[tab.blocks[i].prefix] = {i, j};
    i = j;
  }
  return tab;
}

// One independent unit of work: a fixed T1 prefix.
struct Task {
  std::vector<int> prefix;  // block indices
};

struct TaskResult {
  std::uint64_t nodes = 0;
  bool truncated = false;  // hit a node/time limit
  bool skipped = false;    // cancelled by an earlier task's witness
  std::optional<TradeFamily> witness;
  std::map<std::vector<int>, TradeFamily> classes;
};

struct Engine {
  const SearchProblem& prob;
  const Tables& tab;
  const int blocks_total;
  const bool prune_rx2;  // replication >= 2 holds for t >= 2, m >= 2

  // limits
  std::uint64_t node_budget;
  Clock::time_point deadline;
  bool has_deadline;
  const std::atomic<int>* first_hit_task = nullptr;
  int task_index = 0;

  // T1 state
  std::vector<int> t1;
  std::vector<int> counts;  // subset id -> T1 coverage
  std::vector<int> r;       // element -> replication in current collection
  int next_new = 0;
  int deficit = 0;  // sum over used elements of max(0, 2 - r)

  // extension state
  std::vector<std::vector<int>> seqs;  // per collection, block indices
  std::vector<int> forbid;             // block id -> #earlier collections using it
  std::vector<int> res;                // residual demand per subset id
  std::vector<int> d1;                 // element demand
  long res_total = 0;

  TaskResult out;
  bool stop = false;

  Engine(const SearchProblem& p, const Tables& tb)
      : prob(p),
        tab(tb),
        blocks_total(static_cast<int>(tb.blocks.size())),
        prune_rx2(p.t >= 2 && p.m >= 2),
        node_budget(p.max_nodes == 0 ? UINT64_MAX : p.max_nodes),
        has_deadline(p.max_millis > 0) {
    if (has_deadline)
      deadline = Clock::now() + std::chrono::milliseconds(p.max_millis);
    counts.assign(tab.subsets.size(), 0);
    r.assign(tab.n, 0);
    forbid.assign(blocks_total, 0);
    res.assign(tab.subsets.size(), 0);
    d1.assign(tab.n, 0);
  }

  void tick() {
    ++out.nodes;
    if (out.nodes > node_budget) {
      out.truncated = true;
      stop = true;
    }
    if (has_deadline && (out.nodes & 1023) == 0 && Clock::now() > deadline) {
      out.truncated = true;
      stop = true;
    }
    if (first_hit_task &&
        (out.nodes & 255) == 0 &&
        first_hit_task->load(std::memory_order_relaxed) < task_index) {
      out.skipped = true;
      stop = true;
    }
  }

  // ---- T1 generation -------------------------------------------------

  bool first_use_ok(std::uint32_t mask) const {
    std::uint32_t high = mask >> next_new;
    return (high & (high + 1)) == 0;  // new elements form a run at next_new
  }

  bool steiner_ok(const BlockInfo& b) const {
    for (int s : b.subs)
      if (counts[s] != 0) return false;
    return true;
  }

  void place_t1(int idx) {
    const BlockInfo& b = tab.blocks[idx];
    t1.push_back(idx);
    for (int s : b.subs) ++counts[s];
    for (int e : b.elems) {
      if (r[e] == 0) {
        ++next_new;
        ++deficit;
      } else if (r[e] == 1) {
        --deficit;
      }
      ++r[e];
    }
  }

  void unplace_t1() {
    int idx = t1.back();
    t1.pop_back();
    const BlockInfo& b = tab.blocks[idx];
    for (int s : b.subs) --counts[s];
    for (int e : b.elems) {
      --r[e];
      if (r[e] == 0) {
        --next_new;
        --deficit;
      } else if (r[e] == 1) {
        ++deficit;
      }
    }
  }

  // Maximum replication compatible with the Steiner property at t = 2:
  // blocks through x meet pairwise only in x.
  int max_replication() const {
    if (prob.steiner && prob.t == 2) return (tab.n - 1) / (prob.k - 1);
    if (prob.steiner && prob.t == 1) return 1;
    return prob.m;
  }

  bool admissible_t1(const BlockInfo& b) const {
    if (!first_use_ok(b.mask)) return false;
    if (prob.steiner && !steiner_ok(b)) return false;
    const int rmax = max_replication();
    int news = 0, ones = 0;
    for (int e : b.elems) {
      if (r[e] == 0)
        ++news;
      else if (r[e] == 1)
        ++ones;
      if (r[e] + 1 > rmax) return false;
    }
    if (prune_rx2) {
      int left = static_cast<int>(t1.size()) + 1;
      int deficit_after = deficit + news - ones;
      if (deficit_after > prob.k * (prob.m - left)) return false;
    }
    return true;
  }

  void run_t1(int depth, int floor_idx) {
    if (stop) return;
    if (depth == prob.m) {
      complete_t1();
      return;
    }
    for (int idx = floor_idx; idx < blocks_total; ++idx) {
      const BlockInfo& b = tab.blocks[idx];
      if (b.elems[0] > next_new) break;  // later blocks skip an element
      if (!admissible_t1(b)) continue;
      place_t1(idx);
      tick();
      if (!stop) run_t1(depth + 1, prob.steiner ? idx + 1 : idx);
      unplace_t1();
      if (stop) return;
    }
  }

  // Collect T1 prefixes of the given depth instead of searching.
  void collect_tasks(int depth, int floor_idx, int want,
                     std::vector<Task>& tasks) {
    if (depth == want) {
      tasks.push_back({t1});
      return;
    }
    for (int idx = floor_idx; idx < blocks_total; ++idx) {
      const BlockInfo& b = tab.blocks[idx];
      if (b.elems[0] > next_new) break;
      if (!admissible_t1(b)) continue;
      place_t1(idx);
      collect_tasks(depth + 1, prob.steiner ? idx + 1 : idx, want, tasks);
      unplace_t1();
    }
  }

  // ---- extension to collections 2..mu ---------------------------------

  void complete_t1() {
    if (prune_rx2 && deficit != 0) return;
    // Every demanded subset must be coverable by a block outside T1.
    {
      std::vector<char> coverable(tab.subsets.size(), 0);
      for (int idx = 0; idx < blocks_total; ++idx) {
        const BlockInfo& b = tab.blocks[idx];
        if (b.elems[0] >= next_new) break;
        if (forbid[idx]) continue;  // forbid holds T1 marks during extension
        bool ok = true;
        for (int s : b.subs)
          if (counts[s] == 0) {
            ok = false;
            break;
          }
        if (!ok) continue;
        // cannot equal a T1 block
        if (std::binary_search(t1.begin(), t1.end(), idx)) continue;
        for (int s : b.subs) coverable[s] = 1;
      }
      for (size_t s = 0; s < counts.size(); ++s)
        if (counts[s] > 0 && !coverable[s]) return;
    }
    seqs.assign(1, t1);
    for (int idx : t1) ++forbid[idx];
    extend(1);
    for (int idx : t1) --forbid[idx];
    seqs.clear();
  }

  void extend(int col) {
    if (stop) return;
    if (col == prob.mu) {
      hit();
      return;
    }
    // fresh residual = T1 coverage
    std::vector<int> save_res = res, save_d1 = d1;
    long save_total = res_total;

    res = counts;
    res_total = 0;
    std::fill(d1.begin(), d1.end(), 0);
    for (size_t s = 0; s < res.size(); ++s) {
      if (res[s] == 0) continue;
      res_total += res[s];
      for (int e : tab.subsets[s]) d1[e] += res[s];
    }
    std::vector<int> cur;
    cur.reserve(prob.m);
    grow(col, cur, -1, col >= 2);

    res = std::move(save_res);
    d1 = std::move(save_d1);
    res_total = save_total;
  }

  // Append blocks to collection `col` until the residual is exhausted.
  // `tight` means the sequence so far equals the previous collection's
  // prefix, in which case the next block must not fall below it.
  void grow(int col, std::vector<int>& cur, int floor_idx, bool tight) {
    if (stop) return;
    if (res_total == 0) {
      seqs.push_back(cur);
      for (int idx : cur) ++forbid[idx];
      extend(col + 1);
      for (int idx : cur) --forbid[idx];
      seqs.pop_back();
      return;
    }
    // Lexicographically least open subset; the next block must start with it.
    int smin = -1;
    {
      int a = 0;
      while (a < tab.n && d1[a] == 0) ++a;
      if (a == tab.n) return;  // unreachable when res_total > 0
      if (prob.t == 1) {
        smin = a;
      } else if (prob.t == 2) {
        for (int b = a + 1; b < tab.n; ++b) {
          int id = tab.pair_id[a * tab.n + b];
          if (id >= 0 && res[id] > 0) {
            smin = id;
            break;
          }
        }
      } else {
        // generic: smallest open subset in lex order
        for (size_t s = 0; s < res.size(); ++s)
          if (res[s] > 0) {
            smin = static_cast<int>(s);
            break;
          }
      }
    }
    auto [lo, hi] = tab.prefix_range[smin];
    int start = std::max(lo, floor_idx);
    const auto& prev = seqs.back();
    const int pos = static_cast<int>(cur.size());
    if (tight) start = std::max(start, prev[pos]);
    for (int idx = start; idx < hi; ++idx) {
      if (forbid[idx]) continue;
      const BlockInfo& b = tab.blocks[idx];
      bool ok = true;
      for (int s : b.subs)
        if (res[s] == 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      for (int s : b.subs) {
        --res[s];
        for (int e : tab.subsets[s]) --d1[e];
      }
      res_total -= static_cast<long>(b.subs.size());
      cur.push_back(idx);
      tick();
      if (!stop) grow(col, cur, idx, tight && idx == prev[pos]);
      cur.pop_back();
      for (int s : b.subs) {
        ++res[s];
        for (int e : tab.subsets[s]) ++d1[e];
      }
      res_total += static_cast<long>(b.subs.size());
      if (stop) return;
    }
  }

  void hit() {
    TradeFamily family = to_family();
    // Emitted witnesses are always re-checked.
    VerificationReport report = verify(family);
    if (!report.valid || (prob.steiner && !report.steiner))
      throw Error("search: internal error, emitted family fails verification");
    if (prob.mode == SearchMode::CountClasses) {
      auto key = canonical_key(family);
      out.classes.emplace(std::move(key), canonical_form(family));
      return;
    }
    out.witness = std::move(family);
    stop = true;
  }

  TradeFamily to_family() const {
    std::vector<std::vector<std::vector<int>>> cols;
    for (const auto& seq : seqs) {
      std::vector<std::vector<int>> col;
      for (int idx : seq) col.push_back(tab.blocks[idx].elems);
      cols.push_back(std::move(col));
    }
    return make_family(prob.k, prob.t, cols);
  }

  void run_task(const Task& task) {
    for (int idx : task.prefix) {
      place_t1(idx);
      tick();
    }
    if (!stop) {
      int floor_idx = task.prefix.empty()
                          ? 0
                          : (prob.steiner ? task.prefix.back() + 1
                                          : task.prefix.back());
      run_t1(static_cast<int>(task.prefix.size()), floor_idx);
    }
    while (!t1.empty()) unplace_t1();
  }
};

void validate(const SearchProblem& prob) {
  if (prob.mu < 2) throw Error("search: mu must be at least 2");
  if (prob.k < 1 || prob.t < 1 || prob.t >= prob.k)
    throw Error("search: need 1 <= t < k");
  if (prob.m < 0) throw Error("search: negative volume");
  if (prob.max_foundation < prob.k)
    throw Error("search: max_foundation must be at least k");
  if (prob.max_foundation > 28)
    throw Error("search: foundations beyond 28 elements are not supported");
  if (prob.t > 3) throw Error("search: t beyond 3 is not supported");
}

}  // namespace

SearchOutcome search(const SearchProblem& prob) {
  validate(prob);
  auto t0 = Clock::now();

  SearchOutcome outcome;
  outcome.certificate_note =
      "complete enumeration, up to isomorphism, of all " +
      std::to_string(prob.mu) + "-way (v," + std::to_string(prob.k) + "," +
      std::to_string(prob.t) + ") " + (prob.steiner ? "Steiner " : "") +
      "trades of volume " + std::to_string(prob.m) + " with |foundation| <= " +
      std::to_string(prob.max_foundation) +
      "; T1 enumerated over first-use-ordered labelings, remaining "
      "collections matched against T1's exact t-subset coverage";
  if (prob.t >= 2 && prob.m >= 2 &&
      prob.max_foundation >= foundation_bound(prob.m, prob.k)) {
    outcome.certificate_note +=
        "; domain covers all foundations: every element of a (v,k,2) trade "
        "has replication >= 2, so |foundation| <= floor(k*m/2) = " +
        std::to_string(prob.k * prob.m / 2);
  }

  if (prob.m == 0) {
    outcome.status = prob.mode == SearchMode::CountClasses
                         ? SearchStatus::ExhaustedClasses
                         : SearchStatus::WitnessFound;
    outcome.witnesses.push_back(void_family(prob.mu, prob.k, prob.t));
    outcome.wall_ms = 0.0;
    return outcome;
  }

  Tables tab = build_tables(prob.max_foundation, prob.k, prob.t);

  // Fan out over short T1 prefixes; each task is deterministic on its own.
  std::vector<Task> tasks;
  {
    Engine probe(prob, tab);
    probe.collect_tasks(0, 0, std::min(prob.m, 2), tasks);
  }

  const int want_threads =
      prob.threads > 0
          ? prob.threads
          : std::max(1u, std::thread::hardware_concurrency());
  const int nthreads =
      std::min<int>(want_threads, std::max<size_t>(tasks.size(), 1));

  std::vector<TaskResult> results(tasks.size());
  std::atomic<int> next_task{0};
  std::atomic<int> first_hit{INT_MAX};
  const bool early_stop = prob.mode != SearchMode::CountClasses;

  auto worker = [&] {
    for (;;) {
      int i = next_task.fetch_add(1);
      if (i >= static_cast<int>(tasks.size())) return;
      if (early_stop && first_hit.load() < i) {
        results[i].skipped = true;
        continue;
      }
      Engine eng(prob, tab);
      eng.task_index = i;
      if (early_stop) eng.first_hit_task = &first_hit;
      eng.run_task(tasks[i]);
      if (eng.out.witness) {
        int cur = first_hit.load();
        while (i < cur && !first_hit.compare_exchange_weak(cur, i)) {
        }
      }
      results[i] = std::move(eng.out);
    }
  };

  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Deterministic merge in task order.
  bool truncated = false;
  std::optional<TradeFamily> witness;
  std::map<std::vector<int>, TradeFamily> classes;
  std::uint64_t nodes = 0;
  for (size_t i = 0; i < results.size(); ++i) {
    const TaskResult& r = results[i];
    if (r.skipped) continue;
    if (witness && early_stop) break;  // tasks beyond the winner are irrelevant
    nodes += r.nodes;
    if (r.truncated) {
      truncated = true;
      break;
    }
    if (r.witness && !witness) witness = r.witness;
    for (const auto& [key, fam] : r.classes) classes.emplace(key, fam);
  }

  outcome.nodes = nodes;
  if (truncated && !witness) {
    outcome.status = SearchStatus::Aborted;
    outcome.certificate_note =
        "aborted: resource limit reached before the domain was exhausted";
  } else if (witness) {
    outcome.status = SearchStatus::WitnessFound;
    outcome.witnesses.push_back(*witness);
  } else if (prob.mode == SearchMode::CountClasses) {
    outcome.status = SearchStatus::ExhaustedClasses;
    for (auto& [key, fam] : classes) outcome.witnesses.push_back(fam);
  } else {
    outcome.status = SearchStatus::ExhaustedNone;
  }
  outcome.wall_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return outcome;
}

TradeFamily mine_base(int volume, int k) {
  if (volume < 1 || k < 3) throw Error("mine_base: need volume >= 1, k >= 3");
  // Steiner coverage needs C(v,2) >= m * C(k,2) distinct t-subsets.
  int lo = k + 2;
  while (lo * (lo - 1) / 2 < volume * k * (k - 1) / 2) ++lo;
  int hi = foundation_bound(volume, k);
  for (int v = lo; v <= hi; ++v) {
    SearchProblem prob;
    prob.mu = 3;
    prob.k = k;
    prob.t = 2;
    prob.m = volume;
    prob.steiner = true;
    prob.max_foundation = v;
    prob.mode = SearchMode::FirstWitness;
    SearchOutcome out = search(prob);
    if (out.status == SearchStatus::WitnessFound) return out.witnesses.front();
    if (out.status != SearchStatus::ExhaustedNone)
      throw Error("mine_base: search aborted before exhausting v = " +
                  std::to_string(v));
  }
  throw SearchInconsistency(
      "mine_base: no Steiner (v," + std::to_string(k) + ",2) trade of volume " +
      std::to_string(volume) + " up to the foundation bound " +
      std::to_string(hi) + ", contradicting the expected spectrum");
}

}  // namespace tradekit
