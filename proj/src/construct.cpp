#include "tradekit/construct.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "tradekit/canonical.hpp"
#include "tradekit/catalog.hpp"

namespace tradekit {

namespace {

int max_id(const TradeFamily& f) {
  auto found = foundation(f);
  return found.empty() ? -1 : found.back();
}

void require_fresh(const TradeFamily& f, const std::vector<int>& ids) {
  auto found = foundation(f);
  for (int x : ids) {
    if (std::binary_search(found.begin(), found.end(), x))
      throw Error("fresh element " + std::to_string(x) +
                  " collides with the foundation");
  }
}

}  // namespace

TradeFamily blow_up(const TradeFamily& family, const std::vector<int>& fresh) {
  const int mu = family.mu();
  if (static_cast<int>(fresh.size()) != mu)
    throw Error("blow_up: need exactly mu fresh elements");
  {
    std::set<int> uniq(fresh.begin(), fresh.end());
    if (static_cast<int>(uniq.size()) != mu)
      throw Error("blow_up: fresh elements must be distinct");
  }
  require_fresh(family, fresh);

  std::vector<Collection> out;
  for (int j = 1; j <= mu; ++j) {
    std::vector<Block> blocks;
    for (int i = 1; i <= mu; ++i) {
      int source = (i + j - 2) % mu;  // 0-based collection index
      for (const Block& b : family.collections()[source].blocks()) {
        std::vector<int> e = b.elems();
        e.push_back(fresh[i - 1]);
        blocks.emplace_back(std::move(e));
      }
    }
    out.emplace_back(std::move(blocks));
  }
  return TradeFamily(family.k() + 1, family.t() + 1, std::move(out),
                     family.labels());
}

TradeFamily disjoint_sum(const TradeFamily& a, const TradeFamily& b) {
  if (a.mu() != b.mu() || a.k() != b.k() || a.t() != b.t())
    throw Error("disjoint_sum: parameter mismatch");
  std::vector<Collection> out;
  for (int i = 0; i < a.mu(); ++i) {
    std::vector<Block> blocks = a.collections()[i].blocks();
    const auto& extra = b.collections()[i].blocks();
    blocks.insert(blocks.end(), extra.begin(), extra.end());
    out.emplace_back(std::move(blocks));
  }
  std::map<int, std::string> labels = a.labels();
  labels.insert(b.labels().begin(), b.labels().end());
  return TradeFamily(a.k(), a.t(), std::move(out), std::move(labels));
}

TradeFamily pad(const TradeFamily& family, const PaddingSpec& spec) {
  if (spec.extra < 0) throw Error("pad: negative padding");
  if (spec.extra == 0) return family;
  if (spec.mode == PadMode::PerBlock && family.t() != 1)
    throw Error("pad: per-block padding preserves balance only for t = 1 "
                "(a per-block fresh element breaks pair balance)");
  if (spec.mode == PadMode::Universal && family.t() > 2)
    throw Error("pad: universal padding is supported for t <= 2");

  const int m = family.volume();
  std::vector<std::vector<int>> sets = spec.fresh_sets;
  if (sets.empty()) {
    int next = max_id(family) + 1;
    int count = spec.mode == PadMode::PerBlock ? m : 1;
    for (int i = 0; i < count; ++i) {
      std::vector<int> s;
      for (int j = 0; j < spec.extra; ++j) s.push_back(next++);
      sets.push_back(std::move(s));
    }
  }

  const int want = spec.mode == PadMode::PerBlock ? m : 1;
  if (static_cast<int>(sets.size()) != want)
    throw Error("pad: expected " + std::to_string(want) + " fresh sets");
  std::set<int> seen;
  for (const auto& s : sets) {
    if (static_cast<int>(s.size()) != spec.extra)
      throw Error("pad: every fresh set must have k' - k elements");
    for (int x : s)
      if (!seen.insert(x).second)
        throw Error("pad: fresh sets must be pairwise disjoint");
  }
  require_fresh(family, {seen.begin(), seen.end()});

  std::vector<Collection> out;
  for (const Collection& c : family.collections()) {
    if (c.volume() != m) throw Error("pad: collections must have equal volumes");
    std::vector<Block> blocks;
    for (int i = 0; i < c.volume(); ++i) {
      std::vector<int> e = c.blocks()[i].elems();
      const auto& s = spec.mode == PadMode::PerBlock ? sets[i] : sets[0];
      e.insert(e.end(), s.begin(), s.end());
      blocks.emplace_back(std::move(e));
    }
    out.emplace_back(std::move(blocks));
  }
  return TradeFamily(family.k() + spec.extra, family.t(), std::move(out),
                     family.labels());
}

TradeFamily one_factor_family(int m) {
  if (m < 2)
    throw Error("one_factor_family: volume must be at least 2 "
                "(no trade of volume one exists)");
  const int n = 2 * m;
  const int wheel = n - 1;
  std::vector<Collection> cols;
  for (int r = 0; r < 3; ++r) {
    std::vector<Block> blocks;
    blocks.emplace_back(std::vector<int>{wheel, r});
    for (int i = 1; i < m; ++i) {
      int a = (r + i) % wheel;
      int b = ((r - i) % wheel + wheel) % wheel;
      blocks.emplace_back(std::vector<int>{a, b});
    }
    cols.emplace_back(std::move(blocks));
  }
  return TradeFamily(2, 1, std::move(cols));
}

TradeFamily solely_balanced_triples(int m) {
  if (m < 3) throw Error("solely_balanced_triples: volume must be at least 3");
  if (m % 2 == 1) {
    // Three cyclic parallel classes over Z_m x {0,1,2}: class d contains
    // {i, (i+d) mod m, (2i+d) mod m} taken in groups 0,1,2. Distinct classes
    // share no pair because 2 is invertible for odd m.
    std::vector<Collection> cols;
    for (int d = 0; d < 3; ++d) {
      std::vector<Block> blocks;
      for (int i = 0; i < m; ++i) {
        blocks.emplace_back(std::vector<int>{i, m + (i + d) % m,
                                             2 * m + (2 * i + d) % m});
      }
      cols.emplace_back(std::move(blocks));
    }
    return TradeFamily(3, 1, std::move(cols));
  }
  if (m == 4) {
    return make_family(3, 1,
                       {{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11}},
                        {{0, 3, 6}, {1, 4, 9}, {7, 10, 5}, {2, 8, 11}},
                        {{0, 4, 7}, {1, 3, 11}, {6, 10, 2}, {5, 8, 9}}});
  }
  TradeFamily left = solely_balanced_triples(3);
  TradeFamily right = solely_balanced_triples(m - 3);
  return disjoint_sum(left, relabel_offset(right, max_id(left) + 1));
}

namespace {

Recipe catalog_leaf(const std::string& name) {
  Recipe r;
  r.op = Recipe::Op::Catalog;
  r.name = name;
  return r;
}

Recipe sum_node(Recipe left, Recipe right) {
  Recipe r;
  r.op = Recipe::Op::Sum;
  r.children.push_back(std::move(left));
  r.children.push_back(std::move(right));
  return r;
}

Recipe blow_up_node(Recipe input, std::vector<int> fresh) {
  Recipe r;
  r.op = Recipe::Op::BlowUp;
  r.fresh = std::move(fresh);
  r.children.push_back(std::move(input));
  return r;
}

}  // namespace

Recipe steiner_2_3_recipe(int m) {
  if (m >= 1 && m <= 5)
    throw NotInSpectrum("no 3-way (v,3,2) trade of volume " + std::to_string(m),
                        "T2.5: S_mu(2,k) within N \\ {1,2,3,4,5}");
  if (m == 7)
    throw NotInSpectrum("no 3-way (v,3,2) Steiner trade of volume 7",
                        "T3.3: 7 not in S_3s(2,3)");
  if (m < 1) throw Error("steiner_2_3: volume must be positive");
  switch (m) {
    case 8: return catalog_leaf("ex1.3-v8");
    case 10: return catalog_leaf("mined-k3-v10");
    case 11: return catalog_leaf("mined-k3-v11");
    case 13: return catalog_leaf("ex1.3-v13");
    default: break;
  }
  if (m % 3 == 0) {
    Recipe base;
    base.op = Recipe::Op::OneFactor;
    base.m = m / 3;
    int n = 2 * (m / 3);
    return blow_up_node(std::move(base), {n, n + 1, n + 2});
  }
  if (m % 3 == 1)  // m >= 16
    return sum_node(steiner_2_3_recipe(m - 10), steiner_2_3_recipe(10));
  return sum_node(steiner_2_3_recipe(m - 8), steiner_2_3_recipe(8));  // m >= 14
}

Recipe steiner_2_4_recipe(int m) {
  if (m >= 1 && m <= 7)
    throw NotInSpectrum(
        "no 3-way (v,4,2) Steiner trade of volume " + std::to_string(m),
        "T3.7/T3.9: S_3s(2,4) = N \\ {1,...,7}");
  if (m < 1) throw Error("steiner_2_4: volume must be positive");
  switch (m) {
    case 8: return catalog_leaf("appendix-m8");
    case 10: return catalog_leaf("appendix-m10");
    case 11: return catalog_leaf("appendix-m11");
    case 13: return catalog_leaf("appendix-m13");
    case 14: return catalog_leaf("appendix-m14");
    case 16: return catalog_leaf("appendix-m16");
    default: break;
  }
  if (m % 3 == 0) {  // m >= 9
    Recipe base;
    base.op = Recipe::Op::Triples;
    base.m = m / 3;
    int n = 3 * (m / 3);
    return blow_up_node(std::move(base), {n, n + 1, n + 2});
  }
  if (m % 3 == 1)  // m >= 19
    return sum_node(steiner_2_4_recipe(m - 10), steiner_2_4_recipe(10));
  return sum_node(steiner_2_4_recipe(m - 8), steiner_2_4_recipe(8));  // m >= 17
}

Recipe general_2_k_recipe(int m, int k) {
  if (k < 3) throw Error("general_2_k: k must be at least 3");
  if (m >= 1 && m <= 5)
    throw NotInSpectrum("no 3-way (v,k,2) trade of volume " + std::to_string(m),
                        "T2.5: S_mu(2,k) within N \\ {1,2,3,4,5}");
  if (m == 7) {
    if (k == 3)
      throw NotInSpectrum("no 3-way (v,3,2) trade of volume 7",
                          "T4.2: S_3(2,3) = N \\ {1,2,3,4,5,7}");
    throw SpectrumOpen("existence of a 3-way (v," + std::to_string(k) +
                           ",2) trade of volume 7 is open",
                       "T4.3: contains N \\ {1,...,5} except possibly 7");
  }
  if (m < 1) throw Error("general_2_k: volume must be positive");
  Recipe base = steiner_2_3_recipe(m);
  if (k == 3) return base;
  Recipe r;
  r.op = Recipe::Op::Pad;
  r.mode = PadMode::Universal;
  r.pad_size = k - 3;
  r.children.push_back(std::move(base));
  return r;
}

Recipe one_factor_padded_recipe(int m, int k) {
  if (k < 2) throw Error("t = 1 witnesses need k >= 2");
  if (m < 2)
    throw NotInSpectrum("no 3-way (v,k,1) trade of volume 1",
                        "T3.4: S_3s(1,k) = N \\ {1}");
  Recipe base;
  base.op = Recipe::Op::OneFactor;
  base.m = m;
  if (k == 2) return base;
  Recipe r;
  r.op = Recipe::Op::Pad;
  r.mode = PadMode::PerBlock;
  r.pad_size = k - 2;
  r.children.push_back(std::move(base));
  return r;
}

TradeFamily replay(const Recipe& recipe) {
  switch (recipe.op) {
    case Recipe::Op::Void:
      return void_family(recipe.mu, recipe.k, recipe.t);
    case Recipe::Op::Catalog:
      return catalog_entry(recipe.name).family;
    case Recipe::Op::BlowUp:
      return blow_up(replay(recipe.children.at(0)), recipe.fresh);
    case Recipe::Op::Sum: {
      TradeFamily left = replay(recipe.children.at(0));
      TradeFamily right = replay(recipe.children.at(1));
      return disjoint_sum(left, relabel_offset(right, max_id(left) + 1));
    }
    case Recipe::Op::Pad: {
      PaddingSpec spec;
      spec.mode = recipe.mode;
      spec.extra = recipe.pad_size;
      return pad(replay(recipe.children.at(0)), spec);
    }
    case Recipe::Op::OneFactor:
      return one_factor_family(recipe.m);
    case Recipe::Op::Triples:
      return solely_balanced_triples(recipe.m);
  }
  throw Error("replay: unknown recipe op");
}

TradeFamily steiner_2_3(int m) { return replay(steiner_2_3_recipe(m)); }
TradeFamily steiner_2_4(int m) { return replay(steiner_2_4_recipe(m)); }
TradeFamily general_2_k(int m, int k) { return replay(general_2_k_recipe(m, k)); }

namespace {

nlohmann::json recipe_json(const Recipe& r) {
  nlohmann::json j;
  switch (r.op) {
    case Recipe::Op::Void:
      j["op"] = "void";
      j["mu"] = r.mu;
      j["k"] = r.k;
      j["t"] = r.t;
      break;
    case Recipe::Op::Catalog:
      j["op"] = "catalog";
      j["name"] = r.name;
      break;
    case Recipe::Op::BlowUp:
      j["op"] = "blow_up";
      j["fresh"] = r.fresh;
      j["input"] = recipe_json(r.children.at(0));
      break;
    case Recipe::Op::Sum:
      j["op"] = "sum";
      j["left"] = recipe_json(r.children.at(0));
      j["right"] = recipe_json(r.children.at(1));
      break;
    case Recipe::Op::Pad:
      j["op"] = "pad";
      j["mode"] = r.mode == PadMode::PerBlock ? "per-block" : "universal";
      j["size"] = r.pad_size;
      j["input"] = recipe_json(r.children.at(0));
      break;
    case Recipe::Op::OneFactor:
      j["op"] = "one_factor";
      j["m"] = r.m;
      break;
    case Recipe::Op::Triples:
      j["op"] = "triples";
      j["m"] = r.m;
      break;
  }
  return j;
}

Recipe recipe_parse(const nlohmann::json& j) {
  Recipe r;
  std::string op = j.at("op").get<std::string>();
  if (op == "void") {
    r.op = Recipe::Op::Void;
    r.mu = j.at("mu").get<int>();
    r.k = j.at("k").get<int>();
    r.t = j.at("t").get<int>();
  } else if (op == "catalog") {
    r.op = Recipe::Op::Catalog;
    r.name = j.at("name").get<std::string>();
  } else if (op == "blow_up") {
    r.op = Recipe::Op::BlowUp;
    r.fresh = j.at("fresh").get<std::vector<int>>();
    r.children.push_back(recipe_parse(j.at("input")));
  } else if (op == "sum") {
    r.op = Recipe::Op::Sum;
    r.children.push_back(recipe_parse(j.at("left")));
    r.children.push_back(recipe_parse(j.at("right")));
  } else if (op == "pad") {
    r.op = Recipe::Op::Pad;
    std::string mode = j.at("mode").get<std::string>();
    r.mode = mode == "per-block" ? PadMode::PerBlock : PadMode::Universal;
    r.pad_size = j.at("size").get<int>();
    r.children.push_back(recipe_parse(j.at("input")));
  } else if (op == "one_factor") {
    r.op = Recipe::Op::OneFactor;
    r.m = j.at("m").get<int>();
  } else if (op == "triples") {
    r.op = Recipe::Op::Triples;
    r.m = j.at("m").get<int>();
  } else {
    throw Error("recipe: unknown op '" + op + "'");
  }
  return r;
}

}  // namespace

std::string Recipe::to_json() const { return recipe_json(*this).dump(2) + "\n"; }

Recipe Recipe::from_json(const std::string& text) {
  try {
    return recipe_parse(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("recipe: ") + e.what());
  }
}

}  // namespace tradekit
