#include "tradekit/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

#include "tradekit/verify.hpp"

namespace tradekit {

namespace {

bool all_numeric(const std::vector<std::string>& labels) {
  for (const auto& s : labels) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

char id_char(int id) {
  if (id < 10) return static_cast<char>('0' + id);
  return static_cast<char>('a' + id - 10);
}

}  // namespace

TradeFamily parse_compact(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  int mu = 0, k = 0, t = 0;
  bool header_seen = false;
  // blocks as label strings, grouped by collection
  std::vector<std::vector<std::vector<std::string>>> raw;

  auto strip = [](std::string s) {
    auto hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return std::string();
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty()) continue;

    if (!header_seen) {
      std::istringstream hs(s);
      if (!(hs >> mu >> k >> t))
        throw ParseError(lineno, 1, "expected header line 'mu k t'");
      std::string extra;
      if (hs >> extra) throw ParseError(lineno, 1, "trailing text after header");
      if (mu < 2) throw ParseError(lineno, 1, "mu must be at least 2");
      if (k < 1 || t < 0 || t >= k)
        throw ParseError(lineno, 1, "parameters must satisfy 0 <= t < k");
      header_seen = true;
      continue;
    }

    if (s.rfind("collection", 0) == 0) {
      std::istringstream cs(s.substr(10));
      int idx = 0;
      if (!(cs >> idx) || idx != static_cast<int>(raw.size()) + 1)
        throw ParseError(lineno, 1, "collection sections must be numbered 1.." +
                                        std::to_string(mu) + " in order");
      if (idx > mu)
        throw ParseError(lineno, 1, "more collections than declared mu");
      raw.emplace_back();
      continue;
    }

    if (raw.empty())
      throw ParseError(lineno, 1, "block line before any 'collection' section");

    // Tokenize: several tokens -> labeled elements; one token -> char run.
    std::vector<std::string> tokens;
    {
      std::istringstream ts(s);
      std::string tok;
      while (ts >> tok) tokens.push_back(tok);
    }
    std::vector<std::string> labels;
    if (tokens.size() > 1) {
      labels = tokens;
    } else {
      const std::string& run = tokens.front();
      int col = static_cast<int>(line.find(run)) + 1;
      for (size_t i = 0; i < run.size(); ++i) {
        char c = run[i];
        bool ok = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z');
        if (!ok)
          throw ParseError(lineno, col + static_cast<int>(i),
                           std::string("unknown character '") + c +
                               "' in block");
        labels.emplace_back(1, c);
      }
    }
    if (static_cast<int>(labels.size()) != k)
      throw ParseError(lineno, 1,
                       "block has " + std::to_string(labels.size()) +
                           " elements, expected k = " + std::to_string(k));
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError(lineno, 1, "duplicate element in block");
    raw.back().push_back(std::move(labels));
  }

  if (!header_seen) throw ParseError(1, 1, "empty document");
  if (static_cast<int>(raw.size()) != mu)
    throw ParseError(lineno, 1, "expected " + std::to_string(mu) +
                                    " collections, found " +
                                    std::to_string(raw.size()));

  // Assign dense ids: numeric labels in numeric order, otherwise ASCII order.
  std::vector<std::string> all;
  for (const auto& col : raw)
    for (const auto& block : col)
      for (const auto& lab : block) all.push_back(lab);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  if (all_numeric(all)) {
    std::sort(all.begin(), all.end(), [](const std::string& a, const std::string& b) {
      return std::stol(a) < std::stol(b);
    });
  }
  std::map<std::string, int> id_of;
  std::map<int, std::string> labels;
  for (size_t i = 0; i < all.size(); ++i) {
    id_of[all[i]] = static_cast<int>(i);
    labels[static_cast<int>(i)] = all[i];
  }

  std::vector<std::vector<std::vector<int>>> cols;
  for (const auto& col : raw) {
    std::vector<std::vector<int>> blocks;
    for (const auto& block : col) {
      std::vector<int> e;
      for (const auto& lab : block) e.push_back(id_of[lab]);
      blocks.push_back(std::move(e));
    }
    cols.push_back(std::move(blocks));
  }
  return make_family(k, t, cols, std::move(labels));
}

std::string serialize(const TradeFamily& family, Format format) {
  if (format == Format::Json) {
    nlohmann::json doc;
    doc["mu"] = family.mu();
    doc["k"] = family.k();
    doc["t"] = family.t();
    auto cols = nlohmann::json::array();
    for (const Collection& c : family.collections()) {
      auto col = nlohmann::json::array();
      for (const Block& b : c.blocks()) col.push_back(b.elems());
      cols.push_back(std::move(col));
    }
    doc["collections"] = std::move(cols);
    if (!family.labels().empty()) {
      nlohmann::json labs = nlohmann::json::object();
      for (const auto& [id, name] : family.labels())
        labs[std::to_string(id)] = name;
      doc["labels"] = std::move(labs);
    }
    return doc.dump(2) + "\n";
  }

  // Compact. Decide the display text per element.
  std::map<int, std::string> display = family.labels();
  bool single_char = true;
  for (int id : foundation(family)) {
    auto it = display.find(id);
    if (it == display.end()) {
      if (id > 35)
        throw Error("serialize: compact format needs labels once ids leave "
                    "the 0-9a-z range (" +
                    std::to_string(id) + "); use json");
      display[id] = std::string(1, id_char(id));
      it = display.find(id);
    }
    if (it->second.size() != 1) single_char = false;
  }

  std::ostringstream out;
  out << family.mu() << ' ' << family.k() << ' ' << family.t() << '\n';
  int idx = 0;
  for (const Collection& c : family.collections()) {
    out << "collection " << ++idx << '\n';
    for (const Block& b : c.blocks()) {
      bool first = true;
      for (int e : b.elems()) {
        if (!single_char && !first) out << ' ';
        out << display[e];
        first = false;
      }
      out << '\n';
    }
  }
  return out.str();
}

TradeFamily parse_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, 1, std::string("invalid json: ") + e.what());
  }
  try {
    int mu = doc.at("mu").get<int>();
    int k = doc.at("k").get<int>();
    int t = doc.at("t").get<int>();
    auto cols = doc.at("collections").get<std::vector<std::vector<std::vector<int>>>>();
    if (static_cast<int>(cols.size()) != mu)
      throw Error("json: collections array does not match mu");
    std::map<int, std::string> labels;
    if (doc.contains("labels")) {
      for (auto& [key, val] : doc.at("labels").items())
        labels[std::stoi(key)] = val.get<std::string>();
    }
    return make_family(k, t, cols, std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, 1, std::string("json document: ") + e.what());
  }
}

TradeFamily parse_document(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_json(text) : parse_compact(text);
  }
  throw ParseError(1, 1, "empty document");
}

}  // namespace tradekit
