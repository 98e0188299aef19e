#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tradekit/family.hpp"

namespace tradekit {

class ParseError : public Error {
public:
  ParseError(int line, int column, const std::string& what)
      : Error("line " + std::to_string(line) + ":" + std::to_string(column) +
              ": " + what),
        line(line),
        column(column) {}
  int line;
  int column;
};

// Compact trade document: a header line "mu k t", then one "collection i"
// section per collection with one block per line. A line holding a single
// [0-9a-z] run names one element per character ("124a"); a line with
// several whitespace-separated tokens names one element per token
// ("12 34 ab"). '#' starts a comment.
TradeFamily parse_compact(const std::string& text);

enum class Format { Compact, Json };

// Round-trips through the corresponding parser up to canonical equality.
// Compact output requires a displayable alphabet: families without labels
// are refused once ids leave 0-9a-z range.
std::string serialize(const TradeFamily& family, Format format);

TradeFamily parse_json(const std::string& text);

// Guess the format from content (JSON starts with '{').
TradeFamily parse_document(const std::string& text);

struct CatalogEntry {
  std::string name;
  TradeFamily family;
  std::string provenance;            // where the table comes from
  std::string repair_note;           // nonempty if the source text was repaired
  // expected properties, re-checked on load
  int mu, k, t, volume, foundation_size;
  bool steiner;
  std::optional<bool> solely_balanced;
};

// Every embedded trade, parsed and verified. Throws naming the entry if any
// fails verification or misses its expected properties.
const std::vector<CatalogEntry>& load_all();

// Lookup by name; throws if absent.
const CatalogEntry& catalog_entry(const std::string& name);

bool has_catalog_entry(const std::string& name);

}  // namespace tradekit
