#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tradekit/construct.hpp"
#include "tradekit/family.hpp"

namespace tradekit {

enum class SpectrumStatus { Yes, No, Unknown };

std::string to_string(SpectrumStatus status);

// One published spectrum result: a scope over (mu, t, k, steiner) and a
// volume classifier, with the backing result id and its statement.
struct SpectrumFact {
  std::string id;      // short result tag, e.g. "T3.6"
  std::string anchor;  // the statement, e.g. "S_3s(2,3) = N \\ {1,2,3,4,5,7}"
  std::optional<int> mu;         // empty = any mu >= 2
  int t;
  int k_min, k_max;              // inclusive scope for k
  std::optional<bool> steiner;   // empty = applies to both kinds of query
  std::function<SpectrumStatus(int m, int k)> classify;

  bool in_scope(int mu_, int t_, int k_, bool steiner_) const;
};

const std::vector<SpectrumFact>& spectrum_facts();

struct SpectrumAnswer {
  SpectrumStatus status = SpectrumStatus::Unknown;
  std::optional<Recipe> recipe;  // present iff status == Yes
  std::string citation;          // backing result(s), or why unknown
};

// Does a mu-way (v,k,t) [Steiner] trade of volume m exist? Yes answers carry
// a replayable construction; No and Unknown answers carry the citation.
SpectrumAnswer query(int mu, int t, int k, int m, bool steiner);

// Executes a Yes answer's recipe; throws on No/Unknown.
TradeFamily replay(const SpectrumAnswer& answer);

}  // namespace tradekit
