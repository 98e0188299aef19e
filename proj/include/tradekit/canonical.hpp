#pragma once

#include <map>
#include <vector>

#include "tradekit/family.hpp"

namespace tradekit {

// Element-wise image of the family under the mapping; ids not mentioned map
// to themselves. Throws if the result is not injective on the foundation.
TradeFamily relabel(const TradeFamily& family, const std::map<int, int>& mapping);

// Shift every element id by a constant offset.
TradeFamily relabel_offset(const TradeFamily& family, int offset);

// A deterministic representative of the isomorphism class under element
// relabeling, block reordering within a collection, and reordering of the
// mu collections: the lexicographically least encoding over all of them.
// Two families are isomorphic iff their canonical forms are equal.
TradeFamily canonical_form(const TradeFamily& family);

// The canonical form's flat integer encoding; usable as a dictionary key.
std::vector<int> canonical_key(const TradeFamily& family);

bool isomorphic(const TradeFamily& a, const TradeFamily& b);

}  // namespace tradekit
