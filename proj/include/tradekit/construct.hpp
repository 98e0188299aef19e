#pragma once

#include <string>
#include <vector>

#include "tradekit/family.hpp"

namespace tradekit {

// Raised when the requested volume is provably outside the spectrum.
class NotInSpectrum : public Error {
public:
  NotInSpectrum(const std::string& what, std::string citation)
      : Error(what), citation(std::move(citation)) {}
  std::string citation;
};

// Raised when existence is an open question (k >= 4, volume 7).
class SpectrumOpen : public Error {
public:
  SpectrumOpen(const std::string& what, std::string citation)
      : Error(what), citation(std::move(citation)) {}
  std::string citation;
};

enum class PadMode { PerBlock, Universal };

// Fresh-element budget for pad. Per-block mode attaches one disjoint extra-set
// to each block position; universal mode attaches the same set to every
// block. Explicit sets are optional; when absent, fresh ids are allocated
// right after the input's largest id.
struct PaddingSpec {
  PadMode mode = PadMode::Universal;
  int extra = 0;  // k' - k
  std::vector<std::vector<int>> fresh_sets;
};

// Cyclic blow-up: collection j of the result takes, for each i, the blocks
// of input collection ((i + j - 2) mod mu) + 1 prefixed with fresh[i].
// Output parameters (k+1, t+1), volume mu*m.
TradeFamily blow_up(const TradeFamily& family, const std::vector<int>& fresh);

// Collection-wise concatenation; requires matching mu, k, t.
TradeFamily disjoint_sum(const TradeFamily& a, const TradeFamily& b);

TradeFamily pad(const TradeFamily& family, const PaddingSpec& spec);

// Three rounds of the circle 1-factorization of K_{2m}: a 3-way (2m, 2, 1)
// Steiner trade of volume m, 1-solely balanced.
TradeFamily one_factor_family(int m);

// A 3-way (v, 3, 1) Steiner trade, 1-solely balanced, of volume m >= 3.
// Odd m: three cyclic parallel classes over Z_m x {0,1,2}; m = 4: an explicit
// 12-point table; even m >= 6: disjoint sum of the odd instances 3 and m-3.
TradeFamily solely_balanced_triples(int m);

// Witness dispatchers for the t = 2 spectra.
TradeFamily steiner_2_3(int m);
TradeFamily steiner_2_4(int m);
TradeFamily general_2_k(int m, int k);

// How a witness was built; replaying reproduces it exactly.
struct Recipe {
  enum class Op { Void, Catalog, BlowUp, Sum, Pad, OneFactor, Triples };
  Op op = Op::Void;
  int mu = 0, k = 0, t = 0;  // Void
  int m = 0;                 // OneFactor / Triples
  std::string name;          // Catalog
  std::vector<int> fresh;    // BlowUp
  PadMode mode = PadMode::Universal;
  int pad_size = 0;          // Pad
  std::vector<Recipe> children;

  std::string to_json() const;
  static Recipe from_json(const std::string& text);
};

TradeFamily replay(const Recipe& recipe);

Recipe steiner_2_3_recipe(int m);
Recipe steiner_2_4_recipe(int m);
Recipe general_2_k_recipe(int m, int k);
Recipe one_factor_padded_recipe(int m, int k);  // t = 1 witnesses, any k >= 2

}  // namespace tradekit
