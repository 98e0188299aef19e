#include "tradekit/spectrum.hpp"

#include <climits>

namespace tradekit {

std::string to_string(SpectrumStatus status) {
  switch (status) {
    case SpectrumStatus::Yes: return "Yes";
    case SpectrumStatus::No: return "No";
    case SpectrumStatus::Unknown: return "Unknown";
  }
  return "?";
}

bool SpectrumFact::in_scope(int mu_, int t_, int k_, bool steiner_) const {
  if (mu && *mu != mu_) return false;
  if (t != t_) return false;
  if (k_ < k_min || k_ > k_max) return false;
  if (steiner && *steiner != steiner_) return false;
  return true;
}

const std::vector<SpectrumFact>& spectrum_facts() {
  static const std::vector<SpectrumFact> facts = [] {
    std::vector<SpectrumFact> f;

    f.push_back({"T3.4", "S_3(1,k) = S_3s(1,k) = N \\ {1} for k >= 2", 3, 1, 2,
                 INT_MAX, std::nullopt, [](int m, int) {
                   return m == 1 ? SpectrumStatus::No : SpectrumStatus::Yes;
                 }});

    f.push_back({"T2.5", "S_mu(2,k) within N \\ {1,2,3,4,5} for k >= 3",
                 std::nullopt, 2, 3, INT_MAX, std::nullopt, [](int m, int) {
                   return m >= 1 && m <= 5 ? SpectrumStatus::No
                                           : SpectrumStatus::Unknown;
                 }});

    f.push_back({"T3.3", "7 not in S_3s(2,3)", 3, 2, 3, 3, true, [](int m, int) {
                   return m == 7 ? SpectrumStatus::No : SpectrumStatus::Unknown;
                 }});

    f.push_back({"T3.6", "S_3s(2,3) = N \\ {1,2,3,4,5,7}", 3, 2, 3, 3, true,
                 [](int m, int) {
                   if ((m >= 1 && m <= 5) || m == 7) return SpectrumStatus::No;
                   return SpectrumStatus::Yes;
                 }});

    f.push_back({"T4.2", "S_3(2,3) = N \\ {1,2,3,4,5,7}", 3, 2, 3, 3, false,
                 [](int m, int) {
                   if ((m >= 1 && m <= 5) || m == 7) return SpectrumStatus::No;
                   return SpectrumStatus::Yes;
                 }});

    f.push_back({"T3.9", "S_3s(2,4) = N \\ {1,2,3,4,5,6,7}", 3, 2, 4, 4, true,
                 [](int m, int) {
                   return m <= 7 ? SpectrumStatus::No : SpectrumStatus::Yes;
                 }});

    f.push_back({"T3.7", "S_3s(2,k) within N \\ {1,...,2k-1} for k >= 4", 3, 2,
                 4, INT_MAX, true, [](int m, int k) {
                   return m <= 2 * k - 1 ? SpectrumStatus::No
                                         : SpectrumStatus::Unknown;
                 }});

    f.push_back({"T4.3",
                 "S_3(2,k) contains N \\ {1,...,5}, except possibly 7", 3, 2, 4,
                 INT_MAX, false, [](int m, int) {
                   if (m >= 1 && m <= 5) return SpectrumStatus::No;
                   if (m == 7) return SpectrumStatus::Unknown;
                   return SpectrumStatus::Yes;
                 }});

    return f;
  }();
  return facts;
}

namespace {

Recipe yes_recipe(int t, int k, int m, bool steiner) {
  if (t == 1) return one_factor_padded_recipe(m, k);
  if (t == 2 && k == 3) return steiner_2_3_recipe(m);
  if (t == 2 && k == 4 && steiner) return steiner_2_4_recipe(m);
  if (t == 2 && k >= 4 && !steiner) return general_2_k_recipe(m, k);
  throw Error("spectrum: no constructive recipe for these parameters");
}

}  // namespace

SpectrumAnswer query(int mu, int t, int k, int m, bool steiner) {
  if (t >= k || t < 1) throw Error("query: need 1 <= t < k");
  if (mu < 2) throw Error("query: mu must be at least 2");
  if (m < 0) throw Error("query: negative volume");

  SpectrumAnswer answer;
  if (m == 0) {
    answer.status = SpectrumStatus::Yes;
    Recipe r;
    r.op = Recipe::Op::Void;
    r.mu = mu;
    r.k = k;
    r.t = t;
    answer.recipe = std::move(r);
    answer.citation = "the void trade has volume 0";
    return answer;
  }

  std::vector<const SpectrumFact*> noes;
  bool yes = false;
  for (const SpectrumFact& fact : spectrum_facts()) {
    if (!fact.in_scope(mu, t, k, steiner)) continue;
    switch (fact.classify(m, k)) {
      case SpectrumStatus::No: noes.push_back(&fact); break;
      case SpectrumStatus::Yes: yes = true; break;
      case SpectrumStatus::Unknown: break;
    }
  }

  if (!noes.empty()) {
    answer.status = SpectrumStatus::No;
    std::string cite;
    for (const SpectrumFact* fact : noes) {
      if (!cite.empty()) cite += "; ";
      cite += fact->id + ": " + fact->anchor;
    }
    answer.citation = cite;
    return answer;
  }
  if (yes) {
    answer.status = SpectrumStatus::Yes;
    answer.recipe = yes_recipe(t, k, m, steiner);
    answer.citation = "constructive witness";
    return answer;
  }
  answer.status = SpectrumStatus::Unknown;
  if (mu != 3)
    answer.citation = "only mu = 3 spectra are characterized here";
  else if (t == 2 && k >= 4 && steiner && m == 7 && 2 * k - 1 < 7)
    answer.citation = "T4.3: membership of 7 is open";
  else if (t == 2 && k >= 4 && !steiner && m == 7)
    answer.citation = "T4.3: " + std::string("S_3(2,k) contains N \\ {1,...,5}, except possibly 7");
  else if (t == 2 && k >= 5 && steiner)
    answer.citation =
        "T3.7 gives only the lower bound 2k for k >= 5; no upper "
        "characterization is known";
  else
    answer.citation = "no applicable result";
  return answer;
}

TradeFamily replay(const SpectrumAnswer& answer) {
  if (answer.status != SpectrumStatus::Yes || !answer.recipe)
    throw Error("replay: answer carries no witness recipe");
  return replay(*answer.recipe);
}

}  // namespace tradekit
