#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "tradekit/canonical.hpp"
#include "tradekit/catalog.hpp"
#include "tradekit/construct.hpp"
#include "tradekit/verify.hpp"

using namespace tradekit;

namespace {

std::map<int, int> random_perm(const std::vector<int>& found, std::mt19937& rng) {
  std::vector<int> img(found.begin(), found.end());
  std::shuffle(img.begin(), img.end(), rng);
  std::map<int, int> m;
  for (size_t i = 0; i < found.size(); ++i) m[found[i]] = img[i];
  return m;
}

}  // namespace

TEST_CASE("relabel basics") {
  auto& v8 = catalog_entry("ex1.3-v8").family;
  // identity
  CHECK(relabel(v8, {}) == v8);
  // shift makes the foundation disjoint from the original
  auto shifted = relabel_offset(v8, 100);
  auto f0 = foundation(v8);
  auto f1 = foundation(shifted);
  for (int x : f1) CHECK(x >= 100);
  CHECK(f0.size() == f1.size());
  // verify-status preserved
  CHECK(verify(shifted).valid);
  // non-injective mapping rejected
  CHECK_THROWS_AS(relabel(v8, {{0, 5}, {1, 5}}), Error);
}

TEST_CASE("canonical form is relabel-invariant and idempotent") {
  std::mt19937 rng(7);
  for (const char* name : {"ex2.3-in", "ex2.3-out", "ex3.5-k4", "thm3.8-m4",
                           "ex3.10-v3", "ex1.3-v8", "mined-k3-v10"}) {
    auto& fam = catalog_entry(name).family;
    auto key = canonical_key(fam);
    for (int trial = 0; trial < 3; ++trial) {
      auto perm = random_perm(foundation(fam), rng);
      CHECK(canonical_key(relabel(fam, perm)) == key);
    }
    auto canon = canonical_form(fam);
    CHECK(canonical_key(canon) == key);           // idempotent
    CHECK(canonical_form(canon) == canon);
  }
}

TEST_CASE("canonical form separates non-isomorphic families") {
  // same parameters, different structure
  auto& a = catalog_entry("mined-k3-v10").family;
  auto b = steiner_2_3(10);  // catalog replay, equal here
  CHECK(canonical_key(a) == canonical_key(b));

  auto& v8 = catalog_entry("ex1.3-v8").family;
  auto& v13 = catalog_entry("ex1.3-v13").family;
  CHECK(canonical_key(v8) != canonical_key(v13));
}

TEST_CASE("canonical equality agrees with brute-force isomorphism") {
  // small families where all permutations can be tried
  auto& in23 = catalog_entry("ex2.3-in").family;
  auto& k2 = catalog_entry("ex3.5-k2").family;
  CHECK(oracle::brute_isomorphic(in23, k2));
  CHECK(canonical_key(in23) == canonical_key(k2));

  auto of2 = one_factor_family(2);
  CHECK(oracle::brute_isomorphic(of2, k2));
  CHECK(canonical_key(of2) == canonical_key(k2));

  // a genuinely different k=2 family: same parameters, not a matching family
  auto other = make_family(2, 1,
                           {{{0, 1}, {0, 2}}, {{0, 1}, {0, 2}}, {{0, 3}, {1, 2}}});
  CHECK(!oracle::brute_isomorphic(other, k2));
  CHECK(canonical_key(other) != canonical_key(k2));

  // the 7-point volume-6 trade against a random relabeling of itself
  std::mt19937 rng(99);
  auto& v6 = catalog_entry("ex2.3-out").family;
  auto img = relabel(v6, random_perm(foundation(v6), rng));
  CHECK(oracle::brute_isomorphic(v6, img));
  CHECK(canonical_key(v6) == canonical_key(img));
}

TEST_CASE("one_factor_family(2) matches the catalog class") {
  CHECK(canonical_key(one_factor_family(2)) ==
        canonical_key(catalog_entry("ex3.5-k2").family));
}
