#include "tradekit/catalog.hpp"

#include <mutex>

#include "tradekit/verify.hpp"

// Embedded trade corpus. Each entry carries its source table's block rows in
// the compact format; entries whose printed source failed verification are
// shipped repaired, with the repair documented here and in
// docs/catalog-repairs.md.

namespace tradekit {

namespace {

struct RawEntry {
  const char* name;
  const char* provenance;
  const char* repair_note;
  bool steiner;
  int solely;  // 1 true, 0 false, -1 unchecked
  int foundation_size;
  const char* text;
};

const RawEntry kRawEntries[] = {
    {"ex1.3-v8", "source: example 1.3, first table", "", true, 1, 8,
     R"(3 3 2
collection 1
123
147
158
248
267
357
368
456
collection 2
124
138
157
237
268
467
458
356
collection 3
127
135
148
246
238
367
457
568
)"},

    {"ex1.3-v13", "source: example 1.3, second table", "", true, 1, 11,
     R"(3 3 2
collection 1
1 2 11
3 10 11
1 3 7
1 10 9
1 5 8
2 3 6
2 10 8
2 4 9
3 4 5
6 8 4
6 10 5
7 9 5
7 10 4
collection 2
2 3 11
1 10 11
1 2 8
1 3 5
1 7 9
2 10 9
2 4 6
3 10 6
3 4 7
6 5 8
7 5 10
9 4 5
8 4 10
collection 3
1 3 11
2 10 11
1 2 9
1 10 8
1 5 7
2 3 4
2 6 8
3 10 7
3 5 6
7 9 4
9 5 10
8 4 5
6 4 10
)"},

    {"ex2.3-in", "source: example 2.3, input table", "", true, 1, 4,
     R"(3 2 1
collection 1
12
34
collection 2
13
24
collection 3
14
23
)"},

    {"ex2.3-out", "source: example 2.3, blown-up table", "", true, 1, 7,
     R"(3 3 2
collection 1
x12
x34
13z
24z
14y
23y
collection 2
x13
x24
12y
34y
14z
23z
collection 3
x14
x23
12z
34z
13y
24y
)"},

    {"ex3.5-k2", "source: example 3.5, k = 2 table", "", true, 1, 4,
     R"(3 2 1
collection 1
13
24
collection 2
14
23
collection 3
12
34
)"},

    {"ex3.5-k4", "source: example 3.5, k = 4 table", "", true, 0, 8,
     R"(3 4 1
collection 1
x1 x2 1 3
x3 x4 2 4
collection 2
x1 x2 1 4
x3 x4 2 3
collection 3
x1 x2 1 2
x3 x4 3 4
)"},

    {"thm3.8-m4", "source: theorem 3.8 proof, m = 4 table", "", true, 1, 12,
     R"(3 3 1
collection 1
123
456
789
abc
collection 2
147
25a
8b6
39c
collection 3
158
24c
7b3
69a
)"},

    {"ex3.10-kts9-classes", "source: example 3.10, the four parallel classes",
     "", true, 1, 9,
     R"(4 3 1
collection 1
123
456
789
collection 2
147
258
369
collection 3
159
267
348
collection 4
168
249
357
)"},

    {"ex3.10-v3", "source: example 3.10, first three classes", "", true, 1, 9,
     R"(3 3 1
collection 1
123
456
789
collection 2
147
258
369
collection 3
159
267
348
)"},

    {"ex3.10-v9", "source: example 3.10, blown-up table", "", true, 0, 12,
     R"(3 4 2
collection 1
x123
x456
x789
y147
y258
y369
z159
z267
z348
collection 2
x147
x258
x369
y159
y267
y348
z123
z456
z789
collection 3
x159
x267
x348
y123
y456
y789
z147
z258
z369
)"},

    {"appendix-m8", "source: appendix, m = 8 table", "", true, 0, 12,
     R"(3 4 2
collection 1
124a
1568
17bc
235b
346c
378a
489b
59ac
collection 2
125b
1468
17ac
234a
356c
378b
589a
49bc
collection 3
124b
156c
17a8
235a
3468
37cb
4c9a
59b8
)"},

    {"appendix-m10", "source: appendix, m = 10 table", "", true, 0, 13,
     R"(3 4 2
collection 1
0139
028c
124a
17bc
235b
2679
346c
378a
489b
59ac
collection 2
0238
091c
987a
84bc
935b
9642
376c
341a
127b
52ac
collection 3
089c
0123
824a
87b3
295b
267c
9463
971a
41cb
5ca3
)"},

    {"appendix-m11", "source: appendix, m = 11 table", "", true, 0, 13,
     R"(3 4 2
collection 1
028c
0457
06ab
1568
17bc
235b
2679
346c
378a
489b
59ac
collection 2
025c
0468
07ab
1675
18bc
236b
2789
347c
385a
459b
69ac
collection 3
0286
045b
07ac
1578
1bc6
235c
27b9
3476
3b8a
89c4
596a
)"},

    {"appendix-m13", "source: appendix, m = 13 table",
     "printed table fails pair balance: collection 2 disagrees with "
     "collections 1/3 on pairs 13,1c,34,39,4c,9c; unique single-block repair "
     "replaces collection 2 block 149c by 1349 (see docs/catalog-repairs.md)",
     true, 0, 13,
     R"(3 4 2
collection 1
0139
028c
0457
06ab
124a
1568
17bc
235b
2679
346c
378a
489b
59ac
collection 2
1349
248c
04b7
46a5
18a0
1b62
157c
835b
8679
306c
372a
0295
b9ac
collection 3
0739
328c
3451
36ab
724b
7568
17ac
205a
2691
046c
018b
489a
59bc
)"},

    {"appendix-m14", "source: appendix, m = 14 table",
     "printed table repeats the row '24ce 04ca 14ce' (one copy dropped) and "
     "fails pair balance: collection 2 disagrees with collections 1/3 on "
     "pairs 1a,1e,ab,ac,be,ce; unique single-block repair replaces "
     "collection 2 block 1abc by 1bce (see docs/catalog-repairs.md)",
     true, 0, 16,
     R"(3 4 2
collection 1
0456
28ad
37be
19cf
0789
15bd
24ce
36af
0abc
68e1
257f
0def
147a
269b
collection 2
1456
08ed
37ba
29cf
1789
25bd
04ca
36ef
1bce
268a
057f
1dfa
247e
069b
collection 3
2456
18ad
37fe
09cb
2789
05fd
14ce
36ab
2afc
068e
157b
2deb
047a
169f
)"},

    {"appendix-m16", "source: appendix, m = 16 table", "", true, 0, 16,
     R"(3 4 2
collection 1
0456
28ad
37be
19cf
0789
15bd
24ce
36af
0abc
68e1
257f
349d
0def
147a
269b
358c
collection 2
1456
38ad
07be
29cf
1789
25bd
34ce
06af
1abc
268e
357f
049d
1def
247a
369b
058c
collection 3
0856
2bad
37fe
19c4
07b9
15fd
28ce
36a4
0afc
16be
2574
38d9
0de4
187a
269f
35bc
)"},

    // Base-case witnesses for the k = 3 spectrum recursion, produced by
    // `tradekit search` (first-witness mode) and frozen here; see mine_base.
    {"mined-k3-v10",
     "mined: first-witness search, mu=3 k=3 t=2 m=10 steiner, foundation "
     "sizes ascending (2026-08-10)",
     "", true, -1, 9,
     R"(3 3 2
collection 1
012
034
056
078
135
146
237
248
368
457
collection 2
013
027
045
068
124
156
238
346
357
478
collection 3
016
024
038
057
123
145
278
347
356
468
)"},

    {"mined-k3-v11",
     "mined: first-witness search, mu=3 k=3 t=2 m=11 steiner, foundation "
     "sizes ascending (2026-08-10)",
     "", true, -1, 9,
     R"(3 3 2
collection 1
012
034
056
078
135
147
168
238
246
257
367
collection 2
013
025
047
068
128
146
157
234
267
356
378
collection 3
015
027
038
046
124
136
178
235
268
347
567
)"},
};

std::vector<CatalogEntry> build_all() {
  std::vector<CatalogEntry> out;
  for (const RawEntry& raw : kRawEntries) {
    std::string text = raw.text;
    if (text.rfind("@", 0) == 0)
      throw Error(std::string("catalog entry ") + raw.name +
                  ": embedded text placeholder was not replaced");
    TradeFamily family = [&] {
      try {
        return parse_compact(text);
      } catch (const ParseError& e) {
        throw Error(std::string("catalog entry ") + raw.name + ": " + e.what());
      }
    }();
    VerificationReport report = verify(family);
    auto fail = [&](const std::string& what) {
      throw Error(std::string("catalog entry ") + raw.name + ": " + what);
    };
    if (!report.valid) fail("does not verify");
    if (report.steiner != raw.steiner) fail("steiner flag mismatch");
    if (raw.solely >= 0 && report.solely_balanced != (raw.solely == 1))
      fail("solely-balanced flag mismatch");
    int fsize = static_cast<int>(foundation(family).size());
    if (raw.foundation_size >= 0 && fsize != raw.foundation_size)
      fail("foundation size mismatch");
    CatalogEntry entry{raw.name,
                       family,
                       raw.provenance,
                       raw.repair_note,
                       family.mu(),
                       family.k(),
                       family.t(),
                       family.volume(),
                       fsize,
                       report.steiner,
                       report.steiner ? std::optional<bool>(report.solely_balanced)
                                      : std::nullopt};
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& load_all() {
  static const std::vector<CatalogEntry> entries = build_all();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const CatalogEntry& e : load_all())
    if (e.name == name) return e;
  throw Error("no catalog entry named '" + name + "'");
}

bool has_catalog_entry(const std::string& name) {
  for (const CatalogEntry& e : load_all())
    if (e.name == name) return true;
  return false;
}

}  // namespace tradekit
