// tradekit: mu-way (v,k,t) trade toolkit.
//
// Subcommands: verify, construct, search, spectrum, catalog.
// Exit codes: 0 success/Yes, 1 invalid/No, 2 Unknown, 64 usage error,
// 70 internal inconsistency.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tradekit/canonical.hpp"
#include "tradekit/catalog.hpp"
#include "tradekit/construct.hpp"
#include "tradekit/search.hpp"
#include "tradekit/spectrum.hpp"
#include "tradekit/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tradekit::Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw tradekit::Error("cannot write file: " + path);
  out << text;
}

nlohmann::json report_json(const tradekit::VerificationReport& report) {
  nlohmann::json j;
  j["valid"] = report.valid;
  j["steiner"] = report.steiner;
  j["solely_balanced"] = report.solely_balanced;
  j["repeated_blocks"] = report.repeated_blocks;
  auto arr = nlohmann::json::array();
  for (const auto& f : report.failures) {
    arr.push_back({{"kind", tradekit::to_string(f.kind)},
                   {"witness", f.witness},
                   {"counts", f.counts},
                   {"note", f.note}});
  }
  j["failures"] = std::move(arr);
  return j;
}

void print_report(const tradekit::TradeFamily& family,
                  const tradekit::VerificationReport& report) {
  std::cout << "mu=" << family.mu() << " k=" << family.k()
            << " t=" << family.t() << " volume=" << family.volume()
            << " foundation=" << tradekit::foundation(family).size() << "\n";
  std::cout << "valid:            " << (report.valid ? "yes" : "NO") << "\n";
  std::cout << "steiner:          " << (report.steiner ? "yes" : "no") << "\n";
  std::cout << "solely-balanced:  "
            << (report.steiner ? (report.solely_balanced ? "yes" : "no") : "n/a")
            << "\n";
  if (report.repeated_blocks)
    std::cout << "note: a collection repeats a block\n";
  for (const auto& f : report.failures) {
    std::cout << "  [" << tradekit::to_string(f.kind) << "] ";
    if (!f.witness.empty()) {
      std::cout << "{";
      for (size_t i = 0; i < f.witness.size(); ++i)
        std::cout << (i ? "," : "") << family.label_of(f.witness[i]);
      std::cout << "} ";
    }
    if (!f.counts.empty()) {
      std::cout << "counts=(";
      for (size_t i = 0; i < f.counts.size(); ++i)
        std::cout << (i ? "," : "") << f.counts[i];
      std::cout << ") ";
    }
    std::cout << f.note << "\n";
  }
}

int threads_fallback(int cli_value) {
  if (cli_value > 0) return cli_value;
  if (const char* env = std::getenv("TRADEKIT_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 0;  // machine parallelism
}

struct ConstructArgs {
  std::string kind;
  int m = 0, k = 0, size = 0;
  std::string input, second, mode = "universal", out, recipe_out, format = "compact";
  std::vector<int> fresh;
  bool json = false;
};

int run_construct(const ConstructArgs& a) {
  using namespace tradekit;
  std::optional<Recipe> recipe;
  std::optional<TradeFamily> family;

  if (a.kind == "blowup") {
    TradeFamily in = parse_document(slurp(a.input));
    std::vector<int> fresh = a.fresh;
    if (fresh.empty()) {
      auto found = foundation(in);
      int next = found.empty() ? 0 : found.back() + 1;
      for (int i = 0; i < in.mu(); ++i) fresh.push_back(next + i);
    }
    family = blow_up(in, fresh);
  } else if (a.kind == "sum") {
    TradeFamily left = parse_document(slurp(a.input));
    TradeFamily right = parse_document(slurp(a.second));
    auto found = foundation(left);
    int offset = found.empty() ? 0 : found.back() + 1;
    family = disjoint_sum(left, relabel_offset(right, offset));
  } else if (a.kind == "pad") {
    TradeFamily in = parse_document(slurp(a.input));
    PaddingSpec spec;
    spec.mode = a.mode == "per-block" ? PadMode::PerBlock : PadMode::Universal;
    spec.extra = a.size;
    family = pad(in, spec);
  } else if (a.kind == "one-factor") {
    Recipe r;
    r.op = Recipe::Op::OneFactor;
    r.m = a.m;
    recipe = r;
  } else if (a.kind == "triples") {
    Recipe r;
    r.op = Recipe::Op::Triples;
    r.m = a.m;
    recipe = r;
  } else if (a.kind == "steiner23") {
    recipe = steiner_2_3_recipe(a.m);
  } else if (a.kind == "steiner24") {
    recipe = steiner_2_4_recipe(a.m);
  } else if (a.kind == "general2k") {
    recipe = general_2_k_recipe(a.m, a.k);
  } else {
    throw CLI::ValidationError("construct", "unknown construction: " + a.kind);
  }

  if (!family) family = replay(*recipe);
  VerificationReport report = verify(*family);
  if (!report.valid)
    throw Error("constructed family unexpectedly fails verification");

  Format fmt = a.json || a.format == "json" ? Format::Json : Format::Compact;
  std::string doc = serialize(*family, fmt);
  if (a.out.empty()) {
    std::cout << doc;
  } else {
    spill(a.out, doc);
    std::cerr << "witness written to " << a.out << "\n";
  }
  if (recipe) {
    std::string rpath = a.recipe_out;
    if (rpath.empty() && !a.out.empty()) rpath = a.out + ".recipe.json";
    if (!rpath.empty()) {
      spill(rpath, recipe->to_json());
      std::cerr << "recipe written to " << rpath << "\n";
    } else if (!a.json) {
      std::cerr << "recipe: " << recipe->to_json();
    }
  }
  std::cerr << "verified: volume " << family->volume() << ", k " << family->k()
            << ", t " << family->t() << ", steiner "
            << (report.steiner ? "yes" : "no") << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mu-way (v,k,t) trade toolkit: verification, constructions, "
               "exhaustive search certification, spectrum queries"};
  app.require_subcommand(1);

  // verify
  std::string verify_file;
  bool expect_steiner = false, expect_solely = false, verify_json = false;
  auto* cmd_verify = app.add_subcommand("verify", "check a trade document");
  cmd_verify->add_option("file", verify_file, "trade document (compact or json)")
      ->required();
  cmd_verify->add_flag("--steiner-expected", expect_steiner,
                       "also require the Steiner property");
  cmd_verify->add_flag("--solely-balanced", expect_solely,
                       "also require t-solely-balancedness");
  cmd_verify->add_flag("--json", verify_json, "emit a json report");

  // construct
  ConstructArgs ca;
  auto* cmd_construct =
      app.add_subcommand("construct", "build a verified witness");
  cmd_construct
      ->add_option("kind", ca.kind,
                   "blowup|sum|pad|one-factor|triples|steiner23|steiner24|"
                   "general2k")
      ->required();
  cmd_construct->add_option("--m", ca.m, "volume parameter");
  cmd_construct->add_option("--k", ca.k, "block size (general2k)");
  cmd_construct->add_option("--size", ca.size, "fresh elements per block (pad)");
  cmd_construct->add_option("--input", ca.input, "input trade document");
  cmd_construct->add_option("--second", ca.second, "second input (sum)");
  cmd_construct->add_option("--mode", ca.mode, "pad mode: per-block|universal");
  cmd_construct->add_option("--fresh", ca.fresh,
                            "explicit fresh element ids (blowup)");
  cmd_construct->add_option("-o,--out", ca.out, "output path (default stdout)");
  cmd_construct->add_option("--recipe", ca.recipe_out, "recipe output path");
  cmd_construct->add_option("--format", ca.format, "compact|json");
  cmd_construct->add_flag("--json", ca.json, "emit json on stdout");

  // search
  tradekit::SearchProblem sp;
  std::string search_mode = "first-witness", cert_out, witness_out;
  bool search_json = false, auto_bound = false;
  int threads_opt = 0;
  auto* cmd_search = app.add_subcommand(
      "search", "exhaustive backtracking search over a bounded domain");
  cmd_search->add_option("--mu", sp.mu, "number of collections (default 3)");
  cmd_search->add_option("--k", sp.k, "block size")->required();
  cmd_search->add_option("--t", sp.t, "balance level")->required();
  cmd_search->add_option("--m", sp.m, "volume")->required();
  cmd_search->add_flag("--steiner", sp.steiner, "restrict to Steiner trades");
  cmd_search->add_option("--max-found", sp.max_foundation,
                         "completeness domain: |foundation| bound");
  cmd_search->add_flag("--auto-bound", auto_bound,
                       "use foundation_bound(m,k) as the domain (t = 2 only)");
  cmd_search->add_option("--mode", search_mode,
                         "first-witness|count-classes|exhaustive-none");
  cmd_search->add_option("--limit-nodes", sp.max_nodes, "node budget");
  cmd_search->add_option("--limit-ms", sp.max_millis, "wall-clock budget");
  cmd_search->add_option("--threads", threads_opt,
                         "worker threads (env TRADEKIT_THREADS; default: all)");
  cmd_search->add_option("--certificate", cert_out,
                         "write the machine-readable certificate here");
  cmd_search->add_option("--witness", witness_out, "write a witness document");
  cmd_search->add_flag("--json", search_json, "emit the certificate on stdout");

  // spectrum
  int qmu = 3, qt = 0, qk = 0, qm = 0;
  bool qsteiner = false, spectrum_json = false;
  std::string replay_out;
  auto* cmd_spectrum = app.add_subcommand(
      "spectrum", "does a mu-way (v,k,t) trade of volume m exist?");
  cmd_spectrum->add_option("--mu", qmu, "number of collections (default 3)");
  cmd_spectrum->add_option("--t", qt, "balance level")->required();
  cmd_spectrum->add_option("--k", qk, "block size")->required();
  cmd_spectrum->add_option("--m", qm, "volume")->required();
  cmd_spectrum->add_flag("--steiner", qsteiner, "ask about Steiner trades");
  cmd_spectrum->add_option("--witness", replay_out,
                           "replay the recipe and write the witness here");
  cmd_spectrum->add_flag("--json", spectrum_json, "emit a json answer");

  // catalog
  std::string cat_action, cat_name, cat_format = "compact";
  auto* cmd_catalog = app.add_subcommand("catalog", "embedded trade corpus");
  cmd_catalog->add_option("action", cat_action, "list|show")->required();
  cmd_catalog->add_option("name", cat_name, "entry name (show)");
  cmd_catalog->add_option("--format", cat_format, "compact|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cmd_verify->parsed()) {
      tradekit::TradeFamily family =
          tradekit::parse_document(slurp(verify_file));
      tradekit::VerificationReport report = tradekit::verify(family);
      if (verify_json)
        std::cout << report_json(report).dump(2) << "\n";
      else
        print_report(family, report);
      bool ok = report.valid && (!expect_steiner || report.steiner) &&
                (!expect_solely || report.solely_balanced);
      return ok ? kExitOk : kExitNo;
    }

    if (cmd_construct->parsed()) return run_construct(ca);

    if (cmd_search->parsed()) {
      if (auto_bound) {
        if (sp.t != 2)
          throw tradekit::Error("--auto-bound applies to t = 2 searches only");
        sp.max_foundation = tradekit::foundation_bound(sp.m, sp.k);
      }
      if (sp.max_foundation <= 0)
        throw CLI::ValidationError("search",
                                   "--max-found (or --auto-bound) is required");
      if (search_mode == "first-witness")
        sp.mode = tradekit::SearchMode::FirstWitness;
      else if (search_mode == "count-classes")
        sp.mode = tradekit::SearchMode::CountClasses;
      else if (search_mode == "exhaustive-none")
        sp.mode = tradekit::SearchMode::ExhaustiveNone;
      else
        throw CLI::ValidationError("search", "unknown mode " + search_mode);
      sp.threads = threads_fallback(threads_opt);

      tradekit::SearchOutcome out = tradekit::search(sp);

      nlohmann::json cert;
      cert["problem"] = {{"mu", sp.mu},
                         {"k", sp.k},
                         {"t", sp.t},
                         {"m", sp.m},
                         {"steiner", sp.steiner},
                         {"max_foundation", sp.max_foundation},
                         {"mode", to_string(sp.mode)}};
      cert["outcome"] = {{"status", to_string(out.status)},
                         {"nodes", out.nodes},
                         {"wall_ms", out.wall_ms},
                         {"classes", out.witnesses.size()}};
      cert["note"] = out.certificate_note;
      cert["generator"] = "tradekit 0.1.0";
      std::string cert_text = cert.dump(2) + "\n";

      if (search_json)
        std::cout << cert_text;
      else {
        std::cout << "status:  " << to_string(out.status) << "\n";
        if (sp.mode == tradekit::SearchMode::CountClasses)
          std::cout << "classes: " << out.witnesses.size() << "\n";
        std::cout << "nodes:   " << out.nodes << "\n";
        std::cout << "wall:    " << out.wall_ms << " ms\n";
        std::cout << "note:    " << out.certificate_note << "\n";
      }
      if (!cert_out.empty()) {
        spill(cert_out, cert_text);
        std::cerr << "certificate written to " << cert_out << "\n";
      }
      if (!witness_out.empty() && !out.witnesses.empty()) {
        spill(witness_out,
              tradekit::serialize(out.witnesses.front(), tradekit::Format::Json));
        std::cerr << "witness written to " << witness_out << "\n";
      }
      return kExitOk;
    }

    if (cmd_spectrum->parsed()) {
      tradekit::SpectrumAnswer answer =
          tradekit::query(qmu, qt, qk, qm, qsteiner);
      if (spectrum_json) {
        nlohmann::json j;
        j["status"] = to_string(answer.status);
        j["citation"] = answer.citation;
        if (answer.recipe)
          j["recipe"] = nlohmann::json::parse(answer.recipe->to_json());
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << to_string(answer.status) << ": " << answer.citation
                  << "\n";
      }
      if (answer.status == tradekit::SpectrumStatus::Yes && !replay_out.empty()) {
        tradekit::TradeFamily w = tradekit::replay(answer);
        spill(replay_out, tradekit::serialize(w, tradekit::Format::Json));
        std::cerr << "witness written to " << replay_out << "\n";
      }
      switch (answer.status) {
        case tradekit::SpectrumStatus::Yes: return kExitOk;
        case tradekit::SpectrumStatus::No: return kExitNo;
        case tradekit::SpectrumStatus::Unknown: return kExitUnknown;
      }
    }

    if (cmd_catalog->parsed()) {
      if (cat_action == "list") {
        for (const auto& e : tradekit::load_all()) {
          std::cout << e.name << ": " << e.mu << "-way (k=" << e.k
                    << ", t=" << e.t << ") volume " << e.volume
                    << ", foundation " << e.foundation_size
                    << (e.steiner ? ", steiner" : "")
                    << (e.solely_balanced && *e.solely_balanced
                            ? ", solely-balanced"
                            : "")
                    << "\n    " << e.provenance << "\n";
          if (!e.repair_note.empty())
            std::cout << "    repair: " << e.repair_note << "\n";
        }
        return kExitOk;
      }
      if (cat_action == "show") {
        if (cat_name.empty())
          throw CLI::ValidationError("catalog", "show needs an entry name");
        const auto& e = tradekit::catalog_entry(cat_name);
        std::cout << tradekit::serialize(e.family,
                                         cat_format == "json"
                                             ? tradekit::Format::Json
                                             : tradekit::Format::Compact);
        return kExitOk;
      }
      throw CLI::ValidationError("catalog", "unknown action " + cat_action);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const tradekit::NotInSpectrum& e) {
    std::cerr << "No: " << e.what() << " [" << e.citation << "]\n";
    return kExitNo;
  } catch (const tradekit::SpectrumOpen& e) {
    std::cerr << "Unknown: " << e.what() << " [" << e.citation << "]\n";
    return kExitUnknown;
  } catch (const tradekit::SearchInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitInternal;
  } catch (const tradekit::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitNo;
  } catch (const tradekit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNo;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
