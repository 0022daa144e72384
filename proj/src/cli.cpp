#include "palper/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "palper/acceptance.hpp"
#include "palper/bwt.hpp"
#include "palper/census.hpp"
#include "palper/extremal_search.hpp"
#include "palper/seq_generators.hpp"
#include "palper/word_classes.hpp"
#include "palper/word_core.hpp"

namespace palper::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kResourceCap = 3;

struct CheckResult {
  bool pass = true;  // drives the exit code for predicate checks
  std::string text;  // one line, no trailing newline
  ordered_json json;
};

CheckResult run_predicate(const std::string& predicate, const Word& w) {
  CheckResult r;
  r.json["word"] = w.str();
  r.json["predicate"] = predicate;

  if (predicate == "is-pp") {
    auto witness = is_pal_periodicity(w);
    r.pass = witness.has_value();
    if (witness) {
      r.text = "yes p=" + witness->p.str() + " s=" + witness->s.str();
      r.json["result"] = true;
      r.json["p"] = witness->p.str();
      r.json["s"] = witness->s.str();
      r.json["period"] = witness->period();
    } else {
      r.text = "no";
      r.json["result"] = false;
    }
  } else if (predicate == "root") {
    const Word root = fractional_root(w);
    const bool sym = is_symmetric(root).has_value();
    r.text = "root=" + root.str() + " len=" + std::to_string(root.size()) +
             " symmetric=" + (sym ? "yes" : "no");
    r.json["root"] = root.str();
    r.json["len"] = root.size();
    r.json["symmetric"] = sym;
  } else if (predicate == "symmetric") {
    auto m = is_symmetric(w);
    r.pass = m.has_value();
    r.text = m ? "yes m=" + std::to_string(*m) : "no";
    r.json["result"] = m.has_value();
    if (m) r.json["m"] = *m;
  } else if (predicate == "sturmian") {
    if (w.empty())
      throw std::invalid_argument("sturmian needs a nonempty word");
    auto pair = pathological_pair(w);
    r.pass = !pair.has_value();
    if (pair) {
      std::ostringstream t;
      t << "no u=" << pair->u.str() << " 0u0@" << pair->pos_0u0 << " 1u1@"
        << pair->pos_1u1;
      r.text = t.str();
      r.json["result"] = false;
      r.json["u"] = pair->u.str();
      r.json["pos_0u0"] = pair->pos_0u0;
      r.json["pos_1u1"] = pair->pos_1u1;
    } else {
      r.text = "yes";
      r.json["result"] = true;
    }
  } else if (predicate == "trapezoidal") {
    r.pass = is_trapezoidal(w);
    r.text = r.pass ? "yes" : "no";
    r.json["result"] = r.pass;
  } else if (predicate == "rich") {
    r.pass = is_rich(w);
    r.text = r.pass ? "yes" : "no";
    r.json["result"] = r.pass;
  } else if (predicate == "closed") {
    r.pass = is_closed(w);
    r.text = r.pass ? "yes" : "no";
    r.json["result"] = r.pass;
  } else if (predicate == "central") {
    r.pass = is_central(w);
    r.text = r.pass ? "yes" : "no";
    r.json["result"] = r.pass;
  } else if (predicate == "palindrome") {
    r.pass = is_palindrome(w);
    r.text = r.pass ? "yes" : "no";
    r.json["result"] = r.pass;
  } else if (predicate == "periods") {
    std::ostringstream t;
    ordered_json arr = ordered_json::array();
    bool first = true;
    for (std::size_t p : periods(w)) {
      if (!first) t << ' ';
      t << p;
      arr.push_back(p);
      first = false;
    }
    r.text = t.str();
    r.json["periods"] = std::move(arr);
  } else {
    throw std::invalid_argument(
        "unknown predicate '" + predicate +
        "'; valid: is-pp root symmetric sturmian trapezoidal rich closed "
        "central palindrome periods");
  }
  return r;
}

census::StabilizationPolicy policy_from(std::size_t initial, std::size_t cap) {
  census::StabilizationPolicy policy;
  if (initial) policy.initial = initial;
  if (cap) policy.cap = cap;
  return policy;
}

std::vector<search::PatternFamily> forms_preset(const std::string& name) {
  auto words = [](std::initializer_list<const char*> items) {
    std::vector<Word> out;
    for (const char* item : items) out.push_back(Word::parse(item));
    return out;
  };
  if (name == "ternary8") {
    return {
        {words({"0"}), words({"012"}), words({"", "0", "01"})},
        {words({""}), words({"012"}),
         words({"", "0", "2", "3", "00", "01", "03", "011", "013"})},
        {words({""}), words({"0123"}), words({"", "0", "01", "012"})},
        {words({"0"}), words({"123"}), words({"", "1", "12"})},
    };
  }
  if (name == "binary43") {
    // Repeating blocks are the conjugates of the fourteen base blocks;
    // prefixes and suffixes are every binary word of length <= 5.
    std::vector<Word> blocks;
    for (const char* base :
         {"001011", "001101", "0001011", "0001101", "0010111", "0011101",
          "00001011", "00001101", "00010111", "00011101", "00101011",
          "00101111", "00110101", "00111101"}) {
      for (const Word& c : conjugates(Word::parse(base))) blocks.push_back(c);
    }
    std::vector<Word> xs;
    xs.push_back(Word{});
    for (std::size_t len = 1; len <= 5; ++len) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
        Word w;
        for (std::size_t i = 0; i < len; ++i)
          w.push_back(static_cast<Symbol>((mask >> (len - 1 - i)) & 1));
        xs.push_back(std::move(w));
      }
    }
    return {{xs, blocks, xs}};
  }
  throw std::invalid_argument("unknown preset; valid: ternary8 binary43");
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"palper: palindromic periodicities toolkit"};
  app.require_subcommand(1);

  int exit_code = kOk;

  // check ---------------------------------------------------------------
  auto* check = app.add_subcommand(
      "check", "decide a word predicate (is-pp, root, symmetric, sturmian, "
               "trapezoidal, rich, closed, central, palindrome, periods)");
  std::string predicate, check_word, check_file;
  bool check_json = false;
  check->add_option("predicate", predicate)->required();
  check->add_option("word", check_word);
  check->add_option("--file", check_file,
                    "read words from a file, one per line");
  check->add_flag("--json", check_json);
  check->callback([&] {
    if (check_file.empty() && check->count("word") == 0)
      throw std::invalid_argument("check needs a word or --file");
    std::vector<Word> inputs;
    if (!check_file.empty()) {
      std::ifstream in(check_file);
      if (!in)
        throw std::invalid_argument("cannot open " + check_file);
      std::string line;
      while (std::getline(in, line))
        if (!line.empty()) inputs.push_back(Word::parse(line));
    } else {
      inputs.push_back(Word::parse(check_word));
    }
    bool all_pass = true;
    ordered_json results = ordered_json::array();
    for (const Word& w : inputs) {
      CheckResult r = run_predicate(predicate, w);
      all_pass = all_pass && r.pass;
      if (check_json)
        results.push_back(std::move(r.json));
      else
        out << r.text << "\n";
    }
    if (check_json)
      out << (results.size() == 1 ? results[0].dump() : results.dump())
          << "\n";
    exit_code = all_pass ? kOk : kCheckFailed;
  });

  // bwt -----------------------------------------------------------------
  auto* bwt_cmd = app.add_subcommand("bwt", "Burrows-Wheeler transform");
  std::string bwt_word;
  int bwt_alphabet = 0;
  bool bwt_clustered = false, bwt_json = false;
  bwt_cmd->add_option("word", bwt_word)->required();
  bwt_cmd->add_option("--alphabet", bwt_alphabet,
                      "alphabet size for the clustering test "
                      "(default: largest symbol + 1)");
  bwt_cmd->add_flag("--clustered", bwt_clustered,
                    "also test perfect clustering; exit 1 if not clustered");
  bwt_cmd->add_flag("--json", bwt_json);
  bwt_cmd->callback([&] {
    const Word w = Word::parse(bwt_word);
    const Word b = bwt(w);
    const int k = bwt_alphabet > 0 ? bwt_alphabet : int(w.max_symbol()) + 1;
    if (bwt_clustered) {
      const bool clustered = is_perfectly_clustered(w, k);
      if (bwt_json) {
        ordered_json obj;
        obj["word"] = w.str();
        obj["bwt"] = b.str();
        obj["alphabet"] = k;
        obj["clustered"] = clustered;
        out << obj.dump() << "\n";
      } else {
        out << b.str() << " clustered=" << (clustered ? "yes" : "no") << "\n";
      }
      exit_code = clustered ? kOk : kCheckFailed;
    } else if (bwt_json) {
      ordered_json obj;
      obj["word"] = w.str();
      obj["bwt"] = b.str();
      out << obj.dump() << "\n";
    } else {
      out << b.str() << "\n";
    }
  });

  // generate --------------------------------------------------------------
  auto* gen = app.add_subcommand("generate",
                                 "emit a prefix or factor of a built-in word");
  std::string gen_name;
  std::size_t gen_len = 0, gen_start = 0;
  gen->add_option("name", gen_name)->required();
  gen->add_option("length", gen_len)->required();
  gen->add_option("--start", gen_start, "start index (default 0)");
  gen->callback([&] {
    out << seq::builtin(gen_name).factor(gen_start, gen_len).str() << "\n";
  });

  // census ----------------------------------------------------------------
  auto* census_cmd = app.add_subcommand(
      "census", "per-length palindromic-periodicity factor counts");
  std::string census_name, census_convention = "standard";
  std::size_t census_lo = 1, census_hi = 32, census_initial = 0,
              census_cap = 0;
  bool census_json = false, census_no_formula = false;
  census_cmd->add_option("name", census_name)->required();
  census_cmd->add_option("--from", census_lo);
  census_cmd->add_option("--to", census_hi);
  census_cmd->add_option("--convention", census_convention)
      ->check(CLI::IsMember({"standard", "literal"}));
  census_cmd->add_option("--initial", census_initial);
  census_cmd->add_option("--cap", census_cap);
  census_cmd->add_flag("--json", census_json, "JSON instead of CSV");
  census_cmd->add_flag("--no-formula", census_no_formula);
  census_cmd->callback([&] {
    auto rows =
        census::pp_census(seq::builtin(census_name), census_lo, census_hi,
                          policy_from(census_initial, census_cap));
    if (!census_no_formula) {
      census::TribonacciNumbers trib(
          census_convention == "literal"
              ? census::TribonacciNumbers::Convention::literal
              : census::TribonacciNumbers::Convention::standard);
      census::annotate(rows, census::formula_for(census_name), trib);
    }
    out << (census_json ? census::to_json_string(rows) + "\n"
                        : census::to_csv(rows));
  });

  // inventory ---------------------------------------------------------------
  auto* inv = app.add_subcommand(
      "inventory", "all palindromic-periodicity factors of a built-in word");
  std::string inv_name;
  std::size_t inv_probe = 64, inv_initial = 0, inv_cap = 0;
  bool inv_json = false, inv_max_only = false;
  inv->add_option("name", inv_name)->required();
  inv->add_option("--probe", inv_probe, "probe length (default 64)");
  inv->add_option("--initial", inv_initial);
  inv->add_option("--cap", inv_cap);
  inv->add_flag("--max-length", inv_max_only,
                "report only the maximum factor length and its witnesses");
  inv->add_flag("--json", inv_json);
  inv->callback([&] {
    const auto policy = policy_from(inv_initial, inv_cap);
    if (inv_max_only) {
      auto report =
          census::max_pp_factor(seq::builtin(inv_name), policy, inv_probe);
      if (inv_json) {
        ordered_json obj;
        obj["word"] = inv_name;
        obj["max_len"] = report.max_len;
        ordered_json arr = ordered_json::array();
        for (const Word& w : report.witnesses) arr.push_back(w.str());
        obj["witnesses"] = std::move(arr);
        out << obj.dump() << "\n";
      } else {
        out << "max_len=" << report.max_len;
        for (const Word& w : report.witnesses) out << ' ' << w.str();
        out << "\n";
      }
      return;
    }
    auto inv_words =
        census::pp_inventory(seq::builtin(inv_name), policy, inv_probe);
    if (inv_json) {
      ordered_json obj;
      obj["word"] = inv_name;
      obj["count"] = inv_words.size();
      ordered_json arr = ordered_json::array();
      for (const Word& w : inv_words) arr.push_back(w.str());
      obj["factors"] = std::move(arr);
      out << obj.dump() << "\n";
    } else {
      out << "count=" << inv_words.size() << "\n";
      for (const Word& w : inv_words) out << w.str() << "\n";
    }
  });

  // bounds ------------------------------------------------------------------
  auto* bounds = app.add_subcommand(
      "bounds", "verify the published census inequalities per length");
  std::string bounds_name;
  std::size_t bounds_lo = 1, bounds_hi = 50;
  bool bounds_json = false;
  bounds->add_option("name", bounds_name)->required();
  bounds->add_option("--from", bounds_lo);
  bounds->add_option("--to", bounds_hi);
  bounds->add_flag("--json", bounds_json);
  bounds->callback([&] {
    auto report = census::verify_bounds(bounds_name, bounds_lo, bounds_hi);
    if (bounds_json) {
      out << census::to_json_string(report) << "\n";
    } else {
      for (const auto& b : report.bounds) {
        out << b.label << " (n>=" << b.from
            << "): " << (b.violations.empty() ? "ok" : "VIOLATED");
        if (!b.violations.empty()) {
          out << " at";
          for (std::size_t n : b.violations) out << ' ' << n;
        }
        if (!b.equalities.empty()) {
          out << " equal_at";
          for (std::size_t n : b.equalities) out << ' ' << n;
        }
        out << "\n";
      }
    }
    exit_code = report.all_hold() ? kOk : kCheckFailed;
  });

  // search --------------------------------------------------------------
  auto* search_cmd =
      app.add_subcommand("search", "exhaustive extremal-word searches");
  search_cmd->require_subcommand(1);

  auto* longest = search_cmd->add_subcommand(
      "longest", "longest words with at most a given number of "
                 "palindromic-periodicity factors");
  std::size_t longest_threshold = 5, longest_cap = 12;
  std::string longest_alphabet = "growing";
  bool longest_json = false, longest_progress = false;
  longest->add_option("--threshold", longest_threshold)->required();
  longest->add_option("--cap", longest_cap, "length cap (default 12)");
  longest->add_option("--alphabet", longest_alphabet,
                      "growing or a fixed size 1..10");
  longest->add_flag("--json", longest_json);
  longest->add_flag("--progress", longest_progress,
                    "progress notes on stderr");
  longest->callback([&] {
    int fixed = 0;
    if (longest_alphabet != "growing") {
      fixed = std::stoi(longest_alphabet);
      if (fixed < 1 || fixed > kMaxAlphabet)
        throw std::invalid_argument("alphabet must be growing or 1..10");
    }
    auto report = search::bfs_longest(longest_threshold, longest_cap, fixed,
                                      longest_progress ? &err : nullptr);
    if (longest_json) {
      out << search::to_json_string(report) << "\n";
    } else {
      out << "closed=" << (report.closed ? "yes" : "no")
          << " final_length=" << report.final_length << " extremal=";
      for (std::size_t i = 0; i < report.extremal.size(); ++i)
        out << (i ? "," : "") << report.extremal[i].str();
      out << "\nfrontier";
      for (std::size_t s : report.frontier_sizes) out << ' ' << s;
      out << "\n";
    }
  });

  auto* periodic = search_cmd->add_subcommand(
      "periodic", "palindromic-periodicity factors of block^omega");
  std::string periodic_block;
  std::size_t periodic_mult = 8;
  bool periodic_json = false;
  periodic->add_option("block", periodic_block)->required();
  periodic->add_option("--cap-multiplier", periodic_mult);
  periodic->add_flag("--json", periodic_json);
  periodic->callback([&] {
    auto words =
        search::periodic_pp_set(Word::parse(periodic_block), periodic_mult);
    if (periodic_json) {
      ordered_json obj;
      obj["block"] = periodic_block;
      obj["count"] = words.size();
      ordered_json arr = ordered_json::array();
      for (const Word& w : words) arr.push_back(w.str());
      obj["factors"] = std::move(arr);
      out << obj.dump() << "\n";
    } else {
      out << "count=" << words.size() << "\n";
      for (const Word& w : words) out << w.str() << "\n";
    }
  });

  auto* forms = search_cmd->add_subcommand(
      "forms", "verify the structural forms of low-count survivors");
  std::string forms_preset_name;
  std::size_t forms_threshold = 0, forms_lo = 0, forms_hi = 0;
  bool forms_json = false;
  forms->add_option("--preset", forms_preset_name)
      ->required()
      ->check(CLI::IsMember({"ternary8", "binary43"}));
  forms->add_option("--threshold", forms_threshold);
  forms->add_option("--from", forms_lo);
  forms->add_option("--to", forms_hi);
  forms->add_flag("--json", forms_json);
  forms->callback([&] {
    std::size_t threshold = forms_threshold, lo = forms_lo, hi = forms_hi;
    int alphabet = 0;  // ternary families live over a growing alphabet
    if (forms_preset_name == "ternary8") {
      if (!threshold) threshold = 8;
      if (!lo) lo = 9;
      if (!hi) hi = 14;
    } else {
      // Short-period words (0^i, (01)^i, ...) stay under 43 pp factors up
      // to length 43, so the form characterization starts at length 44.
      if (!threshold) threshold = 43;
      if (!lo) lo = 44;
      if (!hi) hi = 48;
      alphabet = 2;
    }
    auto report = search::verify_structural_forms(
        threshold, lo, hi, forms_preset(forms_preset_name), alphabet);
    if (forms_json) {
      out << search::to_json_string(report) << "\n";
    } else {
      out << "checked=" << report.checked
          << " violations=" << report.violations.size() << "\n";
      for (const Word& w : report.violations) out << w.str() << "\n";
    }
    exit_code = report.violations.empty() ? kOk : kCheckFailed;
  });

  // count-a374495 ---------------------------------------------------------
  auto* count = app.add_subcommand(
      "count-a374495", "binary palindromic periodicities per length");
  std::size_t count_max = 21;
  count->add_option("--max", count_max, "largest length (default 21)");
  count->callback([&] {
    if (count_max < 1) throw std::invalid_argument("--max must be >= 1");
    if (count_max > 26)
      throw CapExceeded("counting 2^n words per length; --max above 26 is "
                        "not practical");
    for (std::size_t n = 1; n <= count_max; ++n)
      out << n << ',' << search::count_binary_pp_words(n) << "\n";
  });

  // verify-paper ------------------------------------------------------------
  auto* verify =
      app.add_subcommand("verify-paper", "run the full verification suite");
  bool verify_quick = false, verify_full = false, verify_deep = false;
  verify->add_flag("--quick", verify_quick, "trimmed ranges, a few seconds");
  verify->add_flag("--full", verify_full, "full ranges (the default)");
  verify->add_flag("--deep", verify_deep,
                   "also run the long binary threshold-29 search");
  verify->callback([&] {
    acceptance::Options options;
    options.quick = verify_quick && !verify_full;
    options.deep = verify_deep;
    exit_code = acceptance::run(options, out) ? kOk : kCheckFailed;
  });

  try {
    // CLI11 consumes a reversed, mutable copy.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      std::ostringstream help;
      const int rc = app.exit(e, help, help);
      out << help.str();
      return rc == 0 ? kOk : kUsage;
    }
    err << e.what() << "\n";
    return kUsage;
  }
  return exit_code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const CapExceeded& e) {
    err << "resource cap: " << e.what() << "\n";
    return kResourceCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace palper::cli
