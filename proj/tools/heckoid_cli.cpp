// Command-line front end: single queries (relator, seq, reduce, decide, epis)
// and corpus verification scans (verify). Results go to stdout, progress to
// stderr; exit code 0 = success, 1 = verification violation, 2 = usage or
// parse error. Output is deterministic byte for byte.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "heckoid/heckoid.hpp"
#include "heckoid/verify.hpp"

using heckoid::CyclicWord;
using heckoid::HeckoidContext;
using heckoid::Int;
using heckoid::Slope;
using heckoid::Word;
using json = nlohmann::ordered_json;

namespace {

Slope parse_slope(const std::string& text) { return Slope::from_string(text); }

Int parse_bound(const std::string& text) {
  return parse_slope(text).den() == 1 ? parse_slope(text).num()
                                      : throw std::invalid_argument("expected an integer: " + text);
}

json sseq_json(const heckoid::SSeq& s, bool cyclic) {
  json j;
  j["entries"] = s;
  j["cyclic"] = cyclic;
  return j;
}

int run_relator(const std::string& slope_text, bool as_json) {
  Slope r = parse_slope(slope_text);
  Word u = heckoid::relator_word(r);
  heckoid::SSeq s = heckoid::s_sequence(u);
  heckoid::CyclicSSeq cs = heckoid::cyclic_s_sequence(CyclicWord(u));
  bool has_t = heckoid::cf_from_slope(r).size() >= 2;
  bool has_dec = !r.is_integral() && r < Slope(1, 1);
  if (as_json) {
    json j;
    j["r"] = r.str();
    j["cf"] = heckoid::cf_from_slope(r).str();
    j["word"] = u.letters();
    j["length"] = u.size();
    j["S"] = sseq_json(s, false);
    j["CS"] = sseq_json(cs.entries(), true);
    if (has_t) j["T"] = sseq_json(heckoid::t_sequence(r), false);
    if (has_dec) {
      auto dec = heckoid::s_decomposition(r);
      j["S1"] = sseq_json(dec.s1, false);
      j["S2"] = sseq_json(dec.s2, false);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "r = " << r.str() << " = " << heckoid::cf_from_slope(r).str() << "\n";
  std::cout << "u_r = " << u.letters() << "  (length " << u.size() << ")\n";
  std::cout << "S(r) = " << heckoid::sseq_str(s) << "\n";
  std::cout << "CS(r) = " << cs.str() << "\n";
  if (has_t) std::cout << "T(r) = " << heckoid::sseq_str(heckoid::t_sequence(r)) << "\n";
  if (has_dec) {
    auto dec = heckoid::s_decomposition(r);
    std::cout << "S1 = " << heckoid::sseq_str(dec.s1)
              << ", S2 = " << heckoid::sseq_str(dec.s2) << "\n";
  }
  return 0;
}

int run_seq(const std::string& word_text, bool as_json) {
  Word v = Word::from_string(word_text);
  heckoid::SSeq s = heckoid::s_sequence(v);
  std::optional<heckoid::CyclicSSeq> cs;
  try {
    cs = heckoid::cyclic_s_sequence(CyclicWord(v));
  } catch (const std::invalid_argument&) {
  }
  if (as_json) {
    json j;
    j["word"] = v.letters();
    j["length"] = v.size();
    j["S"] = sseq_json(s, false);
    if (cs) j["CS"] = sseq_json(cs->entries(), true);
    j["cyclically_reduced"] = cs.has_value();
    j["cyclically_alternating"] = heckoid::is_cyclically_alternating(v);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "word = " << v.letters() << "  (length " << v.size() << ")\n";
  std::cout << "S = " << heckoid::sseq_str(s) << "\n";
  if (cs)
    std::cout << "CS = " << cs->str() << "\n";
  else
    std::cout << "CS = n/a (not cyclically reduced)\n";
  std::cout << "cyclically reduced: " << (cs ? "yes" : "no") << "\n";
  std::cout << "cyclically alternating: "
            << (heckoid::is_cyclically_alternating(v) ? "yes" : "no") << "\n";
  return 0;
}

int run_reduce(const std::string& s_text, const std::string& r_text, int n) {
  HeckoidContext ctx = heckoid::make_context(parse_slope(r_text), n);
  heckoid::Reduction red = ctx.farey().reduce(parse_slope(s_text));
  std::cout << red.canonical.str() << "\n";
  std::cout << "witness: " << heckoid::witness_str(red.witness) << "\n";
  return 0;
}

json null_homotopy_json(const HeckoidContext& ctx, const Slope& s) {
  heckoid::DecisionReport rep = heckoid::is_null_homotopic(ctx, s);
  json j;
  j["question"] = "null_homotopy";
  j["r"] = ctx.r().str();
  j["n"] = ctx.n();
  j["s"] = s.str();
  j["verdict"] = rep.verdict;
  j["canonical"] = rep.canonical.str();
  j["witness"] = heckoid::witness_str(rep.witness);
  j["method"] = heckoid::decision_method_str(rep.method);
  if (rep.certificate) j["certificate"] = *rep.certificate;
  j["consistent"] = rep.consistent;
  return j;
}

json epimorphism_json(const HeckoidContext& ctx, const Slope& s) {
  heckoid::EpimorphismReport rep = heckoid::epimorphism_exists(ctx, s);
  json j;
  j["question"] = "epimorphism";
  j["r"] = ctx.r().str();
  j["n"] = ctx.n();
  j["s"] = s.str();
  j["verdict"] = rep.verdict;
  j["disjunct"] = rep.disjunct == 1 ? "s" : rep.disjunct == 2 ? "s+1" : "none";
  j["canonical"] = rep.canonical_s.str();
  j["canonical_s_plus_1"] = rep.canonical_s_plus_one.str();
  j["witness"] = heckoid::witness_str(rep.witness);
  j["method"] = "FareyReduction";
  j["consistent"] = true;
  return j;
}

int run_decide(const std::string& s_text, const std::string& r_text, int n) {
  HeckoidContext ctx = heckoid::make_context(parse_slope(r_text), n);
  Slope s = parse_slope(s_text);
  json out = json::array();
  out.push_back(null_homotopy_json(ctx, s));
  if (!s.is_infinity()) out.push_back(epimorphism_json(ctx, s));
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_epis(const std::string& r_text, int n, const std::string& max_denom, int jobs,
             bool as_json) {
  HeckoidContext ctx = heckoid::make_context(parse_slope(r_text), n);
  Int bound = parse_bound(max_denom);
  std::cerr << "scanning slopes in [0,1) with denominator <= " << bound.str() << "\n";
  std::vector<Slope> found = heckoid::enumerate_epimorphism_slopes(ctx, bound, jobs);
  if (as_json) {
    json j;
    j["r"] = ctx.r().str();
    j["n"] = ctx.n();
    j["max_denominator"] = bound.str();
    j["slopes"] = json::array();
    for (const Slope& s : found) j["slopes"].push_back(s.str());
    std::cout << j.dump(2) << "\n";
  } else {
    for (const Slope& s : found) std::cout << s.str() << "\n";
  }
  return 0;
}

int run_verify(const std::string& selector, const std::string& r_text,
               const std::string& max_denom, const std::string& max_p, int depth,
               const std::string& indices_text, int jobs) {
  auto parse_indices = [&] {
    std::vector<int> out;
    std::string cur;
    for (char c : indices_text + ",") {
      if (c == ',') {
        if (!cur.empty()) out.push_back(std::stoi(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (out.empty()) throw std::invalid_argument("--n list must be nonempty");
    return out;
  };
  auto single_index = [&] {
    std::vector<int> list = parse_indices();
    if (list.size() != 1)
      throw std::invalid_argument("this selector takes a single --n value");
    return list[0];
  };

  if (selector == "lemmas") {
    long long p = parse_bound(max_p).convert_to<long long>();
    std::cerr << "checking relator structure for all q/p with p <= " << p << "\n";
    heckoid::WordLemmaReport rep = heckoid::verify_word_lemmas(p);
    std::cout << "lemmas max-p=" << p << ": checked " << rep.checked << " slopes, "
              << rep.shape_failures.size() + rep.induction_failures.size() +
                     rep.decomposition_failures.size()
              << " failures: " << (rep.pass() ? "PASS" : "FAIL") << "\n";
    for (const auto& f : rep.shape_failures) std::cout << "  shape: " << f << "\n";
    for (const auto& f : rep.induction_failures) std::cout << "  induction: " << f << "\n";
    for (const auto& f : rep.decomposition_failures)
      std::cout << "  decomposition: " << f << "\n";
    return rep.pass() ? 0 : 1;
  }

  if (selector == "smallcancel") {
    long long p = parse_bound(max_p).convert_to<long long>();
    std::vector<int> indices = parse_indices();
    std::cerr << "brute-force piece scan for all q/p with p <= " << p << "\n";
    heckoid::SmallCancellationReport rep =
        heckoid::verify_small_cancellation(p, indices, jobs);
    std::cout << "smallcancel max-p=" << p << ": checked " << rep.checked << " cases, "
              << rep.failures.size() << " failures: " << (rep.pass() ? "PASS" : "FAIL")
              << "\n";
    for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
    return rep.pass() ? 0 : 1;
  }

  HeckoidContext ctx = heckoid::make_context(parse_slope(r_text), single_index());
  if (selector == "prop51") {
    Int bound = parse_bound(max_denom);
    std::cerr << "scanning boundary intervals with denominator <= " << bound.str() << "\n";
    heckoid::Prop51Report rep = heckoid::verify_prop51(ctx, bound, jobs);
    std::cout << "prop51 r=" << ctx.r().str() << " n=" << ctx.n() << " max-denom="
              << bound.str() << ": scanned " << rep.scanned << " slopes, "
              << rep.violations.size() << " violations: " << (rep.pass() ? "PASS" : "FAIL")
              << "\n";
    for (const Slope& s : rep.violations) std::cout << "  violation at s = " << s.str() << "\n";
    return rep.pass() ? 0 : 1;
  }

  if (selector == "crosscheck") {
    Int bound = parse_bound(max_denom);
    std::cerr << "two-sided consistency scan, interval denominators <= " << bound.str()
              << ", orbit depth " << depth << "\n";
    heckoid::CrossCheckReport rep = heckoid::cross_check(ctx, bound, depth, 5 * bound, jobs);
    std::cout << "crosscheck r=" << ctx.r().str() << " n=" << ctx.n() << ": orbit "
              << rep.orbit_checked << ", interval " << rep.interval_checked << ", "
              << rep.inconsistencies.size()
              << " inconsistencies: " << (rep.pass() ? "PASS" : "FAIL") << "\n";
    for (const auto& f : rep.inconsistencies) std::cout << "  " << f << "\n";
    return rep.pass() ? 0 : 1;
  }

  throw CLI::ValidationError("selector must be one of: lemmas, smallcancel, prop51, crosscheck");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact decision procedures for even Heckoid groups of 2-bridge links"};
  app.require_subcommand(1);

  std::string s_text, r_text = "", word_text, selector;
  std::string max_denom = "100", max_p = "60", indices = "2,3";
  int n = 2, depth = 6, jobs = 0;
  bool as_json = false;

  auto* relator = app.add_subcommand("relator", "print the relator word and its sequences");
  relator->add_option("slope", s_text, "slope in (0, 1], e.g. 2/5 or [2,2]")->required();
  relator->add_flag("--json", as_json, "emit JSON");

  auto* seq = app.add_subcommand("seq", "print the S-sequences of a word over a, A, b, B");
  seq->add_option("word", word_text, "e.g. abaBAB")->required();
  seq->add_flag("--json", as_json, "emit JSON");

  auto* reduce = app.add_subcommand("reduce", "canonical representative of a slope");
  reduce->add_option("slope", s_text)->required();
  reduce->add_option("--r", r_text, "group slope r")->required();
  reduce->add_option("--n", n, "group index n >= 2")->required();

  auto* decide =
      app.add_subcommand("decide", "null-homotopy and epimorphism decisions as JSON");
  decide->add_option("slope", s_text)->required();
  decide->add_option("--r", r_text)->required();
  decide->add_option("--n", n)->required();

  auto* epis = app.add_subcommand("epis", "enumerate epimorphism-admitting slopes in [0,1)");
  epis->add_option("--r", r_text)->required();
  epis->add_option("--n", n)->required();
  epis->add_option("--max-denom", max_denom, "denominator bound");
  epis->add_option("--jobs", jobs, "parallel workers (0 = machine parallelism)");
  epis->add_flag("--json", as_json, "emit JSON instead of one slope per line");

  auto* verify = app.add_subcommand("verify", "corpus verification scans");
  verify->add_option("selector", selector, "lemmas | smallcancel | prop51 | crosscheck")
      ->required();
  verify->add_option("--r", r_text, "group slope for prop51/crosscheck");
  verify->add_option("--n", indices,
                     "group index (prop51/crosscheck) or index list (smallcancel), e.g. 2,3");
  verify->add_option("--max-denom", max_denom);
  verify->add_option("--max-p", max_p, "denominator bound for lemmas/smallcancel");
  verify->add_option("--depth", depth, "orbit search depth for crosscheck");
  verify->add_option("--jobs", jobs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (relator->parsed()) return run_relator(s_text, as_json);
    if (seq->parsed()) return run_seq(word_text, as_json);
    if (reduce->parsed()) return run_reduce(s_text, r_text, n);
    if (decide->parsed()) return run_decide(s_text, r_text, n);
    if (epis->parsed()) return run_epis(r_text, n, max_denom, jobs, as_json);
    if (verify->parsed())
      return run_verify(selector, r_text, max_denom, max_p, depth, indices, jobs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
