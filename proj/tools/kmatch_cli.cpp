// kmatch: command-line front end for the k-matching verification lab.

#include "kmatch/coeffs.hpp"
#include "kmatch/error.hpp"
#include "kmatch/fastcount.hpp"
#include "kmatch/graph.hpp"
#include "kmatch/harness.hpp"
#include "kmatch/oracle.hpp"
#include "kmatch/report.hpp"

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

using namespace kmatch;

int run_count(const std::string& graph_spec, int k, const std::string& gmode,
              const std::string& index, const std::string& format) {
  Graph g = load_graph_spec(graph_spec);
  FastCountOptions opts{parse_gmode(gmode), parse_index_convention(index)};
  CountResult r = fast_count(g, k, opts);
  if (format == "json")
    std::cout << r.to_json() << "\n";
  else
    std::cout << "N(" << k << ") = " << r.value << (r.is_integral ? "" : "  [non-integral]")
              << "  (n=" << r.n << ", " << opts.label() << ")\n";
  return 0;
}

int run_oracle(const std::string& graph_spec, int k, const std::string& what) {
  Graph g = load_graph_spec(graph_spec);
  ExactRat value;
  if (what == "matchings")
    value = ExactRat(count_k_matchings(g, k));
  else if (what == "directed")
    value = ExactRat(count_k_directed_matchings(g, k));
  else if (what == "rooks")
    value = ExactRat(count_rook_placements(g, k));
  else if (what == "lemma1")
    value = lemma1_sum(g, k);
  else
    throw input_error("unknown oracle '" + what + "'");
  nlohmann::ordered_json j;
  j["what"] = what;
  j["n"] = g.n();
  j["k"] = k;
  j["value"] = value.to_string();
  std::cout << j.dump() << "\n";
  return 0;
}

int run_coeffs(int k, const std::string& gmode, const std::string& what) {
  if (what == "g")
    std::cout << compute_gprime(k, parse_gmode(gmode)).to_json() << "\n";
  else if (what == "f")
    std::cout << compute_f(k)->to_json(k) << "\n";
  else
    throw input_error("unknown table '" + what + "' (expected g|f)");
  return 0;
}

int run_verify(const std::string& claim, std::optional<int> n_max, std::optional<int> k_max,
               std::uint64_t seed, const std::string& out, const std::string& format) {
  std::vector<ClaimId> claims;
  if (claim == "all")
    claims.assign(std::begin(all_claims), std::end(all_claims));
  else
    claims.push_back(parse_claim(claim));
  Budget budget;
  budget.n_max = n_max;
  budget.k_max = k_max;
  budget.seed = seed;
  auto report = verify_claims(claims, budget);
  write_report(report, parse_report_format(format), out);
  return 0;
}

int run_search(int n_max, int k_max, const std::string& out, const std::string& format) {
  auto report = discrepancy_search(n_max, k_max);
  write_report(report, parse_report_format(format), out);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification lab for a degree-power-sum k-matching counter"};
  app.require_subcommand(1);

  std::string graph_spec, gmode = "corrected", index = "corrected", format = "json";
  std::string what, claim = "all", out = "-";
  int k = 1;
  std::optional<int> n_max, k_max;
  std::uint64_t seed = 0;

  auto* count = app.add_subcommand("count", "Evaluate the fast formula for N(k)");
  count->add_option("--graph", graph_spec, "file | graph6:STR | gen:KIND:N[:P][:SEED]")->required();
  count->add_option("--k", k, "matching size")->required();
  count->add_option("--gmode", gmode, "g' base case: paper|corrected");
  count->add_option("--index", index, "partition ground set: paper|corrected");
  count->add_option("--format", format, "json|text");

  auto* oracle = app.add_subcommand("oracle", "Brute-force ground truth");
  std::string oracle_what = "matchings";
  oracle->add_option("--graph", graph_spec, "file | graph6:STR | gen:KIND:N[:P][:SEED]")->required();
  oracle->add_option("--k", k, "matching size")->required();
  oracle->add_option("--what", oracle_what, "matchings|directed|rooks|lemma1");

  auto* coeffs = app.add_subcommand("coeffs", "Dump a coefficient table as JSON");
  std::string coeff_what = "g";
  coeffs->add_option("--k", k, "table size")->required();
  coeffs->add_option("--gmode", gmode, "paper|corrected");
  coeffs->add_option("--what", coeff_what, "g|f");

  auto* verify = app.add_subcommand("verify", "Verify one claim (or all) over a budget");
  verify->add_option("--claim", claim, "claim id or 'all'");
  verify->add_option("--nmax", n_max, "maximum instance size");
  verify->add_option("--kmax", k_max, "maximum k / ground-set size");
  verify->add_option("--seed", seed, "seed for random instances");
  verify->add_option("--out", out, "output path, '-' for stdout");
  verify->add_option("--format", format, "json|csv|text");

  auto* search = app.add_subcommand("search", "Exhaustive end-to-end discrepancy search");
  int search_n = 0, search_k = 0;
  search->add_option("--nmax", search_n, "largest graph order")->required();
  search->add_option("--kmax", search_k, "largest k")->required();
  search->add_option("--out", out, "output path, '-' for stdout");
  search->add_option("--format", format, "json|csv|text");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*count)
      return run_count(graph_spec, k, gmode, index, format);
    if (*oracle)
      return run_oracle(graph_spec, k, oracle_what);
    if (*coeffs)
      return run_coeffs(k, gmode, coeff_what);
    if (*verify)
      return run_verify(claim, n_max, k_max, seed, out, format);
    if (*search)
      return run_search(search_n, search_k, out, format);
  } catch (const std::exception& e) {
    std::cerr << "kmatch: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
