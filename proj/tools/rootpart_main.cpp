// Command line front end: verify the identities over a range, tabulate the
// part-count statistic, trace one application of any map, and print
// partition counts. Exit status is 0 on success, 1 when a verification
// fails, 2 on usage or input errors.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rootpart/counting.hpp"
#include "rootpart/format.hpp"
#include "rootpart/numtheory.hpp"
#include "rootpart/trace.hpp"
#include "rootpart/verify.hpp"

namespace {

using namespace rootpart;

int sieve_limit_from_env() {
  const char* raw = std::getenv("ROOTPART_SIEVE_LIMIT");
  if (raw == nullptr) return SpfTable::kDefaultLimit;
  const std::string text(raw);
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos ||
      text.size() > 8)
    throw std::invalid_argument("ROOTPART_SIEVE_LIMIT must be an integer >= 2");
  const int value = std::stoi(text);
  if (value < 2)
    throw std::invalid_argument("ROOTPART_SIEVE_LIMIT must be an integer >= 2");
  return value;
}

// the sieve covers at least `needed` regardless of the configured limit
SpfTable make_table(int needed) {
  return SpfTable(std::max(sieve_limit_from_env(), needed));
}

std::set<Identity> parse_selection(const std::vector<std::string>& names) {
  if (names.empty()) return all_identities();
  static const std::map<std::string, Identity> lookup = {
      {"a", Identity::a}, {"b", Identity::b}, {"c", Identity::c},
      {"d", Identity::d}, {"fine", Identity::fine}};
  std::set<Identity> out;
  for (const auto& name : names) out.insert(lookup.at(name));
  return out;
}

void print_pretty(const SuiteResult& result) {
  std::printf("identity  %5s  %12s  %12s  %-4s  %s\n", "n", "lhs", "rhs", "", "ms");
  for (const auto& row : result.reports)
    std::printf("%-8s  %5d  %12lld  %12lld  %-4s  %.3f\n", name_of(row.identity),
                row.n, row.lhs, row.rhs, row.passed ? "ok" : "FAIL", row.elapsed_ms);
  if (!result.structural.empty()) std::printf("\nstructural checks\n");
  for (const auto& row : result.structural)
    std::printf("%-12s  %5d  %-4s  %.3f\n", structural_label(row).c_str(), row.n,
                row.passed ? "ok" : "FAIL", row.elapsed_ms);
  std::printf("\n%s\n", result.all_passed ? "all passed" : "FAILURES");
}

int run_verify(int max_n, int structural_max_n, const std::vector<std::string>& names,
               const std::string& format) {
  const SpfTable spf = make_table(max_n + 3);
  const SuiteResult result = run_suite(spf, max_n, structural_max_n,
                                       parse_selection(names));
  if (format == "tsv") {
    std::cout << to_tsv(result);
    for (const auto& row : result.structural)
      std::cerr << "# structural\t" << structural_label(row) << '\t' << row.n << '\t'
                << (row.passed ? "true" : "false") << '\n';
  } else if (format == "json") {
    std::cout << to_json(result);
  } else {
    print_pretty(result);
  }
  return result.all_passed ? 0 : 1;
}

int run_table(int n, int r, int k_lo, int k_hi, const std::string& format) {
  if (k_hi == 0) k_hi = std::max(n, 1);
  if (k_lo < 1 || k_hi < k_lo) {
    std::cerr << "error: need 1 <= min-k <= max-k\n";
    return 2;
  }
  const auto grid = statistic_grid(n, r, k_lo, k_hi);
  if (format == "tsv") {
    std::cout << "n\tk\tr\tvalue\n";
    for (const auto& row : grid)
      std::cout << row.n << '\t' << row.k << '\t' << row.r << '\t' << row.value << '\n';
  } else if (format == "json") {
    std::cout << "{\"n\":" << n << ",\"r\":" << r << ",\"rows\":[";
    for (std::size_t i = 0; i < grid.size(); ++i)
      std::cout << (i ? "," : "") << "{\"k\":" << grid[i].k
                << ",\"value\":" << grid[i].value << "}";
    std::cout << "]}\n";
  } else {
    std::printf("part-count statistic, n=%d, min part %d\n", n, r);
    for (const auto& row : grid)
      std::printf("k=%-4d %lld\n", row.k, row.value);
  }
  return 0;
}

int run_count(int n, int max_n, int min_part, bool single, bool range,
              const std::string& format) {
  if (single == range) {
    std::cerr << "error: give exactly one of --n and --max-n\n";
    return 2;
  }
  const int lo = single ? n : 0;
  const int hi = single ? n : max_n;
  const auto counts = partition_count_table(hi, min_part);
  if (format == "tsv") {
    std::cout << "n\tmin_part\tcount\n";
    for (int m = lo; m <= hi; ++m)
      std::cout << m << '\t' << min_part << '\t' << counts[m] << '\n';
  } else if (format == "json") {
    std::cout << "{\"min_part\":" << min_part << ",\"rows\":[";
    for (int m = lo; m <= hi; ++m)
      std::cout << (m > lo ? "," : "") << "{\"n\":" << m << ",\"count\":" << counts[m]
                << "}";
    std::cout << "]}\n";
  } else if (single) {
    std::cout << counts[n] << '\n';
  } else {
    for (int m = lo; m <= hi; ++m) std::printf("n=%-4d %lld\n", m, counts[m]);
  }
  return 0;
}

int run_trace(const std::string& map, const std::string& text) {
  if (map == "a") {
    std::cout << trace_map_a(parse_rooted(text));
  } else if (map == "a-inv") {
    std::cout << trace_inv_a(parse_image(text));
  } else if (map == "b") {
    std::cout << trace_map_b(parse_partition(text));
  } else if (map == "b-inv") {
    std::cout << trace_inv_b(parse_image(text));
  } else if (map == "c") {
    const RootedPartition rho = parse_rooted(text);
    std::cout << trace_involution_c(make_table(static_cast<int>(rho.weight()) + 2), rho);
  } else {
    const QElement q = parse_q_element(text);
    std::cout << trace_involution_d(make_table(static_cast<int>(q.parameter()) + 4), q);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rooted partition identities toolkit"};
  app.require_subcommand(1);

  const std::vector<std::string> formats = {"pretty", "tsv", "json"};

  auto* verify = app.add_subcommand("verify", "check the identities over a range of n");
  int max_n = 60, structural_max_n = 25;
  std::vector<std::string> identities;
  std::string verify_format = "pretty";
  verify->add_option("--max-n", max_n, "largest n for the identity reports")
      ->check(CLI::Range(0, 300));
  verify->add_option("--structural-max-n", structural_max_n,
                     "largest n for the bijection and involution audits")
      ->check(CLI::Range(0, 60));
  verify->add_option("--identity", identities, "restrict to these identities")
      ->check(CLI::IsMember({"a", "b", "c", "d", "fine"}));
  verify->add_option("--format", verify_format, "output format")
      ->check(CLI::IsMember(formats));

  auto* table = app.add_subcommand("table", "tabulate the part-count statistic");
  int table_n = 0, table_r = 1, k_lo = 1, k_hi = 0;
  std::string table_format = "pretty";
  table->add_option("--n", table_n, "weight to tabulate")->required()
      ->check(CLI::Range(0, 300));
  table->add_option("--r", table_r, "minimum part")->check(CLI::Range(1, 300));
  table->add_option("--min-k", k_lo, "first k")->check(CLI::Range(1, 10000));
  table->add_option("--max-k", k_hi, "last k (default n)")->check(CLI::Range(1, 10000));
  table->add_option("--format", table_format, "output format")
      ->check(CLI::IsMember(formats));

  auto* trace = app.add_subcommand("trace", "show one application of a map");
  std::string trace_map;
  std::vector<std::string> trace_input;
  trace->add_option("map", trace_map, "one of a, a-inv, b, b-inv, c, d")->required()
      ->check(CLI::IsMember({"a", "a-inv", "b", "b-inv", "c", "d"}));
  trace->add_option("input", trace_input, "partition text, with residue for inverses")
      ->expected(-1);

  auto* count = app.add_subcommand("count", "print partition counts");
  int count_n = 0, count_max_n = 0, count_min_part = 1;
  std::string count_format = "pretty";
  auto* count_n_opt = count->add_option("--n", count_n, "single weight")
      ->check(CLI::Range(0, 400));
  auto* count_max_opt = count->add_option("--max-n", count_max_n, "all weights up to this")
      ->check(CLI::Range(0, 400));
  count->add_option("--min-part", count_min_part, "minimum part")
      ->check(CLI::Range(1, 400));
  count->add_option("--format", count_format, "output format")
      ->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(verify))
      return run_verify(max_n, structural_max_n, identities, verify_format);
    if (app.got_subcommand(table))
      return run_table(table_n, table_r, k_lo, k_hi, table_format);
    if (app.got_subcommand(count))
      return run_count(count_n, count_max_n, count_min_part,
                       count_n_opt->count() > 0, count_max_opt->count() > 0,
                       count_format);
    std::string joined;
    for (const auto& word : trace_input) {
      if (!joined.empty()) joined += ' ';
      joined += word;
    }
    return run_trace(trace_map, joined);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
