// Acceptance gate: one line per criterion, exit 0 only if every line is PASS.
// Usage: acceptance <cli-path> <golden-dir>
#include <rootpart/counting.hpp>
#include <rootpart/enumerate.hpp>
#include <rootpart/verify.hpp>

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = false;
  std::string detail;
};

bool g_all_passed = true;

void run_criterion(int number, const std::string& title, double budget_seconds,
                   const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (outcome.passed && budget_seconds > 0 && seconds >= budget_seconds) {
    outcome.passed = false;
    outcome.detail = "over time budget";
  }
  std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", outcome.passed ? "PASS" : "FAIL", number,
              title.c_str(), seconds, outcome.detail.empty() ? "" : " ",
              outcome.detail.c_str());
  std::fflush(stdout);
  g_all_passed = g_all_passed && outcome.passed;
}

Outcome sweep_identity(const rootpart::SpfTable& spf, rootpart::Identity id, int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    const auto report = rootpart::check_identity(spf, id, n);
    if (!report.passed) {
      std::ostringstream detail;
      detail << "mismatch at n=" << n << " lhs=" << report.lhs << " rhs=" << report.rhs;
      return {false, detail.str()};
    }
  }
  return {true, ""};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string capture_stdout(const std::string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr)
    throw std::runtime_error("popen failed for: " + command);
  std::string output;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    output.append(buffer.data(), got);
  const int status = pclose(pipe);
  if (WEXITSTATUS(status) != 0)
    throw std::runtime_error("nonzero exit for: " + command);
  return output;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::fprintf(stderr, "usage: %s <cli-path> <golden-dir>\n", argv[0]);
    return 2;
  }
  const std::string cli = argv[1];
  const std::string golden_dir = argv[2];
  const rootpart::SpfTable spf(1000);

  run_criterion(1, "ones-count identity exact for n in 0..60", 5.0, [&]() -> Outcome {
    const auto at_four = rootpart::check_identity(spf, rootpart::Identity::a, 4);
    if (at_four.lhs != 7)
      return {false, "expected 7 ones across the partitions of 4"};
    return sweep_identity(spf, rootpart::Identity::a, 60);
  });

  run_criterion(2, "half-totient identity exact for n in 0..60, contributing totients even",
                5.0, [&]() -> Outcome {
                  const auto counts = rootpart::partition_count_table(63, 3);
                  for (int n = 0; n <= 60; ++n)
                    for (int k = 2; k <= n + 3; ++k) {
                      if (rootpart::statistic_from_table(counts, n + 3, k, 3) == 0)
                        continue;
                      if (spf.totient(k) % 2 != 0) {
                        std::ostringstream detail;
                        detail << "odd totient at n=" << n << " k=" << k;
                        return {false, detail.str()};
                      }
                    }
                  return sweep_identity(spf, rootpart::Identity::b, 60);
                });

  run_criterion(3, "moebius identity exact for n in 0..60", 5.0, [&]() -> Outcome {
    return sweep_identity(spf, rootpart::Identity::c, 60);
  });

  run_criterion(4, "negated moebius identity exact for n in 0..60", 5.0, [&]() -> Outcome {
    return sweep_identity(spf, rootpart::Identity::d, 60);
  });

  run_criterion(5, "run-count vs multiplicity-count per part value, n in 0..40, all k", 20.0,
                [&]() -> Outcome {
                  for (int n = 0; n <= 40; ++n)
                    for (int k = 1; k <= n + 1; ++k) {
                      const auto report = rootpart::check_fine(n, k);
                      if (!report.passed) {
                        std::ostringstream detail;
                        detail << "mismatch at n=" << n << " k=" << k << " lhs=" << report.lhs
                               << " rhs=" << report.rhs;
                        return {false, detail.str()};
                      }
                    }
                  return {true, ""};
                });

  run_criterion(6, "both totient bijections audited for n in 0..25", 30.0, [&]() -> Outcome {
    for (int n = 0; n <= 25; ++n) {
      if (!rootpart::check_bijection_a(n))
        return {false, "ones-side map failed at n=" + std::to_string(n)};
      if (!rootpart::check_bijection_b(n))
        return {false, "small-parts map failed at n=" + std::to_string(n)};
    }
    return {true, ""};
  });

  run_criterion(7, "both sign-reversing involutions audited for n in 0..25", 30.0,
                [&]() -> Outcome {
                  for (int n = 0; n <= 25; ++n) {
                    if (!rootpart::check_involution_c(spf, n))
                      return {false, "trailing-run involution failed at n=" + std::to_string(n)};
                    if (!rootpart::check_involution_d(spf, n))
                      return {false, "two-universe involution failed at n=" + std::to_string(n)};
                  }
                  return {true, ""};
                });

  run_criterion(8, "statistic table matches direct enumeration, n in 0..40, r in 1..3", 20.0,
                [&]() -> Outcome {
                  for (int r = 1; r <= 3; ++r) {
                    const auto counts = rootpart::partition_count_table(40, r);
                    for (int n = 0; n <= 40; ++n) {
                      std::vector<long long> tally(n + 2, 0);
                      for (const auto& partition : rootpart::PartitionRange(n, r))
                        for (int part : partition.parts())
                          ++tally[part];
                      for (int k = 1; k <= n + 1; ++k)
                        if (rootpart::statistic_from_table(counts, n, k, r) != tally[k]) {
                          std::ostringstream detail;
                          detail << "mismatch at n=" << n << " k=" << k << " r=" << r;
                          return {false, detail.str()};
                        }
                    }
                  }
                  return {true, ""};
                });

  run_criterion(9, "trace output byte-identical to recorded transcripts", 0.0,
                [&]() -> Outcome {
                  const struct {
                    const char* map;
                    const char* input;
                    const char* file;
                  } cases[] = {
                      {"a", "4,4,2,1,1,^1,1,1", "trace_a.txt"},
                      {"a-inv", "4,4,2,^2,2,2 r=1", "trace_a_inv.txt"},
                      {"b", "4,4,3,2,2,1,1", "trace_b.txt"},
                      {"b-inv", "4,4,3,^3,3,3 r=1", "trace_b_inv.txt"},
                      {"c", "3,3,2,^2,2,2,1,1", "trace_c.txt"},
                      {"c", "3,3,2,1,1,^1,1,1,1,1,1", "trace_c_back.txt"},
                  };
                  for (const auto& row : cases) {
                    const std::string command = cli + " trace " + row.map + " \"" + row.input +
                                               "\" 2>/dev/null";
                    const std::string actual = capture_stdout(command);
                    const std::string expected = read_file(golden_dir + "/" + row.file);
                    if (actual != expected)
                      return {false, std::string("transcript differs for ") + row.file};
                  }
                  return {true, ""};
                });

  std::printf("%s\n", g_all_passed ? "acceptance: all criteria passed"
                                   : "acceptance: FAILURES above");
  return g_all_passed ? 0 : 1;
}
