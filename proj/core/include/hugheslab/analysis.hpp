#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hugheslab/catalog.hpp"
#include "hugheslab/hughes.hpp"
#include "hugheslab/structure.hpp"

namespace hugheslab {

struct PrimeHughesSummary {
  unsigned p = 0;
  std::uint64_t order = 1;
  std::uint64_t index = 1;
};

struct FrobeniusSummary {
  std::uint64_t kernel_order = 1;
  std::uint64_t complement_order = 1;
  bool complement_is_prime = false;
  std::optional<unsigned> kernel_prime;
};

/// Per-group verdict: orders, per-prime Hughes data, the pi-classification,
/// structural certificates, and the list of violated invariants (empty when
/// every applicable check passed).
struct AnalysisReport {
  std::string name;
  std::uint64_t order = 1;
  PrimeSet group_primes;
  bool solvable = false;
  std::uint64_t exponent = 1;
  std::vector<PrimeHughesSummary> hughes_by_prime; // one per p in pi(G)
  PrimeSet requested_pi;                           // after ALL resolution
  std::uint64_t hpi_order = 1;
  PiCase classification = PiCase::Trivial;
  unsigned matching_prime = 0;
  bool exceptional = false;
  std::optional<FrobeniusSummary> frobenius;
  std::vector<std::string> violations;
};

struct AnalysisOptions {
  std::optional<PrimeSet> pi;       // nullopt = the ALL token (pi = pi(G))
  bool run_invariant_battery = true;
};

AnalysisReport analyze_group(const std::string& name, const PermGroup& G,
                             const AnalysisOptions& options = {});

/// Brute-force subgroup closure by pairwise multiplication, no stabilizer
/// chain anywhere: the independent oracle route for criterion-style
/// cross-checks. Returns the sorted element set of <seeds>.
std::vector<Perm> brute_force_closure(std::size_t degree,
                                      const std::vector<Perm>& seeds);

std::string report_to_json_line(const AnalysisReport& report);
std::string report_table_header();
std::string report_table_row(const AnalysisReport& report);

/// 0 clean, 1 any violation, 3 any Exceptional classification (takes
/// precedence, as a paper-significant finding rather than a violation).
int exit_code_for(const std::vector<AnalysisReport>& reports);

struct ScanOutcome {
  std::vector<std::string> lines;   // one report (or error) line per record
  std::size_t groups = 0;
  std::size_t violations = 0;
  std::size_t parse_errors = 0;
  bool exceptional = false;
  std::string summary_line;
  int exit_code = 0;
};

/// Analyze every record in a line-oriented catalog stream. Malformed lines
/// become error lines in place (fail-soft) and count as parse errors.
ScanOutcome scan_catalog_lines(const std::vector<std::string>& lines,
                               const AnalysisOptions& options = {},
                               bool table = false);

} // namespace hugheslab
