#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hugheslab {

/// One provable filter applied to a candidate prime pair (p, q): p the
/// complement order, q the kernel prime. `citation` names the theorem the
/// filter rests on.
struct FilterOutcome {
  std::string name;
  bool rejected = false;
  std::string citation;
  std::string detail;
};

/// Verdict for the candidate hunt: does a Frobenius group FA with nonabelian
/// q-group kernel F, 1 < H_q(F) < F, and complement of prime order p exist
/// with |F| below the bound? Each filter reports pass/reject with its
/// citation; the pair is rejected iff at least one filter rejects.
struct QuestionVerdict {
  unsigned p = 0;
  unsigned q = 0;
  std::uint64_t kernel_order_bound = 0; // 0 = unbounded
  std::vector<FilterOutcome> filters;
  bool rejected = false;
  // Populated when the pair survives:
  unsigned minimal_exponent = 0;          // n with |F| = q^n
  std::uint64_t minimal_kernel_order = 0; // q^n (saturating)
  std::vector<std::string> obligations;
};

/// Throws InvalidArgumentError unless p and q are distinct primes.
QuestionVerdict question_prefilter(unsigned p, unsigned q,
                                   std::uint64_t max_kernel_order);

std::string verdict_to_json_line(const QuestionVerdict& v);
std::string verdict_table_header();
std::string verdict_table_row(const QuestionVerdict& v);

struct HuntSummary {
  std::uint64_t kernel_order_bound = 0;
  unsigned p_max = 0;
  unsigned q_max = 0;
  std::size_t pairs = 0;
  std::size_t rejected = 0;
  std::vector<QuestionVerdict> survivors;
  std::string certificate; // one-line statement of the outcome
};

/// Iterate all prime pairs p <= p_max, q <= q_max, p != q, in increasing
/// (p, q) order, and collect verdicts. Deterministic.
std::vector<QuestionVerdict> hunt(std::uint64_t max_kernel_order,
                                  unsigned p_max, unsigned q_max);
HuntSummary summarize_hunt(const std::vector<QuestionVerdict>& verdicts,
                           std::uint64_t max_kernel_order,
                           unsigned p_max, unsigned q_max);
std::string summary_to_json_line(const HuntSummary& s);

} // namespace hugheslab
