#ifndef GBSP_BUDGET_HPP
#define GBSP_BUDGET_HPP

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace gbsp {

// Raised when an input is structurally too large for an algorithm (order
// caps) or when a subset-enumeration walk exceeds its work budget.
struct SizeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Counts units of subset-enumeration work (memo expansions, subsets visited)
// and fails cleanly once the cap is hit, so runaway inputs surface as a
// diagnosable error instead of an unbounded computation.
class WorkBudget {
 public:
  explicit WorkBudget(std::uint64_t limit) : limit_(limit) {}

  // Cap from GBS_WORK_BUDGET if set, otherwise a default that admits the
  // documented workloads (prisms of 10-vertex graphs, 20-vertex tensors).
  static WorkBudget from_env() {
    static constexpr std::uint64_t kDefault = 2'000'000'000ULL;
    if (const char* s = std::getenv("GBS_WORK_BUDGET")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(s, &end, 10);
      if (end && *end == '\0' && v > 0) return WorkBudget(v);
      throw std::invalid_argument("GBS_WORK_BUDGET must be a positive integer");
    }
    return WorkBudget(kDefault);
  }

  void tick(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > limit_)
      throw SizeError("work budget exceeded (" + std::to_string(limit_) +
                      " units); raise GBS_WORK_BUDGET or shrink the input");
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace gbsp

#endif  // GBSP_BUDGET_HPP
