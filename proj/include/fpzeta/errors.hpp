#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fpzeta {

// A request outside an operation's stated domain (wrong nilpotency class,
// dimension above the enumeration cap, oracle evaluated at an excluded
// prime, ...). Never a silently wrong value.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The node budget ran out. Counts are never reported partially.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(std::uint64_t budget, std::uint64_t nodes)
      : std::runtime_error("enumeration incomplete: node budget " +
                           std::to_string(budget) + " exhausted after " +
                           std::to_string(nodes) + " nodes"),
        budget_(budget) {}
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

}  // namespace fpzeta
