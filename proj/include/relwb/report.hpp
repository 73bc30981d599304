#pragma once
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace relwb {

// thrown when a construction or search would exceed its configured budget
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// thrown on bad arguments / malformed input
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Counterexample {
  std::string axiomId;   // which axiom / clause failed
  std::string witness;   // human-readable witness (atoms, tuples, indices)
  std::string lhs, rhs;  // evaluated sides where meaningful
};

struct CheckReport {
  std::string name;
  bool passed = true;
  std::vector<Counterexample> counterexamples;
  std::map<std::string, uint64_t> stats;
  std::map<std::string, int> storedPerAxiom;  // bookkeeping for the cap

  void fail(std::string axiomId, std::string witness,
            std::string lhs = "", std::string rhs = "") {
    passed = false;
    // keep reports bounded per clause so a noisy clause cannot shadow the
    // others; stats track the true count
    if (storedPerAxiom[axiomId]++ < 16)
      counterexamples.push_back({std::move(axiomId), std::move(witness),
                                 std::move(lhs), std::move(rhs)});
    ++stats["failures"];
  }
  void merge(const CheckReport& o) {
    passed = passed && o.passed;
    for (const auto& c : o.counterexamples)
      if (storedPerAxiom[c.axiomId]++ < 16) counterexamples.push_back(c);
    for (const auto& [k, v] : o.stats) stats[k] += v;
  }
};

} // namespace relwb
