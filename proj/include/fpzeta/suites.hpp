#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fpzeta/enumerate.hpp"
#include "fpzeta/jsonio.hpp"

namespace fpzeta {

// One (ring, oracle) pairing checked across a prime list.
struct SuiteEntry {
  std::string ring;
  std::map<std::string, long long> ring_params;
  Flavor flavor = Flavor::Ideal;
  Method method = Method::Brute;
  std::string oracle;  // closed_form name
  std::map<std::string, long long> oracle_params;
  std::vector<std::uint32_t> primes;
};

struct Suite {
  std::string name;
  std::string description;
  std::vector<SuiteEntry> entries;
};

// The named verification suites ("all" excludes the slow flagged runs).
const std::vector<Suite>& verify_suites();
const Suite* find_suite(const std::string& name);

struct VerifyOutcome {
  bool ok = true;
  int checked = 0;
  int mismatched = 0;
  std::vector<RunRecord> records;
  std::vector<std::string> lines;  // per-check report lines
};

// Runs every entry at every prime (override list replaces the defaults) and
// compares enumeration against the closed-form oracle.
VerifyOutcome run_suite(const Suite& suite,
                        const std::vector<std::uint32_t>& prime_override = {});

}  // namespace fpzeta
