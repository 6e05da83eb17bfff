#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fpzeta/enumerate.hpp"
#include "fpzeta/interpolate.hpp"
#include "fpzeta/zetapoly.hpp"

namespace fpzeta {

// One completed computation. Incomplete runs never produce a record.
struct RunRecord {
  std::string ring;
  std::map<std::string, long long> params;
  std::uint32_t p = 0;
  Flavor flavor = Flavor::Ideal;
  Method method = Method::Brute;
  std::vector<BigInt> coefficients;
  // meta: excluded from golden comparison
  std::int64_t elapsed_ms = 0;
  std::uint64_t nodes = 0;
};

// Canonical JSON with fixed key order:
// {"ring":...,"params":{...},"p":...,"flavor":...,"method":...,
//  "coefficients":[...],"meta":{"elapsed_ms":...,"nodes":...}}
// Coefficients are exact integers (raw tokens, arbitrary precision).
std::string to_json(const RunRecord& record, bool with_meta = true);

// Canonical JSON array of records without meta, one per line-free payload;
// byte-identical across runs on identical inputs.
std::string records_to_json(const std::vector<RunRecord>& records);

// Per-coefficient uniformity report for one scan.
struct ScanReport {
  std::string ring;
  std::map<std::string, long long> params;
  Flavor flavor = Flavor::Ideal;
  std::vector<std::uint32_t> primes;
  int degree_bound = 0;
  std::optional<unsigned> modulus;
  std::vector<CoefficientFit> fits;  // index = coefficient k
};

std::string to_json(const ScanReport& report);

}  // namespace fpzeta
