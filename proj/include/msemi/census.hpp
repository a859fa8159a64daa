#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "msemi/multiop.hpp"

namespace msemi {

struct WilsonInterval {
  double low = 0.0, high = 1.0;
};
/// Wilson 95% score interval for successes/samples.
WilsonInterval wilson(std::uint64_t successes, std::uint64_t samples);

struct CensusReport {
  int n = 0;
  bool exhaustive = false;
  std::uint64_t samples = 0;  // total table count when exhaustive
  std::uint64_t count_associative = 0;
  std::uint64_t count_hypergroup = 0;
  std::uint64_t count_Z = 0;  // all triple unions equal the full carrier
  std::uint64_t seed = 0;     // 0 for exhaustive runs
  double elapsed_seconds = 0.0;

  double fraction_associative() const {
    return samples ? double(count_associative) / double(samples) : 0.0;
  }
  double fraction_hypergroup() const {
    return samples ? double(count_hypergroup) / double(samples) : 0.0;
  }
};

/// A uniformly random multivalued operation: each of the n^3 membership bits
/// is independently 1 with probability 1/2.  Deterministic per (n, seed):
/// the generator is std::mt19937_64 seeded with splitmix64(seed), consuming
/// one 64-bit word per 64-bit block of each cell, cells filled row-major over
/// (a, b) and blocks low to high (only the low n mod 64 bits of the last
/// block are kept).
MultiOp random_multiop(int n, std::uint64_t seed);

/// Biased variant: each cell block is the OR of `or_rounds` engine words, so
/// bits are 1 with probability 1 - 2^-or_rounds.  Same consumption order.
/// Test tooling; the census estimator always uses the density-1/2 sampler.
MultiOp random_multiop_biased(int n, std::uint64_t seed, int or_rounds);

/// Substream seed for sample i of a run started from `seed` (splitmix64 of
/// seed + (i+1) * 0x9E3779B97F4A7C15).
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t sample_index);

/// Exact counts over all 2^(n^3) multivalued operations.  n <= 2 is always
/// allowed; n = 3 scans 2^27 tables and must be explicitly enabled via
/// allow_big; larger n is a resource_error.
CensusReport exhaustive_census(int n, bool allow_big = false);

/// Monte-Carlo estimates at density 1/2 with per-sample substreams (parallel
/// and serial runs aggregate identically).  The work budget caps
/// samples * n^5 / 64; exceeding it is a resource_error.
CensusReport estimate_fractions(int n, std::uint64_t samples, std::uint64_t seed,
                                double work_budget = 2.0e11);

struct SingleValuedCensus {
  int n = 0;
  std::uint64_t total = 0;
  std::uint64_t count_associative = 0;
};
/// Exact count of associative single-valued operations among n^(n^2); n <= 3.
SingleValuedCensus single_valued_census(int n);

/// Flat JSON record of a report.
std::string to_json(const CensusReport& r);

}  // namespace msemi
