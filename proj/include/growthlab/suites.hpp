#pragma once

// Randomized verification suites over admissible inputs. Each trial draws its
// own sub-stream of the seed, so results do not depend on thread counts.

#include <cstdint>
#include <string>
#include <vector>

#include "growthlab/random.hpp"
#include "growthlab/report_io.hpp"

namespace growthlab {

struct SuiteOptions {
  std::size_t trials = 0;  // 0: the suite's default
  std::uint64_t seed = 1;
  WorkLimits limits;
  std::vector<std::uint32_t> primes;  // empty: the suite's default
};

struct SuiteResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t passes = 0;
  std::size_t skipped = 0;  // inadmissible draws or constructions that did not apply
  std::vector<std::string> failures;  // first few failing instances
  std::size_t failure_count = 0;
  std::vector<std::string> notes;
  Json details = Json::object();

  bool ok() const { return failure_count == 0; }
};

/// ruzsa, chain, orbitstab, centralizer, pivot, affine-growth, sumprod,
/// nikolov-pyber, frobenius, himult, pyber-spiga, nonexpansion, cheeger.
const std::vector<std::string>& suite_names();
std::size_t default_trials(const std::string& name);
/// Throws UsageError for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

Json to_json(const SuiteResult& r);

// ---- samplers -----------------------------------------------------------

/// n distinct uniform elements.
ElementSet random_subset(const GroupPtr& group, std::size_t n, Rng& rng);
/// Uniform elements inserted together with their inverses until |A| >= n.
ElementSet random_symmetric(const GroupPtr& group, std::size_t n, Rng& rng, bool with_identity);
/// As random_symmetric, redrawn until A generates G. Throws PreconditionError
/// after `attempts` failures.
ElementSet random_symmetric_generating(const GroupPtr& group, std::size_t n, Rng& rng, bool with_identity,
                                       const WorkLimits& limits = {}, int attempts = 1000);

}  // namespace growthlab
