#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sigma/catalog.hpp"
#include "sigma/sigma_context.hpp"

namespace sigma {

/// One checked implication: consistent == !hypothesis || conclusion.
/// A false `consistent` is a counterexample to a proved statement, i.e. an
/// implementation defect; campaigns abort on it.
struct TheoremOutcome {
  std::string theorem_id;
  std::string group_name;
  std::string partition;
  std::string subject;  // e.g. the normal subgroup E a check ranges over
  bool hypothesis = false;
  bool conclusion = false;
  bool consistent = true;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;
  std::int64_t elapsed_ms = 0;
};

struct SuiteCounts {
  int checked = 0;
  int passed = 0;
  std::vector<std::string> failures;
};

struct VerificationReport {
  std::vector<TheoremOutcome> outcomes;
  std::map<std::string, SuiteCounts> suites;
  std::map<std::string, std::string> config;
  std::vector<std::string> skipped;
  bool partial = false;
  bool aborted = false;
  std::string abort_reason;
  // minimized reproduction data for an inconsistent outcome
  std::string counterexample_group_file;
  std::string counterexample_partition;
  std::string counterexample_theorem;

  bool all_consistent() const;
  bool suites_clean() const;
};

// --- single-theorem checks ---
// Hypotheses follow the existential reading over complete Hall sigma-sets;
// the universal reading is evaluated alongside and disagreements are noted,
// never judged. Every weak-permutability answer feeding a hypothesis is
// re-verified from its witness; a verification failure throws.

TheoremOutcome check_theorem_1_4(SigmaAnalysis& an, const SigmaPartition& sigma,
                                 const std::string& group_name);
TheoremOutcome check_theorem_1_5(SigmaAnalysis& an, const SigmaPartition& sigma,
                                 const std::string& group_name);
TheoremOutcome check_proposition_4_1(SigmaAnalysis& an, const SigmaPartition& sigma,
                                     const std::string& group_name);
/// Ranges over every normal subgroup E of the group.
std::vector<TheoremOutcome> check_theorem_1_13(SigmaAnalysis& an, const SigmaPartition& sigma,
                                               const std::string& group_name);
/// Corollary 1.14 for the supersoluble class, over every normal E.
std::vector<TheoremOutcome> check_corollary_1_14(SigmaAnalysis& an, const SigmaPartition& sigma,
                                                 const std::string& group_name);
/// Corollaries 1.6-1.12 and 1.15-1.17 as singleton-partition and classical
/// predicate instantiations.
std::vector<TheoremOutcome> check_corollaries(SigmaAnalysis& an, const std::string& group_name);

/// The order-1260 worked example, claim by claim; aborted on first failure.
VerificationReport example_1_2_report();

/// Closure and transfer properties (lemma suites), sampled deterministically.
void run_lemma_suites(SigmaAnalysis& an, const SigmaPartition& sigma,
                      const std::string& group_name, std::uint64_t seed, int samples_per_suite,
                      std::map<std::string, SuiteCounts>& into);

enum class PartitionPolicy { all, singletons, whole, listed };

PartitionPolicy parse_policy(const std::string& s);
std::string policy_name(PartitionPolicy p);

struct CampaignConfig {
  std::uint64_t max_order = 200;
  PartitionPolicy policy = PartitionPolicy::all;
  std::vector<std::string> listed_partitions;
  int jobs = 1;
  double budget_seconds = 120.0;  // per (group, partition) pair
  std::uint64_t seed = 20250801;
  std::uint32_t lattice_cutoff = SubgroupLattice::kDefaultCutoff;
  bool lemma_suites = true;
  int samples_per_suite = 6;
};

/// Sweeps the theorem checks and lemma suites over corpus x partitions.
/// Deterministic for a fixed config; a counterexample aborts the campaign
/// with reproduction data in the report.
VerificationReport run_campaign(const std::vector<CatalogEntry>& entries,
                                const CampaignConfig& cfg);

}  // namespace sigma
