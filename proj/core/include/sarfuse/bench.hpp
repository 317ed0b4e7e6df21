#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sarfuse/report.hpp"
#include "sarfuse/simulator.hpp"
#include "sarfuse/training.hpp"

namespace sarfuse {

// Full comparison experiment: optional synthesis, all variants x seeds on
// the same dataset, stratified evaluation of the test split, report, and
// the qualitative ordering checks.
struct ExperimentPlan {
  std::optional<SimConfig> synth;  // generate data_root when set
  std::string data_root;
  std::vector<Variant> variants = {Variant::kProposed, Variant::kDsZeroFill,
                                   Variant::kUnimodalSar};
  TrainConfig train;
  std::string out_dir;
  bool resume = false;

  void validate() const;
};

struct OrderingCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct BenchResult {
  EvalTable table;
  std::vector<OrderingCheck> checks;
  bool orderings_checked = false;  // false when not all three variants ran
  bool all_pass = false;
};

// Orderings mirrored from the reference comparison, on test-split F1:
//   (a) proposed > unimodal on the multi-modal stratum (per-seed majority),
//   (b) proposed > DS zero-fill on the missing-modality stratum (per-seed
//       majority),
//   (c) mean proposed >= both baselines on the "all" stratum.
// The per-seed majority is at least ceil(2/3 * runs) seeds.
BenchResult run_bench(const ExperimentPlan& plan);

}  // namespace sarfuse
