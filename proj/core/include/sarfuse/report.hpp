#pragma once

#include <map>
#include <string>
#include <vector>

#include "sarfuse/evaluation.hpp"

namespace sarfuse {

// Per-variant, per-stratum, per-seed metric rows plus mu/sigma aggregates
// (sigma is the population standard deviation over seeds).
struct EvalTable {
  struct Row {
    std::string variant;
    std::string stratum;  // all | multi-modal | missing-modality
    uint64_t seed = 0;
    double f1 = 0.0, iou = 0.0;
  };
  struct Aggregate {
    double f1_mu = 0.0, f1_sigma = 0.0;
    double iou_mu = 0.0, iou_sigma = 0.0;
    int runs = 0;
  };

  std::vector<Row> rows;

  void add(const std::string& variant, uint64_t seed, const EvalResult& result);
  std::map<std::pair<std::string, std::string>, Aggregate> aggregates() const;
  std::vector<std::string> variants() const;
  bool empty() const { return rows.empty(); }
};

// CSV schema: variant,stratum,kind,seed,f1,iou with kind in {seed,mean,std};
// doubles are printed round-trip exact. read_metrics_csv keeps the per-seed
// rows (aggregates are recomputed).
void write_metrics_csv(const EvalTable& table, const std::string& path);
EvalTable read_metrics_csv(const std::string& path);

// Emits metrics.csv, a Markdown table (highest mean per column in bold) and
// an SVG bar chart of mu +- sigma per stratum per variant into out_dir.
void write_report(const EvalTable& table, const std::string& out_dir);

}  // namespace sarfuse
