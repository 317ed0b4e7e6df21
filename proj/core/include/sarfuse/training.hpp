#pragma once

#include <string>
#include <vector>

#include "sarfuse/dataset.hpp"
#include "sarfuse/losses.hpp"
#include "sarfuse/models.hpp"

namespace sarfuse {

struct TrainConfig {
  double learning_rate = 1e-5;
  int batch_size = 16;
  int max_epochs = 100;
  int patience = 10;
  int patch_size = 64;
  uint64_t seed = 0;
  int num_runs = 5;
  // Probability of additionally hiding the optical raster of a multi-modal
  // training sample, so mixed batches occur even without natural gaps.
  double modality_dropout = 0.1;
  double threshold = 0.5;     // binarization for validation metrics
  double weight_decay = 0.01;
  LossConfig loss;
  Variant variant = Variant::kProposed;
  BackboneConfig backbone;

  void validate() const;
};

TrainConfig train_config_from_json_file(const std::string& path);
void write_train_config(const TrainConfig& cfg, const std::string& path);

struct EpochScore {
  int epoch = 0;
  double val_f1 = 0.0, val_iou = 0.0;
  double train_loss = 0.0;  // mean per-sample loss over the epoch
};

struct RunRecord {
  uint64_t seed = 0;
  int best_epoch = 0;
  double best_val_f1 = 0.0;
  std::string checkpoint_path;
  std::vector<EpochScore> epochs;
  double wall_seconds = 0.0;
};

void write_run_record(const RunRecord& rec, const std::string& json_path,
                      const std::string& csv_path);

// One seeded training run: per epoch, shuffle -> crop/augment -> optional
// modality dropout -> mixed-case mini-batches -> AdamW on the summed batch
// loss; validation F1 at epoch end drives early stopping; the best
// checkpoint is persisted under out_dir.
RunRecord train(const TrainConfig& cfg, const std::string& data_root,
                const std::string& out_dir);

// num_runs trainings with seeds seed, seed+1, ...; writes per-run artifacts
// plus an experiment summary JSON under out_dir.
std::vector<RunRecord> run_experiment(const TrainConfig& cfg,
                                      const std::string& data_root,
                                      const std::string& out_dir);

// Single optimization step over one prepared mini-batch; returns the summed
// batch loss. Exposed for optimizer sanity tests.
double train_step(ModelBundle& bundle, const std::vector<Sample>& batch,
                  const LossConfig& loss_cfg, nn::AdamW& opt);

}  // namespace sarfuse
