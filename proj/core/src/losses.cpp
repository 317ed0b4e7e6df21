#include "sarfuse/losses.hpp"

#include <cmath>
#include <stdexcept>

namespace sarfuse {

namespace {

// Shared formula; sums always run at double precision regardless of the
// storage type so float and double paths agree to rounding.
template <typename T>
double power_jaccard_impl(std::span<const T> pred, std::span<const T> target,
                          double power, double eps, T* grad) {
  if (pred.size() != target.size()) {
    throw std::invalid_argument("power_jaccard: pred/target size mismatch");
  }
  if (pred.empty()) throw std::invalid_argument("power_jaccard: empty input");
  if (power < 1.0) throw std::invalid_argument("power_jaccard: power must be >= 1");
  if (eps <= 0.0) throw std::invalid_argument("power_jaccard: smoothing must be > 0");

  double inter = 0.0, pred_pow = 0.0, target_pow = 0.0;
  for (size_t i = 0; i < pred.size(); ++i) {
    const double p = double(pred[i]);
    const double t = double(target[i]);
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("power_jaccard: pred values must lie in [0, 1]");
    }
    inter += p * t;
    pred_pow += std::pow(p, power);
    target_pow += std::pow(t, power);
  }
  const double num = inter + eps;
  const double den = pred_pow + target_pow - inter + eps;
  const double loss = 1.0 - num / den;

  if (grad) {
    // d loss / d p_i = (num * (power * p_i^(power-1) - t_i) - t_i * den) / den^2
    const double inv_den2 = 1.0 / (den * den);
    for (size_t i = 0; i < pred.size(); ++i) {
      const double p = double(pred[i]);
      const double t = double(target[i]);
      const double dden = power * std::pow(p, power - 1.0) - t;
      grad[i] = T((num * dden - t * den) * inv_den2);
    }
  }
  return loss;
}

}  // namespace

void LossConfig::validate() const {
  if (phi < 0.0) throw std::invalid_argument("loss: phi must be >= 0");
  if (jaccard_power < 1.0) throw std::invalid_argument("loss: jaccard_power must be >= 1");
  if (smoothing <= 0.0) throw std::invalid_argument("loss: smoothing must be > 0");
}

double power_jaccard(std::span<const float> pred, std::span<const float> target,
                     double power, double eps, float* grad) {
  return power_jaccard_impl<float>(pred, target, power, eps, grad);
}

double power_jaccard(std::span<const double> pred, std::span<const double> target,
                     double power, double eps, double* grad) {
  return power_jaccard_impl<double>(pred, target, power, eps, grad);
}

double power_jaccard(const Raster& pred, const Raster& target, const LossConfig& cfg) {
  cfg.validate();
  if (!pred.same_shape(target)) {
    throw std::invalid_argument("power_jaccard: pred/target shape mismatch");
  }
  return power_jaccard(std::span<const float>(pred.v), std::span<const float>(target.v),
                       cfg.jaccard_power, cfg.smoothing);
}

double feature_similarity(const Raster& f_s2, const Raster& f_s2_hat) {
  if (!f_s2.same_shape(f_s2_hat)) {
    throw std::invalid_argument("feature_similarity: shape mismatch");
  }
  if (f_s2.size() == 0) throw std::invalid_argument("feature_similarity: empty input");
  double acc = 0.0;
  for (size_t i = 0; i < f_s2.size(); ++i) {
    const double d = double(f_s2.v[i]) - double(f_s2_hat.v[i]);
    acc += d * d;
  }
  return acc / double(f_s2.size());
}

LossReport sample_loss(const ForwardOutput& out, const Raster& label,
                       const LossConfig& cfg) {
  cfg.validate();
  const bool fused = out.p_fused.has_value();
  const bool sar_path = out.p_sar_path.has_value();
  const bool features = out.f_s2.has_value() && out.f_s2_hat.has_value();
  if (out.f_s2.has_value() != out.f_s2_hat.has_value() && fused) {
    throw std::logic_error("sample_loss: fused output with a dangling feature map");
  }
  if (!fused && !sar_path) {
    throw std::logic_error("sample_loss: forward output carries no prediction");
  }

  LossReport rep;
  if (fused && sar_path) {
    if (!features) {
      throw std::logic_error("sample_loss: multi-modal output without both feature maps");
    }
    rep.loss_case = LossCase::kMultiModal;
    rep.supervised_fused = power_jaccard(*out.p_fused, label, cfg);
    rep.supervised_sar_path = power_jaccard(*out.p_sar_path, label, cfg);
    rep.similarity = feature_similarity(*out.f_s2, *out.f_s2_hat);
    rep.total = *rep.supervised_fused + *rep.supervised_sar_path + cfg.phi * *rep.similarity;
  } else if (sar_path) {
    rep.loss_case = LossCase::kMissingModality;
    rep.supervised_sar_path = power_jaccard(*out.p_sar_path, label, cfg);
    rep.total = *rep.supervised_sar_path;
  } else {
    // DS baseline shape: a single supervised term on the fused prediction.
    rep.loss_case = LossCase::kMultiModal;
    rep.supervised_fused = power_jaccard(*out.p_fused, label, cfg);
    rep.total = *rep.supervised_fused;
  }
  return rep;
}

double batch_loss(std::span<const LossReport> reports) {
  if (reports.empty()) throw std::invalid_argument("batch_loss: empty mini-batch");
  double total = 0.0;
  for (const LossReport& r : reports) total += r.total;
  return total;
}

}  // namespace sarfuse
