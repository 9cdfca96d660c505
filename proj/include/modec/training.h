#pragma once

// Frozen-expert training: loss terms, the MoDE training loop and the
// pretraining recipes for the two toy experts.

#include <torch/torch.h>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "modec/checkpoint.h"
#include "modec/dataset.h"
#include "modec/expert_sq.h"
#include "modec/expert_vq.h"
#include "modec/metrics.h"
#include "modec/mode_core.h"

namespace modec {

struct LossWeights {
    double e_mse = 1.0;    // expert stream, fidelity branch
    double e_lpips = 1.0;  // expert stream, perception branch
    double m_mse = 1.0;
    double m_lpips = 1.0;
    double m_l1 = 1.0;
    double m_token = 0.5;
    double m_adv = 0.0;  // 0 disables the adversarial term
};

inline constexpr double kDefaultAdversarialWeight = 0.01;

// Throws ConfigError naming the offending weight when one is negative or not finite.
void validate(const LossWeights& w, const std::string& field = "loss");
void to_json(nlohmann::json& j, const LossWeights& w);
void from_json(const nlohmann::json& j, LossWeights& w);

struct LossPair {
    torch::Tensor fidelity;
    torch::Tensor perception;
};

LossPair expert_losses(const torch::Tensor& x, const torch::Tensor& expert_f, const torch::Tensor& expert_p,
                       const LossWeights& w, PerceptualDistance& proxy);

// mean |E_p(x) - E_p(x_hat)| over the continuous perception-encoder features.
torch::Tensor token_consistency_loss(VqExpertImpl& vq, const torch::Tensor& x, const torch::Tensor& mod_p);

// Three stride-2 4x4 convolutions and a 3x3 logit head: [B,3,H,W] -> [B,1,H/8,W/8].
struct PatchDiscriminatorImpl : torch::nn::Module {
    explicit PatchDiscriminatorImpl(std::int64_t width = 32);
    torch::Tensor forward(const torch::Tensor& x);

    torch::nn::Sequential net{nullptr};
};
TORCH_MODULE(PatchDiscriminator);

torch::Tensor hinge_real(const torch::Tensor& logits);  // mean(max(0, 1 - l))
torch::Tensor hinge_fake(const torch::Tensor& logits);  // mean(max(0, 1 + l))
torch::Tensor generator_adversarial(PatchDiscriminatorImpl& disc, const torch::Tensor& fake);  // -mean D(fake)

struct ModulationTerms {
    LossPair losses;
    std::map<std::string, double> parts;  // unweighted term values, for logging
};

// Throws ConfigError when w.m_adv > 0 and no discriminator is given.
ModulationTerms modulation_losses(const torch::Tensor& x, const torch::Tensor& mod_f, const torch::Tensor& mod_p,
                                  PatchDiscriminatorImpl* disc, const LossWeights& w, PerceptualDistance& proxy,
                                  VqExpertImpl& vq);

torch::Tensor total_loss(const torch::Tensor& le_f, const torch::Tensor& le_p, const torch::Tensor& lm_f,
                         const torch::Tensor& lm_p);

// Owns the discriminator(s) and their optimizer. One shared discriminator by
// default; `separate` gives each anchor its own.
class AdversarialTrainer {
public:
    AdversarialTrainer(bool separate, double lr, std::uint64_t seed);
    PatchDiscriminatorImpl& for_fidelity() { return *disc_f_; }
    PatchDiscriminatorImpl& for_perception() { return separate_ ? *disc_p_ : *disc_f_; }
    // One discriminator update on hinge loss; returns the discriminator loss.
    double step(const torch::Tensor& real, const torch::Tensor& fake_f, const torch::Tensor& fake_p);
    std::vector<torch::Tensor> parameters();

private:
    bool separate_;
    PatchDiscriminator disc_f_{nullptr};
    PatchDiscriminator disc_p_{nullptr};
    std::unique_ptr<torch::optim::Adam> opt_;
};

// Learning rate at `step` of `total` under cosine decay from `base` to `base * floor`.
double cosine_lr(double base, std::int64_t step, std::int64_t total, double floor = 0.0);

struct TrainOptions {
    std::int64_t steps = 20000;
    int batch = 4;
    std::int64_t crop = 64;
    double lr = 1e-4;
    std::uint64_t seed = 0;
    int log_every = 50;
    int digest_every = 1;  // expert digest check period in steps
    bool separate_discriminators = false;
    double disc_lr = 1e-4;
    AnchorMode train_anchors = AnchorMode::kBoth;
    std::optional<std::filesystem::path> log_path;  // JSONL
};

struct TrainRecord {
    std::int64_t step = 0;
    double total = 0.0;
    double le_f = 0.0, le_p = 0.0, lm_f = 0.0, lm_p = 0.0;
    double disc = 0.0;
    double expert_grad_norm = 0.0;
    double lr = 0.0;
    std::vector<double> gate_mean_f, gate_mean_p;
};

nlohmann::json to_json(const TrainRecord& r);

struct TrainResult {
    CollaborativeDecoder mode{nullptr};
    std::vector<TrainRecord> trace;  // every step
    Digest sq_digest{};
    Digest vq_digest{};
};

// Forward pass shared by training and tests: experts quantize x, the
// collaborative decoder produces the four reconstructions.
struct DualLatents {
    torch::Tensor latent_f;  // rounded SQ latent
    torch::Tensor feature_p; // codebook rows
};
DualLatents encode_latents(SqExpertImpl& sq, VqExpertImpl& vq, const torch::Tensor& x);

struct StepLosses {
    torch::Tensor total;
    LossPair expert;
    LossPair modulation;
    CollaborativeOutput outputs;
};
StepLosses compute_losses(CollaborativeDecoderImpl& mode, VqExpertImpl& vq, const torch::Tensor& x,
                          const DualLatents& latents, const LossWeights& w, PerceptualDistance& proxy,
                          AdversarialTrainer* adv);

// Optimizes ESE/CEM (and discriminator) parameters only. Expert digests are
// checked every `digest_every` steps and at the end; drift throws DigestMismatchError.
// `mode` may carry initial weights; when null a fresh decoder is built.
TrainResult train_mode(const ImageSet& data, SqExpert sq, VqExpert vq, const ModeConfig& config, const LossWeights& w,
                       const TrainOptions& options, PerceptualDistance& proxy,
                       CollaborativeDecoder mode = CollaborativeDecoder{nullptr});

struct PretrainOptions {
    std::int64_t steps = 4000;
    int batch = 8;
    std::int64_t crop = 64;
    double lr = 1e-3;
    std::uint64_t seed = 0;
    int log_every = 100;
    std::optional<std::filesystem::path> log_path;
};

// lambda * 255^2 * MSE + bpp with additive-noise quantization.
SqExpert pretrain_sq(const ImageSet& data, const SqConfig& config, double lambda, const PretrainOptions& options,
                     SqExpert init = SqExpert{nullptr});

struct VqPretrainOptions : PretrainOptions {
    double beta = 0.25;          // commitment weight
    double perceptual = 1.0;     // proxy weight
    int reseed_epochs = 2;       // codebook rows unused this many epochs are re-seeded
    std::int64_t epoch_steps = 0;  // 0: dataset size / batch
};

VqExpert pretrain_vq(const ImageSet& data, const VqConfig& config, const VqPretrainOptions& options,
                     PerceptualDistance& proxy);

// Expert checkpoints: meta records kind, config and training settings.
void save_sq_expert(const std::filesystem::path& path, SqExpertImpl& sq, const nlohmann::json& extra);
void save_vq_expert(const std::filesystem::path& path, VqExpertImpl& vq, const nlohmann::json& extra);
SqExpert load_sq_expert(const std::filesystem::path& path, Digest* digest = nullptr);
VqExpert load_vq_expert(const std::filesystem::path& path, Digest* digest = nullptr);

// MoDE checkpoint: ESE/CEM tensors plus the digests of the experts it was
// trained against; loading against different experts throws DigestMismatchError.
void save_mode(const std::filesystem::path& path, CollaborativeDecoderImpl& mode, const Digest& sq_digest,
               const Digest& vq_digest, const nlohmann::json& extra);
CollaborativeDecoder load_mode(const std::filesystem::path& path, SqExpert sq, VqExpert vq);

}  // namespace modec
