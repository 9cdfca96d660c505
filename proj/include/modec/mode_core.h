#pragma once

// Decoder-side collaboration between the two frozen experts.
//
// Each branch b in {f, p} runs two streams through its frozen decoder: an
// expert stream e and a modulation stream m, both starting from the
// transmitted latent. At every level i:
//
//   ybar_e = D_b^i(yhat_e)              ybar_m = D_b^i(yhat_m)
//   ytil_e = ESE_b(ybar_m, ybar_e)      ytil_m = CEM_b(ybar_m, ytil_e of the other branch)
//   yhat_e = Up_b^i(ytil_e)             yhat_m = Up_b^i(ytil_m)
//
// and the frozen heads Out_b turn the final modulation streams into the
// fidelity-anchored (F) and perception-anchored (P) reconstructions. The
// expert streams go through the same heads to give auxiliary reconstructions.

#include <torch/torch.h>

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "modec/layers.h"

namespace modec {

enum class Branch { kFidelity, kPerception };
enum class AnchorMode { kF, kP, kBoth };
enum class GateGranularity { kSpatial, kChannel };
enum class ModeVariant { kFull, kNoEse, kSftCem };

std::string to_string(AnchorMode m);
std::string to_string(ModeVariant v);
AnchorMode parse_anchor_mode(const std::string& s);
ModeVariant parse_variant(const std::string& s);

struct ModeConfig {
    GateGranularity gate = GateGranularity::kSpatial;
    AnchorMode anchor_mode = AnchorMode::kBoth;
    ModeVariant variant = ModeVariant::kFull;
    double gate_bias_init = -4.0;
};

void to_json(nlohmann::json& j, const ModeConfig& c);
void from_json(const nlohmann::json& j, ModeConfig& c);

// ablation_variant: copy of `base` with the requested variant.
ModeConfig ablation_variant(const ModeConfig& base, const std::string& kind);

// Expert-specific enhancement for one branch at one level:
// out = expert + H(Concat(mod, expert)), H = 1x1 projection, 3x3, LeakyReLU, 3x3.
// The last conv starts at zero, so a fresh block returns `expert` unchanged.
struct EnhancementBlockImpl : torch::nn::Module {
    explicit EnhancementBlockImpl(std::int64_t channels);
    torch::Tensor forward(const torch::Tensor& mod_feat, const torch::Tensor& expert_feat);

    torch::nn::Conv2d fuse{nullptr}, conv1{nullptr}, conv2{nullptr};
};
TORCH_MODULE(EnhancementBlock);

struct ModulationOutput {
    torch::Tensor modulated;
    torch::Tensor gate;  // undefined for ungated variants
};

// Cross-expert modulation for one branch at one level.
// u = proj(Concat(mod, cross)); w = sigmoid(G(u)); out = mod + w * M(u).
struct CrossModulationImpl : torch::nn::Module {
    CrossModulationImpl(std::int64_t own_channels, std::int64_t cross_channels, GateGranularity gate, double gate_bias_init);

    // `forced_gate` replaces w with a constant (diagnostics and tests).
    ModulationOutput forward(const torch::Tensor& mod_feat, const torch::Tensor& cross_feat,
                             std::optional<double> forced_gate = std::nullopt);
    torch::Tensor gate_logits(const torch::Tensor& fused);
    torch::Tensor transform(const torch::Tensor& fused);

    torch::nn::Conv2d fuse{nullptr}, gate1{nullptr}, gate2{nullptr}, mod1{nullptr}, mod2{nullptr};
};
TORCH_MODULE(CrossModulation);

// SFT-style replacement used by the ablation: scale and shift predicted from the
// cross-branch feature alone, applied without a gate:
// out = gamma(cross) * mod + beta(cross), gamma = 1 + head_gamma(cross).
// Both heads start at zero, so a fresh block returns `mod` unchanged.
struct SftModulationImpl : torch::nn::Module {
    SftModulationImpl(std::int64_t own_channels, std::int64_t cross_channels);
    ModulationOutput forward(const torch::Tensor& mod_feat, const torch::Tensor& cross_feat);
    torch::Tensor gamma(const torch::Tensor& cross_feat);
    torch::Tensor beta(const torch::Tensor& cross_feat);

    torch::nn::Conv2d shared{nullptr}, gamma_head{nullptr}, beta_head{nullptr};
};
TORCH_MODULE(SftModulation);

struct LevelGates {
    torch::Tensor fidelity;
    torch::Tensor perception;
};

struct CollaborativeOutput {
    torch::Tensor mod_f;     // MoDE-F; undefined when not requested
    torch::Tensor mod_p;     // MoDE-P; undefined when not requested
    torch::Tensor expert_f;  // auxiliary expert-stream reconstructions
    torch::Tensor expert_p;
    std::vector<LevelGates> gates;
};

struct CollaborativeOptions {
    std::optional<double> forced_gate;  // constant gate for every CEM
    bool expert_outputs = true;
    bool clamp = false;  // clamp reconstructions to [0, 1]
    // Optional per-level record of intermediate features (for probes).
    std::vector<std::vector<torch::Tensor>>* trace = nullptr;
};

// The trainable modules plus non-owning handles to the frozen expert decoders.
// parameters() yields only ESE/CEM parameters.
struct CollaborativeDecoderImpl : torch::nn::Module {
    CollaborativeDecoderImpl(LevelDecoder fidelity_decoder, LevelDecoder perception_decoder, ModeConfig config);

    CollaborativeOutput forward(const torch::Tensor& latent_f, const torch::Tensor& feature_p,
                                const CollaborativeOptions& options = {});

    ModulationOutput modulate(Branch b, int level, const torch::Tensor& mod_feat, const torch::Tensor& cross_feat,
                              std::optional<double> forced_gate);
    torch::Tensor enhance(Branch b, int level, const torch::Tensor& mod_feat, const torch::Tensor& expert_feat);

    const ModeConfig& config() const { return config_; }
    int num_levels() const { return num_levels_; }

    torch::nn::ModuleList ese_f, ese_p, cem_f, cem_p;

private:
    LevelDecoder dec_f_;
    LevelDecoder dec_p_;
    ModeConfig config_;
    int num_levels_;
};
TORCH_MODULE(CollaborativeDecoder);

// ese_forward / cem_forward entry points with branch/level dispatch.
torch::Tensor ese_forward(CollaborativeDecoderImpl& mode, Branch b, int level, const torch::Tensor& mod_feat,
                          const torch::Tensor& expert_feat);
ModulationOutput cem_forward(CollaborativeDecoderImpl& mode, Branch b, int level, const torch::Tensor& mod_feat,
                             const torch::Tensor& cross_enhanced_feat);

}  // namespace modec
