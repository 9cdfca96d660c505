#pragma once

// Fidelity expert: scalar-quantized autoencoder with a factorized prior.

#include <torch/torch.h>

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "modec/entropy_model.h"
#include "modec/layers.h"

namespace modec {

inline constexpr int kDownsampleFactor = 16;

struct SqConfig {
    std::vector<std::int64_t> encoder_widths{16, 24, 32};
    DecoderSchedule decoder{};  // decoder.latent_channels is C_f
    std::int32_t symbol_min = -64;
    std::int32_t symbol_max = 63;

    std::int64_t latent_channels() const { return decoder.latent_channels; }
};

void to_json(nlohmann::json& j, const SqConfig& c);
void from_json(const nlohmann::json& j, SqConfig& c);

// Continuous or quantized SQ latent, [C, h, w] or [B, C, h, w].
struct SqLatent {
    torch::Tensor values;
    bool quantized = false;
    int quality_index = 0;
};

enum class QuantizeMode { kRound, kNoise };

// Round half away from zero.
torch::Tensor round_half_away(const torch::Tensor& x);

// kRound: half-away-from-zero rounding. kNoise: adds i.i.d. U(-0.5, 0.5) noise
// drawn from a generator seeded with `seed` (required for kNoise).
SqLatent scalar_quantize(const SqLatent& latent, QuantizeMode mode, std::optional<std::uint64_t> seed = std::nullopt);

struct SqExpertImpl : torch::nn::Module {
    explicit SqExpertImpl(SqConfig config);

    // [B, 3, H, W] -> [B, C_f, H/16, W/16]; H and W must be multiples of 16.
    torch::Tensor encode(const torch::Tensor& images);
    // Monolithic decode of a (quantized) latent.
    torch::Tensor decode(const torch::Tensor& latent);

    const SqConfig& config() const { return config_; }

    DownEncoder encoder{nullptr};
    LevelDecoder decoder{nullptr};
    EntropyBottleneck bottleneck{nullptr};

private:
    SqConfig config_;
};
TORCH_MODULE(SqExpert);

// Encodes an image batch at the given quality point, producing the continuous latent.
SqLatent sq_encode(SqExpertImpl& expert, const torch::Tensor& images, int quality_index);

// Applies frozen D^level of the expert decoder.
torch::Tensor sq_decode_level(SqExpertImpl& expert, int level, const torch::Tensor& feature);

}  // namespace modec
