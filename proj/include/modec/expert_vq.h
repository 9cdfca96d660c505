#pragma once

// Perception expert: vector-quantized autoencoder with a learned codebook.

#include <torch/torch.h>

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "modec/layers.h"

namespace modec {

struct VqConfig {
    std::vector<std::int64_t> encoder_widths{16, 24, 32};
    DecoderSchedule decoder{16, {24, 24, 12, 12}, 8};  // decoder.latent_channels is the embedding dim d
    std::int64_t codebook_size = 1024;

    std::int64_t dim() const { return decoder.latent_channels; }
};

void to_json(nlohmann::json& j, const VqConfig& c);
void from_json(const nlohmann::json& j, VqConfig& c);

// Grid of codebook indices for one image.
struct TokenGrid {
    std::vector<std::int32_t> indices;  // row-major h x w
    std::int64_t height = 0;
    std::int64_t width = 0;
    std::int64_t codebook_size = 0;

    bool operator==(const TokenGrid&) const = default;
};

// Throws ContractError unless every index is in [0, codebook_size).
void validate_tokens(const TokenGrid& tokens);

// Continuous or quantized VQ feature, [d, h, w] or [B, d, h, w].
struct VqFeature {
    torch::Tensor values;
    bool quantized = false;
};

struct VqExpertImpl : torch::nn::Module {
    explicit VqExpertImpl(VqConfig config);

    torch::Tensor encode(const torch::Tensor& images);
    torch::Tensor decode(const torch::Tensor& quantized);
    // Gathers codebook rows for a token grid; returns [1, d, h, w].
    torch::Tensor embed(const TokenGrid& tokens);

    const VqConfig& config() const { return config_; }

    DownEncoder encoder{nullptr};
    LevelDecoder decoder{nullptr};
    torch::Tensor codebook;  // [N_cb, d]

private:
    VqConfig config_;
};
TORCH_MODULE(VqExpert);

VqFeature vq_encode(VqExpertImpl& expert, const torch::Tensor& images);

struct QuantizeResult {
    TokenGrid tokens;
    VqFeature quantized;
};

// Exhaustive nearest codebook row per position (squared Euclidean distance,
// ties to the lowest index). feature: [d, h, w] or [1, d, h, w].
QuantizeResult codebook_quantize(const VqFeature& feature, const torch::Tensor& codebook);

// Batched nearest-neighbour search used during training. feature [B, d, h, w]
// -> indices [B, h, w] (int64) and gathered rows [B, d, h, w].
std::pair<torch::Tensor, torch::Tensor> codebook_quantize_batch(const torch::Tensor& feature, const torch::Tensor& codebook);

// Forward value is exactly `quantized`; the gradient flows to `continuous` unchanged.
torch::Tensor straight_through(const torch::Tensor& continuous, const torch::Tensor& quantized);

torch::Tensor vq_decode_level(VqExpertImpl& expert, int level, const torch::Tensor& feature);

enum class TokenMode : std::uint8_t { kFixed = 0, kEntropy = 1 };

// Bits to transmit a token grid: fixed = count * ceil(log2 N_cb); entropy =
// actual coded length (frequency table included) of the entropy-coded payload.
double token_rate(const TokenGrid& tokens, TokenMode mode);

int bits_per_token(std::int64_t codebook_size);

}  // namespace modec
