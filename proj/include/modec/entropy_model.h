#pragma once

// Factorized (per-channel, non-parametric) prior over integer latent symbols.
//
// EntropyBottleneck is the learnable density: a small monotone MLP per channel
// models the cumulative distribution. FactorizedPrior is its frozen, quantized
// form: one 16-bit CDF table per channel over the closed symbol range
// [symbol_min, symbol_max]. The two boundary bins absorb the tails, so values
// outside the range are clamped to the boundary symbol.

#include <torch/torch.h>

#include <cstdint>
#include <filesystem>
#include <vector>

#include "modec/range_coder.h"

namespace modec {

struct EntropyBottleneckImpl : torch::nn::Module {
    explicit EntropyBottleneckImpl(std::int64_t channels, std::vector<std::int64_t> filters = {3, 3, 3}, double init_scale = 10.0);

    // Per-element likelihood of y under the density discretized to unit bins,
    // floored at `likelihood_floor`. y: [B, C, h, w].
    torch::Tensor likelihood(const torch::Tensor& y, double likelihood_floor = 1e-9);

    // Cumulative logits for values shaped [C, 1, M].
    torch::Tensor logits_cumulative(const torch::Tensor& x);

    std::int64_t channels() const { return channels_; }

    std::vector<torch::Tensor> matrices;
    std::vector<torch::Tensor> biases;
    std::vector<torch::Tensor> factors;

private:
    std::int64_t channels_;
};
TORCH_MODULE(EntropyBottleneck);

struct FactorizedPrior {
    std::int32_t symbol_min = -64;
    std::int32_t symbol_max = 63;
    int precision = kCdfPrecision;
    std::vector<CdfTable> tables;  // one per channel

    std::size_t num_symbols() const { return static_cast<std::size_t>(symbol_max - symbol_min + 1); }
    std::size_t channels() const { return tables.size(); }
    std::int32_t clamp(std::int32_t v) const { return v < symbol_min ? symbol_min : (v > symbol_max ? symbol_max : v); }
    // Probability of (clamped) value v in channel c.
    double probability(std::size_t channel, std::int32_t v) const;

    // Uniform tables; handy for tests and as an untrained fallback.
    static FactorizedPrior uniform(std::size_t channels, std::int32_t symbol_min, std::int32_t symbol_max);
};

// Quantizes the learned density into per-channel CDF tables.
FactorizedPrior cdf_tables(EntropyBottleneckImpl& model, std::int32_t symbol_min, std::int32_t symbol_max);

// Sum of -log2 p(symbol) over a quantized latent [C, h, w] or [B, C, h, w].
// Out-of-range values are counted at their boundary bin.
double rate_estimate(const torch::Tensor& latent_q, const FactorizedPrior& prior);

// CDF table file:
//   magic "MCDF", version u8, precision u8, channels u16,
//   symbol_min i32, symbol_max i32, then channels x (num_symbols + 1) u32 (all LE).
void save_cdf_tables(const std::filesystem::path& path, const FactorizedPrior& prior);
FactorizedPrior load_cdf_tables(const std::filesystem::path& path);
std::vector<std::uint8_t> serialize_cdf_tables(const FactorizedPrior& prior);
FactorizedPrior parse_cdf_tables(std::span<const std::uint8_t> bytes);

}  // namespace modec
