#pragma once

// Convolutional building blocks shared by both experts.

#include <torch/torch.h>

#include <vector>

#include <json.hpp>

namespace modec {

inline constexpr double kLeakySlope = 0.2;

torch::nn::Conv2d conv3x3(std::int64_t in, std::int64_t out);
torch::nn::Conv2d conv1x1(std::int64_t in, std::int64_t out);
void zero_init(torch::nn::Conv2d& conv);

// Four stride-2 5x5 convolutions: [B,3,H,W] -> [B,out,H/16,W/16].
struct DownEncoderImpl : torch::nn::Module {
    DownEncoderImpl(std::vector<std::int64_t> hidden_widths, std::int64_t out_channels);
    torch::Tensor forward(torch::Tensor x);

    torch::nn::ModuleList stages;
};
TORCH_MODULE(DownEncoder);

// Shape of a decoder split into resolution levels.
//
// Level i consumes `in_channels(i)` channels at spatial scale 2^i relative to
// the latent grid. D^i maps in_channels(i) -> level_widths[i]; Up^i doubles the
// resolution and maps level_widths[i] -> in_channels(i + 1); the output head
// maps head_width -> 3 at full resolution.
struct DecoderSchedule {
    std::int64_t latent_channels = 32;
    std::vector<std::int64_t> level_widths{32, 24, 16, 12};
    std::int64_t head_width = 8;

    int num_levels() const { return static_cast<int>(level_widths.size()); }
    std::int64_t in_channels(int level) const {
        return level == 0 ? latent_channels : level_widths[static_cast<std::size_t>(level)];
    }
    std::int64_t up_out_channels(int level) const {
        return level + 1 < num_levels() ? level_widths[static_cast<std::size_t>(level) + 1] : head_width;
    }
};

void to_json(nlohmann::json& j, const DecoderSchedule& s);
void from_json(const nlohmann::json& j, DecoderSchedule& s);

// Decoder exposed as N level blocks D^i, N upsample blocks Up^i and a head Out.
struct LevelDecoderImpl : torch::nn::Module {
    explicit LevelDecoderImpl(DecoderSchedule schedule);

    // D^level only. Throws ContractError on channel mismatch.
    torch::Tensor decode_level(int level, const torch::Tensor& x);
    // Up^level only.
    torch::Tensor upsample(int level, const torch::Tensor& x);
    torch::Tensor output(const torch::Tensor& x);
    // Monolithic decode: Out(Up^{N-1}(D^{N-1}(... Up^0(D^0(y))))).
    torch::Tensor forward(torch::Tensor latent);

    const DecoderSchedule& schedule() const { return schedule_; }

    torch::nn::ModuleList blocks;
    torch::nn::ModuleList ups;
    torch::nn::Conv2d head{nullptr};

private:
    DecoderSchedule schedule_;
};
TORCH_MODULE(LevelDecoder);

// Detaches every parameter from autograd.
void freeze(torch::nn::Module& module);

}  // namespace modec
