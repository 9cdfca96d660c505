#pragma once

#include <torch/torch.h>

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "modec/checkpoint.h"

namespace modec {

// 10 log10(1 / MSE) in dB for images in [0, 1]; +infinity when x == y.
double psnr(const torch::Tensor& x, const torch::Tensor& y);
double mse(const torch::Tensor& x, const torch::Tensor& y);

// Differentiable perceptual distance between image batches; returns one value
// per image ([B]). Implementations must give d(x, x) = 0 and be symmetric.
class PerceptualDistance {
public:
    virtual ~PerceptualDistance() = default;
    virtual torch::Tensor distance(const torch::Tensor& x, const torch::Tensor& y) = 0;
    virtual std::string name() const = 0;
};

// Fixed random three-level strided conv pyramid. Each level's features are
// unit-normalized across channels; the distance is the squared feature
// difference summed over channels, averaged over positions, then over levels.
struct ProxyPyramidImpl : torch::nn::Module {
    ProxyPyramidImpl();
    std::vector<torch::Tensor> features(const torch::Tensor& images);

    torch::nn::Conv2d conv1{nullptr}, conv2{nullptr}, conv3{nullptr};
};
TORCH_MODULE(ProxyPyramid);

class PerceptualProxy final : public PerceptualDistance {
public:
    // Loads frozen weights from a fixture produced by make_proxy_fixture().
    explicit PerceptualProxy(const std::filesystem::path& weights);
    torch::Tensor distance(const torch::Tensor& x, const torch::Tensor& y) override;
    std::string name() const override { return "proxy"; }
    ProxyPyramidImpl& pyramid() { return *net_; }
    const Digest& digest() const { return digest_; }

private:
    ProxyPyramid net_;
    Digest digest_{};
};

inline constexpr std::uint64_t kProxySeed = 20240611;

// Deterministic He-uniform weights drawn from kProxySeed with the portable Rng.
NamedTensors make_proxy_weights(std::uint64_t seed = kProxySeed);
void make_proxy_fixture(const std::filesystem::path& path, std::uint64_t seed = kProxySeed);

// Fixture location: $MODEC_PROXY_WEIGHTS, else the repository data directory.
std::filesystem::path default_proxy_path();
std::shared_ptr<PerceptualProxy> default_proxy();

// Scalar distance between two single images [3, H, W].
double perceptual_proxy(PerceptualDistance& metric, const torch::Tensor& x, const torch::Tensor& y);

// Empirical distribution of integer symbols.
struct LatentHistogram {
    std::map<std::int32_t, std::uint64_t> counts;
    std::uint64_t total = 0;
    double entropy_bits = 0.0;  // bits per symbol
    double top1_mass = 0.0;
    double topk_mass = 0.0;
    int k = 0;
};

LatentHistogram latent_histogram(const std::vector<std::int32_t>& symbols, int top_k = 5);
// Rounds and pools every element of every tensor.
LatentHistogram latent_histogram(const std::vector<torch::Tensor>& latents, int top_k = 5);

}  // namespace modec
