#pragma once

// Procedural training images and in-memory image sets.

#include <torch/torch.h>

#include <cstdint>
#include <filesystem>
#include <vector>

#include "modec/rng.h"

namespace modec {

// One procedural image [3, size, size]: a colour gradient, a sum of oriented
// sinusoidal gratings, soft-edged shape overlays and optional fine noise. The
// texture amplitude and frequency are drawn per image, so the set mixes smooth
// and heavily textured content.
torch::Tensor synth_image(Rng& rng, std::int64_t size);

// Writes img_00000.png ... into `dir` (created if needed). Same seed gives
// byte-identical files. Throws ConfigError unless size is a positive multiple of 16.
std::vector<std::filesystem::path> synth_dataset(const std::filesystem::path& dir, std::uint64_t seed, int count,
                                                 std::int64_t size);

// Fraction of spectral energy (DC removed, luma) above `cutoff` cycles/pixel.
double high_frequency_ratio(const torch::Tensor& image, double cutoff = 0.25);

class ImageSet {
public:
    ImageSet() = default;
    explicit ImageSet(std::vector<torch::Tensor> images) : images_(std::move(images)) {}
    // Loads every PNG in the folder (held as 8-bit). Throws ArtifactMissingError if the folder is
    // missing or holds no images.
    static ImageSet load(const std::filesystem::path& dir, int limit = -1);

    std::size_t size() const { return images_.size(); }
    bool empty() const { return images_.empty(); }
    // Image i as float [3, H, W] in [0, 1].
    torch::Tensor at(std::size_t i) const;

    // Random crops with random horizontal flips, [batch, 3, crop, crop].
    torch::Tensor sample(Rng& rng, int batch, std::int64_t crop) const;

private:
    std::vector<torch::Tensor> images_;
};

}  // namespace modec
