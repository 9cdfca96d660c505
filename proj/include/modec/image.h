#pragma once

// Images are float tensors shaped [3, H, W] (or batched [B, 3, H, W]) with
// values in [0, 1].

#include <torch/torch.h>

#include <cstdint>
#include <filesystem>
#include <vector>

namespace modec {

torch::Tensor load_png(const std::filesystem::path& path);
// Values are clamped and rounded to 8 bits.
void save_png(const std::filesystem::path& path, const torch::Tensor& image);

// 8-bit image <-> float tensor.
torch::Tensor from_rgb8(const std::vector<std::uint8_t>& rgb, int height, int width);
std::vector<std::uint8_t> to_rgb8(const torch::Tensor& image);

// Rounds to the 8-bit grid, as a PNG round trip would.
torch::Tensor quantize_8bit(const torch::Tensor& image);

// Reflect-pads the last two dims up to multiples of `multiple`. Falls back to
// replicate padding where the image is too small to reflect.
torch::Tensor pad_to_multiple(const torch::Tensor& image, int multiple);
torch::Tensor crop_to(const torch::Tensor& image, std::int64_t height, std::int64_t width);

// Sorted list of *.png files in a directory.
std::vector<std::filesystem::path> list_pngs(const std::filesystem::path& dir);

}  // namespace modec
