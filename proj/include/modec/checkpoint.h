#pragma once

// Checkpoint container.
//
//   magic      8 bytes  "MODECKPT"
//   version    u32 LE
//   meta_len   u32 LE, followed by meta_len bytes of UTF-8 JSON
//   count      u32 LE, followed by `count` tensor records:
//                name_len u16, name bytes, ndim u8, dims i64[ndim], float32 LE data
//   digest     32 bytes SHA-256 of the tensor section (count + records)
//
// The tensor-section digest is the weights digest used to pin experts.

#include <torch/torch.h>

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace modec {

inline constexpr std::uint32_t kCheckpointVersion = 1;

using Digest = std::array<std::uint8_t, 32>;

std::string to_hex(const Digest& d);
Digest digest_from_hex(const std::string& hex);
Digest sha256(std::span<const std::uint8_t> bytes);

// First four digest bytes, little-endian; recorded in bitstream headers.
std::uint32_t short_id(const Digest& d);

using NamedTensors = std::vector<std::pair<std::string, torch::Tensor>>;

// Parameters and buffers of a module in deterministic (registration) order.
NamedTensors named_state(const torch::nn::Module& module);
void load_named_state(torch::nn::Module& module, const NamedTensors& tensors, const std::string& context);

// Serialized tensor section and its digest.
std::vector<std::uint8_t> encode_tensor_section(const NamedTensors& tensors);
Digest weights_digest(const NamedTensors& tensors);
Digest weights_digest(const torch::nn::Module& module);

struct Checkpoint {
    nlohmann::json meta;
    NamedTensors tensors;
    Digest digest{};
};

void save_checkpoint(const std::filesystem::path& path, const nlohmann::json& meta, const NamedTensors& tensors);
// Verifies the stored digest; throws FormatError on corruption, ArtifactMissingError if absent.
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace modec
