#pragma once

// Dual-stream bitstream (.mode files).
//
// Header, 28 bytes, all integers little-endian:
//
//   offset  size  field
//        0     4  magic "MODE"
//        4     1  version (1)
//        5     2  orig_h
//        7     2  orig_w
//        9     1  quality_index (255: no SQ stream)
//       10     1  codebook_size_log2
//       11     1  token_mode (0 fixed, 1 entropy, 2 no VQ stream)
//       12     4  sq_model_id (first 4 bytes of the SQ expert weights digest)
//       16     4  vq_model_id (first 4 bytes of the VQ expert weights digest)
//       20     4  sq_len
//       24     4  vq_len
//       28        sq payload (sq_len bytes), then vq payload (vq_len bytes)
//
// SQ payload: range-coded latent symbols in channel-major order (c, y, x) with
// the quality point's per-channel CDF table; latent grid is ceil(H/16) x ceil(W/16).
//
// VQ payload, fixed mode: row-major token indices, codebook_size_log2 bits each,
// MSB first, zero-padded to a byte boundary.
// VQ payload, entropy mode: u16 k (distinct symbols), k x (u16 symbol, u16 freq-1)
// with freqs summing to 2^16, then the range-coded row-major tokens.

#include <torch/torch.h>

#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <vector>

#include "modec/entropy_coder.h"
#include "modec/entropy_model.h"
#include "modec/expert_vq.h"

namespace modec {

inline constexpr std::uint8_t kBitstreamVersion = 1;
inline constexpr std::size_t kHeaderBytes = 28;
inline constexpr std::uint8_t kNoSqStream = 255;
inline constexpr std::uint8_t kNoVqStream = 2;

struct BitstreamMeta {
    std::uint16_t orig_h = 0;
    std::uint16_t orig_w = 0;
    std::uint8_t quality_index = 0;
    std::uint8_t codebook_size_log2 = 10;
    std::uint8_t token_mode = static_cast<std::uint8_t>(TokenMode::kFixed);
    std::uint32_t sq_model_id = 0;
    std::uint32_t vq_model_id = 0;

    bool has_sq() const { return quality_index != kNoSqStream; }
    bool has_vq() const { return token_mode != kNoVqStream; }
    bool operator==(const BitstreamMeta&) const = default;
};

struct DualBitstream {
    BitstreamMeta meta;
    std::vector<std::uint8_t> sq_payload;
    std::vector<std::uint8_t> vq_payload;

    std::size_t total_bytes() const { return kHeaderBytes + sq_payload.size() + vq_payload.size(); }
    std::size_t total_bits() const { return 8 * total_bytes(); }
    double bpp() const;
};

std::vector<std::uint8_t> serialize(const DualBitstream& bs);
// Throws BadMagicError, VersionMismatchError or TruncatedError.
DualBitstream parse_bitstream(std::span<const std::uint8_t> bytes);

void write_bitstream(const std::filesystem::path& path, const DualBitstream& bs);
DualBitstream read_bitstream(const std::filesystem::path& path);

// Latent grid size for an image dimension.
std::int64_t latent_extent(std::int64_t pixels);

// Quantized latent [C, h, w] (or [1, C, h, w]) -> range-coded payload. Values are
// clamped to the prior's symbol range.
std::vector<std::uint8_t> encode_sq_payload(const torch::Tensor& latent_q, const FactorizedPrior& prior,
                                            const EntropyCoder& coder);
torch::Tensor decode_sq_payload(std::span<const std::uint8_t> payload, const FactorizedPrior& prior, std::int64_t height,
                                std::int64_t width, const EntropyCoder& coder);

std::vector<std::uint8_t> encode_token_payload(const TokenGrid& tokens, TokenMode mode);
std::vector<std::uint8_t> encode_token_payload(const TokenGrid& tokens, TokenMode mode, const EntropyCoder& coder);
TokenGrid decode_token_payload(std::span<const std::uint8_t> payload, TokenMode mode, std::int64_t height,
                               std::int64_t width, std::int64_t codebook_size, const EntropyCoder& coder);

// Packs a quantized SQ latent (may be undefined when meta has no SQ stream)
// and a token grid (ignored when meta has no VQ stream).
DualBitstream pack(const torch::Tensor& latent_q, const TokenGrid& tokens, const BitstreamMeta& meta,
                   const FactorizedPrior* prior, const EntropyCoder& coder = *default_entropy_coder());

struct Unpacked {
    torch::Tensor latent_q;  // [1, C, h, w]; undefined without an SQ stream
    TokenGrid tokens;        // empty without a VQ stream
    BitstreamMeta meta;
};

Unpacked unpack(const DualBitstream& bs, const FactorizedPrior* prior,
                const EntropyCoder& coder = *default_entropy_coder());

// Checks image dims fit the u16 header fields.
void check_dims(std::int64_t height, std::int64_t width);

}  // namespace modec
