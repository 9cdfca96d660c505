#pragma once

// End-to-end image codec over a run directory's checkpoints.
//
// Run directory layout:
//
//   config.json                 resolved experiment config
//   experts/sq_q<i>.ckpt        SQ expert for quality point i
//   experts/sq_q<i>.cdf         its quantized prior
//   experts/vq.ckpt             VQ expert
//   mode/<variant>/q<i>.ckpt    MoDE weights (variant: full, no_ese, sft_cem)
//   mode/<variant>/q<i>.jsonl   training log
//   eval/                       RD tables, BD reports, plots, bitstreams

#include <torch/torch.h>

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "modec/bitstream.h"
#include "modec/checkpoint.h"
#include "modec/entropy_model.h"
#include "modec/expert_sq.h"
#include "modec/expert_vq.h"
#include "modec/mode_core.h"

namespace modec {

struct RunPaths {
    std::filesystem::path root;

    std::filesystem::path config() const { return root / "config.json"; }
    std::filesystem::path experts() const { return root / "experts"; }
    std::filesystem::path sq_expert(int q) const;
    std::filesystem::path sq_cdf(int q) const;
    std::filesystem::path vq_expert() const { return experts() / "vq.ckpt"; }
    std::filesystem::path mode(const std::string& variant, int q) const;
    std::filesystem::path mode_log(const std::string& variant, int q) const;
    std::filesystem::path eval() const { return root / "eval"; }
};

// Frozen experts for every quality point, loaded and digest-stamped.
struct CodecModels {
    std::vector<SqExpert> sq;
    std::vector<FactorizedPrior> priors;
    std::vector<Digest> sq_digests;
    VqExpert vq{nullptr};
    Digest vq_digest{};

    int num_quality() const { return static_cast<int>(sq.size()); }
    SqExpertImpl& sq_at(int q);
    const FactorizedPrior& prior_at(int q) const;

    // Throws ArtifactMissingError naming `modec pretrain` when a checkpoint is absent.
    static CodecModels load(const RunPaths& paths, int num_quality);
};

enum class DecodeAnchor { kF, kP, kExpertF, kExpertP };
std::string to_string(DecodeAnchor a);
DecodeAnchor parse_decode_anchor(const std::string& s);  // F | P | expert-f | expert-p

struct EncodeOptions {
    int quality_index = 0;
    TokenMode token_mode = TokenMode::kFixed;
    bool sq_stream = true;
    bool vq_stream = true;
};

// image: [3, H, W] in [0, 1].
DualBitstream encode_image(CodecModels& models, const torch::Tensor& image, const EncodeOptions& options);

// Loaded MoDE decoders keyed by quality index; needed for the F and P anchors.
using ModeSet = std::map<int, CollaborativeDecoder>;
ModeSet load_mode_set(const RunPaths& paths, CodecModels& models, const std::string& variant);

// All reconstructions a bitstream supports, [3, H, W] each, clamped to [0, 1]
// and cropped to the original size. Missing anchors are left undefined.
struct Decoded {
    torch::Tensor mod_f, mod_p, expert_f, expert_p;
    const torch::Tensor& at(DecodeAnchor a) const;
};

// Checks header model ids against the loaded experts (DigestMismatchError).
// `mode` may be null when only expert anchors are wanted.
Decoded decode_all(CodecModels& models, const DualBitstream& bs, CollaborativeDecoderImpl* mode);
torch::Tensor decode_image(CodecModels& models, const DualBitstream& bs, DecodeAnchor anchor,
                           CollaborativeDecoderImpl* mode);

}  // namespace modec
