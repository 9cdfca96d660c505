#pragma once

// Experiment configuration (JSON). Every key is optional; unknown keys and
// type or range violations raise ConfigError with the dotted field path.
//
//   seed                      u64, root of all randomness
//   output_dir                run directory
//   dataset.kind              "synthetic" | "folder"
//   dataset.seed/count/size   synthetic training set
//   dataset.eval_seed/eval_count/eval_size   synthetic held-out set
//   dataset.train_dir/eval_dir               folder datasets
//   sq.*, vq.*                expert architecture (see SqConfig, VqConfig)
//   lambdas                   one SQ expert per entry (quality index = position)
//   mode.*                    ModeConfig
//   loss.*                    LossWeights
//   pretrain.*                expert pretraining schedule
//   train.*                   MoDE training schedule
//   eval.*                    evaluation settings
//   ablations                 subset of ["no_ese", "sft_cem"]

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "modec/bjontegaard.h"
#include "modec/expert_sq.h"
#include "modec/expert_vq.h"
#include "modec/mode_core.h"
#include "modec/training.h"

namespace modec {

struct DatasetSpec {
    std::string kind = "synthetic";
    std::uint64_t seed = 1;
    int count = 2000;
    int size = 128;
    std::uint64_t eval_seed = 2;
    int eval_count = 64;
    int eval_size = 128;
    std::string train_dir;
    std::string eval_dir;
};

struct PretrainSpec {
    std::int64_t sq_steps = 12000;
    std::int64_t vq_steps = 12000;
    int batch = 8;
    int crop = 64;
    double sq_lr = 1e-3;
    double vq_lr = 1e-3;
    double beta = 0.25;
    double perceptual = 1.0;
    int reseed_epochs = 2;
};

struct TrainSpec {
    std::int64_t steps = 20000;
    int batch = 4;
    int crop = 64;
    double lr = 1e-4;
    int log_every = 200;
    int digest_every = 1;
    bool adversarial = false;
    bool separate_discriminators = false;
    std::string anchors = "both";  // both | F | P
};

struct EvalSpec {
    std::string token_mode = "fixed";  // fixed | entropy
    int max_images = -1;               // -1: whole eval set
    std::string interpolation = "pchip";  // pchip | cubic
};

struct ExperimentConfig {
    std::uint64_t seed = 20240611;
    std::string output_dir = "runs/toy";
    DatasetSpec dataset;
    SqConfig sq;
    VqConfig vq;
    std::vector<double> lambdas{0.003, 0.01, 0.03, 0.1};
    ModeConfig mode;
    LossWeights loss;
    PretrainSpec pretrain;
    TrainSpec train;
    EvalSpec eval;
    std::vector<std::string> ablations{"no_ese", "sft_cem"};

    int num_quality() const { return static_cast<int>(lambdas.size()); }
    TokenMode token_mode() const;
    Interpolation interpolation() const;
    // Effective loss weights (m_adv defaulted when adversarial training is on).
    LossWeights effective_loss() const;
};

ExperimentConfig parse_config(const nlohmann::json& j);
// Throws ConfigError when the file is missing or not valid JSON.
ExperimentConfig load_config(const std::filesystem::path& path);
nlohmann::json to_json(const ExperimentConfig& c);

}  // namespace modec
