#pragma once

// Subcommand implementations behind the `modec` CLI. Each returns normally on
// success and reports failures through the typed errors in errors.h.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "modec/codec.h"
#include "modec/config.h"
#include "modec/dataset.h"

namespace modec {

// Stable 64-bit seed for a named stage, derived from the root seed.
std::uint64_t derive_seed(std::uint64_t root, const std::string& stage);

struct DatasetDirs {
    std::filesystem::path train;
    std::filesystem::path eval;
};

// Synthesizes missing synthetic sets under <output_dir>/data (regenerating
// when their recorded parameters differ) and returns the folders to read.
DatasetDirs prepare_datasets(const ExperimentConfig& config);

// Writes config.json and digests.json into the run directory.
void write_provenance(const ExperimentConfig& config);

struct CommandOptions {
    bool force = false;              // retrain even when checkpoints exist
    std::vector<int> qualities;      // empty: all quality points
};

void cmd_pretrain(const ExperimentConfig& config, const CommandOptions& options = {});
void cmd_train(const ExperimentConfig& config, const CommandOptions& options = {}, const std::string& variant = "full");
void cmd_ablate(const ExperimentConfig& config, const std::string& kind, const CommandOptions& options = {});

// Reads the run's config.json to find the experts.
void cmd_encode(const std::filesystem::path& run_dir, const std::filesystem::path& image, int quality,
                const std::filesystem::path& out, TokenMode token_mode);
// Writes one PNG per requested anchor. With several anchors, `out` is a
// directory; with one it may be a file path ending in .png.
std::vector<std::filesystem::path> cmd_decode(const std::filesystem::path& run_dir,
                                              const std::filesystem::path& bitstream,
                                              const std::vector<DecodeAnchor>& anchors,
                                              const std::filesystem::path& out, const std::string& variant = "full");

// Evaluates every method on the held-out set; writes eval/ (tables, BD
// reports, bitstreams, summary.json, report.md, plots). Returns the summary.
nlohmann::json cmd_eval(const ExperimentConfig& config);

// Regenerates report.md and the SVG plots from eval/summary.json. `results_dir`
// may be the run directory or its eval/ folder.
void cmd_report(const std::filesystem::path& results_dir);

// Report rendering, exposed for tests.
std::string render_report(const nlohmann::json& summary);
std::string render_rd_svg(const nlohmann::json& summary, const std::string& metric);

}  // namespace modec
