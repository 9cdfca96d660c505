#pragma once

// Entropy coder backends. The reference coder is always available; a native
// library implementing native_coder_abi.h is picked up when present and used
// in its place. Both produce identical bytes.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "modec/range_coder.h"

namespace modec {

class EntropyCoder {
public:
    virtual ~EntropyCoder() = default;
    virtual std::string name() const = 0;
    virtual std::vector<std::uint8_t> encode(const CodedSymbols& symbols, std::span<const CdfTable> tables) const = 0;
    virtual CodedSymbols decode(std::span<const std::uint8_t> bytes, std::span<const CdfTable> tables,
                                std::span<const std::uint16_t> cdf_ids) const = 0;
};

class ReferenceCoder final : public EntropyCoder {
public:
    std::string name() const override { return "reference"; }
    std::vector<std::uint8_t> encode(const CodedSymbols& symbols, std::span<const CdfTable> tables) const override;
    CodedSymbols decode(std::span<const std::uint8_t> bytes, std::span<const CdfTable> tables,
                        std::span<const std::uint16_t> cdf_ids) const override;
};

// Wraps a dlopen'ed native library. Errors reported by the library surface as
// ContractError / DecodeError, same as the reference coder.
class NativeCoder final : public EntropyCoder {
public:
    // Throws ArtifactMissingError if the library cannot be loaded or lacks the ABI.
    explicit NativeCoder(const std::string& library_path);
    ~NativeCoder() override;
    NativeCoder(const NativeCoder&) = delete;
    NativeCoder& operator=(const NativeCoder&) = delete;

    std::string name() const override { return "native:" + path_; }
    std::vector<std::uint8_t> encode(const CodedSymbols& symbols, std::span<const CdfTable> tables) const override;
    CodedSymbols decode(std::span<const std::uint8_t> bytes, std::span<const CdfTable> tables,
                        std::span<const std::uint16_t> cdf_ids) const override;

private:
    struct Api;
    std::string path_;
    void* handle_ = nullptr;
    std::unique_ptr<Api> api_;
};

inline constexpr const char* kNativeCoderEnv = "MODEC_NATIVE_CODER";
inline constexpr const char* kNativeCoderDefaultLib = "libmodec_coder_native.so";

// Native coder if MODEC_NATIVE_CODER names a loadable library (or the default
// library name resolves), otherwise the reference coder. Setting the variable
// to "off" forces the reference coder.
std::shared_ptr<const EntropyCoder> default_entropy_coder();

// Same as default_entropy_coder() but without the process-wide cache.
std::shared_ptr<const EntropyCoder> detect_entropy_coder();

}  // namespace modec
