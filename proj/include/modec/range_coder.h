#pragma once

// Reference range coder.
//
// 32-bit range / 64-bit low register with deferred carry propagation (the
// "cache + pending 0xFF run" scheme). Frequencies are quantized to a fixed
// 16-bit total. The first byte produced by the classic scheme is always zero;
// it is dropped on output and the decoder primes its code register with four
// bytes instead of five.
//
// Stream layout: one byte per renormalization shift followed by a four byte
// flush. An empty symbol sequence therefore encodes to exactly four bytes.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace modec {

inline constexpr int kCdfPrecision = 16;
inline constexpr std::uint32_t kCdfTotal = 1u << kCdfPrecision;

// Quantized cumulative table over symbols 0..size()-1.
// cdf.front() == 0, cdf.back() == kCdfTotal, strictly increasing.
struct CdfTable {
    std::vector<std::uint32_t> cdf;

    std::size_t num_symbols() const { return cdf.empty() ? 0 : cdf.size() - 1; }
    std::uint32_t freq(std::size_t s) const { return cdf[s + 1] - cdf[s]; }
};

// Throws ContractError unless `t` satisfies the table invariants.
void validate_cdf(const CdfTable& t);

// Builds a table from (unnormalized, non-negative) probabilities. Every symbol
// keeps at least one count, so the result is always codable.
CdfTable cdf_from_probabilities(std::span<const double> probs);

// Builds a table from integer counts; zero counts are lifted to one.
CdfTable cdf_from_counts(std::span<const std::uint64_t> counts);

// Symbol sequence plus the table selector for each symbol.
struct CodedSymbols {
    std::vector<std::int32_t> symbols;
    std::vector<std::uint16_t> cdf_ids;

    bool operator==(const CodedSymbols&) const = default;
};

class RangeEncoder {
public:
    RangeEncoder();
    void encode(std::uint32_t cum_freq, std::uint32_t freq);
    void encode(std::int32_t symbol, const CdfTable& table);
    // Terminates the stream and returns the bytes. The encoder is spent afterwards.
    std::vector<std::uint8_t> finish();

private:
    void shift_low();

    std::uint64_t low_ = 0;
    std::uint32_t range_ = 0xFFFFFFFFu;
    std::uint8_t cache_ = 0;
    std::uint64_t cache_size_ = 1;
    bool drop_next_ = true;
    std::vector<std::uint8_t> out_;
};

class RangeDecoder {
public:
    explicit RangeDecoder(std::span<const std::uint8_t> bytes);
    std::int32_t decode(const CdfTable& table);
    std::size_t position() const { return pos_; }

private:
    std::uint8_t next_byte();

    std::span<const std::uint8_t> in_;
    std::size_t pos_ = 0;
    std::uint32_t code_ = 0;
    std::uint32_t range_ = 0xFFFFFFFFu;
};

std::vector<std::uint8_t> range_encode_ref(const CodedSymbols& symbols, std::span<const CdfTable> tables);

// Decodes cdf_ids.size() symbols; symbol i is read with tables[cdf_ids[i]].
CodedSymbols range_decode_ref(std::span<const std::uint8_t> bytes, std::span<const CdfTable> tables,
                              std::span<const std::uint16_t> cdf_ids);

// Single-table convenience overload.
CodedSymbols range_decode_ref(std::span<const std::uint8_t> bytes, const CdfTable& table, std::size_t count);

// Ideal code length in bits: sum of -log2(freq / total).
double shannon_bits(const CodedSymbols& symbols, std::span<const CdfTable> tables);

}  // namespace modec
