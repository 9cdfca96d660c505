/* C ABI implemented by an optional native range coder library.
 *
 * The library must produce byte-identical streams to the reference coder in
 * range_coder.h. Tables are passed flattened: table t occupies
 * cdf_flat[cdf_offsets[t] .. cdf_offsets[t + 1]). */
#ifndef MODEC_NATIVE_CODER_ABI_H
#define MODEC_NATIVE_CODER_ABI_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define MODEC_NATIVE_ABI_VERSION 1

enum modec_native_status {
    MODEC_NATIVE_OK = 0,
    MODEC_NATIVE_CONTRACT_ERROR = 1,
    MODEC_NATIVE_DECODE_ERROR = 2,
};

int modec_native_abi_version(void);

/* On success *out points to a buffer owned by the library; release it with modec_native_free. */
int modec_native_encode(const int32_t* symbols, const uint16_t* cdf_ids, size_t count, const uint32_t* cdf_flat,
                        const size_t* cdf_offsets, size_t num_tables, uint8_t** out, size_t* out_len);

/* Writes `count` symbols into out_symbols. On MODEC_NATIVE_DECODE_ERROR *err_offset holds the byte offset. */
int modec_native_decode(const uint8_t* bytes, size_t len, const uint32_t* cdf_flat, const size_t* cdf_offsets,
                        size_t num_tables, const uint16_t* cdf_ids, size_t count, int32_t* out_symbols,
                        size_t* err_offset);

void modec_native_free(uint8_t* buffer, size_t len);

#ifdef __cplusplus
}
#endif

#endif /* MODEC_NATIVE_CODER_ABI_H */
