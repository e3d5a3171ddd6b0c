/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef FLAGVAR_H
#define FLAGVAR_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FlagvarStatus {
  FLAGVAR_STATUS_OK = 0,
  // Null pointer or malformed argument.
  FLAGVAR_STATUS_INVALID_ARGUMENT = 1,
  // Type, rank or crossing rejected by the library.
  FLAGVAR_STATUS_INVALID_FLAG = 2,
  // Enumeration exceeded its guard.
  FLAGVAR_STATUS_GUARD_OVERFLOW = 3,
  // Index past the end of a list.
  FLAGVAR_STATUS_OUT_OF_RANGE = 4,
  // A panic was caught at the boundary.
  FLAGVAR_STATUS_INTERNAL = 5,
} FlagvarStatus;

// A parabolic flag variety `G/P`.
typedef struct FlagvarFlag FlagvarFlag;

// The submodules of one flag, with their properties.
typedef struct FlagvarSubmodules FlagvarSubmodules;

typedef struct FlagvarProperties {
  bool nontrivial;
  bool frobenius;
  bool contact;
  bool first_order_nondegenerate;
  // Whether `ratio_numer / ratio_denom` is meaningful.
  bool semicanonical;
  uint64_t ratio_numer;
  uint64_t ratio_denom;
} FlagvarProperties;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. The pointer is
// valid until the next call into this library on the same thread.
const char *flagvar_last_error(void);

// Builds a flag from a JSON descriptor such as
// `{"factors":[{"series":"B","rank":3}],"crossed":[[3]]}`.
//
// # Safety
// `descriptor` must be a valid NUL-terminated string; `out` must be writable.
enum FlagvarStatus flagvar_flag_from_json(const char *descriptor, struct FlagvarFlag **out);

// Builds a flag of one simple type. `crossed` holds one-based Bourbaki nodes.
//
// # Safety
// `crossed` must point to `n_crossed` values; `out` must be writable.
enum FlagvarStatus flagvar_flag_new(char series,
                                    size_t rank,
                                    const size_t *crossed,
                                    size_t n_crossed,
                                    struct FlagvarFlag **out);

// # Safety
// `flag` must come from a constructor in this library, or be null.
void flagvar_flag_free(struct FlagvarFlag *flag);

// # Safety
// Pointers must be valid.
enum FlagvarStatus flagvar_flag_dimension(const struct FlagvarFlag *flag, size_t *out);

// # Safety
// Pointers must be valid.
enum FlagvarStatus flagvar_flag_rank(const struct FlagvarFlag *flag, size_t *out);

// Writes the simple-root coefficients of omega. `len` receives the rank;
// at most `cap` values are written.
//
// # Safety
// `buf` must hold `cap` values.
enum FlagvarStatus flagvar_flag_omega(const struct FlagvarFlag *flag,
                                      int64_t *buf,
                                      size_t cap,
                                      size_t *len);

// Coefficients of the noncompact positive root at `index`.
//
// # Safety
// `buf` must hold `cap` values.
enum FlagvarStatus flagvar_flag_noncompact_root(const struct FlagvarFlag *flag,
                                                size_t index,
                                                int32_t *buf,
                                                size_t cap,
                                                size_t *len);

// Enumerates all submodules. `guard` caps the count; 0 uses the default
// or the `FLAGVAR_GUARD` environment variable.
//
// # Safety
// Pointers must be valid.
enum FlagvarStatus flagvar_submodules_enumerate(const struct FlagvarFlag *flag,
                                                uint64_t guard,
                                                struct FlagvarSubmodules **out);

// # Safety
// `list` must come from `flagvar_submodules_enumerate`, or be null.
void flagvar_submodules_free(struct FlagvarSubmodules *list);

// # Safety
// Pointers must be valid.
enum FlagvarStatus flagvar_submodules_count(const struct FlagvarSubmodules *list, size_t *out);

// Member indices (into the flag's noncompact roots) of submodule `index`.
//
// # Safety
// `buf` must hold `cap` values.
enum FlagvarStatus flagvar_submodule_members(const struct FlagvarSubmodules *list,
                                             size_t index,
                                             size_t *buf,
                                             size_t cap,
                                             size_t *len);

// Writes the det-weight of submodule `index`.
//
// # Safety
// `buf` must hold `cap` values.
enum FlagvarStatus flagvar_submodule_weight(const struct FlagvarSubmodules *list,
                                            size_t index,
                                            int64_t *buf,
                                            size_t cap,
                                            size_t *len);

// # Safety
// Pointers must be valid.
enum FlagvarStatus flagvar_submodule_properties(const struct FlagvarSubmodules *list,
                                                size_t index,
                                                struct FlagvarProperties *out);

// Full classification record of the flag as a JSON string, to be released
// with `flagvar_string_free`.
//
// # Safety
// Pointers must be valid.
enum FlagvarStatus flagvar_flag_classify_json(const struct FlagvarFlag *flag,
                                              uint64_t guard,
                                              char **out);

// # Safety
// `s` must come from this library, or be null.
void flagvar_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FLAGVAR_H */
