// sieve_cache.hpp
// On-disk persistence of sieve tables between runs, enabled by the
// FP_SIEVE_CACHE_DIR environment variable.
//
// File format "FPSV1", all integers little-endian:
//   bytes 0..4   magic "FPSV1"
//   u64          limit
//   u64          word count W = limit/64 + 1
//   u64 * W      primality bitset (bit n of word n/64)
//   u64          lambda count L = limit + 1
//   f64 * L      von Mangoldt weights (IEEE-754 binary64)
//
// The smallest-prime-factor array is not persisted; tables loaded from a
// cache answer factorisation queries through the prime bits instead.

#pragma once

#include <optional>
#include <string>

#include "frobpow/sieve.hpp"

namespace frobpow {

inline constexpr char sieve_cache_env[] = "FP_SIEVE_CACHE_DIR";

// write tables to "<dir>/sieve-<limit>.fpsv1" (atomic rename); returns path
std::string save_sieve_cache(const std::string& dir, const SieveTables& tables);

SieveTables load_sieve_cache(const std::string& path);

// smallest cached limit >= min_limit within dir, if any
std::optional<std::string> find_sieve_cache(const std::string& dir, uint64_t min_limit);

} // namespace frobpow
