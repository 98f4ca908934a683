#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bagger {

// Exit-code-aligned error categories: usage errors are handled by the CLI
// parser, these cover the other two classes.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ShapeError : DataError {
    explicit ShapeError(const std::string& msg) : DataError(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw DataError(msg);
}

// splitmix64, used to derive independent stage seeds from the global seed.
inline uint64_t mix_seed(uint64_t seed, uint64_t tag) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

template <typename T>
bool all_finite(const T* data, size_t n) {
    for (size_t i = 0; i < n; ++i)
        if (!std::isfinite(data[i])) return false;
    return true;
}

}  // namespace bagger
