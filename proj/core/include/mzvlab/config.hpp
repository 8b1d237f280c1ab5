#pragma once

#include <cstdint>
#include <string>

namespace mzvlab {

// Campaign configuration. Loadable from a key=value file; the cache path
// may also come from the MZV_CACHE_PATH environment variable.
struct Config {
    int digits = 50;
    int guard = -1;  // -1: auto (10 + heaviest weight in play)
    int m_max = 6;
    int weight_max = 9;
    std::uint64_t p_min = 0;  // 0: auto (weight + m + 2)
    std::uint64_t p_max = 500;
    std::string cache_path;
    int threads = 1;

    // Known keys: digits, guard, m_max, weight_max, p_min, p_max, cache_path, threads.
    static Config from_file(const std::string& path);

    // Applies MZV_CACHE_PATH when set and the path was not set explicitly.
    void apply_env();

    // digits >= 20; an explicit guard must cover 10 + weight_max.
    void validate() const;

    int effective_guard() const { return guard < 0 ? 10 + weight_max : guard; }
};

}  // namespace mzvlab
