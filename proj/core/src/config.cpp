#include "mzvlab/config.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace mzvlab {

Config Config::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    Config cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // Strip comments and surrounding blanks.
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config: expected key=value at " + path + ":" + std::to_string(lineno));
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        auto trim = [](std::string s) {
            auto a = s.find_first_not_of(" \t");
            auto b = s.find_last_not_of(" \t");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        key = trim(key);
        value = trim(value);
        if (key == "digits") cfg.digits = std::stoi(value);
        else if (key == "guard") cfg.guard = std::stoi(value);
        else if (key == "m_max") cfg.m_max = std::stoi(value);
        else if (key == "weight_max") cfg.weight_max = std::stoi(value);
        else if (key == "p_min") cfg.p_min = std::stoull(value);
        else if (key == "p_max") cfg.p_max = std::stoull(value);
        else if (key == "cache_path") cfg.cache_path = value;
        else if (key == "threads") cfg.threads = std::stoi(value);
        else throw std::runtime_error("config: unknown key '" + key + "' at " + path + ":" + std::to_string(lineno));
    }
    return cfg;
}

void Config::apply_env() {
    if (!cache_path.empty()) return;
    if (const char* p = std::getenv("MZV_CACHE_PATH")) cache_path = p;
}

void Config::validate() const {
    if (digits < 20) throw std::invalid_argument("config: digits must be >= 20");
    if (guard >= 0 && guard < 10 + weight_max)
        throw std::invalid_argument("config: guard must be >= 10 + weight_max");
    if (m_max < 0 || weight_max < 2) throw std::invalid_argument("config: bad ranges");
    if (threads < 1) throw std::invalid_argument("config: threads must be >= 1");
}

}  // namespace mzvlab
