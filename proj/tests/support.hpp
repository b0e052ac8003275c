#pragma once

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bullwhip/config.hpp"
#include "bullwhip/sim.hpp"

namespace testsupport {

inline std::filesystem::path source_dir() {
#ifdef BULLWHIP_SOURCE_DIR
    return std::filesystem::path(BULLWHIP_SOURCE_DIR);
#else
    return std::filesystem::current_path();
#endif
}

inline std::filesystem::path data_dir() { return source_dir() / "data"; }

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Run configuration with the shipped knowledge bases wired in.
inline bullwhip::RunConfig default_config() {
    bullwhip::RunConfig config;
    config.policies_kb_path = (data_dir() / "policies.kb").string();
    config.strategies_kb_path = (data_dir() / "strategies.kb").string();
    return config;
}

/// Minimal XML well-formedness check: tag balance, quote closure, and a
/// single root element. Enough to keep the emitted SVG honest.
inline bool xml_well_formed(const std::string& text) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    const std::size_t n = text.size();
    int roots = 0;
    bool seen_root = false;
    while (i < n) {
        if (text[i] != '<') {
            ++i;
            continue;
        }
        if (text.compare(i, 2, "<?") == 0) {
            const std::size_t end = text.find("?>", i);
            if (end == std::string::npos) return false;
            i = end + 2;
            continue;
        }
        if (text.compare(i, 4, "<!--") == 0) {
            const std::size_t end = text.find("-->", i);
            if (end == std::string::npos) return false;
            i = end + 3;
            continue;
        }
        const bool closing = i + 1 < n && text[i + 1] == '/';
        std::size_t j = i + (closing ? 2 : 1);
        std::string name;
        while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == ':' ||
                         text[j] == '-' || text[j] == '_'))
            name += text[j++];
        if (name.empty()) return false;
        // Scan to the tag end, honoring quoted attribute values.
        bool self_closing = false;
        char quote = 0;
        for (; j < n; ++j) {
            const char c = text[j];
            if (quote) {
                if (c == quote) quote = 0;
            } else if (c == '"' || c == '\'') {
                quote = c;
            } else if (c == '>') {
                break;
            } else if (c == '/' && j + 1 < n && text[j + 1] == '>') {
                self_closing = true;
            }
        }
        if (j >= n || quote) return false;
        if (closing) {
            if (stack.empty() || stack.back() != name) return false;
            stack.pop_back();
            if (stack.empty()) seen_root = true;
        } else if (!self_closing) {
            if (stack.empty()) {
                if (seen_root) return false;
                ++roots;
            }
            stack.push_back(name);
        } else if (stack.empty()) {
            if (seen_root) return false;
            ++roots;
            seen_root = true;
        }
        i = j + 1;
    }
    return stack.empty() && roots == 1;
}

/// Scratch directory removed at scope exit.
struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const std::string& tag) {
        path = std::filesystem::temp_directory_path() /
               ("bullwhip_" + tag + "_" + std::to_string(std::rand()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
};

}  // namespace testsupport
