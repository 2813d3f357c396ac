#pragma once

// Internal line/header parsing helpers shared by the file-format parsers.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qmsd/gf3.hpp"

namespace qmsd::detail {

// Splits on LF, strips a trailing CR from each line.
inline std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) {
        if (cur.back() == '\r') cur.pop_back();
        lines.push_back(cur);
    }
    return lines;
}

inline bool is_comment_or_blank(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (ch != ' ' && ch != '\t') return false;
    }
    return true;  // blank
}

// Parses "key=value key=value ..." tokens separated by spaces.
inline std::map<std::string, std::string> parse_header(const std::string& line) {
    std::map<std::string, std::string> kv;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && line[i] == ' ') ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ') ++i;
        std::string tok = line.substr(start, i - start);
        if (tok.empty()) continue;
        std::size_t eq = tok.find('=');
        if (eq == std::string::npos)
            throw Error("malformed header token '" + tok + "'");
        kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return kv;
}

inline long header_int(const std::map<std::string, std::string>& kv,
                       const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw Error("header missing '" + key + "='");
    try {
        std::size_t pos = 0;
        long v = std::stol(it->second, &pos);
        if (pos != it->second.size()) throw Error("");
        return v;
    } catch (...) {
        throw Error("header field '" + key + "' is not an integer: " + it->second);
    }
}

inline std::string header_str(const std::map<std::string, std::string>& kv,
                              const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw Error("header missing '" + key + "='");
    return it->second;
}

}  // namespace qmsd::detail
