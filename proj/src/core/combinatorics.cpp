#include "symgen/core/combinatorics.hpp"

#include "symgen/core/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

namespace symgen {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw Error("invalid-partition", "partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw Error("invalid-composition", "composition parts must be positive");
}

int Composition::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Composition Composition::concat(const Composition& other) const {
    std::vector<int> parts = parts_;
    parts.insert(parts.end(), other.parts_.begin(), other.parts_.end());
    Composition c;
    c.parts_ = std::move(parts);
    return c;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    if (n < 0) return out;
    std::vector<int> current;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = 1; p <= remaining; ++p) {
            current.push_back(p);
            rec(remaining - p);
            current.pop_back();
        }
    };
    rec(n);
    return out;
}

namespace {

std::string join_parts(const std::vector<int>& parts) {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

}  // namespace

std::string to_string(const Composition& c) { return join_parts(c.parts()); }
std::string to_string(const Partition& p) { return join_parts(p.parts()); }

Composition parse_composition(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (!s.empty() && s.front() == '(') {
        if (s.back() != ')') throw Error("parse", "unbalanced parenthesis in composition '" + std::string(text) + "'");
        s = s.substr(1, s.size() - 2);
    }
    std::vector<int> parts;
    if (s.empty()) return Composition(parts);
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const auto comma = s.find(',', pos);
        const std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
            throw Error("parse", "malformed composition '" + std::string(text) + "'");
        parts.push_back(std::stoi(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Composition(parts);
}

}  // namespace symgen
