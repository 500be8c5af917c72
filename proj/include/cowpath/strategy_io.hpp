#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cowpath/errors.hpp"
#include "cowpath/rational.hpp"
#include "cowpath/strategy.hpp"

namespace cowpath {

/// Strategy file format: one strategy per file, `key = value` lines, blank
/// lines and `#` comments ignored. Rationals are written as `p/q` (or `p`
/// when the denominator is 1) and parsed exactly.
///
///   family = geometric | aggressive | explicit
///   alpha  = p/q            (geometric)
///   t      = p/q            (aggressive)
///   prefix = p/q, p/q, ...  (explicit)
///   tail.base  = p/q        (optional, explicit only)
///   tail.ratio = p/q
inline Strategy parse_strategy(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
            s.remove_prefix(1);
        }
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
            s.remove_suffix(1);
        }
        return s;
    };

    std::map<std::string, std::string, std::less<>> entries;
    std::size_t line_number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto newline = text.find('\n', start);
        std::string_view line = text.substr(
            start, newline == std::string_view::npos ? std::string_view::npos : newline - start);
        start = newline == std::string_view::npos ? text.size() + 1 : newline + 1;
        ++line_number;

        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("line " + std::to_string(line_number) + ": expected `key = value`");
        }
        const std::string key{trim(line.substr(0, eq))};
        const std::string value{trim(line.substr(eq + 1))};
        if (key.empty()) {
            throw ParseError("line " + std::to_string(line_number) + ": empty key");
        }
        if (!entries.emplace(key, value).second) {
            throw ParseError("line " + std::to_string(line_number) + ": duplicate key `" + key + "`");
        }
    }

    auto take = [&](const std::string& key) -> std::optional<std::string> {
        auto it = entries.find(key);
        if (it == entries.end()) return std::nullopt;
        std::string value = it->second;
        entries.erase(it);
        return value;
    };
    auto require_rational = [&](const std::string& key) {
        const auto raw = take(key);
        if (!raw) throw ParseError("missing key `" + key + "`");
        const auto value = Rational::parse(*raw);
        if (!value) throw ParseError("key `" + key + "`: `" + *raw + "` is not a rational");
        return *value;
    };
    auto reject_leftovers = [&] {
        if (!entries.empty()) {
            throw ParseError("unknown key `" + entries.begin()->first + "`");
        }
    };

    const auto family = take("family");
    if (!family) throw ParseError("missing key `family`");

    if (*family == "geometric") {
        const Rational alpha = require_rational("alpha");
        reject_leftovers();
        return Strategy::geometric(alpha);
    }
    if (*family == "aggressive") {
        const Rational t = require_rational("t");
        reject_leftovers();
        return Strategy::aggressive(t);
    }
    if (*family == "explicit") {
        const auto raw = take("prefix");
        if (!raw) throw ParseError("missing key `prefix`");
        std::vector<Rational> prefix;
        std::string item;
        std::istringstream stream{*raw};
        while (std::getline(stream, item, ',')) {
            const auto value = Rational::parse(item);
            if (!value) throw ParseError("prefix entry `" + item + "` is not a rational");
            prefix.push_back(*value);
        }
        if (prefix.empty()) throw ParseError("prefix must list at least one segment");

        std::optional<GeometricTail> tail;
        const bool has_base = entries.contains("tail.base");
        const bool has_ratio = entries.contains("tail.ratio");
        if (has_base != has_ratio) {
            throw ParseError("tail needs both `tail.base` and `tail.ratio`");
        }
        if (has_base) {
            tail = GeometricTail{require_rational("tail.base"), require_rational("tail.ratio")};
        }
        reject_leftovers();
        return Strategy::explicit_prefix(std::move(prefix), std::move(tail));
    }
    throw ParseError("unknown family `" + *family + "`");
}

inline Strategy read_strategy_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open strategy file `" + path + "`");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_strategy(buffer.str());
}

inline std::string serialize_strategy(const Strategy& s) {
    std::string out;
    switch (s.family()) {
    case Strategy::Family::geometric:
        out = "family = geometric\nalpha = " + s.alpha().str() + "\n";
        break;
    case Strategy::Family::aggressive:
        out = "family = aggressive\nt = " + s.t_param().str() + "\n";
        break;
    case Strategy::Family::explicit_prefix:
        out = "family = explicit\nprefix = ";
        for (std::size_t i = 0; i < s.prefix().size(); ++i) {
            if (i > 0) out += ", ";
            out += s.prefix()[i].str();
        }
        out += '\n';
        if (s.tail()) {
            out += "tail.base = " + s.tail()->base.str() + "\n";
            out += "tail.ratio = " + s.tail()->ratio.str() + "\n";
        }
        break;
    }
    return out;
}

} // namespace cowpath
