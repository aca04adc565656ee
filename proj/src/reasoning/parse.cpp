// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#include "georeason/reasoning/parse.hpp"

#include "georeason/util/text.hpp"

namespace georeason::reasoning {

namespace util = georeason::util;

namespace {

corpus::LocationLabel label_from_fields(const std::vector<std::string>& fields) {
    corpus::LocationLabel label;
    auto get = [&](std::size_t i) -> std::string {
        return i < fields.size() ? std::string(util::trim(fields[i])) : std::string();
    };
    label.country = get(0);
    label.state = get(1);
    label.city = get(2);
    label.street = get(3);
    return label;
}

// Drops leading whitespace, one optional '.', then whitespace again.
std::string_view strip_dot_prefix(std::string_view s) {
    s = util::trim(s);
    if (!s.empty() && s.front() == '.') s.remove_prefix(1);
    return util::trim(s);
}

bool try_primary(std::string_view raw, ParsedAnswer& out) {
    std::string_view s = util::trim(raw);
    constexpr std::string_view kKeyword = "PLACE";
    if (!util::starts_with(s, kKeyword)) return false;
    s.remove_prefix(kKeyword.size());
    s = util::trim(s);
    if (s.empty() || s.front() != '{') return false;
    std::size_t close = s.find('}');
    if (close == std::string_view::npos) return false;
    auto fields = util::split(s.substr(1, close - 1), ',');
    if (fields.size() != 4) return false;
    out.ok = true;
    out.location = label_from_fields(fields);
    out.explanation = std::string(strip_dot_prefix(s.substr(close + 1)));
    return true;
}

bool try_fallback(std::string_view raw, ParsedAnswer& out) {
    std::size_t search_from = 0;
    while (true) {
        std::size_t open = raw.find('{', search_from);
        if (open == std::string_view::npos) return false;
        std::size_t close = raw.find('}', open + 1);
        if (close == std::string_view::npos) return false;
        auto fields = util::split(raw.substr(open + 1, close - open - 1), ',');
        if (fields.size() >= 1 && fields.size() <= 4) {
            out.ok = true;
            out.location = label_from_fields(fields);
            std::string_view after = strip_dot_prefix(raw.substr(close + 1));
            out.explanation =
                std::string(after.empty() ? util::trim(raw.substr(0, open)) : after);
            return true;
        }
        search_from = close + 1;
    }
}

}  // namespace

ParsedAnswer parse_answer(std::string_view raw) {
    ParsedAnswer out;
    if (try_primary(raw, out)) return out;
    if (try_fallback(raw, out)) return out;
    return out;  // ok == false; caller preserves the raw text
}

std::string format_answer(const corpus::LocationLabel& location, std::string_view explanation) {
    std::string out = "PLACE {";
    out += location.country;
    out += ", ";
    out += location.state;
    out += ", ";
    out += location.city;
    out += ", ";
    out += location.street;
    out += "}.";
    if (!explanation.empty()) {
        out += " ";
        out += explanation;
    }
    return out;
}

}  // namespace georeason::reasoning
