// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#include "georeason/util/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>

namespace georeason::util {

namespace {

bool is_space(char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

char lower(char c) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

// Base letters for U+00C0..U+00FF. Multi-char expansions (AE, ss, TH)
// handled separately.
const char* latin1_base(char32_t cp) {
    switch (cp) {
        case 0xC6: return "AE";
        case 0xE6: return "ae";
        case 0xDF: return "ss";
        case 0xDE: return "TH";
        case 0xFE: return "th";
        case 0xD0: return "D";
        case 0xF0: return "d";
        default: break;
    }
    static constexpr char32_t kFrom[] = {0xC0, 0xC8, 0xCC, 0xD2, 0xD9, 0xE0, 0xE8, 0xEC, 0xF2, 0xF9};
    static constexpr char32_t kTo[] = {0xC5, 0xCB, 0xCF, 0xD6, 0xDC, 0xE5, 0xEB, 0xEF, 0xF6, 0xFC};
    static constexpr const char* kBase[] = {"A", "E", "I", "O", "U", "a", "e", "i", "o", "u"};
    for (std::size_t i = 0; i < 10; ++i) {
        if (cp >= kFrom[i] && cp <= kTo[i]) return kBase[i];
    }
    switch (cp) {
        case 0xC7: return "C";
        case 0xE7: return "c";
        case 0xD1: return "N";
        case 0xF1: return "n";
        case 0xD8: return "O";
        case 0xF8: return "o";
        case 0xDD: return "Y";
        case 0xFD: return "y";
        case 0xFF: return "y";
        default: return nullptr;
    }
}

// Base letters for U+0100..U+017F, two chars per code point pair.
const char* latin_ext_a_base(char32_t cp) {
    switch (cp) {
        case 0x132: return "IJ";
        case 0x133: return "ij";
        case 0x152: return "OE";
        case 0x153: return "oe";
        default: break;
    }
    // One char per code point, 0x100..0x17F.
    static constexpr const char* kTable =
        "AaAaAa"          // 100-105 A breve/macron/ogonek
        "CcCcCcCc"        // 106-10D C acute/circumflex/dot/caron
        "DdDd"            // 10E-111 D caron/stroke
        "EeEeEeEeEe"      // 112-11B E forms
        "GgGgGgGg"        // 11C-123 G forms
        "HhHh"            // 124-127 H forms
        "IiIiIiIiIi"      // 128-131 I forms
        "??"              // 132-133 IJ ligatures (handled above)
        "JjKkk"           // 134-138 J/K forms + kra
        "LlLlLlLlLl"      // 139-142 L forms
        "NnNnNnnNn"       // 143-14B N forms + eng
        "OoOoOo"          // 14C-151 O forms
        "??"              // 152-153 OE ligatures (handled above)
        "RrRrRr"          // 154-159 R forms
        "SsSsSsSs"        // 15A-161 S forms
        "TtTtTt"          // 162-167 T forms
        "UuUuUuUuUuUu"    // 168-173 U forms
        "WwYyY"           // 174-178 W/Y forms
        "ZzZzZz"          // 179-17E Z forms
        "s";              // 17F long s
    std::size_t idx = static_cast<std::size_t>(cp - 0x100);
    static thread_local char buf[2] = {0, 0};
    buf[0] = kTable[idx];
    return buf;
}

}  // namespace

std::string to_lower_ascii(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), lower);
    return out;
}

std::string_view trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_whitespace(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && is_space(s[i])) ++i;
        std::size_t start = i;
        while (i < s.size() && !is_space(s[i])) ++i;
        if (i > start) out.emplace_back(s.substr(start, i - start));
    }
    return out;
}

std::vector<std::string> split(std::string_view s, char delim) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == delim) {
            out.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

double ascii_fraction(std::string_view s) {
    if (s.empty()) return 1.0;
    std::size_t ascii = 0;
    for (unsigned char c : s) {
        if (c < 0x80) ++ascii;
    }
    return static_cast<double>(ascii) / static_cast<double>(s.size());
}

std::string strip_diacritics(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 0x80) {
            out.push_back(static_cast<char>(c));
            ++i;
            continue;
        }
        // Decode one UTF-8 sequence; invalid bytes pass through untouched.
        char32_t cp = 0;
        std::size_t len = 0;
        if ((c & 0xE0) == 0xC0) {
            cp = c & 0x1F;
            len = 2;
        } else if ((c & 0xF0) == 0xE0) {
            cp = c & 0x0F;
            len = 3;
        } else if ((c & 0xF8) == 0xF0) {
            cp = c & 0x07;
            len = 4;
        } else {
            out.push_back(static_cast<char>(c));
            ++i;
            continue;
        }
        if (i + len > s.size()) {
            out.append(s.substr(i));
            break;
        }
        bool valid = true;
        for (std::size_t k = 1; k < len; ++k) {
            unsigned char cc = static_cast<unsigned char>(s[i + k]);
            if ((cc & 0xC0) != 0x80) {
                valid = false;
                break;
            }
            cp = (cp << 6) | (cc & 0x3F);
        }
        if (!valid) {
            out.push_back(static_cast<char>(c));
            ++i;
            continue;
        }
        const char* base = nullptr;
        if (cp >= 0xC0 && cp <= 0xFF) {
            base = latin1_base(cp);
        } else if (cp >= 0x100 && cp <= 0x17F) {
            base = latin_ext_a_base(cp);
        }
        if (base != nullptr) {
            out.append(base, base[1] == '\0' ? 1 : 2);
        } else {
            out.append(s.substr(i, len));
        }
        i += len;
    }
    return out;
}

std::string strip_punctuation(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (std::ispunct(static_cast<unsigned char>(c))) c = ' ';
    }
    return out;
}

std::string collapse_whitespace(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool in_space = true;  // swallows leading whitespace
    for (char c : s) {
        if (is_space(c)) {
            in_space = true;
        } else {
            if (in_space && !out.empty()) out.push_back(' ');
            out.push_back(c);
            in_space = false;
        }
    }
    return out;
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
    if (a.size() > b.size()) std::swap(a, b);
    std::vector<std::size_t> row(a.size() + 1);
    for (std::size_t i = 0; i <= a.size(); ++i) row[i] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
        std::size_t prev_diag = row[0];
        row[0] = j;
        for (std::size_t i = 1; i <= a.size(); ++i) {
            std::size_t cur = row[i];
            std::size_t cost = (a[i - 1] == b[j - 1]) ? 0 : 1;
            row[i] = std::min({row[i] + 1, row[i - 1] + 1, prev_diag + cost});
            prev_diag = cur;
        }
    }
    return row[a.size()];
}

bool starts_with(std::string_view s, std::string_view prefix) {
    return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

bool icontains(std::string_view haystack, std::string_view needle) {
    if (needle.empty()) return true;
    if (needle.size() > haystack.size()) return false;
    for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
        bool match = true;
        for (std::size_t k = 0; k < needle.size(); ++k) {
            if (lower(haystack[i + k]) != lower(needle[k])) {
                match = false;
                break;
            }
        }
        if (match) return true;
    }
    return false;
}

}  // namespace georeason::util
