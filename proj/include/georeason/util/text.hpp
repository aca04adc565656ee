// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace georeason::util {

std::string to_lower_ascii(std::string_view s);

std::string_view trim(std::string_view s);

// Splits on runs of whitespace; no empty tokens.
std::vector<std::string> split_whitespace(std::string_view s);

// Splits on a single delimiter; keeps empty fields ("a,,b" -> {"a","","b"}).
std::vector<std::string> split(std::string_view s, char delim);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Fraction of bytes that are 7-bit ASCII. Empty input counts as 1.0.
double ascii_fraction(std::string_view s);

// Transliterates Latin-1 Supplement and Latin Extended-A letters to their
// unaccented ASCII base form ("Paraná" -> "Parana", "Ø" -> "O"). Code points
// outside those ranges pass through unchanged.
std::string strip_diacritics(std::string_view s);

// Replaces ASCII punctuation with spaces.
std::string strip_punctuation(std::string_view s);

// Collapses whitespace runs to single spaces and trims the ends.
std::string collapse_whitespace(std::string_view s);

std::size_t levenshtein(std::string_view a, std::string_view b);

bool starts_with(std::string_view s, std::string_view prefix);

// Case-insensitive substring search (ASCII case folding).
bool icontains(std::string_view haystack, std::string_view needle);

}  // namespace georeason::util
