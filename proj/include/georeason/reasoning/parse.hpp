// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#pragma once

#include <string>
#include <string_view>

#include "georeason/corpus/types.hpp"

namespace georeason::reasoning {

// The literal answer scaffold the generator is instructed to follow.
inline constexpr std::string_view kAnswerFormatScaffold = "PLACE {COUNTRY, STATE, CITY, STREET}.";

struct ParsedAnswer {
    bool ok = false;
    corpus::LocationLabel location;  // empty fields mean "not stated"
    std::string explanation;
};

// Total over arbitrary input; never throws. Primary grammar is the scaffold
// above with the four fields filled in (fields may be empty); the fallback
// scans for the first {...} group holding 1..4 comma-separated items. When
// both fail, `ok` is false and the caller keeps the raw text verbatim.
ParsedAnswer parse_answer(std::string_view raw);

// Canonical rendering. parse_answer(format_answer(l, e)) recovers l and e
// exactly for field values free of braces and commas.
std::string format_answer(const corpus::LocationLabel& location, std::string_view explanation);

}  // namespace georeason::reasoning
