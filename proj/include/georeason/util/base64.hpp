// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace georeason::util {

std::string base64_encode(const std::uint8_t* data, std::size_t len);
std::string base64_encode(std::string_view data);

// Strict decoder: rejects invalid characters and bad padding.
std::optional<std::vector<std::uint8_t>> base64_decode(std::string_view encoded);

}  // namespace georeason::util
