// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace georeason::util {

std::vector<std::uint8_t> read_binary_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);
void write_binary_file(const std::filesystem::path& path, const std::uint8_t* data,
                       std::size_t len);
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace georeason::util
