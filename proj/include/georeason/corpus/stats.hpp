// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#pragma once

#include <string>

#include "georeason/corpus/types.hpp"

namespace georeason::corpus {

CorpusStats corpus_stats(const Corpus& corpus);

// Aligned table for terminals.
std::string render_stats_table(const CorpusStats& stats);

}  // namespace georeason::corpus
