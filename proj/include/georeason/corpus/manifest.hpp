// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "georeason/corpus/filters.hpp"
#include "georeason/corpus/types.hpp"

namespace georeason::corpus {

// Manifests are UTF-8 line-delimited JSON: one header line declaring
// {"schema_version": 1, "image_root": "<dir>"} followed by one record per
// line. image_root is resolved relative to the manifest's directory.
inline constexpr int kManifestSchemaVersion = 1;

// Strict loaders: the first invalid record aborts the load.
// Throws ManifestNotFound, SchemaViolation, DuplicateId.
Corpus load_corpus(const std::filesystem::path& manifest_path);
KnowledgeBase load_knowledge(const std::filesystem::path& manifest_path);

void save_corpus(const Corpus& corpus, const std::filesystem::path& manifest_path);
void save_knowledge(const KnowledgeBase& kb, const std::filesystem::path& manifest_path);

struct RecordIssue {
    std::size_t record_index = 0;
    std::string id;  // may be empty if the record had none
    std::string reason;
};

struct IngestReport {
    Corpus corpus;  // valid records only, manifest order
    std::vector<RecordIssue> issues;
    std::size_t records_seen = 0;
    std::size_t explanations_seen = 0;
    std::size_t explanations_kept = 0;
};

// Lenient scan used by `ingest`: collects per-record issues instead of
// aborting, and runs every explanation through the score/English/
// non-reasoning filters. Records whose explanation list ends up empty are
// reported as issues and dropped. Raw manifests may carry explanations as
// plain strings (kept if they pass the text filters) or as
// {"text":..., "score":..., "language_hint":...} objects.
IngestReport ingest_corpus(const std::filesystem::path& manifest_path,
                           const ExplanationFilters& filters, int min_score = kDefaultMinScore);

}  // namespace georeason::corpus
