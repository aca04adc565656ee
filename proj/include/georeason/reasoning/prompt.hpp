// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "georeason/retrieval/topk.hpp"

namespace georeason::reasoning {

// Ordered multimodal half of the prompt: the panorama thumbnail for global
// context, then the assisting clue crops in retrieval order.
struct ImagePrompt {
    std::string thumbnail;
    std::vector<std::string> clue_images;
};

struct TextPrompt {
    std::string instruction;            // fully rendered template
    std::vector<std::string> snippets;  // retrieval order
    std::string answer_format_spec;     // contains the literal answer scaffold
};

// Named prompt templates, loaded from a directory of *.txt files (id = file
// stem). Placeholders: ${snippets} and ${answer_format}.
class TemplateRegistry {
public:
    static TemplateRegistry load_dir(const std::filesystem::path& dir);
    static TemplateRegistry builtin();  // a single "default" template

    bool has(const std::string& id) const { return templates_.count(id) > 0; }
    // Throws UnknownTemplate.
    const std::string& text(const std::string& id) const;

private:
    std::map<std::string, std::string> templates_;
};

// Renders the prompt pair. Clue crop references and snippets keep their
// retrieval order; an empty retrieval degenerates to a thumbnail-only
// image prompt with the instruction and format spec intact.
std::pair<ImagePrompt, TextPrompt> assemble_prompt(const std::string& thumbnail_ref,
                                                   std::span<const std::string> clue_image_refs,
                                                   std::span<const std::string> snippets,
                                                   const TemplateRegistry& registry,
                                                   const std::string& template_id);

// Adapter over a retrieval result: clue crops resolved through clue_crops
// (clue id -> crop reference).
std::pair<ImagePrompt, TextPrompt> assemble_prompt(
    const std::string& thumbnail_ref, const retrieval::RetrievalResult& retrieval,
    const std::map<std::string, std::string>& clue_crops, const TemplateRegistry& registry,
    const std::string& template_id);

}  // namespace georeason::reasoning
