// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#include "georeason/reasoning/prompt.hpp"

#include "georeason/errors.hpp"
#include "georeason/reasoning/parse.hpp"
#include "georeason/util/files.hpp"

namespace georeason::reasoning {

namespace util = georeason::util;

namespace {

// Answer format as instructed to the model: the parseable scaffold followed
// by the free-form explanation.
const std::string kAnswerFormatSpec = std::string(kAnswerFormatScaffold) + " EXPLANATION.";

constexpr const char* kBuiltinTemplate =
    "You are shown street-view imagery of one location: first a thumbnail montage giving the\n"
    "global context of the scene, then cropped close-ups of local visual clues detected in\n"
    "the panorama.\n"
    "\n"
    "Identify the location. Reason over the global context (landscape, terrain, vegetation,\n"
    "road furniture), the local clues (signs, plates, bollards, markings), and the external\n"
    "knowledge snippets below, and connect them into a single conclusion.\n"
    "\n"
    "External knowledge:\n"
    "${snippets}\n"
    "\n"
    "Answer on the first line in exactly this format: ${answer_format}\n"
    "Fields you cannot determine stay empty. After the first line, explain which visual\n"
    "evidence and which knowledge support the answer.\n";

std::string replace_all(std::string text, std::string_view needle, std::string_view value) {
    std::size_t pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        text.replace(pos, needle.size(), value);
        pos += value.size();
    }
    return text;
}

std::string render_snippets(std::span<const std::string> snippets) {
    if (snippets.empty()) return "(none provided)";
    std::string out;
    for (std::size_t i = 0; i < snippets.size(); ++i) {
        out += std::to_string(i + 1) + ". " + snippets[i];
        if (i + 1 < snippets.size()) out += "\n";
    }
    return out;
}

}  // namespace

TemplateRegistry TemplateRegistry::load_dir(const std::filesystem::path& dir) {
    TemplateRegistry reg;
    if (!std::filesystem::is_directory(dir)) {
        throw UnknownTemplate("template directory not found: " + dir.string());
    }
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
        reg.templates_[entry.path().stem().string()] = util::read_text_file(entry.path());
    }
    return reg;
}

TemplateRegistry TemplateRegistry::builtin() {
    TemplateRegistry reg;
    reg.templates_["default"] = kBuiltinTemplate;
    return reg;
}

const std::string& TemplateRegistry::text(const std::string& id) const {
    auto it = templates_.find(id);
    if (it == templates_.end()) throw UnknownTemplate("unknown prompt template '" + id + "'");
    return it->second;
}

std::pair<ImagePrompt, TextPrompt> assemble_prompt(const std::string& thumbnail_ref,
                                                   std::span<const std::string> clue_image_refs,
                                                   std::span<const std::string> snippets,
                                                   const TemplateRegistry& registry,
                                                   const std::string& template_id) {
    ImagePrompt images;
    images.thumbnail = thumbnail_ref;
    images.clue_images.assign(clue_image_refs.begin(), clue_image_refs.end());

    TextPrompt text;
    text.snippets.assign(snippets.begin(), snippets.end());
    text.answer_format_spec = kAnswerFormatSpec;
    std::string rendered = registry.text(template_id);
    rendered = replace_all(std::move(rendered), "${snippets}", render_snippets(snippets));
    rendered = replace_all(std::move(rendered), "${answer_format}", kAnswerFormatSpec);
    text.instruction = std::move(rendered);
    return {std::move(images), std::move(text)};
}

std::pair<ImagePrompt, TextPrompt> assemble_prompt(
    const std::string& thumbnail_ref, const retrieval::RetrievalResult& retrieval,
    const std::map<std::string, std::string>& clue_crops, const TemplateRegistry& registry,
    const std::string& template_id) {
    std::vector<std::string> crop_refs;
    crop_refs.reserve(retrieval.clue_ids.size());
    for (const std::string& clue_id : retrieval.clue_ids) {
        auto it = clue_crops.find(clue_id);
        if (it == clue_crops.end()) {
            throw Error("retrieval selected unknown clue '" + clue_id + "'");
        }
        crop_refs.push_back(it->second);
    }
    return assemble_prompt(thumbnail_ref, crop_refs, retrieval.snippets, registry, template_id);
}

}  // namespace georeason::reasoning
