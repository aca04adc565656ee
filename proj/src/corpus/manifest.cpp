// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#include "georeason/corpus/manifest.hpp"

#include <fstream>
#include <json.hpp>
#include <unordered_set>

#include "georeason/errors.hpp"
#include "georeason/util/text.hpp"

namespace georeason::corpus {

namespace util = georeason::util;
using nlohmann::json;

namespace {

constexpr std::size_t kMinPanorama = 3;
constexpr std::size_t kMaxPanorama = 33;
constexpr int kMaxScore = 5000;

struct ManifestFile {
    std::filesystem::path image_root;
    std::vector<json> records;  // in file order
};

[[noreturn]] void violate(std::size_t index, const std::string& reason) {
    throw SchemaViolation(index, reason);
}

ManifestFile read_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ManifestNotFound("manifest not found: " + path.string());

    ManifestFile mf;
    std::string line;
    bool have_header = false;
    std::size_t record_index = 0;
    while (std::getline(in, line)) {
        if (util::trim(line).empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded()) {
            violate(have_header ? record_index : 0,
                    have_header ? "invalid JSON record" : "manifest header: invalid JSON");
        }
        if (!have_header) {
            if (!j.is_object() || !j.contains("schema_version")) {
                violate(0, "manifest header: missing schema_version");
            }
            if (!j["schema_version"].is_number_integer() ||
                j["schema_version"].get<int>() != kManifestSchemaVersion) {
                violate(0, "manifest header: unsupported schema_version");
            }
            if (!j.contains("image_root") || !j["image_root"].is_string()) {
                violate(0, "manifest header: missing image_root");
            }
            std::filesystem::path root = j["image_root"].get<std::string>();
            if (root.is_relative()) {
                // Anchor to the manifest's directory so loaded corpora (and
                // manifests saved from them) carry absolute roots.
                root = std::filesystem::absolute(path).parent_path() / root;
            }
            mf.image_root = root.lexically_normal();
            have_header = true;
            continue;
        }
        mf.records.push_back(std::move(j));
        ++record_index;
    }
    if (!have_header) {
        // Even an empty manifest needs the header for the image root.
        violate(0, "manifest header: missing");
    }
    return mf;
}

std::string require_string(const json& j, const char* key, std::size_t index) {
    if (!j.contains(key) || !j[key].is_string()) {
        violate(index, std::string("missing or non-string field '") + key + "'");
    }
    return j[key].get<std::string>();
}

double require_number(const json& j, const char* key, std::size_t index) {
    if (!j.contains(key) || !j[key].is_number()) {
        violate(index, std::string("missing or non-numeric field '") + key + "'");
    }
    return j[key].get<double>();
}

// Image refs must stay under the declared root: relative, no parent escapes.
void check_image_ref(const std::string& ref, const std::filesystem::path& root, std::size_t index,
                     const char* what) {
    if (ref.empty()) violate(index, std::string(what) + ": empty image reference");
    std::filesystem::path p(ref);
    if (p.is_absolute()) violate(index, std::string(what) + ": absolute image reference '" + ref + "'");
    for (const auto& part : p) {
        if (part == "..") {
            violate(index, std::string(what) + ": image reference escapes root '" + ref + "'");
        }
    }
    if (!std::filesystem::exists(root / p)) {
        violate(index, std::string(what) + ": image not found '" + ref + "'");
    }
}

std::optional<std::string> optional_trimmed(const json& j, const char* key, std::size_t index) {
    if (!j.contains(key) || j[key].is_null()) return std::nullopt;
    if (!j[key].is_string()) violate(index, std::string("non-string field '") + key + "'");
    std::string v = j[key].get<std::string>();
    if (util::trim(v).empty()) {
        violate(index, std::string("field '") + key + "' present but empty");
    }
    return std::string(util::trim(v));
}

// Parses and validates everything except the explanation list, which
// differs between the strict and ingest paths.
GeoSample parse_sample_common(const json& j, std::size_t index,
                              const std::filesystem::path& image_root) {
    if (!j.is_object()) violate(index, "record is not an object");
    GeoSample s;
    s.id = require_string(j, "id", index);
    if (util::trim(s.id).empty()) violate(index, "empty id");

    if (!j.contains("panorama") || !j["panorama"].is_array()) {
        violate(index, "missing or non-array field 'panorama'");
    }
    for (const json& ref : j["panorama"]) {
        if (!ref.is_string()) violate(index, "panorama entries must be strings");
        s.panorama.push_back(ref.get<std::string>());
    }
    if (s.panorama.size() < kMinPanorama) violate(index, "panorama count below 3");
    if (s.panorama.size() > kMaxPanorama) violate(index, "panorama count above 33");
    for (const std::string& ref : s.panorama) {
        check_image_ref(ref, image_root, index, "panorama");
    }

    s.latitude = require_number(j, "lat", index);
    s.longitude = require_number(j, "lon", index);
    if (s.latitude < -90.0 || s.latitude > 90.0) violate(index, "latitude out of range");
    if (s.longitude < -180.0 || s.longitude > 180.0) violate(index, "longitude out of range");

    std::string country = require_string(j, "country", index);
    if (util::trim(country).empty()) violate(index, "empty country");
    s.location.country = std::string(util::trim(country));
    s.location.state = optional_trimmed(j, "state", index).value_or("");
    s.location.city = optional_trimmed(j, "city", index).value_or("");
    s.location.street = optional_trimmed(j, "street", index).value_or("");

    std::string cont = require_string(j, "continent", index);
    auto parsed = continent_from_string(cont);
    if (!parsed) violate(index, "unknown continent code '" + cont + "'");
    s.continent = *parsed;
    return s;
}

std::vector<std::string> parse_clean_explanations(const json& j, std::size_t index) {
    if (!j.contains("explanations") || !j["explanations"].is_array()) {
        violate(index, "missing or non-array field 'explanations'");
    }
    std::vector<std::string> out;
    for (const json& e : j["explanations"]) {
        if (!e.is_string()) violate(index, "explanations must be strings");
        if (util::trim(e.get<std::string>()).empty()) violate(index, "empty explanation");
        out.push_back(e.get<std::string>());
    }
    if (out.empty()) violate(index, "at least one explanation required");
    return out;
}

std::vector<RawExplanationRecord> parse_raw_explanations(const json& j, std::size_t index) {
    if (!j.contains("explanations") || !j["explanations"].is_array()) {
        violate(index, "missing or non-array field 'explanations'");
    }
    std::vector<RawExplanationRecord> out;
    for (const json& e : j["explanations"]) {
        RawExplanationRecord rec;
        if (e.is_string()) {
            rec.text = e.get<std::string>();
            rec.score = kMaxScore;  // curated text, no score attached
        } else if (e.is_object()) {
            rec.text = require_string(e, "text", index);
            double score = require_number(e, "score", index);
            if (score < 0 || score > kMaxScore || score != static_cast<int>(score)) {
                violate(index, "explanation score outside [0, 5000]");
            }
            rec.score = static_cast<int>(score);
            if (e.contains("language_hint") && e["language_hint"].is_string()) {
                rec.language_hint = e["language_hint"].get<std::string>();
            }
        } else {
            violate(index, "explanations must be strings or objects");
        }
        if (util::trim(rec.text).empty()) violate(index, "empty explanation");
        out.push_back(std::move(rec));
    }
    return out;
}

void build_id_index(Corpus& corpus) {
    corpus.index_by_id.clear();
    for (std::size_t i = 0; i < corpus.samples.size(); ++i) {
        corpus.index_by_id.emplace(corpus.samples[i].id, i);
    }
}

json sample_to_json(const GeoSample& s) {
    json j;
    j["id"] = s.id;
    j["panorama"] = s.panorama;
    j["lat"] = s.latitude;
    j["lon"] = s.longitude;
    j["country"] = s.location.country;
    if (!s.location.state.empty()) j["state"] = s.location.state;
    if (!s.location.city.empty()) j["city"] = s.location.city;
    if (!s.location.street.empty()) j["street"] = s.location.street;
    j["continent"] = std::string(to_string(s.continent));
    j["explanations"] = s.explanations;
    return j;
}

}  // namespace

Corpus load_corpus(const std::filesystem::path& manifest_path) {
    ManifestFile mf = read_manifest(manifest_path);
    Corpus corpus;
    corpus.image_root = mf.image_root;
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < mf.records.size(); ++i) {
        GeoSample s = parse_sample_common(mf.records[i], i, mf.image_root);
        s.explanations = parse_clean_explanations(mf.records[i], i);
        if (!seen.insert(s.id).second) {
            throw DuplicateId("duplicate sample id '" + s.id + "'");
        }
        corpus.samples.push_back(std::move(s));
    }
    build_id_index(corpus);
    return corpus;
}

KnowledgeBase load_knowledge(const std::filesystem::path& manifest_path) {
    ManifestFile mf = read_manifest(manifest_path);
    KnowledgeBase kb;
    kb.image_root = mf.image_root;
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < mf.records.size(); ++i) {
        const json& j = mf.records[i];
        if (!j.is_object()) violate(i, "record is not an object");
        KnowledgeEntry e;
        e.id = require_string(j, "id", i);
        if (util::trim(e.id).empty()) violate(i, "empty id");
        e.image = require_string(j, "image", i);
        check_image_ref(e.image, mf.image_root, i, "knowledge image");
        e.country = require_string(j, "country", i);
        if (util::trim(e.country).empty()) violate(i, "empty country");
        e.snippet = require_string(j, "snippet", i);
        if (util::trim(e.snippet).empty()) violate(i, "empty snippet");
        if (!seen.insert(e.id).second) {
            throw DuplicateId("duplicate knowledge id '" + e.id + "'");
        }
        kb.entries.push_back(std::move(e));
    }
    kb.index_by_id.clear();
    for (std::size_t i = 0; i < kb.entries.size(); ++i) {
        kb.index_by_id.emplace(kb.entries[i].id, i);
    }
    return kb;
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& manifest_path) {
    std::ofstream out(manifest_path);
    if (!out) throw Error("cannot write manifest: " + manifest_path.string());
    json header;
    header["schema_version"] = kManifestSchemaVersion;
    header["image_root"] = corpus.image_root.string();
    out << header.dump() << "\n";
    for (const GeoSample& s : corpus.samples) {
        out << sample_to_json(s).dump() << "\n";
    }
}

void save_knowledge(const KnowledgeBase& kb, const std::filesystem::path& manifest_path) {
    std::ofstream out(manifest_path);
    if (!out) throw Error("cannot write manifest: " + manifest_path.string());
    json header;
    header["schema_version"] = kManifestSchemaVersion;
    header["image_root"] = kb.image_root.string();
    out << header.dump() << "\n";
    for (const KnowledgeEntry& e : kb.entries) {
        json j;
        j["id"] = e.id;
        j["image"] = e.image;
        j["country"] = e.country;
        j["snippet"] = e.snippet;
        out << j.dump() << "\n";
    }
}

IngestReport ingest_corpus(const std::filesystem::path& manifest_path,
                           const ExplanationFilters& filters, int min_score) {
    ManifestFile mf = read_manifest(manifest_path);
    IngestReport report;
    report.corpus.image_root = mf.image_root;
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < mf.records.size(); ++i) {
        ++report.records_seen;
        std::string id;
        if (mf.records[i].is_object() && mf.records[i].contains("id") &&
            mf.records[i]["id"].is_string()) {
            id = mf.records[i]["id"].get<std::string>();
        }
        try {
            GeoSample s = parse_sample_common(mf.records[i], i, mf.image_root);
            auto raw = parse_raw_explanations(mf.records[i], i);
            report.explanations_seen += raw.size();
            s.explanations = filter_explanations(raw, filters, min_score);
            report.explanations_kept += s.explanations.size();
            if (s.explanations.empty()) {
                report.issues.push_back({i, s.id, "no explanations survive filtering"});
                continue;
            }
            if (!seen.insert(s.id).second) {
                report.issues.push_back({i, s.id, "duplicate sample id"});
                continue;
            }
            report.corpus.samples.push_back(std::move(s));
        } catch (const SchemaViolation& v) {
            report.issues.push_back({i, id, v.reason()});
        }
    }
    build_id_index(report.corpus);
    return report;
}

}  // namespace georeason::corpus
