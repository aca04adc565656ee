// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace georeason {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// --- corpus / manifest loading -------------------------------------------

class ManifestNotFound : public Error {
public:
    using Error::Error;
};

class SchemaViolation : public Error {
public:
    SchemaViolation(std::size_t record_index, const std::string& reason)
        : Error("record " + std::to_string(record_index) + ": " + reason),
          record_index_(record_index),
          reason_(reason) {}

    std::size_t record_index() const { return record_index_; }
    const std::string& reason() const { return reason_; }

private:
    std::size_t record_index_;
    std::string reason_;
};

class DuplicateId : public Error {
public:
    using Error::Error;
};

// --- backends --------------------------------------------------------------

// Base for all backend failures. Carries enough context (stage, item id,
// endpoint) to diagnose which call against which service failed.
class BackendError : public Error {
public:
    BackendError(const std::string& message, std::string stage = {}, std::string item_id = {},
                 std::string endpoint = {})
        : Error(message + (stage.empty() ? "" : " [stage=" + stage + "]") +
                (item_id.empty() ? "" : " [id=" + item_id + "]") +
                (endpoint.empty() ? "" : " [endpoint=" + endpoint + "]")),
          stage_(std::move(stage)),
          item_id_(std::move(item_id)),
          endpoint_(std::move(endpoint)) {}

    const std::string& stage() const { return stage_; }
    const std::string& item_id() const { return item_id_; }
    const std::string& endpoint() const { return endpoint_; }

private:
    std::string stage_;
    std::string item_id_;
    std::string endpoint_;
};

class BackendUnavailable : public BackendError {
public:
    using BackendError::BackendError;
};

class BackendMalformedResponse : public BackendError {
public:
    using BackendError::BackendError;
};

class DeadlineExceeded : public BackendError {
public:
    using BackendError::BackendError;
};

// 4xx responses: the request itself was wrong, retrying cannot help.
class BackendRequestError : public BackendError {
public:
    using BackendError::BackendError;
};

class UnknownScriptKey : public Error {
public:
    using Error::Error;
};

// --- embedding / retrieval ---------------------------------------------

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class ZeroVector : public Error {
public:
    using Error::Error;
};

class IndexBuildError : public Error {
public:
    using Error::Error;
};

class EncoderMismatch : public Error {
public:
    using Error::Error;
};

class CorruptIndex : public Error {
public:
    using Error::Error;
};

class VersionMismatch : public Error {
public:
    using Error::Error;
};

// --- clue detection ------------------------------------------------------

class EmptyCorpusText : public Error {
public:
    using Error::Error;
};

// --- reasoning -------------------------------------------------------------

class ImageDecodeError : public Error {
public:
    explicit ImageDecodeError(const std::string& image_id, const std::string& why)
        : Error("cannot decode image '" + image_id + "': " + why), image_id_(image_id) {}

    const std::string& image_id() const { return image_id_; }

private:
    std::string image_id_;
};

class UnknownTemplate : public Error {
public:
    using Error::Error;
};

// --- evaluation -----------------------------------------------------------

class EmptyEvaluationSet : public Error {
public:
    using Error::Error;
};

class UnknownSampleId : public Error {
public:
    using Error::Error;
};

// --- configuration ----------------------------------------------------------

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace georeason
