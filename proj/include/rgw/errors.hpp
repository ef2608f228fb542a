#pragma once

#include <stdexcept>
#include <string>

namespace rgw {

struct Error : std::runtime_error {
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code(std::move(code)) {}
    std::string code;
};

struct InvalidDegree : Error {
    explicit InvalidDegree(const std::string& what) : Error("invalid-degree", what) {}
};

struct InvalidPair : Error {
    explicit InvalidPair(const std::string& what) : Error("invalid-pair", what) {}
};

struct InvalidProfile : Error {
    explicit InvalidProfile(const std::string& what) : Error("invalid-profile", what) {}
};

struct EnumerationTooLarge : Error {
    explicit EnumerationTooLarge(const std::string& what) : Error("enumeration-too-large", what) {}
};

struct WrongTarget : Error {
    explicit WrongTarget(const std::string& what) : Error("wrong-target", what) {}
};

struct IncompleteInput : Error {
    explicit IncompleteInput(const std::string& what) : Error("incomplete-input", what) {}
};

struct InconsistentTable : Error {
    explicit InconsistentTable(const std::string& what) : Error("inconsistent-table", what) {}
};

struct WordMismatch : Error {
    explicit WordMismatch(const std::string& what) : Error("word-mismatch", what) {}
};

}  // namespace rgw
