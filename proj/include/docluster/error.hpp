#pragma once

#include <stdexcept>
#include <string>

namespace docluster {

/// Base class for all docluster errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Corpus could not be loaded (unreadable directory, duplicate ids, ...).
class CorpusError : public Error {
public:
    explicit CorpusError(const std::string& what) : Error(what) {}
};

/// A single file could not be decoded; the message names the file.
class DecodeError : public CorpusError {
public:
    explicit DecodeError(const std::string& what) : CorpusError(what) {}
};

/// A parameter violated its documented precondition.
class ParamError : public Error {
public:
    explicit ParamError(const std::string& what) : Error(what) {}
};

/// A keyword or key was looked up where it does not exist.
class LookupError : public Error {
public:
    explicit LookupError(const std::string& what) : Error(what) {}
};

}  // namespace docluster
