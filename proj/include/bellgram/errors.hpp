#pragma once

#include <stdexcept>
#include <string>

namespace bellgram {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Corpus ingestion failed (unreadable path, malformed record, ...).
class IngestError : public Error {
public:
  using Error::Error;
};

// Input bytes are not valid UTF-8.
class EncodingError : public Error {
public:
  using Error::Error;
};

// Index file is unreadable: bad magic, unsupported version, truncation,
// or internal inconsistency.
class FormatError : public Error {
public:
  using Error::Error;
};

// A query term does not normalize to exactly one token, or the query
// shape is invalid.
class QueryError : public Error {
public:
  using Error::Error;
};

// A coincidence table sums to zero; probabilities are undefined.
class ZeroTotalError : public Error {
public:
  using Error::Error;
};

// A four-measurement design cannot be evaluated; names the failing
// joint measurement.
class DesignError : public Error {
public:
  using Error::Error;
};

// Unknown built-in dataset name.
class FixtureError : public Error {
public:
  using Error::Error;
};

}  // namespace bellgram
