#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace bellgram {

using DocId = std::uint32_t;

struct Document {
  DocId doc_id = 0;         // contiguous from 0 in ingestion order
  std::string source_name;  // file path or record key
  std::string raw_text;     // preserved byte-for-byte

  bool operator==(const Document&) const = default;
};

// An ordered, immutable collection of documents. Iteration order equals
// ingestion order.
struct Corpus {
  std::string name;
  std::vector<Document> documents;

  std::size_t size() const { return documents.size(); }
  bool operator==(const Corpus&) const = default;
};

struct IngestOptions {
  // Split plain-text files into one document per non-empty line.
  // Default is one document per file.
  bool per_line = false;
};

// Ingests every plain-text file (.txt, .text) directly under `path`,
// sorted lexicographically by filename. Files may be read in parallel;
// document order is deterministic regardless.
//
// Throws IngestError for an unreadable path, EncodingError (naming the
// file) for content that is not valid UTF-8.
Corpus ingest_directory(const std::filesystem::path& path, const IngestOptions& options = {});

// Ingests a JSON-lines file: one object per line with a mandatory
// "text" field; an optional "id" becomes the document's source_name.
// Throws IngestError naming the line for anything malformed.
Corpus ingest_jsonl(const std::filesystem::path& path);

}  // namespace bellgram
