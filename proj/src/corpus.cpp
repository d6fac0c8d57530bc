#include "bellgram/corpus.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bellgram/errors.hpp"
#include "utf8.hpp"

namespace fs = std::filesystem;

namespace bellgram {

namespace {

bool has_text_extension(const fs::path& p) {
  const auto ext = p.extension().string();
  return ext == ".txt" || ext == ".text";
}

std::string read_file_bytes(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw IngestError("cannot open file: " + p.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IngestError("read failed: " + p.string());
  return std::move(buf).str();
}

void append_lines(const std::string& text, const std::string& source, std::vector<Document>& out) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::size_t len = end - start;
    if (len > 0 && text[start + len - 1] == '\r') --len;
    ++line_no;
    if (len > 0) {
      out.push_back(Document{0, source + ":" + std::to_string(line_no), text.substr(start, len)});
    }
    if (end == text.size()) break;
    start = end + 1;
  }
}

}  // namespace

Corpus ingest_directory(const fs::path& path, const IngestOptions& options) {
  std::error_code ec;
  if (!fs::is_directory(path, ec) || ec) {
    throw IngestError("not a readable directory: " + path.string());
  }

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(path, ec)) {
    if (entry.is_regular_file() && has_text_extension(entry.path())) {
      files.push_back(entry.path());
    }
  }
  if (ec) throw IngestError("cannot list directory: " + path.string());
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename().string() < b.filename().string(); });

  // Reads are independent; each slot is written exactly once, so the
  // ingestion order stays the sorted file order.
  const auto n = static_cast<std::int64_t>(files.size());
  std::vector<std::string> contents(files.size());
  std::vector<std::string> errors(files.size());
#pragma omp parallel for schedule(dynamic) if (n > 8)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      std::string bytes = read_file_bytes(files[idx]);
      const auto bad = utf8::first_invalid(bytes);
      if (bad != std::string::npos) {
        errors[idx] = "invalid UTF-8 in " + files[idx].string() + " at byte " + std::to_string(bad);
      } else {
        contents[idx] = std::move(bytes);
      }
    } catch (const Error& e) {
      errors[idx] = e.what();
    }
  }
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (!errors[i].empty()) {
      if (errors[i].rfind("invalid UTF-8", 0) == 0) throw EncodingError(errors[i]);
      throw IngestError(errors[i]);
    }
  }

  Corpus corpus;
  corpus.name = path.filename().empty() ? path.string() : path.filename().string();
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (options.per_line) {
      append_lines(contents[i], files[i].string(), corpus.documents);
    } else {
      corpus.documents.push_back(Document{0, files[i].string(), std::move(contents[i])});
    }
  }
  for (std::size_t i = 0; i < corpus.documents.size(); ++i) {
    corpus.documents[i].doc_id = static_cast<DocId>(i);
  }
  return corpus;
}

Corpus ingest_jsonl(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError("cannot open file: " + path.string());

  Corpus corpus;
  corpus.name = path.stem().string();

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string where = path.string() + ": line " + std::to_string(line_no);

    nlohmann::json obj = nlohmann::json::parse(line, nullptr, false);
    if (obj.is_discarded() || !obj.is_object()) {
      throw IngestError("malformed JSON object at " + where);
    }
    auto text_it = obj.find("text");
    if (text_it == obj.end() || !text_it->is_string()) {
      throw IngestError("missing or non-string \"text\" field at " + where);
    }

    std::string source = path.string() + ":" + std::to_string(line_no);
    if (auto id_it = obj.find("id"); id_it != obj.end()) {
      if (id_it->is_string()) {
        source = id_it->get<std::string>();
      } else if (id_it->is_number_integer()) {
        source = std::to_string(id_it->get<std::int64_t>());
      } else {
        throw IngestError("\"id\" must be a string or integer at " + where);
      }
    }

    corpus.documents.push_back(Document{static_cast<DocId>(corpus.documents.size()), std::move(source),
                                        text_it->get<std::string>()});
  }
  if (in.bad()) throw IngestError("read failed: " + path.string());
  return corpus;
}

}  // namespace bellgram
