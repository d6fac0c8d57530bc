#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bellgram/rational.hpp"
#include "bellgram/report.hpp"

namespace fs = std::filesystem;
using namespace bellgram;

namespace {

struct TempRoot {
  fs::path path;

  TempRoot() : path(fs::temp_directory_path() / ("bellgram-cli-" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempRoot() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

const fs::path& temp_root() {
  static TempRoot root;
  return root.path;
}

fs::path temp_file(const std::string& name) {
  static int counter = 0;
  return temp_root() / (std::to_string(++counter) + "-" + name);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  REQUIRE(out.good());
}

std::string shell_quote(const std::string& arg) {
  std::string quoted = "'";
  for (char c : arg) {
    if (c == '\'') {
      quoted += "'\\''";
    } else {
      quoted += c;
    }
  }
  quoted += '\'';
  return quoted;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  const char* binary = std::getenv("BELLGRAM_BIN");
  REQUIRE_MESSAGE(binary != nullptr, "BELLGRAM_BIN must point at the CLI binary");

  const fs::path out_path = temp_file("stdout");
  const fs::path err_path = temp_file("stderr");
  std::string command = shell_quote(binary);
  for (const std::string& arg : args) command += " " + shell_quote(arg);
  command += " > " + shell_quote(out_path.string()) + " 2> " + shell_quote(err_path.string());

  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = read_file(out_path);
  result.err = read_file(err_path);
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

// One phrase occurrence per line; every animal-act pair in the corpus
// comes from these lines, so the four tables are (0,2,3,0), (1,0,0,0),
// (2,0,0,0), (0,0,0,5) and s = 1 + 1 + 1 - (-1) = 4.
std::vector<std::string> planted_lines() {
  std::vector<std::string> lines;
  const auto plant = [&](const std::string& text, int copies) {
    for (int i = 0; i < copies; ++i) lines.push_back(text);
  };
  plant("the horse whinnies", 2);
  plant("the bear growls", 3);
  plant("the horse snorts", 1);
  plant("the tiger growls", 2);
  plant("the cat meows", 5);
  plant("alpha beta gamma delta", 4);
  return lines;
}

fs::path planted_jsonl() {
  static const fs::path path = [] {
    const fs::path file = temp_file("planted.jsonl");
    std::string content;
    int next_id = 0;
    for (const std::string& text : planted_lines()) {
      nlohmann::ordered_json j;
      j["id"] = "doc-" + std::to_string(next_id++);
      j["text"] = text;
      content += j.dump() + "\n";
    }
    write_file(file, content);
    return file;
  }();
  return path;
}

fs::path planted_index() {
  static const fs::path path = [] {
    const fs::path file = temp_file("planted.idx");
    const RunResult r = run({"index", planted_jsonl().string(), "-o", file.string()});
    REQUIRE(r.exit_code == 0);
    return file;
  }();
  return path;
}

}  // namespace

TEST_CASE("index reports what it wrote") {
  const RunResult r = run({"index", planted_jsonl().string(), "-o", temp_file("again.idx").string()});
  CHECK(r.exit_code == 0);
  CHECK(r.err.empty());
  const std::string docs = std::to_string(planted_lines().size());
  CHECK(contains(r.out, "indexed " + docs + " documents"));
  CHECK(contains(r.out, "postings -> "));
}

TEST_CASE("count matches the planted totals") {
  const std::string index = planted_index().string();

  SUBCASE("two-term phrase") {
    const RunResult r = run({"count", "--index", index, "--phrase", "horse whinnies"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2\n");
  }
  SUBCASE("three-term phrase") {
    const RunResult r = run({"count", "--index", index, "--phrase", "the bear growls"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "3\n");
  }
  SUBCASE("collocate pair") {
    const RunResult r = run({"count", "--index", index, "--collocate", "cat", "meows", "--window", "3"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "5\n");
  }
  SUBCASE("json format") {
    const RunResult r =
        run({"count", "--index", index, "--collocate", "cat", "meows", "--window", "3", "--format", "json"});
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["kind"] == "collocate");
    CHECK(j["terms"] == nlohmann::json({"cat", "meows"}));
    CHECK(j["window"] == 3);
    CHECK(j["count"] == 5);
  }
  SUBCASE("csv format") {
    const RunResult r = run({"count", "--index", index, "--phrase", "cat meows", "--format", "csv"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "kind,terms,window,count\nphrase,cat meows,,5\n");
  }
}

TEST_CASE("chsh on an indexed corpus reproduces the hand-computed statistic") {
  const std::string index = planted_index().string();

  SUBCASE("phrase mode") {
    const RunResult r = run({"chsh", "--index", index, "--format", "json"});
    CHECK(r.exit_code == 0);
    const ParsedReport parsed = report_from_json(r.out);
    CHECK(parsed.report.s == 4);
    CHECK(parsed.report.classification == Classification::BeyondCirelson);
    CHECK(parsed.context.dataset == planted_index().stem().string());
    CHECK(parsed.context.mode == Mode::phrase());
    CHECK(parsed.report.ab().counts == CoincidenceCounts{0, 2, 3, 0});
    CHECK(parsed.report.apbp().counts == CoincidenceCounts{0, 0, 0, 5});
  }
  SUBCASE("collocate mode finds the same pairs in this corpus") {
    const RunResult r =
        run({"chsh", "--index", index, "--mode", "collocate", "--window", "3", "--format", "json"});
    CHECK(r.exit_code == 0);
    const ParsedReport parsed = report_from_json(r.out);
    CHECK(parsed.report.s == 4);
    CHECK(parsed.context.mode == Mode::collocate(3));
  }
  SUBCASE("table format") {
    const RunResult r = run({"chsh", "--index", index});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "s = 4 (4.00)"));
    CHECK(contains(r.out, "classification: BeyondCirelson"));
  }
}

TEST_CASE("fixture reports match the published statistics") {
  SUBCASE("google_books table") {
    const RunResult r = run({"chsh", "--fixture", "google_books"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "s = 235/69 (3.41)"));
    CHECK(contains(r.out, "classification: BeyondCirelson"));
  }
  SUBCASE("google_books json recomputes cleanly") {
    const RunResult r = run({"chsh", "--fixture", "google_books", "--format", "json"});
    CHECK(r.exit_code == 0);
    const ParsedReport parsed = report_from_json(r.out);
    CHECK(parsed.report.s == make_rational(235, 69));
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["s"]["num"] == 235);
    CHECK(j["s"]["den"] == 69);
    CHECK(j["s"]["decimal"] == "3.41");
  }
  SUBCASE("every fixture renders its published decimal") {
    const std::vector<std::pair<std::string, std::string>> expected = {
        {"google_books", "3.41"}, {"now", "3.00"},          {"coca", "3.33"},
        {"psychology", "2.42"},   {"coca_collocates", "2.80"},
    };
    for (const auto& [name, decimal] : expected) {
      CAPTURE(name);
      const RunResult r = run({"chsh", "--fixture", name, "--format", "json"});
      CHECK(r.exit_code == 0);
      const nlohmann::json j = nlohmann::json::parse(r.out);
      CHECK(j["dataset"] == name);
      CHECK(j["s"]["decimal"] == decimal);
    }
  }
  SUBCASE("csv format carries the pinned first row") {
    const RunResult r = run({"chsh", "--fixture", "google_books", "--format", "csv"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "google_books,\"e(A,B)\",n12,horse whinnies,464,464,711,0.65"));
  }
}

TEST_CASE("identical invocations produce identical bytes") {
  const std::string index = planted_index().string();
  const std::vector<std::vector<std::string>> invocations = {
      {"chsh", "--fixture", "google_books"},
      {"chsh", "--fixture", "google_books", "--format", "json"},
      {"chsh", "--fixture", "google_books", "--format", "csv"},
      {"chsh", "--index", index, "--format", "json"},
      {"count", "--index", index, "--phrase", "cat meows"},
      {"compare"},
      {"compare", "--format", "csv"},
  };
  for (const auto& args : invocations) {
    CAPTURE(args);
    const RunResult first = run(args);
    const RunResult second = run(args);
    CHECK(first.exit_code == 0);
    CHECK(second.exit_code == 0);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("compare mixes built-in datasets with report files") {
  const RunResult now_json = run({"chsh", "--fixture", "now", "--format", "json"});
  REQUIRE(now_json.exit_code == 0);
  const fs::path report_file = temp_file("now-report.json");
  write_file(report_file, now_json.out);

  SUBCASE("table output names both datasets") {
    const RunResult r = run({"compare", "google_books", report_file.string()});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "google_books"));
    CHECK(contains(r.out, "now"));
    CHECK(contains(r.out, "3.41"));
    CHECK(contains(r.out, "3.00"));
  }
  SUBCASE("json output carries one entry per dataset") {
    const RunResult r = run({"compare", "google_books", report_file.string(), "--format", "json"});
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["datasets"].size() == 2);
    CHECK(j["datasets"][1]["name"] == "now");
    CHECK(j["rows"].size() == 16);
  }
  SUBCASE("default run covers the five built-ins") {
    const RunResult r = run({"compare", "--format", "json"});
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["datasets"].size() == 5);
  }
  SUBCASE("a tampered report file is rejected") {
    nlohmann::json j = nlohmann::json::parse(now_json.out);
    j["s"]["num"] = 1;
    const fs::path tampered = temp_file("tampered.json");
    write_file(tampered, j.dump());
    const RunResult r = run({"compare", "google_books", tampered.string()});
    CHECK(r.exit_code == 1);
    CHECK(contains(r.err, "error:"));
    CHECK(contains(r.err, "does not match"));
  }
}

TEST_CASE("bad invocations fail with a diagnostic") {
  const std::string index = planted_index().string();

  SUBCASE("unknown fixture") {
    const RunResult r = run({"chsh", "--fixture", "gutenberg"});
    CHECK(r.exit_code == 1);
    CHECK(contains(r.err, "error:"));
    CHECK(contains(r.err, "gutenberg"));
  }
  SUBCASE("missing index file") {
    const RunResult r = run({"count", "--index", "/nonexistent.idx", "--phrase", "cat"});
    CHECK(r.exit_code != 0);
    CHECK(!r.err.empty());
  }
  SUBCASE("count without a query") {
    const RunResult r = run({"count", "--index", index});
    CHECK(r.exit_code == 1);
    CHECK(contains(r.err, "--phrase or --collocate"));
  }
  SUBCASE("phrase and collocate are mutually exclusive") {
    const RunResult r = run({"count", "--index", index, "--phrase", "cat", "--collocate", "cat", "meows"});
    CHECK(r.exit_code != 0);
    CHECK(!r.err.empty());
  }
  SUBCASE("window needs collocate") {
    const RunResult r = run({"count", "--index", index, "--phrase", "cat meows", "--window", "3"});
    CHECK(r.exit_code != 0);
    CHECK(!r.err.empty());
  }
  SUBCASE("fixture excludes mode") {
    const RunResult r = run({"chsh", "--fixture", "google_books", "--mode", "collocate"});
    CHECK(r.exit_code != 0);
    CHECK(!r.err.empty());
  }
  SUBCASE("window outside collocate mode") {
    const RunResult r = run({"chsh", "--index", index, "--window", "4"});
    CHECK(r.exit_code == 1);
    CHECK(contains(r.err, "--window only applies to collocate mode"));
  }
  SUBCASE("chsh without a source") {
    const RunResult r = run({"chsh"});
    CHECK(r.exit_code == 1);
    CHECK(contains(r.err, "--fixture or --index"));
  }
  SUBCASE("compare needs two datasets") {
    const RunResult r = run({"compare", "google_books"});
    CHECK(r.exit_code == 1);
    CHECK(contains(r.err, "at least 2"));
  }
  SUBCASE("per-line rejects file corpora") {
    const RunResult r =
        run({"index", planted_jsonl().string(), "-o", temp_file("x.idx").string(), "--per-line"});
    CHECK(r.exit_code == 1);
    CHECK(contains(r.err, "--per-line applies to directory corpora only"));
  }
  SUBCASE("malformed jsonl names the line") {
    const fs::path bad = temp_file("bad.jsonl");
    write_file(bad, "{\"id\": \"a\", \"text\": \"fine\"}\nnot json at all\n");
    const RunResult r = run({"index", bad.string(), "-o", temp_file("bad.idx").string()});
    CHECK(r.exit_code == 1);
    CHECK(contains(r.err, "error:"));
    CHECK(contains(r.err, "line 2"));
  }
}

TEST_CASE("directory corpora work through the CLI") {
  const fs::path dir = temp_file("corpus-dir");
  fs::create_directories(dir);
  write_file(dir / "a.txt", "the cat meows\nthe cat meows\n");
  write_file(dir / "b.txt", "the horse whinnies\n");
  write_file(dir / "notes.md", "the cat meows everywhere\n");

  const fs::path index = temp_file("dir.idx");
  const RunResult build = run({"index", dir.string(), "-o", index.string(), "--per-line"});
  CHECK(build.exit_code == 0);
  CHECK(contains(build.out, "indexed 3 documents"));

  const RunResult count = run({"count", "--index", index.string(), "--phrase", "cat meows"});
  CHECK(count.exit_code == 0);
  CHECK(count.out == "2\n");
}
