#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bellgram/bell.hpp"
#include "bellgram/corpus.hpp"
#include "bellgram/designs.hpp"
#include "bellgram/errors.hpp"
#include "bellgram/index.hpp"
#include "bellgram/report.hpp"
#include "bellgram/search.hpp"

namespace fs = std::filesystem;

namespace {

std::string render_report(const bellgram::ChshReport& report, const bellgram::ReportContext& context,
                          const std::string& format) {
  if (format == "json") return bellgram::render_json(report, context);
  if (format == "csv") return bellgram::render_csv(report, context);
  return bellgram::render_table(report, context);
}

std::string render_comparison(const bellgram::ComparisonTable& table, const std::string& format) {
  if (format == "json") return bellgram::render_comparison_json(table);
  if (format == "csv") return bellgram::render_comparison_csv(table);
  return bellgram::render_comparison_table(table);
}

bool is_fixture_name(const std::string& name) {
  for (std::string_view fixture : bellgram::kFixtureNames) {
    if (name == fixture) return true;
  }
  return false;
}

int cmd_index(const fs::path& corpus_path, const fs::path& out_path, bool per_line, bool case_sensitive,
              int threads) {
  bellgram::Corpus corpus;
  if (fs::is_directory(corpus_path)) {
    bellgram::IngestOptions options;
    options.per_line = per_line;
    corpus = bellgram::ingest_directory(corpus_path, options);
  } else {
    if (per_line) throw bellgram::Error("--per-line applies to directory corpora only");
    corpus = bellgram::ingest_jsonl(corpus_path);
  }
  const bellgram::PositionalIndex index = bellgram::build_index(corpus, case_sensitive, threads);
  bellgram::save_index(index, out_path);
  std::cout << "indexed " << corpus.size() << " documents, " << index.terms().size() << " terms, "
            << index.total_postings() << " postings -> " << out_path.string() << "\n";
  return 0;
}

int cmd_count(const fs::path& index_path, const std::string& phrase_text,
              const std::vector<std::string>& collocate_terms, std::uint32_t window,
              const std::string& format) {
  const bellgram::PositionalIndex index = bellgram::load_index(index_path);

  std::uint64_t count = 0;
  std::string kind;
  std::vector<std::string> terms;
  if (!phrase_text.empty()) {
    const bellgram::PhraseQuery query = bellgram::parse_phrase_query(phrase_text, index.config());
    count = bellgram::phrase_count(index, query);
    kind = "phrase";
    terms = query.terms;
  } else {
    const bellgram::CollocateQuery query =
        bellgram::make_collocate_query(collocate_terms[0], collocate_terms[1], window, index.config());
    count = bellgram::collocate_count(index, query);
    kind = "collocate";
    terms = {query.target, query.collocate};
  }

  if (format == "json") {
    nlohmann::ordered_json j;
    j["kind"] = kind;
    j["terms"] = terms;
    if (kind == "collocate") j["window"] = window;
    j["count"] = count;
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::string joined;
    for (const std::string& t : terms) {
      if (!joined.empty()) joined += ' ';
      joined += t;
    }
    std::cout << "kind,terms,window,count\n"
              << kind << "," << joined << "," << (kind == "collocate" ? std::to_string(window) : "") << ","
              << count << "\n";
  } else {
    std::cout << count << "\n";
  }
  return 0;
}

int cmd_chsh_fixture(const std::string& fixture_name, const std::string& format) {
  const bellgram::FixtureDataset fixture = bellgram::load_fixture(fixture_name);
  const bellgram::ChshReport report = bellgram::run_fixture(fixture);
  const bellgram::ReportContext context{fixture.name, fixture.design.mode, fixture.design};
  std::cout << render_report(report, context, format);
  return 0;
}

int cmd_chsh_index(const fs::path& index_path, const std::string& design_spec, bool mode_given,
                   const std::string& mode_str, bool window_given, std::uint32_t window,
                   const std::string& format) {
  const bellgram::PositionalIndex index = bellgram::load_index(index_path);

  bellgram::ChshDesign design = design_spec == "animal_acts"
                                    ? bellgram::animal_acts_design(bellgram::Mode::phrase())
                                    : bellgram::load_design_file(design_spec);
  if (mode_given) {
    design.mode = mode_str == "phrase" ? bellgram::Mode::phrase() : bellgram::Mode::collocate(design.mode.window);
  }
  if (window_given) {
    if (design.mode.kind != bellgram::Mode::Kind::collocate) {
      throw bellgram::Error("--window only applies to collocate mode");
    }
    design.mode.window = window;
  }

  const auto counts = bellgram::measure_design(index, design);
  const bellgram::ChshReport report = bellgram::run_design(counts[0], counts[1], counts[2], counts[3]);
  const bellgram::ReportContext context{index_path.stem().string(), design.mode, design};
  std::cout << render_report(report, context, format);
  return 0;
}

int cmd_compare(std::vector<std::string> items, const std::string& format) {
  if (items.empty()) {
    items.assign(bellgram::kFixtureNames.begin(), bellgram::kFixtureNames.end());
  }
  if (items.size() < 2) throw bellgram::Error("compare needs at least 2 datasets");

  std::vector<std::string> names;
  std::vector<bellgram::ChshReport> reports;
  std::optional<bellgram::ChshDesign> design;
  for (const std::string& item : items) {
    if (is_fixture_name(item)) {
      const bellgram::FixtureDataset fixture = bellgram::load_fixture(item);
      names.push_back(fixture.name);
      reports.push_back(bellgram::run_fixture(fixture));
      if (!design) design = fixture.design;
    } else if (fs::is_regular_file(item)) {
      std::ifstream in(item, std::ios::binary);
      std::ostringstream buffer;
      buffer << in.rdbuf();
      if (!in) throw bellgram::Error("cannot read report file: " + item);
      bellgram::ParsedReport parsed = bellgram::report_from_json(buffer.str());
      names.push_back(parsed.context.dataset);
      reports.push_back(std::move(parsed.report));
      if (!design && parsed.context.design) design = std::move(parsed.context.design);
    } else {
      throw bellgram::Error("not a built-in dataset or report file: " + item);
    }
  }

  const bellgram::ComparisonTable table =
      bellgram::compare_datasets(names, reports, design ? &*design : nullptr);
  std::cout << render_comparison(table, format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"corpus co-occurrence counting and CHSH analysis"};
  app.require_subcommand(1);

  const auto format_check = CLI::IsMember({"table", "json", "csv"});

  auto* index_cmd = app.add_subcommand("index", "build a positional index from a corpus");
  fs::path index_corpus_path;
  fs::path index_out_path;
  bool index_per_line = false;
  bool index_case_sensitive = false;
  int index_threads = 0;
  index_cmd->add_option("corpus", index_corpus_path, "corpus directory (.txt files) or JSON-lines file")
      ->required()
      ->check(CLI::ExistingPath);
  index_cmd->add_option("-o,--output", index_out_path, "index file to write")->required();
  index_cmd->add_flag("--per-line", index_per_line, "one document per non-empty line");
  index_cmd->add_flag("--case-sensitive", index_case_sensitive, "skip case folding");
  index_cmd->add_option("--threads", index_threads, "tokenizer threads (0 = auto)")
      ->check(CLI::Range(0, 4096));

  auto* count_cmd = app.add_subcommand("count", "count a phrase or collocate pair in an index");
  fs::path count_index_path;
  std::string count_phrase;
  std::vector<std::string> count_collocate;
  std::uint32_t count_window = bellgram::kDefaultCollocateWindow;
  std::string count_format = "table";
  count_cmd->add_option("--index", count_index_path, "index file")->required()->check(CLI::ExistingFile);
  auto* phrase_opt = count_cmd->add_option("--phrase", count_phrase, "exact phrase, terms separated by spaces");
  auto* collocate_opt =
      count_cmd->add_option("--collocate", count_collocate, "target and collocate terms")->expected(2);
  auto* count_window_opt = count_cmd->add_option("--window", count_window, "collocate window, tokens per side")
                               ->check(CLI::Range(1u, 1u << 20));
  count_cmd->add_option("--format", count_format, "table | json | csv")->check(format_check);
  phrase_opt->excludes(collocate_opt);
  collocate_opt->excludes(phrase_opt);
  count_window_opt->needs(collocate_opt);

  auto* chsh_cmd = app.add_subcommand("chsh", "evaluate a four-measurement design");
  std::string chsh_fixture;
  fs::path chsh_index_path;
  std::string chsh_design = "animal_acts";
  std::string chsh_mode;
  std::uint32_t chsh_window = bellgram::kDefaultCollocateWindow;
  std::string chsh_format = "table";
  auto* fixture_opt = chsh_cmd->add_option("--fixture", chsh_fixture, "built-in dataset name");
  auto* chsh_index_opt =
      chsh_cmd->add_option("--index", chsh_index_path, "index file")->check(CLI::ExistingFile);
  auto* design_opt =
      chsh_cmd->add_option("--design", chsh_design, "built-in design name or design JSON file");
  auto* mode_opt = chsh_cmd->add_option("--mode", chsh_mode, "phrase | collocate")
                       ->check(CLI::IsMember({"phrase", "collocate"}));
  auto* window_opt = chsh_cmd->add_option("--window", chsh_window, "collocate window, tokens per side")
                         ->check(CLI::Range(1u, 1u << 20));
  chsh_cmd->add_option("--format", chsh_format, "table | json | csv")->check(format_check);
  fixture_opt->excludes(chsh_index_opt);
  fixture_opt->excludes(design_opt);
  fixture_opt->excludes(mode_opt);
  fixture_opt->excludes(window_opt);
  chsh_index_opt->excludes(fixture_opt);

  auto* compare_cmd = app.add_subcommand("compare", "set several evaluated datasets side by side");
  std::vector<std::string> compare_items;
  std::string compare_format = "table";
  compare_cmd->add_option("datasets", compare_items,
                          "built-in dataset names or report JSON files (default: all built-ins)");
  compare_cmd->add_option("--format", compare_format, "table | json | csv")->check(format_check);

  CLI11_PARSE(app, argc, argv);

  try {
    if (index_cmd->parsed()) {
      return cmd_index(index_corpus_path, index_out_path, index_per_line, index_case_sensitive,
                       index_threads);
    }
    if (count_cmd->parsed()) {
      if (count_phrase.empty() && count_collocate.empty()) {
        throw bellgram::Error("count needs --phrase or --collocate");
      }
      return cmd_count(count_index_path, count_phrase, count_collocate, count_window, count_format);
    }
    if (chsh_cmd->parsed()) {
      if (!chsh_fixture.empty()) return cmd_chsh_fixture(chsh_fixture, chsh_format);
      if (chsh_index_path.empty()) throw bellgram::Error("chsh needs --fixture or --index");
      return cmd_chsh_index(chsh_index_path, chsh_design, mode_opt->count() > 0, chsh_mode,
                            window_opt->count() > 0, chsh_window, chsh_format);
    }
    if (compare_cmd->parsed()) {
      return cmd_compare(compare_items, compare_format);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
