#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bellgram/bell.hpp"
#include "bellgram/corpus.hpp"
#include "bellgram/designs.hpp"
#include "bellgram/errors.hpp"
#include "bellgram/index.hpp"
#include "bellgram/rational.hpp"
#include "bellgram/report.hpp"
#include "bellgram/scan.hpp"
#include "bellgram/search.hpp"
#include "bellgram/tokenizer.hpp"

namespace fs = std::filesystem;
using namespace bellgram;

namespace {

// mt19937_64 with modulo draws: biased, but deterministic everywhere,
// unlike std::uniform_int_distribution.
struct Rng {
  std::mt19937_64 engine;

  explicit Rng(std::uint64_t seed) : engine(seed) {}
  std::uint64_t below(std::uint64_t n) { return engine() % n; }
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
};

const std::vector<std::string>& small_vocabulary() {
  static const std::vector<std::string> vocab = {"ant", "bee", "cow", "dog", "elk", "fox", "gnu", "hen"};
  return vocab;
}

Corpus random_corpus(Rng& rng, std::size_t max_docs, std::size_t max_tokens) {
  const auto& vocab = small_vocabulary();
  Corpus corpus;
  corpus.name = "random";
  const std::size_t n_docs = rng.below(max_docs + 1);
  for (std::size_t d = 0; d < n_docs; ++d) {
    const std::size_t n_tokens = rng.below(max_tokens + 1);
    std::string text;
    for (std::size_t t = 0; t < n_tokens; ++t) {
      if (!text.empty()) text += ' ';
      text += vocab[rng.below(vocab.size())];
    }
    Document doc;
    doc.doc_id = static_cast<DocId>(d);
    doc.source_name = "doc-" + std::to_string(d);
    doc.raw_text = std::move(text);
    corpus.documents.push_back(std::move(doc));
  }
  return corpus;
}

CoincidenceCounts random_counts(Rng& rng, bool allow_zero_total) {
  const auto cell = [&]() -> std::uint64_t {
    const std::uint64_t shape = rng.below(10);
    if (shape < 5) return rng.below(4);                          // lots of zeros
    if (shape < 9) return rng.below(1000);                       // ordinary
    return rng.below(std::uint64_t(1) << 60);                    // huge
  };
  for (;;) {
    const CoincidenceCounts counts{cell(), cell(), cell(), cell()};
    if (allow_zero_total || counts.total() != 0) return counts;
  }
}

Rational random_rational(Rng& rng, std::int64_t max_abs_num, std::uint64_t max_den) {
  const std::int64_t num = static_cast<std::int64_t>(rng.below(2 * max_abs_num + 1)) - max_abs_num;
  const std::int64_t den = static_cast<std::int64_t>(rng.between(1, max_den));
  return make_rational(num, den);
}

int class_rank(Classification c) {
  switch (c) {
    case Classification::Classical: return 0;
    case Classification::QuantumRange: return 1;
    case Classification::BeyondCirelson: return 2;
  }
  return -1;
}

Rational abs_value(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace

TEST_CASE("indexed phrase and collocate counts equal the full-scan oracle") {
  Rng rng(202408);
  const auto& vocab = small_vocabulary();
  int cases = 0;
  for (int iter = 0; iter < 300; ++iter) {
    CAPTURE(iter);
    const Corpus corpus = random_corpus(rng, 50, 200);
    const PositionalIndex index = build_index(corpus);

    std::vector<std::string> phrase;
    const std::size_t len = rng.between(1, 4);
    for (std::size_t i = 0; i < len; ++i) phrase.push_back(vocab[rng.below(vocab.size())]);
    CAPTURE(phrase);
    CHECK(phrase_count(index, make_phrase_query(phrase, index.config())) ==
          scan::phrase_count(corpus, phrase));
    ++cases;

    const std::string& target = vocab[rng.below(vocab.size())];
    std::string collocate = vocab[rng.below(vocab.size())];
    while (collocate == target) collocate = vocab[rng.below(vocab.size())];
    const auto window = static_cast<std::uint32_t>(rng.between(1, 9));
    CAPTURE(target);
    CAPTURE(collocate);
    CAPTURE(window);
    CHECK(collocate_count(index, make_collocate_query(target, collocate, window, index.config())) ==
          scan::collocate_count(corpus, target, collocate, window));
    ++cases;
  }
  CHECK(cases >= 500);
}

TEST_CASE("indexed coincidence tables equal the per-cell oracle") {
  Rng rng(77001);
  for (int iter = 0; iter < 40; ++iter) {
    CAPTURE(iter);
    const Corpus corpus = random_corpus(rng, 30, 80);
    const PositionalIndex index = build_index(corpus);
    const std::pair<std::string, std::string> pair_a = {"ant", "bee"};
    const std::pair<std::string, std::string> pair_b = {"cow", "dog"};

    CHECK(coincidence_counts(index, pair_a, pair_b, Mode::phrase()) ==
          scan::coincidence_counts_phrase(corpus, pair_a, pair_b));

    const auto window = static_cast<std::uint32_t>(rng.between(1, 9));
    CHECK(coincidence_counts(index, pair_a, pair_b, Mode::collocate(window)) ==
          scan::coincidence_counts_collocate(corpus, pair_a, pair_b, window));
  }
}

TEST_CASE("collocate counts grow with the window and dominate adjacent phrases") {
  Rng rng(5150);
  for (int iter = 0; iter < 60; ++iter) {
    CAPTURE(iter);
    const Corpus corpus = random_corpus(rng, 20, 120);
    const PositionalIndex index = build_index(corpus);
    const std::string target = "ant";
    const std::string collocate = "bee";

    std::uint64_t previous = 0;
    for (std::uint32_t window = 1; window <= 9; ++window) {
      const std::uint64_t count =
          collocate_count(index, make_collocate_query(target, collocate, window, index.config()));
      CHECK(count >= previous);
      previous = count;
    }

    const std::uint64_t adjacent = phrase_count(index, make_phrase_query({target, collocate}, index.config()));
    const std::uint64_t windowed =
        collocate_count(index, make_collocate_query(target, collocate, 1, index.config()));
    CHECK(windowed >= adjacent);
  }
}

TEST_CASE("counts are invariant under document permutation") {
  Rng rng(424242);
  for (int iter = 0; iter < 40; ++iter) {
    CAPTURE(iter);
    const Corpus corpus = random_corpus(rng, 25, 60);

    Corpus shuffled = corpus;
    for (std::size_t i = shuffled.documents.size(); i > 1; --i) {
      std::swap(shuffled.documents[i - 1], shuffled.documents[rng.below(i)]);
    }
    for (std::size_t i = 0; i < shuffled.documents.size(); ++i) {
      shuffled.documents[i].doc_id = static_cast<DocId>(i);
    }

    const PositionalIndex index = build_index(corpus);
    const PositionalIndex shuffled_index = build_index(shuffled);
    const std::vector<std::string> phrase = {"cow", "dog"};
    CHECK(phrase_count(index, make_phrase_query(phrase, index.config())) ==
          phrase_count(shuffled_index, make_phrase_query(phrase, shuffled_index.config())));
    CHECK(collocate_count(index, make_collocate_query("elk", "fox", 4, index.config())) ==
          collocate_count(shuffled_index, make_collocate_query("elk", "fox", 4, shuffled_index.config())));
  }
}

TEST_CASE("expectation values stay in [-1,1] with exact endpoint conditions") {
  Rng rng(90210);
  for (int iter = 0; iter < 400; ++iter) {
    CAPTURE(iter);
    const CoincidenceCounts counts = random_counts(rng, false);
    const ProbabilityTable table = to_probabilities(counts);
    const Rational e = expectation(table);
    CHECK(e >= -1);
    CHECK(e <= 1);
    CHECK((e == -1) == (counts.n11 == 0 && counts.n22 == 0));
    CHECK((e == 1) == (counts.n12 == 0 && counts.n21 == 0));
    const Rational mass = Rational(table.p11 + table.p12 + table.p21 + table.p22);
    CHECK(mass == 1);
  }
}

TEST_CASE("the statistic stays in [-4,4] and matches its defining combination") {
  Rng rng(31337);
  for (int iter = 0; iter < 200; ++iter) {
    CAPTURE(iter);
    const ChshReport report = run_design(random_counts(rng, false), random_counts(rng, false),
                                         random_counts(rng, false), random_counts(rng, false));
    CHECK(report.s >= -4);
    CHECK(report.s <= 4);
    const Rational recombined = Rational(report.apbp().expectation + report.abp().expectation +
                                         report.apb().expectation - report.ab().expectation);
    CHECK(report.s == recombined);
    CHECK(report.classification == classify(report.s));
  }
}

TEST_CASE("scaling every count by the same factor changes nothing") {
  Rng rng(628318);
  for (int iter = 0; iter < 200; ++iter) {
    CAPTURE(iter);
    const auto scale_by = rng.between(2, 100);
    const auto scaled = [&](const CoincidenceCounts& c) {
      return CoincidenceCounts{c.n11 * scale_by, c.n12 * scale_by, c.n21 * scale_by, c.n22 * scale_by};
    };

    CoincidenceCounts tables[4];
    for (auto& t : tables) {
      t = random_counts(rng, false);
      t = CoincidenceCounts{t.n11 % 1000, t.n12 % 1000, t.n21 % 1000, t.n22 % 1000};  // keep products in range
      if (t.total() == 0) t.n21 = 1;
    }

    CHECK(to_probabilities(tables[0]) == to_probabilities(scaled(tables[0])));
    CHECK(expectation(to_probabilities(tables[1])) == expectation(to_probabilities(scaled(tables[1]))));

    const ChshReport plain = run_design(tables[0], tables[1], tables[2], tables[3]);
    const ChshReport bigger =
        run_design(scaled(tables[0]), scaled(tables[1]), scaled(tables[2]), scaled(tables[3]));
    CHECK(plain.s == bigger.s);
    CHECK(plain.classification == bigger.classification);
  }
}

TEST_CASE("classification is symmetric in sign and monotone in magnitude") {
  Rng rng(161803);
  std::vector<Rational> samples;
  for (int iter = 0; iter < 300; ++iter) samples.push_back(random_rational(rng, 4, 50));
  samples.push_back(2);
  samples.push_back(-2);
  samples.push_back(make_rational(14, 5));
  samples.push_back(3);

  for (const Rational& s : samples) {
    CHECK(classify(s) == classify(Rational(-s)));
    CHECK(classify(s) == classify_by_square(Rational(s * s)));
  }
  std::sort(samples.begin(), samples.end(),
            [](const Rational& x, const Rational& y) { return abs_value(x) < abs_value(y); });
  for (std::size_t i = 1; i < samples.size(); ++i) {
    CHECK(class_rank(classify(samples[i - 1])) <= class_rank(classify(samples[i])));
  }
}

TEST_CASE("boundary statistics land in the lower class") {
  CHECK(classify(2) == Classification::Classical);
  CHECK(classify(-2) == Classification::Classical);
  CHECK(classify_by_square(4) == Classification::Classical);
  CHECK(classify_by_square(8) == Classification::QuantumRange);
  CHECK(classify_by_square(make_rational(79999, 10000)) == Classification::QuantumRange);
  CHECK(classify_by_square(make_rational(80001, 10000)) == Classification::BeyondCirelson);
}

TEST_CASE("random indexes round-trip through the binary format") {
  Rng rng(271828);
  const fs::path dir = fs::temp_directory_path() / ("bellgram-prop-" + std::to_string(::getpid()));
  fs::create_directories(dir);

  for (int iter = 0; iter < 20; ++iter) {
    CAPTURE(iter);
    const Corpus corpus = random_corpus(rng, 30, 100);
    const PositionalIndex index = build_index(corpus, iter % 2 == 0);
    const fs::path file = dir / ("case-" + std::to_string(iter) + ".idx");
    save_index(index, file);
    CHECK(load_index(file) == index);
  }

  // A wide index: more than 1000 distinct terms.
  Corpus wide;
  wide.name = "wide";
  for (std::size_t d = 0; d < 40; ++d) {
    std::string text;
    for (std::size_t t = 0; t < 100; ++t) {
      text += "term" + std::to_string(rng.below(1500)) + " ";
    }
    Document doc;
    doc.doc_id = static_cast<DocId>(d);
    doc.source_name = "wide-" + std::to_string(d);
    doc.raw_text = std::move(text);
    wide.documents.push_back(std::move(doc));
  }
  const PositionalIndex wide_index = build_index(wide);
  CHECK(wide_index.terms().size() > 1000);
  const fs::path wide_file = dir / "wide.idx";
  save_index(wide_index, wide_file);
  CHECK(load_index(wide_file) == wide_index);

  // Version mismatch: same family, different tag.
  const fs::path versioned = dir / "future.idx";
  std::ofstream(versioned, std::ios::binary) << "bellgram-index-v2" << std::string(64, '\0');
  CHECK_THROWS_AS(load_index(versioned), FormatError);

  fs::remove_all(dir);
}

TEST_CASE("thread count never changes the built index") {
  Rng rng(111213);
  for (int iter = 0; iter < 15; ++iter) {
    CAPTURE(iter);
    const Corpus corpus = random_corpus(rng, 40, 80);
    const PositionalIndex serial = build_index(corpus, false, 1);
    for (int threads : {2, 3, 4}) {
      CHECK(build_index(corpus, false, threads) == serial);
    }
  }
}

TEST_CASE("case-insensitive tokenization ignores input case") {
  Rng rng(987654);
  const std::string alphabet = "abcdefghij KLMNOPq.rs,tuv'wx-yz01 23";
  for (int iter = 0; iter < 200; ++iter) {
    CAPTURE(iter);
    std::string text;
    const std::size_t length = rng.below(80);
    for (std::size_t i = 0; i < length; ++i) text += alphabet[rng.below(alphabet.size())];

    std::string upper = text;
    for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    CAPTURE(text);
    CHECK(tokenize(text) == tokenize(upper));

    const auto tokens = tokenize(text);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      CHECK(tokens[i].position == i);
      CHECK(!tokens[i].surface.empty());
    }
  }
}

TEST_CASE("JSON reports round-trip for random designs") {
  Rng rng(555);
  const ChshDesign design = animal_acts_design(Mode::phrase());
  for (int iter = 0; iter < 60; ++iter) {
    CAPTURE(iter);
    const ChshReport report = run_design(random_counts(rng, false), random_counts(rng, false),
                                         random_counts(rng, false), random_counts(rng, false));
    const Mode mode = iter % 2 == 0 ? Mode::phrase() : Mode::collocate(1 + iter % 9);
    const ReportContext context{"random-" + std::to_string(iter), mode, design};
    const ParsedReport parsed = report_from_json(render_json(report, context));
    CHECK(parsed.report.s == report.s);
    CHECK(parsed.report.classification == report.classification);
    CHECK(parsed.context.mode == mode);
    for (std::size_t m = 0; m < 4; ++m) {
      CHECK(parsed.report.measurements[m].counts == report.measurements[m].counts);
      CHECK(parsed.report.measurements[m].expectation == report.measurements[m].expectation);
    }
  }
}

TEST_CASE("decimal rendering is within half a hundredth of the exact value") {
  Rng rng(314159);
  for (int iter = 0; iter < 400; ++iter) {
    CAPTURE(iter);
    const Rational value = random_rational(rng, 500, 997);
    const std::string rendered = decimal_string(value);
    CAPTURE(rendered);

    const bool negative = rendered.front() == '-';
    const std::string digits = negative ? rendered.substr(1) : rendered;
    const std::size_t dot = digits.find('.');
    REQUIRE(dot != std::string::npos);
    REQUIRE(digits.size() - dot - 1 == 2);
    const long long whole = std::stoll(digits.substr(0, dot));
    const int hundredths = (digits[dot + 1] - '0') * 10 + (digits[dot + 2] - '0');
    BigInt cents = BigInt(whole) * 100 + hundredths;
    if (negative) cents = -cents;

    const Rational parsed = make_rational(cents, 100);
    const Rational error = abs_value(Rational(parsed - value));
    CHECK(error <= make_rational(1, 200));
  }
}
