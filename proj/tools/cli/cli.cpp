// Copyright 2026 The Prosody Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prosody/coder.hpp"
#include "prosody/corpus.hpp"
#include "prosody/error.hpp"
#include "prosody/frechet.hpp"
#include "prosody/metric.hpp"
#include "prosody/permtest.hpp"
#include "prosody/render.hpp"
#include "prosody/report.hpp"

namespace prosody::cli {
namespace {

constexpr std::string_view kFixturePrefix = "fixture:";

struct CoderFlags {
  Variant variant = Variant::kA;
  std::string stopwords_path;
  std::string prefixes_path;
  std::string skip;
  unsigned max_a_verse_lifts = 2;
  bool distinct_s_clusters = false;

  void attach(CLI::App* app) {
    static const std::map<std::string, Variant> kVariants{{"A", Variant::kA}, {"B", Variant::kB}};
    app->add_option("--variant", variant, "Coding variant for raw poems: A or B")
        ->transform(CLI::CheckedTransformer(kVariants, CLI::ignore_case))
        ->option_text("A|B");
    app->add_option("--stopwords", stopwords_path, "Function-word list (one per line)");
    app->add_option("--prefixes", prefixes_path, "Unstressed-prefix list (one per line)");
    app->add_option("--skip", skip, "File line ranges to drop, e.g. 1-3,17");
    app->add_option("--max-a-verse-lifts", max_a_verse_lifts,
                    "Variant B: most marks before the caesura (0 = no cap)");
    app->add_flag("--distinct-s-clusters", distinct_s_clusters,
                  "Treat sp-/st-/sc- as separate alliterating sounds");
  }
};

// Named sequences: the strings compared by edit distance and the text that
// is echoed when one of them is a mean.
struct Sequences {
  std::vector<std::string> labels;
  std::vector<SymbolSequence> symbols;
  bool auto_coded = false;
};

std::optional<std::string_view> FixtureName(std::string_view input) {
  if (input.substr(0, kFixturePrefix.size()) != kFixturePrefix) return std::nullopt;
  return input.substr(kFixturePrefix.size());
}

bool IsSequenceList(const IngestedPoem& poem) {
  return std::none_of(poem.lines.begin(), poem.lines.end(), [](const PoemLine& l) {
    return l.text.find_first_of(" \t") != std::string::npos ||
           l.text.find('*') != std::string::npos;
  });
}

class Loader {
 public:
  explicit Loader(const CoderFlags& flags) : flags_(flags) {
    if (!flags.stopwords_path.empty() || !flags.prefixes_path.empty()) {
      std::optional<std::string> stop, prefixes;
      if (!flags.stopwords_path.empty()) stop = read_text_file(flags.stopwords_path);
      if (!flags.prefixes_path.empty()) prefixes = read_text_file(flags.prefixes_path);
      custom_ = Lexicon::with_overrides(
          stop ? std::optional<std::string_view>(*stop) : std::nullopt,
          prefixes ? std::optional<std::string_view>(*prefixes) : std::nullopt);
    }
    options_.lexicon = custom_ ? &*custom_ : nullptr;
    options_.max_a_verse_lifts = flags.max_a_verse_lifts;
    options_.sound.distinct_s_clusters = flags.distinct_s_clusters;
  }

  Sequences sequences(const std::string& input) const {
    if (const auto name = FixtureName(input)) {
      const Fixture f = load_fixture(*name);
      switch (f.kind) {
        case Fixture::Kind::kCodes:
          return Literal(f.lines());
        case Fixture::Kind::kLines:
          return FromPoem(ingest_poem_text(f.serialize()));
        case Fixture::Kind::kCounts: {
          Sequences s;
          for (const auto& r : f.counts().rows()) {
            s.labels.push_back(r.pattern.text());
            s.symbols.push_back(r.pattern.symbols());
          }
          return s;
        }
        case Fixture::Kind::kMatrix:
          throw DataError("fixture " + f.name + " is a matrix, not a list of lines");
      }
    }
    const IngestedPoem poem = ingest_poem(input, SkipDirectives::parse(flags_.skip));
    if (IsSequenceList(poem)) {
      std::vector<std::string> items;
      for (const auto& l : poem.lines) items.push_back(l.text);
      return Literal(items);
    }
    return FromPoem(poem);
  }

  Sequences poem_codes(const std::string& input) const {
    if (const auto name = FixtureName(input)) {
      const Fixture f = load_fixture(*name);
      if (f.kind == Fixture::Kind::kLines) return FromPoem(ingest_poem_text(f.serialize()));
      if (f.kind == Fixture::Kind::kCodes) return Literal(f.lines());
      throw DataError("fixture " + f.name + " is not a poem");
    }
    return FromPoem(ingest_poem(input, SkipDirectives::parse(flags_.skip)));
  }

 private:
  static Sequences Literal(const std::vector<std::string>& items) {
    Sequences s;
    for (const auto& item : items) {
      s.labels.push_back(item);
      s.symbols.push_back(to_symbols(item));
    }
    return s;
  }

  Sequences FromPoem(const IngestedPoem& poem) const {
    Sequences s;
    const auto codes = code_poem(poem, flags_.variant, options_);
    s.auto_coded = !poem.annotated();
    for (std::size_t i = 0; i < codes.size(); ++i) {
      s.labels.push_back(poem.lines[i].text);
      s.symbols.push_back(codes[i].symbols());
    }
    return s;
  }

  const CoderFlags& flags_;
  std::optional<Lexicon> custom_;
  CoderOptions options_;
};

CountTable LoadCounts(const std::string& input) {
  if (const auto name = FixtureName(input)) return load_fixture(*name).counts();
  return read_count_table(input);
}

DistanceMatrix LoadMatrix(const std::string& input) {
  if (const auto name = FixtureName(input)) return load_fixture(*name).matrix();
  try {
    return DistanceMatrix::from_csv(read_text_file(input));
  } catch (const DataError& e) {
    throw DataError(input + ": " + e.what());
  }
}

void Emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DataError("cannot write " + path);
  file << content;
  if (!file) throw DataError("error writing " + path);
}

const std::map<std::string, Tail> kTails{{"two", Tail::kTwoTailedReciprocal},
                                         {"greater", Tail::kOneSidedGreater}};
const std::map<std::string, Weighting> kWeightings{{"paper_dc_squared", Weighting::kScaledDistance},
                                                   {"conventional", Weighting::kCountMultiplicity}};

struct TestFlags {
  PermTestOptions options;
  std::optional<Tail> tail;
  std::string out_path;
  bool json = false;

  void attach(CLI::App* app, bool counts) {
    app->add_option("--seed", options.seed, "Master seed (64-bit unsigned)")->required();
    app->add_option("--resamples", options.resamples, "Number of resamples")
        ->check(CLI::PositiveNumber);
    app->add_option("--tail", tail, counts ? "two or greater (default greater)"
                                           : "two or greater (default two)")
        ->transform(CLI::CheckedTransformer(kTails, CLI::ignore_case))
        ->option_text("two|greater");
    app->add_flag("--plus-one", options.plus_one, "Report (b+1)/(n+1) instead of b/n");
    app->add_option("--threads", options.threads, "Worker threads")->check(CLI::PositiveNumber);
    app->add_option("--out", out_path, "Write resample ratios (CSV) here");
    app->add_flag("--json", json, "Print a JSON record instead of the text report");
    if (counts) {
      app->add_option("--weighting", options.weighting,
                      "paper_dc_squared (default) or conventional")
          ->transform(CLI::CheckedTransformer(kWeightings, CLI::ignore_case))
          ->option_text("paper_dc_squared|conventional");
    } else {
      app->add_option("--power", options.power, "Distance exponent p")
          ->check(CLI::PositiveNumber);
    }
  }
};

void Finish(const TestFlags& flags, const PermTestResult& result, std::ostream& out) {
  if (!flags.out_path.empty()) Emit(flags.out_path, ratios_csv(result), out);
  out << (flags.json ? permtest_record(result) : permtest_report(result));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized means, variances, and permutation tests for coded poetic lines",
               "prosody"};
  app.require_subcommand(1);

  // code
  CoderFlags code_flags;
  std::string code_input;
  auto* code = app.add_subcommand("code", "Print one position string per poetic line");
  code->add_option("input", code_input, "Poem file or fixture:<name>")->required();
  code_flags.attach(code);

  // distmat
  CoderFlags dist_flags;
  std::string dist_input, dist_out;
  unsigned dist_threads = 1;
  auto* distmat = app.add_subcommand("distmat", "Pairwise edit distance matrix as CSV");
  distmat->add_option("input", dist_input, "Sequence list, poem, counts, or fixture:<name>")
      ->required();
  distmat->add_option("--out", dist_out, "Output CSV path (default stdout)");
  distmat->add_option("--threads", dist_threads, "Worker threads")->check(CLI::PositiveNumber);
  dist_flags.attach(distmat);

  // frechet
  CoderFlags fre_flags;
  std::string fre_items, fre_counts, fre_matrix;
  unsigned fre_power = 2;
  Weighting fre_weighting = Weighting::kScaledDistance;
  bool fre_json = false;
  auto* frechet = app.add_subcommand("frechet", "Generalized mean and variance");
  auto* items_opt = frechet->add_option("--items", fre_items, "Sequence list or poem");
  auto* counts_opt = frechet->add_option("--counts", fre_counts, "Pattern<TAB>count table");
  auto* matrix_opt = frechet->add_option("--matrix", fre_matrix, "Distance matrix CSV");
  items_opt->excludes(counts_opt)->excludes(matrix_opt);
  counts_opt->excludes(matrix_opt);
  frechet->add_option("--power", fre_power, "Distance exponent p (1 = median)")
      ->check(CLI::PositiveNumber);
  frechet
      ->add_option("--weighting", fre_weighting,
                   "paper_dc_squared (default) or conventional; counts only")
      ->transform(CLI::CheckedTransformer(kWeightings, CLI::ignore_case))
      ->option_text("paper_dc_squared|conventional");
  frechet->add_flag("--json", fre_json, "Print a JSON record");
  fre_flags.attach(frechet);

  // ftest-lines
  CoderFlags lines_flags;
  TestFlags lines_test;
  std::string lines_a, lines_b;
  auto* ftest_lines = app.add_subcommand("ftest-lines", "Permutation test over two line sets");
  ftest_lines->add_option("first", lines_a, "First sample")->required();
  ftest_lines->add_option("second", lines_b, "Second sample")->required();
  lines_test.attach(ftest_lines, false);
  lines_flags.attach(ftest_lines);

  // ftest-counts
  TestFlags counts_test;
  std::string counts_a, counts_b;
  auto* ftest_counts = app.add_subcommand("ftest-counts", "Permutation test over two count tables");
  ftest_counts->add_option("first", counts_a, "First count table")->required();
  ftest_counts->add_option("second", counts_b, "Second count table")->required();
  counts_test.attach(ftest_counts, true);

  // render-heatmap
  std::string heat_input, heat_out;
  auto* heatmap = app.add_subcommand("render-heatmap", "Distance matrix to a P2 PGM image");
  heatmap->add_option("matrix", heat_input, "Matrix CSV or fixture:<name>")->required();
  heatmap->add_option("--out", heat_out, "Output PGM path (default stdout)");

  // render-hist
  std::string hist_input, hist_out, hist_svg;
  std::size_t hist_bins = 20;
  auto* hist = app.add_subcommand("render-hist", "Histogram of a column of values");
  hist->add_option("values", hist_input, "One value per line")->required();
  hist->add_option("--bins", hist_bins, "Number of equal-width bins")->check(CLI::PositiveNumber);
  hist->add_option("--out", hist_out, "Output CSV path (default stdout)");
  hist->add_option("--svg", hist_svg, "Also write an SVG bar chart");

  // fixtures
  std::string fixture_name;
  auto* fixtures = app.add_subcommand("fixtures", "List embedded reference data or print one");
  fixtures->add_option("name", fixture_name, "Fixture to print");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (code->parsed()) {
      const Loader loader(code_flags);
      const Sequences s = loader.poem_codes(code_input);
      if (s.auto_coded) {
        err << "note: auto-coded (best effort); mark words with *...* for exact input\n";
      }
      for (const auto& sym : s.symbols) out << to_utf8(sym) << '\n';
    } else if (distmat->parsed()) {
      const Loader loader(dist_flags);
      std::vector<SymbolSequence> symbols;
      if (const auto name = FixtureName(dist_input);
          !name && dist_input.size() > 4 && dist_input.ends_with(".tsv")) {
        symbols = read_count_table(dist_input).pattern_symbols();
      } else {
        symbols = loader.sequences(dist_input).symbols;
      }
      Emit(dist_out, distance_matrix(symbols, dist_threads).to_csv(), out);
    } else if (frechet->parsed()) {
      FrechetSummary summary;
      std::vector<std::string> labels;
      if (!fre_counts.empty()) {
        const CountTable table = LoadCounts(fre_counts);
        const auto d = distance_matrix(table.pattern_symbols());
        summary = weighted_frechet(d, table, fre_weighting, fre_power);
        for (const auto& r : table.rows()) labels.push_back(r.pattern.text());
      } else if (!fre_matrix.empty()) {
        summary = frechet_summary(LoadMatrix(fre_matrix), fre_power);
      } else if (!fre_items.empty()) {
        const Loader loader(fre_flags);
        const Sequences s = loader.sequences(fre_items);
        summary = frechet_summary(distance_matrix(s.symbols), fre_power);
        labels = s.labels;
      } else {
        err << "frechet: one of --items, --counts, --matrix is required\n";
        return kExitUsage;
      }
      out << (fre_json ? frechet_record(summary, labels) : frechet_report(summary, labels));
    } else if (ftest_lines->parsed()) {
      const Loader loader(lines_flags);
      const Sequences a = loader.sequences(lines_a);
      const Sequences b = loader.sequences(lines_b);
      lines_test.options.tail = lines_test.tail;
      Finish(lines_test, line_permutation_test(a.symbols, b.symbols, lines_test.options), out);
    } else if (ftest_counts->parsed()) {
      const auto [a, b] = CountTable::align(LoadCounts(counts_a), LoadCounts(counts_b));
      const auto d = distance_matrix(a.pattern_symbols());
      counts_test.options.tail = counts_test.tail;
      Finish(counts_test, counts_permutation_test(a, b, d, counts_test.options), out);
    } else if (heatmap->parsed()) {
      Emit(heat_out, heatmap_pgm(LoadMatrix(heat_input)), out);
    } else if (hist->parsed()) {
      const auto values = parse_values_csv(read_text_file(hist_input));
      const auto bins = histogram(values, hist_bins);
      Emit(hist_out, histogram_csv(bins), out);
      if (!hist_svg.empty()) Emit(hist_svg, histogram_svg(bins, hist_input), out);
    } else if (fixtures->parsed()) {
      if (fixture_name.empty()) {
        for (const auto& name : fixture_names()) {
          out << name << '\t' << load_fixture(name).provenance << '\n';
        }
      } else {
        out << load_fixture(fixture_name).serialize();
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace prosody::cli
