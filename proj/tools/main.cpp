#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "antigram/antigram.hpp"
#include "antigram/embeddings.hpp"
#include "antigram/errors.hpp"
#include "antigram/evaluation.hpp"
#include "antigram/lexicon.hpp"
#include "antigram/score_table.hpp"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;

// Exit statuses: 0 success, 1 environment/I-O, 2 bad user input, 3 OOV.
constexpr int kExitOk = 0;
constexpr int kExitEnvironment = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitOov = 3;

struct RunConfig {
  std::string dict_path;
  std::string embeddings_path;
  std::string scores_path;
  std::string format = "text";
  double threshold = antigram::kDefaultThreshold;
};

// Keeps whichever score source is active alive for the duration of a command.
struct ScorerHolder {
  std::optional<antigram::ScoreTable> scores;
  std::optional<antigram::EmbeddingTable> table;
};

void report_table_load(const antigram::EmbeddingTable& table, const std::string& path) {
  std::cerr << "loaded " << table.size() << " vectors (dim " << table.dimension() << ") from "
            << path << "\n";
  if (table.duplicate_count() > 0 || table.zero_norm_count() > 0) {
    std::cerr << "note: skipped " << table.duplicate_count() << " duplicate and "
              << table.zero_norm_count() << " zero-norm vector(s)\n";
  }
}

// --scores takes precedence over --embeddings (test-mode injection).
antigram::PairScorer open_scorer(const RunConfig& config, ScorerHolder& holder) {
  if (!config.scores_path.empty()) {
    holder.scores = antigram::ScoreTable::load(config.scores_path);
    return antigram::make_scorer(*holder.scores);
  }
  if (config.embeddings_path.empty()) {
    throw antigram::InputError("this command needs --embeddings or --scores");
  }
  holder.table = antigram::EmbeddingTable::load(config.embeddings_path);
  report_table_load(*holder.table, config.embeddings_path);
  return antigram::make_scorer(*holder.table);
}

antigram::Lexicon open_lexicon(const RunConfig& config) {
  if (config.dict_path.empty()) {
    throw antigram::InputError("this command needs --dict");
  }
  auto lex = antigram::Lexicon::load(config.dict_path);
  if (lex.rejected_count() > 0) {
    std::cerr << "note: skipped " << lex.rejected_count() << " unusable line(s) in "
              << config.dict_path << "\n";
  }
  return lex;
}

std::string format_score(const std::optional<antigram::SimilarityScore>& score,
                         const std::string& oov_token) {
  if (!score) return "OOV:" + oov_token;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", score->value());
  return buf;
}

std::string format_percent(const std::optional<double>& ratio) {
  if (!ratio) return "undefined";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f%%", *ratio * 100.0);
  return buf;
}

const char* verdict_name(const std::optional<bool>& is_antigram) {
  if (!is_antigram.has_value()) return "indeterminate";
  return *is_antigram ? "antigram" : "not-antigram";
}

double round4(double v) { return std::round(v * 1e4) / 1e4; }

int cmd_anagrams(const RunConfig& config, const std::string& word) {
  const auto lex = open_lexicon(config);
  const auto result = antigram::anagrams_of(lex, word);
  for (const auto& a : result.anagrams) {
    if (config.format == "jsonl") {
      ordered_json row;
      row["root"] = result.root;
      row["anagram"] = a;
      std::cout << row.dump() << "\n";
    } else {
      std::cout << a << "\n";
    }
  }
  return kExitOk;
}

int cmd_antigrams(const RunConfig& config, const std::string& word) {
  const auto lex = open_lexicon(config);
  ScorerHolder holder;
  const auto scorer = open_scorer(config, holder);
  const auto report = antigram::find_antigrams(lex, scorer, word, config.threshold);

  const char sep = config.format == "tsv" ? '\t' : ' ';
  for (const auto& p : report.pairs) {
    if (config.format == "jsonl") {
      ordered_json row;
      row["c0"] = p.c0;
      row["c1"] = p.c1;
      if (p.score) {
        row["score"] = round4(p.score->value());
      } else {
        row["score"] = nullptr;
        row["oov"] = p.oov_token;
      }
      row["verdict"] = verdict_name(p.is_antigram);
      std::cout << row.dump() << "\n";
    } else {
      std::cout << p.c0 << sep << p.c1 << sep << format_score(p.score, p.oov_token) << sep
                << verdict_name(p.is_antigram) << "\n";
    }
  }
  return kExitOk;
}

int cmd_sim(const RunConfig& config, const std::string& w1, const std::string& w2) {
  if (config.embeddings_path.empty()) {
    throw antigram::InputError("sim needs --embeddings");
  }
  const auto table = antigram::EmbeddingTable::load(config.embeddings_path);
  report_table_load(table, config.embeddings_path);
  const auto res = antigram::cosine_similarity(table, w1, w2);
  if (!res.score) {
    std::cerr << "OOV: " << res.oov_token << "\n";
    return kExitOov;
  }
  std::cout << format_score(res.score, {}) << "\n";
  return kExitOk;
}

int cmd_eval(const RunConfig& config, const std::string& gold_path,
             const std::string& antonyms_path) {
  ScorerHolder holder;
  const auto scorer = open_scorer(config, holder);
  auto gold = antigram::load_gold(gold_path);
  for (const auto& w : gold.warnings) std::cerr << "gold: " << w << "\n";

  std::sort(gold.records.begin(), gold.records.end(), [](const auto& a, const auto& b) {
    return std::make_pair(a.word_a, a.word_b) < std::make_pair(b.word_a, b.word_b);
  });

  std::vector<antigram::AnagramPair> verdicts;
  verdicts.reserve(gold.records.size());
  for (const auto& g : gold.records) {
    antigram::AnagramPair p;
    p.c0 = g.word_a;
    p.c1 = g.word_b;
    const auto res = scorer(g.word_a, g.word_b);
    if (res.score) {
      p.score = res.score;
      p.is_antigram = antigram::classify_score(*res.score, config.threshold);
    } else {
      p.oov_token = res.oov_token;
    }
    verdicts.push_back(std::move(p));
  }

  std::cout << "pairs:\n";
  for (std::size_t i = 0; i < gold.records.size(); ++i) {
    const auto& g = gold.records[i];
    const auto& p = verdicts[i];
    const char* cell = "indeterminate";
    if (p.is_antigram.has_value()) {
      if (*p.is_antigram) {
        cell = g.label ? "tp" : "fp";
      } else {
        cell = g.label ? "fn" : "tn";
      }
    }
    std::cout << p.c0 << '\t' << p.c1 << '\t' << format_score(p.score, p.oov_token) << '\t'
              << verdict_name(p.is_antigram) << '\t' << (g.label ? "yes" : "no") << '\t' << cell
              << "\n";
  }

  const auto m = antigram::evaluate(verdicts, gold.records);
  std::cout << "counts: tp=" << m.tp << " fp=" << m.fp << " tn=" << m.tn << " fn=" << m.fn
            << " indeterminate=" << m.indeterminate << " missing=" << m.missing << "\n";
  std::cout << "accuracy: " << format_percent(m.accuracy()) << "\n";
  std::cout << "precision: " << format_percent(m.precision()) << "\n";
  std::cout << "recall: " << format_percent(m.recall()) << "\n";

  if (!antonyms_path.empty()) {
    const auto pairs = antigram::load_pairs(antonyms_path);
    const auto report = antigram::antonym_report(scorer, pairs);
    std::cout << "antonyms:\n";
    for (const auto& row : report.rows) {
      std::cout << row.word_a << '\t' << row.word_b << '\t'
                << format_score(row.result.score, row.result.oov_token) << "\n";
    }
    std::cout << "scored: " << report.scored << "\toov: " << report.oov << "\n";
    if (report.mean) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.2f", *report.mean);
      std::cout << "mean: " << buf << "\n";
    } else {
      std::cout << "mean: undefined\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"single-word anagram enumeration and antigram detection"};
  app.require_subcommand(1);

  RunConfig config;
  app.add_option("--dict", config.dict_path, "word list file, one word per line")
      ->envname("ANTIGRAM_DICT");
  app.add_option("--embeddings", config.embeddings_path, "pre-trained word vector text file")
      ->envname("ANTIGRAM_EMBEDDINGS");
  app.add_option("--scores", config.scores_path,
                 "pair-score TSV; overrides --embeddings (test-mode injection)");
  app.add_option("--threshold", config.threshold, "antigram similarity threshold")
      ->capture_default_str()
      ->check(CLI::Range(-1.0, 1.0));
  app.add_option("--format", config.format, "output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "tsv", "jsonl"}));

  std::string word, w1, w2, gold_path, antonyms_path;

  auto* anagrams = app.add_subcommand("anagrams", "list dictionary anagrams of a word");
  anagrams->add_option("word", word, "query word")->required();
  anagrams->fallthrough();

  auto* antigrams =
      app.add_subcommand("antigrams", "score and classify all anagram pairs of a word");
  antigrams->add_option("word", word, "query word")->required();
  antigrams->fallthrough();

  auto* sim = app.add_subcommand("sim", "cosine similarity between two tokens");
  sim->add_option("w1", w1, "first token")->required();
  sim->add_option("w2", w2, "second token")->required();
  sim->fallthrough();

  auto* eval = app.add_subcommand("eval", "compare verdicts against a gold TSV");
  eval->add_option("gold", gold_path, "gold pair TSV")->required();
  eval->add_option("--antonyms", antonyms_path, "two-column TSV for the similarity report");
  eval->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (anagrams->parsed()) return cmd_anagrams(config, word);
    if (antigrams->parsed()) return cmd_antigrams(config, word);
    if (sim->parsed()) return cmd_sim(config, w1, w2);
    if (eval->parsed()) return cmd_eval(config, gold_path, antonyms_path);
  } catch (const antigram::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEnvironment;
  }
  return kExitBadInput;
}
