#include "antigram/evaluation.hpp"

#include <fstream>
#include <map>

#include "antigram/errors.hpp"
#include "antigram/lexicon.hpp"
#include "antigram/text.hpp"

namespace antigram {

GoldDataset load_gold(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open gold file: " + path);

  GoldDataset data;
  std::map<std::pair<std::string, std::string>, bool> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view content = trim(line);
    if (content.empty() || content.front() == '#') continue;

    const auto fields = split(content, '\t');
    if (fields.size() != 3) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected word_a<TAB>word_b<TAB>label");
    }
    const auto a = normalize_word(trim(fields[0]));
    const auto b = normalize_word(trim(fields[1]));
    if (!a || !b) {
      throw ParseError("line " + std::to_string(line_no) + ": unnormalizable word");
    }
    const std::string label_field = ascii_lower(trim(fields[2]));
    bool label = false;
    if (label_field == "yes") {
      label = true;
    } else if (label_field != "no") {
      throw ParseError("line " + std::to_string(line_no) + ": label must be yes or no, got '" +
                       label_field + "'");
    }

    GoldRecord rec;
    rec.word_a = *a;
    rec.word_b = *b;
    if (rec.word_b < rec.word_a) std::swap(rec.word_a, rec.word_b);
    rec.label = label;

    if (rec.label && signature(rec.word_a) != signature(rec.word_b)) {
      data.warnings.push_back("line " + std::to_string(line_no) + ": rejected, not anagrams: " +
                              rec.word_a + "," + rec.word_b);
      ++data.rejected_count;
      continue;
    }
    if (!seen.emplace(std::make_pair(rec.word_a, rec.word_b), rec.label).second) {
      data.warnings.push_back("line " + std::to_string(line_no) + ": duplicate pair collapsed: " +
                              rec.word_a + "," + rec.word_b);
      ++data.duplicate_count;
      continue;
    }
    data.records.push_back(std::move(rec));
  }
  if (in.bad()) throw IoError("read failure on gold file: " + path);
  if (data.records.empty()) throw ConfigError("no usable gold records in: " + path);
  return data;
}

EvalMetrics evaluate(std::span<const AnagramPair> verdicts, std::span<const GoldRecord> gold) {
  std::map<std::pair<std::string, std::string>, std::optional<bool>> by_pair;
  for (const auto& v : verdicts) {
    by_pair.emplace(std::make_pair(v.c0, v.c1), v.is_antigram);  // first verdict wins
  }

  EvalMetrics m;
  for (const auto& g : gold) {
    const auto it = by_pair.find(std::make_pair(g.word_a, g.word_b));
    if (it == by_pair.end()) {
      ++m.missing;
      continue;
    }
    if (!it->second.has_value()) {
      ++m.indeterminate;
      continue;
    }
    const bool predicted = *it->second;
    if (predicted && g.label) {
      ++m.tp;
    } else if (predicted && !g.label) {
      ++m.fp;
    } else if (!predicted && g.label) {
      ++m.fn;
    } else {
      ++m.tn;
    }
  }
  return m;
}

AntonymReport antonym_report(const PairScorer& scorer,
                             std::span<const std::pair<std::string, std::string>> pairs) {
  AntonymReport report;
  double sum = 0.0;
  for (const auto& [a, b] : pairs) {
    AntonymRow row{a, b, scorer(a, b)};
    if (row.result.score) {
      sum += row.result.score->value();
      ++report.scored;
    } else {
      ++report.oov;
    }
    report.rows.push_back(std::move(row));
  }
  if (report.scored > 0) {
    report.mean = sum / static_cast<double>(report.scored);
  }
  return report;
}

AntonymReport antonym_report(const EmbeddingTable& table,
                             std::span<const std::pair<std::string, std::string>> pairs) {
  return antonym_report(make_scorer(table), pairs);
}

std::vector<std::pair<std::string, std::string>> load_pairs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open pair file: " + path);

  std::vector<std::pair<std::string, std::string>> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    const auto fields = split(content, '\t');
    if (fields.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected word_a<TAB>word_b");
    }
    std::string a = ascii_lower(trim(fields[0]));
    std::string b = ascii_lower(trim(fields[1]));
    if (a.empty() || b.empty()) {
      throw ParseError("line " + std::to_string(line_no) + ": empty word field");
    }
    pairs.emplace_back(std::move(a), std::move(b));
  }
  if (in.bad()) throw IoError("read failure on pair file: " + path);
  if (pairs.empty()) throw ConfigError("no usable pairs in: " + path);
  return pairs;
}

}  // namespace antigram
