#pragma once

// Labeled-corpus construction from bug-fixing commit pairs.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "warnsift/common.hpp"
#include "warnsift/report.hpp"

namespace warnsift {

struct CommitPair {
  std::string repo_id;
  std::string fixed_commit;
  std::string buggy_commit;
  std::string commit_message;
  std::set<std::string> changed_files;
};

enum class Label : std::uint8_t { Insensitive = 0, Sensitive = 1 };

inline std::string_view to_string(Label l) { return l == Label::Sensitive ? "sensitive" : "insensitive"; }

struct Provenance {
  std::string repo_id;
  std::string commit;

  auto operator<=>(const Provenance&) const = default;
  bool operator==(const Provenance&) const = default;
};

struct LabeledWarning {
  WarningRecord warning;
  Label label = Label::Insensitive;
  Provenance provenance;

  bool operator==(const LabeledWarning&) const = default;
};

// ---------------------------------------------------------------------------
// Bug-fix commit filter

/// Bug-classification phrases accepted in place of a bare bug word.
inline const std::vector<std::string>& default_bug_phrases() {
  static const std::vector<std::string> phrases = {
      "null pointer dereference", "null pointer exception", "nullpointerexception", "resource leak",
      "memory leak",              "race condition",         "deadlock",             "infinite loop",
      "off by one",               "out of bounds",          "integer overflow",     "division by zero",
      "default encoding",         "uninitialized",
  };
  return phrases;
}

namespace detail {

inline std::vector<std::string> lowercase_words(std::string_view text) {
  std::vector<std::string> words;
  std::string cur;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      cur += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else if (!cur.empty()) {
      words.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));
  return words;
}

}  // namespace detail

/// A commit counts as a bug fix when its message contains "fix" (as a word,
/// inflection or compound such as "bugfix") together with a bug word or a
/// bug-classification phrase. Matching is case-insensitive.
inline bool is_bugfix_commit(std::string_view message,
                             const std::vector<std::string>& phrases = default_bug_phrases()) {
  static const std::vector<std::string_view> bug_words = {"bug", "defect", "error", "fault", "issue"};
  const auto words = detail::lowercase_words(message);
  bool has_fix = false, has_bug_word = false;
  for (const auto& w : words) {
    if (w.starts_with("fix") || w.starts_with("bugfix") || w.starts_with("hotfix")) has_fix = true;
    for (auto b : bug_words) {
      if (w.starts_with(b)) has_bug_word = true;
    }
  }
  if (!has_fix) return false;
  if (has_bug_word) return true;
  std::string joined;
  for (const auto& w : words) {
    joined += ' ';
    joined += w;
  }
  joined += ' ';
  for (const auto& p : phrases) {
    std::string needle = " ";
    for (const auto& w : detail::lowercase_words(p)) needle += w + " ";
    if (joined.find(needle) != std::string::npos) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Labeling passes

/// Labels the buggy-version warnings of one commit pair. Only warnings in
/// `changed_files` are considered; a warning is sensitive iff its fingerprint
/// does not occur in the fixed version. NOISE warnings are dropped.
inline std::vector<LabeledWarning> label_warnings(const std::vector<WarningRecord>& buggy_report,
                                                  const std::vector<WarningRecord>& fixed_report,
                                                  const std::set<std::string>& changed_files,
                                                  const Provenance& provenance = {}) {
  if (changed_files.empty()) throw Error("label_warnings: commit pair has no changed files");
  std::unordered_set<WarningFingerprint> fixed;
  for (const auto& w : fixed_report) {
    if (changed_files.contains(w.source_path)) fixed.insert(fingerprint(w));
  }
  std::vector<LabeledWarning> out;
  for (const auto& w : buggy_report) {
    if (!changed_files.contains(w.source_path) || is_excluded(w.category)) continue;
    const Label label = fixed.contains(fingerprint(w)) ? Label::Insensitive : Label::Sensitive;
    out.push_back({w, label, provenance});
  }
  return out;
}

/// Once a fingerprint is sensitive anywhere it is sensitive everywhere.
inline std::vector<LabeledWarning> promote_labels(std::vector<LabeledWarning> corpus) {
  std::unordered_set<WarningFingerprint> sensitive;
  for (const auto& e : corpus) {
    if (e.label == Label::Sensitive) sensitive.insert(fingerprint(e.warning));
  }
  for (auto& e : corpus) {
    if (sensitive.contains(fingerprint(e.warning))) e.label = Label::Sensitive;
  }
  return corpus;
}

/// Keeps the first insensitive entry per fingerprint and the first sensitive
/// entry per (fingerprint, provenance). Expects promote_labels to have run.
inline std::vector<LabeledWarning> dedup(const std::vector<LabeledWarning>& corpus) {
  std::unordered_set<WarningFingerprint> seen_insensitive;
  std::set<std::pair<Provenance, WarningFingerprint>> seen_sensitive;
  std::vector<LabeledWarning> out;
  for (const auto& e : corpus) {
    auto fp = fingerprint(e.warning);
    if (e.label == Label::Insensitive) {
      if (!seen_insensitive.insert(std::move(fp)).second) continue;
    } else {
      if (!seen_sensitive.emplace(e.provenance, std::move(fp)).second) continue;
    }
    out.push_back(e);
  }
  return out;
}

struct Splits {
  std::vector<LabeledWarning> train, validation, test;
};

/// Stratified 8:1:1 split. Every class with at least three entries places at
/// least one entry in each split. Entries keep corpus order within a split.
inline Splits split(const std::vector<LabeledWarning>& corpus, std::uint64_t seed) {
  if (corpus.size() < 10) throw Error("split: corpus needs at least 10 entries, got " + std::to_string(corpus.size()));
  const std::size_t n = corpus.size();
  const auto tenth = [](std::size_t k) { return (k + 5) / 10; };
  const std::size_t valid_total = tenth(n), test_total = tenth(n);

  std::vector<std::size_t> by_class[2];
  for (std::size_t i = 0; i < n; ++i) by_class[static_cast<int>(corpus[i].label)].push_back(i);
  std::mt19937_64 rng(seed);
  for (auto& idx : by_class) std::shuffle(idx.begin(), idx.end(), rng);

  // The smaller class is allocated first; the larger absorbs the remainder.
  const int minority = by_class[1].size() <= by_class[0].size() ? 1 : 0;
  const int majority = 1 - minority;
  auto share = [&](std::size_t k, std::size_t cap) {
    std::size_t s = tenth(k);
    if (k >= 3) s = std::max<std::size_t>(s, 1);
    return std::min(s, cap);
  };
  const std::size_t min_valid = share(by_class[minority].size(), valid_total);
  const std::size_t min_test = share(by_class[minority].size(), test_total);
  const std::size_t maj_valid = std::min(valid_total - min_valid, by_class[majority].size());
  const std::size_t maj_test = std::min(test_total - min_test, by_class[majority].size() - maj_valid);

  std::vector<int> assignment(n, 0);  // 0 train, 1 validation, 2 test
  auto assign = [&](const std::vector<std::size_t>& idx, std::size_t nv, std::size_t nt) {
    for (std::size_t k = 0; k < idx.size(); ++k) assignment[idx[k]] = k < nv ? 1 : (k < nv + nt ? 2 : 0);
  };
  assign(by_class[minority], min_valid, min_test);
  assign(by_class[majority], maj_valid, maj_test);

  Splits out;
  for (std::size_t i = 0; i < n; ++i) {
    (assignment[i] == 0 ? out.train : assignment[i] == 1 ? out.validation : out.test).push_back(corpus[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON-lines corpus

inline nlohmann::ordered_json to_json(const LabeledWarning& e) {
  const auto& w = e.warning;
  nlohmann::ordered_json j;
  j["rule"] = w.rule;
  j["category"] = std::string(to_string(w.category));
  j["rank"] = w.rank;
  j["confidence"] = w.confidence;
  j["message"] = w.message;
  j["class_name"] = w.class_name;
  j["method_name"] = w.method_name ? nlohmann::ordered_json(*w.method_name) : nlohmann::ordered_json(nullptr);
  j["source_path"] = w.source_path;
  j["line_start"] = w.line_start ? nlohmann::ordered_json(*w.line_start) : nlohmann::ordered_json(nullptr);
  j["line_end"] = w.line_end ? nlohmann::ordered_json(*w.line_end) : nlohmann::ordered_json(nullptr);
  j["label"] = std::string(to_string(e.label));
  j["repo_id"] = e.provenance.repo_id;
  j["commit"] = e.provenance.commit;
  return j;
}

/// Reads the warning fields of a corpus or filter-output object.
inline WarningRecord warning_from_json(const nlohmann::json& j) {
  WarningRecord w;
  w.rule = j.at("rule").get<std::string>();
  auto cat = parse_category(j.at("category").get<std::string>());
  if (!cat) throw Error("unknown category in corpus: " + j.at("category").get<std::string>());
  w.category = *cat;
  w.rank = j.at("rank").get<int>();
  w.confidence = j.at("confidence").get<int>();
  w.message = j.at("message").get<std::string>();
  w.class_name = j.at("class_name").get<std::string>();
  if (!j.at("method_name").is_null()) w.method_name = j.at("method_name").get<std::string>();
  w.source_path = j.at("source_path").get<std::string>();
  if (!j.at("line_start").is_null()) w.line_start = j.at("line_start").get<int>();
  if (!j.at("line_end").is_null()) w.line_end = j.at("line_end").get<int>();
  if (!is_valid(w)) throw Error("corpus record violates warning invariants: " + w.rule);
  return w;
}

inline LabeledWarning from_json(const nlohmann::json& j) {
  LabeledWarning e;
  e.warning = warning_from_json(j);
  const auto label = j.at("label").get<std::string>();
  if (label == "sensitive") {
    e.label = Label::Sensitive;
  } else if (label == "insensitive") {
    e.label = Label::Insensitive;
  } else {
    throw Error("unknown label in corpus: " + label);
  }
  e.provenance = {j.at("repo_id").get<std::string>(), j.at("commit").get<std::string>()};
  return e;
}

inline void write_corpus(std::ostream& os, const std::vector<LabeledWarning>& corpus) {
  for (const auto& e : corpus) os << to_json(e).dump() << '\n';
}

inline std::vector<LabeledWarning> read_corpus(std::istream& is) {
  std::vector<LabeledWarning> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& ex) {
      throw ParseError(std::string("bad corpus record: ") + ex.what(), lineno, ParseError::Position::Line);
    }
  }
  return out;
}

}  // namespace warnsift
