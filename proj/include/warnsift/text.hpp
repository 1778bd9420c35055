#pragma once

// Tokenization, vocabularies and fixed-length encoding of the model inputs.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "warnsift/common.hpp"
#include "warnsift/context.hpp"
#include "warnsift/dataset.hpp"
#include "warnsift/report.hpp"

namespace warnsift {

namespace detail {

inline constexpr std::array<std::string_view, 26> kMultiCharOps = {
    ">>>=", "<<=", ">>=", ">>>", "...", "==", "!=", "<=", ">=", "&&", "||", "++", "--",
    "+=",   "-=",  "*=",  "/=",  "%=",  "&=", "|=", "^=", "<<", ">>", "->", "::", ":=",
};

inline bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }

}  // namespace detail

/// Splits code or message text into identifiers, numbers, string and char
/// literals, and operators. Whitespace separates; every other punctuation
/// character is its own token. Identifiers may contain '$' so that
/// temporaries such as $stack61 stay whole.
inline std::vector<std::string> tokenize_code(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (detail::word_char(c)) {
      std::size_t j = i;
      const bool number = std::isdigit(static_cast<unsigned char>(c));
      while (j < n && (detail::word_char(text[j]) ||
                       (number && text[j] == '.' && j + 1 < n && std::isdigit(static_cast<unsigned char>(text[j + 1]))))) {
        ++j;
      }
      out.emplace_back(text.substr(i, j - i));
      i = j;
      continue;
    }
    if (c == '"') {
      std::size_t j = i + 1;
      while (j < n && text[j] != '"' && text[j] != '\n') j += text[j] == '\\' && j + 1 < n && text[j + 1] != '\n' ? 2 : 1;
      if (j < n && text[j] == '"') {
        out.emplace_back(text.substr(i, j + 1 - i));
        i = j + 1;
        continue;
      }
    }
    if (c == '\'') {
      // Only short quoted runs are char literals; apostrophes in prose are punctuation.
      const std::size_t close = text[i + 1 < n ? i + 1 : i] == '\\' ? i + 3 : i + 2;
      if (close < n && text[close] == '\'' && text[i + 1] != '\'' && text.substr(i, close - i).find('\n') == std::string_view::npos) {
        out.emplace_back(text.substr(i, close + 1 - i));
        i = close + 1;
        continue;
      }
    }
    std::size_t len = 1;
    for (auto op : detail::kMultiCharOps) {
      if (text.substr(i, op.size()) == op) {
        len = op.size();
        break;
      }
    }
    out.emplace_back(text.substr(i, len));
    i += len;
  }
  return out;
}

inline constexpr int kPadId = 0;
inline constexpr int kUnkId = 1;
inline constexpr std::size_t kDefaultVocabCap = 100'000;

/// Dense token ids; 0 and 1 are always <pad> and <unk>.
class Vocabulary {
 public:
  Vocabulary() : tokens_{"<pad>", "<unk>"} { index(); }

  /// Keeps the most frequent tokens so that the total size, specials
  /// included, is at most `max_size`; ties go to the lexicographically
  /// smaller token.
  static Vocabulary build(const std::vector<std::vector<std::string>>& streams,
                          std::size_t max_size = kDefaultVocabCap) {
    std::map<std::string, std::size_t> counts;
    for (const auto& s : streams) {
      for (const auto& t : s) ++counts[t];
    }
    std::vector<std::pair<std::string, std::size_t>> ranked(counts.begin(), counts.end());
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
    Vocabulary v;
    for (const auto& [tok, _] : ranked) {
      if (v.tokens_.size() >= max_size) break;
      if (tok == "<pad>" || tok == "<unk>") continue;
      v.tokens_.push_back(tok);
    }
    v.index();
    return v;
  }

  std::size_t size() const { return tokens_.size(); }
  int id(const std::string& token) const {
    auto it = ids_.find(token);
    return it == ids_.end() ? kUnkId : it->second;
  }
  bool contains(const std::string& token) const { return ids_.contains(token); }
  const std::string& token(int id) const { return tokens_.at(static_cast<std::size_t>(id)); }
  const std::vector<std::string>& tokens() const { return tokens_; }

  bool operator==(const Vocabulary& o) const { return tokens_ == o.tokens_; }

  /// One token per line; the line number (from 0) is the id.
  void save(std::ostream& os) const {
    for (const auto& t : tokens_) os << t << '\n';
  }

  static Vocabulary load(std::istream& is) {
    Vocabulary v;
    v.tokens_.clear();
    std::string line;
    while (std::getline(is, line)) v.tokens_.push_back(line);
    if (v.tokens_.size() < 2 || v.tokens_[0] != "<pad>" || v.tokens_[1] != "<unk>") {
      throw Error("vocabulary file must start with <pad> and <unk>");
    }
    v.index();
    return v;
  }

 private:
  void index() {
    ids_.clear();
    for (std::size_t i = 0; i < tokens_.size(); ++i) ids_.emplace(tokens_[i], static_cast<int>(i));
  }

  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int> ids_;
};

/// Uncapped categorical id space for rule names; id 0 is reserved for
/// rules never seen in training.
class RuleIds {
 public:
  static RuleIds build(const std::vector<LabeledWarning>& corpus) {
    std::vector<std::string> names;
    for (const auto& e : corpus) names.push_back(e.warning.rule);
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    RuleIds r;
    for (auto& n : names) r.add(std::move(n));
    return r;
  }

  std::size_t size() const { return names_.size() + 1; }
  int id(const std::string& rule) const {
    auto it = ids_.find(rule);
    return it == ids_.end() ? 0 : it->second;
  }
  const std::vector<std::string>& names() const { return names_; }

  void save(std::ostream& os) const {
    for (const auto& n : names_) os << n << '\n';
  }
  static RuleIds load(std::istream& is) {
    RuleIds r;
    std::string line;
    while (std::getline(is, line)) {
      if (!line.empty()) r.add(line);
    }
    return r;
  }

 private:
  void add(std::string name) {
    ids_.emplace(name, static_cast<int>(names_.size() + 1));
    names_.push_back(std::move(name));
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, int> ids_;
};

inline constexpr std::size_t kRankTableSize = kMaxRank + 1;
inline constexpr std::size_t kConfidenceTableSize = kMaxConfidence + 1;

enum class Truncation { Head, Tail };

struct ChannelLengths {
  std::size_t function = 256;
  std::size_t field = 64;
  std::size_t slice = 256;
  std::size_t message = 32;
};

struct EncodedChannel {
  std::vector<int> ids;
  std::vector<std::uint8_t> mask;  // 1 for real tokens, 0 for padding

  std::size_t real_count() const { return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), 1)); }
};

struct AttributeIds {
  int rule = 0;
  int category = 0;
  int rank = 1;
  int confidence = 1;
};

struct EncodedSample {
  EncodedChannel function, field, slice, message;
  AttributeIds attrs;
  int label = 0;
};

/// All four token streams of one sample, in channel order.
inline std::array<std::vector<std::string>, 4> channel_tokens(const CodeContext& ctx, const WarningRecord& w) {
  auto nonempty = [](std::vector<std::string> t) {
    return t.empty() ? tokenize_code(kEmptyMarker) : t;
  };
  return {nonempty(tokenize_code(ctx.function_text)), nonempty(tokenize_code(ctx.field_text)),
          nonempty(tokenize_code(ctx.slice_text)), nonempty(tokenize_code(w.message))};
}

inline EncodedChannel encode_channel(const std::vector<std::string>& tokens, const Vocabulary& vocab,
                                     std::size_t length, Truncation trunc = Truncation::Head) {
  EncodedChannel ch;
  ch.ids.assign(length, kPadId);
  ch.mask.assign(length, 0);
  const std::size_t keep = std::min(length, tokens.size());
  const std::size_t first = trunc == Truncation::Head ? 0 : tokens.size() - keep;
  for (std::size_t k = 0; k < keep; ++k) {
    ch.ids[k] = vocab.id(tokens[first + k]);
    ch.mask[k] = 1;
  }
  return ch;
}

inline EncodedSample encode(const WarningRecord& w, Label label, const CodeContext& ctx, const Vocabulary& vocab,
                            const RuleIds& rules, const ChannelLengths& lengths = {},
                            Truncation trunc = Truncation::Head) {
  const auto toks = channel_tokens(ctx, w);
  EncodedSample s;
  s.function = encode_channel(toks[0], vocab, lengths.function, trunc);
  s.field = encode_channel(toks[1], vocab, lengths.field, trunc);
  s.slice = encode_channel(toks[2], vocab, lengths.slice, trunc);
  s.message = encode_channel(toks[3], vocab, lengths.message, trunc);
  s.attrs = {rules.id(w.rule), static_cast<int>(w.category), std::clamp(w.rank, kMinRank, kMaxRank),
             std::clamp(w.confidence, kMinConfidence, kMaxConfidence)};
  s.label = label == Label::Sensitive ? 1 : 0;
  return s;
}

}  // namespace warnsift
