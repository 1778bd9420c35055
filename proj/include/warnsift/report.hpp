#pragma once

// SpotBugs XML report ingestion and cross-version warning fingerprints.

#include <expat.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "warnsift/common.hpp"

namespace warnsift {

/// The closed set of SpotBugs rule categories.
enum class Category : std::uint8_t {
  BadPractice,
  Correctness,
  Experimental,
  I18n,
  MaliciousCode,
  MtCorrectness,
  Noise,
  Performance,
  Security,
  Style,
};

inline constexpr std::size_t kCategoryCount = 10;

inline constexpr std::array<std::string_view, kCategoryCount> kCategoryNames = {
    "BAD_PRACTICE", "CORRECTNESS", "EXPERIMENTAL", "I18N",     "MALICIOUS_CODE",
    "MT_CORRECTNESS", "NOISE",     "PERFORMANCE",  "SECURITY", "STYLE",
};

inline std::string_view to_string(Category c) { return kCategoryNames[static_cast<std::size_t>(c)]; }

inline std::optional<Category> parse_category(std::string_view name) {
  for (std::size_t i = 0; i < kCategoryNames.size(); ++i) {
    if (kCategoryNames[i] == name) return static_cast<Category>(i);
  }
  return std::nullopt;
}

/// NOISE ("bogus random noise") is a control category and is never used as
/// training or evaluation data.
inline bool is_excluded(Category c) { return c == Category::Noise; }

inline constexpr int kMinRank = 1;
inline constexpr int kMaxRank = 20;
inline constexpr int kMinConfidence = 1;
inline constexpr int kMaxConfidence = 3;

struct WarningRecord {
  std::string rule;
  Category category = Category::Correctness;
  int rank = kMaxRank;
  int confidence = kMaxConfidence;
  std::string message;
  std::string class_name;
  std::optional<std::string> method_name;
  std::string source_path;
  std::optional<int> line_start;
  std::optional<int> line_end;

  bool operator==(const WarningRecord&) const = default;
};

/// True iff `w` satisfies the record invariants (ranges, line ordering).
inline bool is_valid(const WarningRecord& w) {
  if (w.rank < kMinRank || w.rank > kMaxRank) return false;
  if (w.confidence < kMinConfidence || w.confidence > kMaxConfidence) return false;
  if (!w.line_start && w.line_end) return false;
  if (w.line_start && *w.line_start < 1) return false;
  if (w.line_start && w.line_end && *w.line_end < *w.line_start) return false;
  return true;
}

struct ParsedReport {
  std::vector<WarningRecord> records;
  /// One entry per rejected record or clamped value.
  std::vector<std::string> diagnostics;
};

namespace detail {

inline std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

class ReportBuilder {
 public:
  ParsedReport result;

  void start(std::string_view name, const XML_Char** attrs) {
    ++depth_;
    if (name == "BugInstance") {
      in_instance_ = true;
      instance_depth_ = depth_;
      attrs_.clear();
      class_name_.reset();
      class_path_.reset();
      method_name_.reset();
      line_attrs_.reset();
      long_message_.clear();
      short_message_.clear();
      text_target_ = nullptr;
      class_primary_ = method_primary_ = line_primary_ = false;
      parent_.clear();
      for (auto a = attrs; *a; a += 2) attrs_.emplace_back(a[0], a[1]);
      return;
    }
    if (!in_instance_) return;
    const int rel = depth_ - instance_depth_;
    const bool primary = attr(attrs, "primary") == "true";
    if (name == "Class" && rel == 1) {
      if (!class_name_ || (primary && !class_primary_)) {
        class_name_ = std::string(attr(attrs, "classname"));
        class_primary_ = primary;
      }
    } else if (name == "Method" && rel == 1) {
      if (!method_name_ || (primary && !method_primary_)) {
        method_name_ = std::string(attr(attrs, "name"));
        method_primary_ = primary;
      }
    } else if (name == "SourceLine" && rel == 2 && parent_ == "Class") {
      if (!class_path_) class_path_ = std::string(attr(attrs, "sourcepath"));
    } else if (name == "SourceLine" && rel == 1) {
      if (!line_attrs_ || (primary && !line_primary_)) {
        line_attrs_ = LineAttrs{std::string(attr(attrs, "start")), std::string(attr(attrs, "end")),
                                std::string(attr(attrs, "sourcepath"))};
        line_primary_ = primary;
      }
    } else if (name == "LongMessage" && rel == 1) {
      text_target_ = &long_message_;
    } else if (name == "ShortMessage" && rel == 1) {
      text_target_ = &short_message_;
    }
    if (rel == 1) parent_ = std::string(name);
  }

  void end(std::string_view name) {
    if (in_instance_ && depth_ == instance_depth_ && name == "BugInstance") {
      finish_instance();
      in_instance_ = false;
    } else if (in_instance_ && depth_ - instance_depth_ == 1) {
      text_target_ = nullptr;
      parent_.clear();
    }
    --depth_;
  }

  void text(std::string_view s) {
    if (text_target_) text_target_->append(s);
  }

 private:
  struct LineAttrs {
    std::string start, end, path;
  };

  static std::string_view attr(const XML_Char** attrs, std::string_view key) {
    for (auto a = attrs; *a; a += 2) {
      if (key == a[0]) return a[1];
    }
    return {};
  }

  std::string_view instance_attr(std::string_view key) const {
    for (const auto& [k, v] : attrs_) {
      if (k == key) return v;
    }
    return {};
  }

  void reject(std::size_t index, const std::string& why) {
    result.diagnostics.push_back("BugInstance #" + std::to_string(index) + " rejected: " + why);
  }

  std::optional<int> clamped(std::size_t index, std::string_view field, std::string_view raw, int lo,
                             int hi) {
    auto v = parse_int(raw);
    if (!v) {
      reject(index, "non-integer " + std::string(field) + " '" + std::string(raw) + "'");
      return std::nullopt;
    }
    if (*v < lo || *v > hi) {
      int c = std::clamp(*v, lo, hi);
      result.diagnostics.push_back("BugInstance #" + std::to_string(index) + ": " + std::string(field) +
                                   " " + std::to_string(*v) + " clamped to " + std::to_string(c));
      return c;
    }
    return v;
  }

  void finish_instance() {
    const std::size_t index = instance_count_++;
    WarningRecord w;
    w.rule = std::string(instance_attr("type"));
    if (w.rule.empty()) return reject(index, "missing type attribute");
    auto cat = parse_category(instance_attr("category"));
    if (!cat) return reject(index, "unknown category '" + std::string(instance_attr("category")) + "'");
    w.category = *cat;
    auto rank = clamped(index, "rank", instance_attr("rank"), kMinRank, kMaxRank);
    if (!rank) return;
    auto conf = clamped(index, "priority", instance_attr("priority"), kMinConfidence, kMaxConfidence);
    if (!conf) return;
    w.rank = *rank;
    w.confidence = *conf;
    w.message = !long_message_.empty() ? long_message_ : short_message_;
    w.class_name = class_name_.value_or("");
    if (method_name_ && !method_name_->empty()) w.method_name = method_name_;
    if (line_attrs_) {
      w.source_path = line_attrs_->path;
      auto s = parse_int(line_attrs_->start);
      auto e = parse_int(line_attrs_->end);
      // SpotBugs writes -1 or omits the attribute when no line is known.
      if (s && *s >= 1) {
        w.line_start = s;
        if (e && *e >= 1) w.line_end = e;
      }
    }
    if (w.source_path.empty() && class_path_) w.source_path = *class_path_;
    if (!is_valid(w)) return reject(index, "line_end precedes line_start");
    result.records.push_back(std::move(w));
  }

  int depth_ = 0;
  bool in_instance_ = false;
  int instance_depth_ = 0;
  std::size_t instance_count_ = 0;
  std::vector<std::pair<std::string, std::string>> attrs_;
  std::optional<std::string> class_name_, class_path_, method_name_;
  bool class_primary_ = false, method_primary_ = false, line_primary_ = false;
  std::optional<LineAttrs> line_attrs_;
  std::string long_message_, short_message_, parent_;
  std::string* text_target_ = nullptr;
};

}  // namespace detail

/// Parses a SpotBugs XML report. Records come back in document order; records
/// with an unknown category or unusable attributes are dropped and described
/// in `diagnostics`. Throws ParseError (byte offset) on malformed XML.
inline ParsedReport parse_report(std::string_view bytes) {
  std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)> parser(
      XML_ParserCreate("UTF-8"), &XML_ParserFree);
  if (!parser) throw Error("could not allocate XML parser");
  detail::ReportBuilder builder;
  XML_SetUserData(parser.get(), &builder);
  XML_SetElementHandler(
      parser.get(),
      [](void* ud, const XML_Char* name, const XML_Char** attrs) {
        static_cast<detail::ReportBuilder*>(ud)->start(name, attrs);
      },
      [](void* ud, const XML_Char* name) { static_cast<detail::ReportBuilder*>(ud)->end(name); });
  XML_SetCharacterDataHandler(parser.get(), [](void* ud, const XML_Char* s, int len) {
    static_cast<detail::ReportBuilder*>(ud)->text(std::string_view(s, static_cast<std::size_t>(len)));
  });
  if (XML_Parse(parser.get(), bytes.data(), static_cast<int>(bytes.size()), XML_TRUE) == XML_STATUS_ERROR) {
    auto offset = XML_GetCurrentByteIndex(parser.get());
    throw ParseError(std::string("malformed report: ") + XML_ErrorString(XML_GetErrorCode(parser.get())),
                     static_cast<std::size_t>(offset < 0 ? 0 : offset), ParseError::Position::ByteOffset);
  }
  return std::move(builder.result);
}

namespace detail {

inline std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

/// Writes records in the subset of the SpotBugs layout that parse_report reads.
inline std::string write_report(const std::vector<WarningRecord>& records) {
  using detail::xml_escape;
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<BugCollection version=\"4.7.3\">\n";
  for (const auto& w : records) {
    out += "  <BugInstance type=\"" + xml_escape(w.rule) + "\" priority=\"" + std::to_string(w.confidence) +
           "\" rank=\"" + std::to_string(w.rank) + "\" category=\"" + std::string(to_string(w.category)) +
           "\">\n";
    out += "    <LongMessage>" + xml_escape(w.message) + "</LongMessage>\n";
    out += "    <Class classname=\"" + xml_escape(w.class_name) + "\" primary=\"true\"/>\n";
    if (w.method_name) {
      out += "    <Method classname=\"" + xml_escape(w.class_name) + "\" name=\"" + xml_escape(*w.method_name) +
             "\" primary=\"true\"/>\n";
    }
    out += "    <SourceLine classname=\"" + xml_escape(w.class_name) + "\"";
    if (w.line_start) out += " start=\"" + std::to_string(*w.line_start) + "\"";
    if (w.line_end) out += " end=\"" + std::to_string(*w.line_end) + "\"";
    out += " sourcepath=\"" + xml_escape(w.source_path) + "\" primary=\"true\"/>\n";
    out += "  </BugInstance>\n";
  }
  out += "</BugCollection>\n";
  return out;
}

/// Line-insensitive identity of a warning, used to match the same logical
/// warning across two versions of a program.
struct WarningFingerprint {
  std::string rule;
  std::string source_path;
  std::optional<std::string> method_name;
  std::string normalized_message;

  auto operator<=>(const WarningFingerprint&) const = default;
  bool operator==(const WarningFingerprint&) const = default;
};

/// Replaces every maximal run of ASCII digits with '#'.
inline std::string normalize_digits(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool in_run = false;
  for (char c : text) {
    const bool digit = c >= '0' && c <= '9';
    if (digit && !in_run) out += '#';
    if (!digit) out += c;
    in_run = digit;
  }
  return out;
}

inline WarningFingerprint fingerprint(const WarningRecord& w) {
  return {w.rule, w.source_path, w.method_name, normalize_digits(w.message)};
}

}  // namespace warnsift

template <>
struct std::hash<warnsift::WarningFingerprint> {
  std::size_t operator()(const warnsift::WarningFingerprint& f) const noexcept {
    std::size_t h = std::hash<std::string>{}(f.rule);
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    mix(std::hash<std::string>{}(f.source_path));
    mix(f.method_name ? std::hash<std::string>{}(*f.method_name) : 0x51ed27u);
    mix(std::hash<std::string>{}(f.normalized_message));
    return h;
  }
};
