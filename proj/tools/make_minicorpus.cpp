// Generates the bundled mini-corpus: synthetic repositories of small Java
// classes, SpotBugs-style reports for the buggy and fixed version of each
// commit pair, and a commit-pair manifest. One pair reuses the HTTP sender
// fixture from tests/fixtures.
//
//   make_minicorpus <fixtures dir> <output dir>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "warnsift/pipeline.hpp"

namespace fs = std::filesystem;
using namespace warnsift;

namespace {

std::mt19937_64 rng(20240417);

std::size_t pick(std::size_t n) { return static_cast<std::size_t>(rng() % n); }

template <class T>
const T& pick(const std::vector<T>& v) {
  return v[pick(v.size())];
}

const std::vector<std::string> kWords = {"value", "entry", "token", "item",   "record", "buffer", "payload",
                                         "result", "count", "index", "offset", "limit",  "total",  "name",
                                         "path",   "key",   "label", "text",   "chunk",  "header", "suffix"};
const std::vector<std::string> kNouns = {"Order", "Session", "Cache",  "Config", "Report", "Index",
                                         "Upload", "Query",  "Route",  "Metric", "Ledger", "Token",
                                         "Invoice", "Bundle", "Schema", "Stream", "Quota",  "Mailbox"};
const std::vector<std::string> kRoles = {"Service", "Manager", "Handler", "Store", "Parser", "Builder", "Client",
                                         "Util"};
const std::vector<std::string> kVerbs = {"load", "resolve", "compute", "render", "scan", "merge", "check", "apply",
                                         "format", "update", "collect", "measure"};

std::string cap(std::string s) {
  s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

/// Emits Java text line by line so warnings can name their lines.
struct Writer {
  std::vector<std::string> lines;
  int add(const std::string& l) {
    lines.push_back(l);
    return static_cast<int>(lines.size());
  }
  std::string text() const {
    std::string s;
    for (const auto& l : lines) s += l + "\n";
    return s;
  }
};

struct PlannedWarning {
  WarningRecord record;
  bool bug = false;  // removed by the fixing commit
};

/// A method shape with the warning it draws.
enum class Shape {
  NullDeref,       // bug
  IgnoredResult,   // bug
  IntDivision,     // bug
  GuardedDeref,    // same rule as NullDeref, never fixed
  CheckedResult,   // same rule as IgnoredResult, never fixed
  DefaultEncoding,
  DeadStore,
  NumberCtor,
  StringConcatLoop,
  UnreadField,
};

bool is_bug_shape(Shape s) { return s == Shape::NullDeref || s == Shape::IgnoredResult || s == Shape::IntDivision; }

class ClassGen {
 public:
  ClassGen(std::string pkg, std::string cls) : pkg_(std::move(pkg)), cls_(std::move(cls)) {}

  std::string source_path() const {
    std::string p = pkg_;
    for (auto& c : p) {
      if (c == '.') c = '/';
    }
    return p + "/" + cls_ + ".java";
  }
  std::string qualified() const { return pkg_ + "." + cls_; }

  /// Builds the class text with one method per shape.
  std::string build(const std::vector<Shape>& shapes, std::vector<PlannedWarning>& out) {
    w_.add("package " + pkg_ + ";");
    w_.add("");
    w_.add("import java.util.Map;");
    w_.add("");
    w_.add("public class " + cls_ + " {");
    w_.add("    private Map<String, String> cache;");
    const int field_line = w_.add("    private int " + field_ + ";");
    w_.add("    private static final int LIMIT = " + std::to_string(8 + pick(120)) + ";");
    w_.add("");
    for (auto s : shapes) {
      emit(s, field_line, out);
      w_.add("");
    }
    w_.add("    private String lookup(String key) {");
    w_.add("        return cache.get(key);");
    w_.add("    }");
    w_.add("}");
    return w_.text();
  }

 private:
  std::string fresh_method() {
    for (;;) {
      std::string m = pick(kVerbs) + cap(pick(kWords));
      if (used_.insert(m).second) return m;
    }
  }

  void warn(std::vector<PlannedWarning>& out, Shape s, const std::string& rule, Category cat, int rank, int conf,
            const std::string& msg, const std::string& method, int line) {
    PlannedWarning p;
    auto& r = p.record;
    r.rule = rule;
    r.category = cat;
    r.rank = rank;
    r.confidence = conf;
    r.message = msg;
    r.class_name = qualified();
    r.method_name = method;
    r.source_path = source_path();
    r.line_start = line;
    r.line_end = line;
    p.bug = is_bug_shape(s);
    out.push_back(std::move(p));
  }

  void emit(Shape s, int field_line, std::vector<PlannedWarning>& out) {
    const std::string m = fresh_method();
    const std::string v = pick(kWords), a = pick(kWords) + "A", b = pick(kWords) + "B";
    const std::string where = cls_ + "." + m;
    switch (s) {
      case Shape::NullDeref: {
        w_.add("    public int " + m + "(String " + a + ") {");
        w_.add("        String " + v + " = lookup(" + a + ");");
        const int l = w_.add("        return " + v + ".length();");
        w_.add("    }");
        warn(out, s, "NP_NULL_ON_SOME_PATH_FROM_RETURN_VALUE", Category::Correctness, 8 + static_cast<int>(pick(3)), 2,
             "Possible null pointer dereference in " + where + "(String) due to return value of called method", m, l);
        break;
      }
      case Shape::GuardedDeref: {
        w_.add("    public int " + m + "(String " + a + ") {");
        w_.add("        String " + v + " = lookup(" + a + ");");
        w_.add("        if (" + v + " == null) {");
        w_.add("            return -1;");
        w_.add("        }");
        const int l = w_.add("        return " + v + ".length() + LIMIT;");
        w_.add("    }");
        warn(out, s, "NP_NULL_ON_SOME_PATH_FROM_RETURN_VALUE", Category::Correctness, 10 + static_cast<int>(pick(4)), 3,
             "Possible null pointer dereference in " + where + "(String) due to return value of called method", m, l);
        break;
      }
      case Shape::IgnoredResult: {
        w_.add("    public String " + m + "(String " + a + ") {");
        const int l = w_.add("        " + a + ".trim();");
        w_.add("        return " + a + ";");
        w_.add("    }");
        warn(out, s, "RV_RETURN_VALUE_IGNORED", Category::Correctness, 9 + static_cast<int>(pick(3)), 2,
             "Return value of String.trim() ignored in " + where + "(String)", m, l);
        break;
      }
      case Shape::CheckedResult: {
        w_.add("    public String " + m + "(String " + a + ") {");
        w_.add("        String " + v + " = " + a + ".toLowerCase();");
        const int l = w_.add("        " + v + ".isEmpty();");
        w_.add("        return " + v + ";");
        w_.add("    }");
        warn(out, s, "RV_RETURN_VALUE_IGNORED", Category::Correctness, 13 + static_cast<int>(pick(4)), 3,
             "Return value of String.isEmpty() ignored in " + where + "(String)", m, l);
        break;
      }
      case Shape::IntDivision: {
        w_.add("    public double " + m + "(int " + a + ", int " + b + ") {");
        const int l = w_.add("        double " + v + " = " + a + " / " + b + ";");
        w_.add("        return " + v + ";");
        w_.add("    }");
        warn(out, s, "ICAST_IDIV_CAST_TO_DOUBLE", Category::Style, 14 + static_cast<int>(pick(3)), 2,
             "Integral division result cast to double or float in " + where + "(int, int)", m, l);
        break;
      }
      case Shape::DefaultEncoding: {
        w_.add("    public int " + m + "(String " + a + ") {");
        const int l = w_.add("        return " + a + ".getBytes().length;");
        w_.add("    }");
        warn(out, s, "DM_DEFAULT_ENCODING", Category::I18n, 19, 1,
             "Found reliance on default encoding in " + where + "(String): String.getBytes()", m, l);
        break;
      }
      case Shape::DeadStore: {
        w_.add("    public int " + m + "(int " + a + ") {");
        const int l = w_.add("        int " + v + " = " + a + " * " + std::to_string(2 + pick(7)) + ";");
        w_.add("        return " + a + " + 1;");
        w_.add("    }");
        warn(out, s, "DLS_DEAD_LOCAL_STORE", Category::Style, 15 + static_cast<int>(pick(3)), 2,
             "Dead store to " + v + " in " + where + "(int)", m, l);
        break;
      }
      case Shape::NumberCtor: {
        w_.add("    public Integer " + m + "(int " + a + ") {");
        const int l = w_.add("        Integer " + v + " = new Integer(" + a + ");");
        w_.add("        return " + v + ";");
        w_.add("    }");
        warn(out, s, "DM_NUMBER_CTOR", Category::Performance, 18, 2,
             where + "(int) invokes inefficient new Integer(int) constructor; use Integer.valueOf(int) instead", m, l);
        break;
      }
      case Shape::StringConcatLoop: {
        w_.add("    public String " + m + "(int " + a + ") {");
        w_.add("        String " + v + " = \"\";");
        w_.add("        int i = 0;");
        w_.add("        while (i < " + a + ") {");
        const int l = w_.add("            " + v + " = " + v + " + i;");
        w_.add("            i = i + 1;");
        w_.add("        }");
        w_.add("        return " + v + ";");
        w_.add("    }");
        warn(out, s, "SBSC_USE_STRINGBUFFER_CONCATENATION", Category::Performance, 18, 2,
             where + "(int) concatenates strings using + in a loop", m, l);
        break;
      }
      case Shape::UnreadField: {
        w_.add("    public void " + m + "(int " + a + ") {");
        w_.add("        this." + field_ + " = " + a + ";");
        w_.add("    }");
        warn(out, s, "URF_UNREAD_FIELD", Category::Performance, 18, 2,
             "Unread field: " + qualified() + "." + field_, m, field_line);
        break;
      }
    }
  }

  std::string pkg_, cls_;
  std::string field_ = pick(kWords) + "Hint";
  std::set<std::string> used_{"lookup"};
  Writer w_;
};

const std::vector<std::string> kBugMessages = {
    "Fix null pointer bug when the cache misses",
    "fix: ignored return value caused a trimming bug",
    "Hotfix for division error in rate computation",
    "Fix issue #{n}: wrong result on empty input",
    "bugfix: resource leak in stream handling",
    "Fix defect in boundary check",
    "fixes null pointer dereference reported by users",
    "Fix fault in quota computation",
};
const std::vector<std::string> kOtherMessages = {
    "Refactor helper methods", "Update copyright headers", "fix-up formatting", "Add logging to the request path",
    "Improve error messages",
};

std::string hex_commit(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(12, '0');
  for (int i = 11; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[v & 15];
    v >>= 4;
  }
  return s;
}

std::vector<Shape> noise_shapes(std::size_t n) {
  static const std::vector<Shape> pool = {Shape::DefaultEncoding, Shape::DeadStore,       Shape::NumberCtor,
                                          Shape::StringConcatLoop, Shape::UnreadField,    Shape::DefaultEncoding,
                                          Shape::DeadStore,        Shape::GuardedDeref,   Shape::CheckedResult};
  std::vector<Shape> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(pick(pool));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: make_minicorpus <fixtures dir> <output dir>\n";
    return 2;
  }
  const fs::path fixtures = argv[1], out = argv[2];
  nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
  std::set<std::string> class_names;
  std::uint64_t commit_counter = 0x5eed00;

  auto add_pair = [&](const std::string& repo, const std::string& message, const std::vector<ClassGen*>& gens,
                      const std::vector<std::vector<Shape>>& shapes, int parents) {
    const std::string buggy = hex_commit(++commit_counter * 2654435761ULL);
    const std::string fixed = hex_commit(++commit_counter * 2654435761ULL);
    const fs::path base = fs::path("repos") / repo / buggy;
    std::vector<WarningRecord> buggy_report, fixed_report;
    nlohmann::ordered_json changed = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::vector<PlannedWarning> planned;
      const auto text = gens[i]->build(shapes[i], planned);
      write_file(out / base / "src" / gens[i]->source_path(), text);
      changed.push_back(gens[i]->source_path());
      for (auto& p : planned) {
        buggy_report.push_back(p.record);
        if (!p.bug) fixed_report.push_back(p.record);
      }
    }
    write_file(out / base / "spotbugs.xml", write_report(buggy_report));
    write_file(out / "repos" / repo / fixed / "spotbugs.xml", write_report(fixed_report));
    pairs.push_back({{"repo_id", repo},
                     {"fixed_commit", fixed},
                     {"buggy_commit", buggy},
                     {"commit_message", message},
                     {"changed_files", changed},
                     {"buggy_report", (base / "spotbugs.xml").string()},
                     {"fixed_report", (fs::path("repos") / repo / fixed / "spotbugs.xml").string()},
                     {"buggy_src", (base / "src").string()},
                     {"parents", parents}});
  };

  auto fresh_class = [&]() {
    for (;;) {
      std::string c = pick(kNouns) + pick(kRoles);
      if (class_names.insert(c).second) return c;
      c += std::to_string(class_names.size());
      if (class_names.insert(c).second) return c;
    }
  };

  const std::vector<Shape> bugs = {Shape::NullDeref, Shape::IgnoredResult, Shape::IntDivision};
  for (int r = 0; r < 8; ++r) {
    const std::string repo = "acme-" + cap(pick(kNouns)) + "-" + std::to_string(r);
    const std::string pkg = "com.acme." + pick(kNouns) + std::to_string(r);
    for (int k = 0; k < 6; ++k) {
      // Two of every six pairs are not bug fixes and never reach the corpus.
      const bool bugfix = k % 3 != 2;
      const std::size_t files = 1 + pick(2);
      std::vector<ClassGen> gens;
      for (std::size_t f = 0; f < files; ++f) {
        std::string p = pkg;
        for (auto& ch : p) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        gens.emplace_back(p, fresh_class());
      }
      std::vector<std::vector<Shape>> shapes(files);
      std::size_t total = 0;
      for (std::size_t f = 0; f < files; ++f) {
        shapes[f] = noise_shapes(files == 1 ? 8 + pick(3) : 4 + pick(3));
        total += shapes[f].size();
      }
      // One bug per pair, a second one now and then.
      const std::size_t nbugs = pick(5) == 0 ? 2 : 1;
      for (std::size_t i = 0; i < nbugs; ++i) {
        auto& target = shapes[pick(files)];
        target.insert(target.begin() + static_cast<std::ptrdiff_t>(pick(target.size() + 1)), pick(bugs));
      }
      (void)total;
      std::vector<ClassGen*> ptrs;
      for (auto& g : gens) ptrs.push_back(&g);
      std::string msg = bugfix ? pick(kBugMessages) : pick(kOtherMessages);
      if (auto at = msg.find("{n}"); at != std::string::npos) msg.replace(at, 3, std::to_string(100 + pick(900)));
      add_pair(repo, msg, ptrs, shapes, 1);
    }
  }

  // A merge commit with a bug-fixing message: skipped by the builder.
  {
    ClassGen g("com.acme.merge", fresh_class());
    add_pair("acme-merge", "Fix bug merged from release branch", {&g}, {{Shape::NullDeref, Shape::DeadStore}}, 2);
  }

  // The HTTP sender fixture: the getBytes() call at line 5 is fixed, the
  // reader at line 13 is not.
  {
    const std::string buggy = hex_commit(++commit_counter * 2654435761ULL);
    const std::string fixed = hex_commit(++commit_counter * 2654435761ULL);
    const fs::path base = fs::path("repos") / "dongtai-agent" / buggy;
    const std::string rel = "io/dongtai/HttpRequestSender.java";
    write_file(out / base / "src" / rel, read_file(fixtures / "src" / rel));
    const auto report = parse_report(read_file(fixtures / "HttpRequestSender.xml"));
    std::vector<WarningRecord> fixed_records;
    for (const auto& w : report.records) {
      if (w.line_start != 5) fixed_records.push_back(w);
    }
    write_file(out / base / "spotbugs.xml", write_report(report.records));
    write_file(out / "repos" / "dongtai-agent" / fixed / "spotbugs.xml", write_report(fixed_records));
    pairs.push_back({{"repo_id", "dongtai-agent"},
                     {"fixed_commit", fixed},
                     {"buggy_commit", buggy},
                     {"commit_message", "Fix encoding bug in request body length"},
                     {"changed_files", {rel}},
                     {"buggy_report", (base / "spotbugs.xml").string()},
                     {"fixed_report", (fs::path("repos") / "dongtai-agent" / fixed / "spotbugs.xml").string()},
                     {"buggy_src", (base / "src").string()},
                     {"parents", 1}});
  }

  // A report to filter: fresh classes plus the fixture, sources under filter/src.
  {
    std::vector<WarningRecord> records;
    for (int i = 0; i < 3; ++i) {
      ClassGen g("org.sample.app", fresh_class());
      std::vector<PlannedWarning> planned;
      auto shapes = noise_shapes(4);
      shapes.push_back(bugs[static_cast<std::size_t>(i)]);
      const auto text = g.build(shapes, planned);
      write_file(out / "filter" / "src" / g.source_path(), text);
      for (auto& p : planned) records.push_back(p.record);
    }
    const std::string rel = "io/dongtai/HttpRequestSender.java";
    write_file(out / "filter" / "src" / rel, read_file(fixtures / "src" / rel));
    for (const auto& w : parse_report(read_file(fixtures / "HttpRequestSender.xml")).records) records.push_back(w);
    write_file(out / "filter" / "report.xml", write_report(records));
  }

  write_file(out / "manifest.json", nlohmann::ordered_json{{"pairs", pairs}}.dump(2) + "\n");
  std::cout << "wrote " << pairs.size() << " commit pairs to " << out.string() << "\n";
  return 0;
}
