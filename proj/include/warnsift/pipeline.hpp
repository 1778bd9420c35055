#pragma once

// End-to-end plumbing shared by the command-line tool: commit-pair manifests,
// source lookup with fallback, encoding, model artifacts and report filtering.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "warnsift/checkpoint.hpp"
#include "warnsift/context.hpp"
#include "warnsift/dataset.hpp"
#include "warnsift/model.hpp"
#include "warnsift/report.hpp"
#include "warnsift/text.hpp"
#include "warnsift/train.hpp"

namespace warnsift {

namespace fs = std::filesystem;

inline std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot open " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const fs::path& p, const std::string& bytes) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error("cannot write " + p.string());
  out << bytes;
}

// ---------------------------------------------------------------------------
// Commit-pair manifests

/// One manifest entry. Paths are resolved against the manifest's directory.
struct PairSource {
  CommitPair pair;
  fs::path buggy_report, fixed_report, buggy_src;
  int parents = 1;
};

/// {"pairs": [{repo_id, fixed_commit, buggy_commit, commit_message,
///   changed_files, buggy_report, fixed_report, buggy_src, parents?}]}
inline std::vector<PairSource> read_manifest(const fs::path& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& ex) {
    throw Error("manifest " + path.string() + ": " + ex.what());
  }
  const auto base = path.parent_path();
  std::vector<PairSource> out;
  try {
    for (const auto& e : j.at("pairs")) {
      PairSource p;
      p.pair.repo_id = e.at("repo_id").get<std::string>();
      p.pair.fixed_commit = e.at("fixed_commit").get<std::string>();
      p.pair.buggy_commit = e.at("buggy_commit").get<std::string>();
      p.pair.commit_message = e.at("commit_message").get<std::string>();
      for (const auto& f : e.at("changed_files")) p.pair.changed_files.insert(f.get<std::string>());
      p.buggy_report = base / e.at("buggy_report").get<std::string>();
      p.fixed_report = base / e.at("fixed_report").get<std::string>();
      p.buggy_src = base / e.at("buggy_src").get<std::string>();
      p.parents = e.value("parents", 1);
      out.push_back(std::move(p));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error("manifest " + path.string() + ": " + ex.what());
  }
  return out;
}

struct BuildSummary {
  std::size_t pairs = 0;
  std::size_t bugfix_pairs = 0;
  std::size_t skipped_merges = 0;
  std::size_t labeled = 0;  // before promotion and dedup
  std::vector<LabeledWarning> corpus;
  Splits splits;
  std::vector<std::string> diagnostics;
};

/// Where a corpus entry's buggy-version source is copied to.
inline fs::path corpus_source_path(const fs::path& sources_root, const LabeledWarning& e) {
  return sources_root / e.provenance.repo_id / e.provenance.commit / e.warning.source_path;
}

/// Path stem shared by the split files: corpus.jsonl -> corpus
inline fs::path split_path(const fs::path& corpus, const std::string& which) {
  auto p = corpus;
  return p.replace_extension().string() + "." + which + ".jsonl";
}

/// Labels every bug-fixing pair, promotes, dedups and splits. Writes the
/// corpus, its three splits, and copies of the referenced buggy sources under
/// `<out dir>/sources/<repo_id>/<commit>/`.
inline BuildSummary build_dataset(const fs::path& manifest, const fs::path& out, std::uint64_t seed) {
  BuildSummary s;
  const auto pairs = read_manifest(manifest);
  s.pairs = pairs.size();
  std::vector<LabeledWarning> labeled;
  std::map<Provenance, fs::path> src_dirs;
  for (const auto& p : pairs) {
    if (p.parents != 1) {
      ++s.skipped_merges;
      continue;
    }
    if (!is_bugfix_commit(p.pair.commit_message)) continue;
    ++s.bugfix_pairs;
    const auto buggy = parse_report(read_file(p.buggy_report));
    const auto fixed = parse_report(read_file(p.fixed_report));
    for (const auto* r : {&buggy, &fixed}) {
      for (const auto& d : r->diagnostics) s.diagnostics.push_back(p.pair.repo_id + ": " + d);
    }
    const Provenance prov{p.pair.repo_id, p.pair.buggy_commit};
    src_dirs[prov] = p.buggy_src;
    auto part = label_warnings(buggy.records, fixed.records, p.pair.changed_files, prov);
    labeled.insert(labeled.end(), part.begin(), part.end());
  }
  s.labeled = labeled.size();
  s.corpus = dedup(promote_labels(std::move(labeled)));
  s.splits = split(s.corpus, seed);

  std::ostringstream all, tr, va, te;
  write_corpus(all, s.corpus);
  write_corpus(tr, s.splits.train);
  write_corpus(va, s.splits.validation);
  write_corpus(te, s.splits.test);
  write_file(out, all.str());
  write_file(split_path(out, "train"), tr.str());
  write_file(split_path(out, "valid"), va.str());
  write_file(split_path(out, "test"), te.str());

  const auto sources_root = out.parent_path() / "sources";
  for (const auto& e : s.corpus) {
    const auto from = src_dirs.at(e.provenance) / e.warning.source_path;
    const auto to = corpus_source_path(sources_root, e);
    if (fs::exists(to)) continue;
    if (!fs::exists(from)) {
      s.diagnostics.push_back("missing source " + from.string());
      continue;
    }
    fs::create_directories(to.parent_path());
    fs::copy_file(from, to);
  }
  return s;
}

inline std::vector<LabeledWarning> load_corpus(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus " + path.string());
  return read_corpus(in);
}

// ---------------------------------------------------------------------------
// Source lookup

struct ResolvedContext {
  CodeContext context;
  bool fallback = false;  // source missing or outside the supported subset
};

/// Parses each source file once.
class SourceCache {
 public:
  ResolvedContext context_for(const fs::path& file, const WarningRecord& w) {
    auto& entry = entries_[file.string()];
    if (!entry.loaded) {
      entry.loaded = true;
      if (fs::is_regular_file(file)) {
        entry.raw = read_file(file);
        try {
          entry.unit = std::make_shared<java::SourceUnit>(java::parse_java_subset(entry.raw));
        } catch (const Error&) {
          entry.unit.reset();
        }
      }
    }
    if (entry.unit) {
      try {
        return {build_context(*entry.unit, w), false};
      } catch (const Error&) {
        // Lowering rejected the method; fall through to the raw text.
      }
    }
    return {fallback_context(entry.raw), true};
  }

 private:
  struct Entry {
    bool loaded = false;
    std::string raw;
    std::shared_ptr<java::SourceUnit> unit;
  };
  std::map<std::string, Entry> entries_;
};

struct PreparedSample {
  LabeledWarning entry;
  CodeContext context;
  bool fallback = false;
};

/// Contexts for corpus entries whose sources sit under
/// `<sources_root>/<repo_id>/<commit>/`.
inline std::vector<PreparedSample> prepare(const std::vector<LabeledWarning>& corpus, const fs::path& sources_root,
                                           SourceCache& cache) {
  std::vector<PreparedSample> out;
  out.reserve(corpus.size());
  for (const auto& e : corpus) {
    auto r = cache.context_for(corpus_source_path(sources_root, e), e.warning);
    out.push_back({e, std::move(r.context), r.fallback});
  }
  return out;
}

/// Vocabulary over all four channels of the given (training) samples.
inline Vocabulary build_vocab(const std::vector<PreparedSample>& samples, std::size_t cap) {
  std::vector<std::vector<std::string>> streams;
  for (const auto& s : samples) {
    for (auto& t : channel_tokens(s.context, s.entry.warning)) streams.push_back(std::move(t));
  }
  return Vocabulary::build(streams, cap);
}

inline std::vector<EncodedSample> encode_all(const std::vector<PreparedSample>& samples, const Vocabulary& vocab,
                                             const RuleIds& rules, const ModelConfig& cfg) {
  std::vector<EncodedSample> out;
  out.reserve(samples.size());
  for (const auto& s : samples) {
    out.push_back(encode(s.entry.warning, s.entry.label, s.context, vocab, rules, cfg.lengths, cfg.truncation));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Model artifacts: the checkpoint plus its token and rule tables alongside.

struct TrainedModel {
  ModelConfig config;
  ModelParams params;
  Vocabulary vocab;
  RuleIds rules;
};

inline fs::path vocab_path(const fs::path& ckpt) { return ckpt.string() + ".vocab"; }
inline fs::path rules_path(const fs::path& ckpt) { return ckpt.string() + ".rules"; }

inline void save_model(const fs::path& ckpt, const TrainedModel& m) {
  if (ckpt.has_parent_path()) fs::create_directories(ckpt.parent_path());
  save_checkpoint(ckpt.string(), m.config, m.params);
  std::ostringstream v, r;
  m.vocab.save(v);
  m.rules.save(r);
  write_file(vocab_path(ckpt), v.str());
  write_file(rules_path(ckpt), r.str());
}

inline TrainedModel load_model(const fs::path& ckpt) {
  auto ck = load_checkpoint(ckpt.string());
  std::istringstream v(read_file(vocab_path(ckpt))), r(read_file(rules_path(ckpt)));
  TrainedModel m{ck.config, std::move(ck.params), Vocabulary::load(v), RuleIds::load(r)};
  if (m.vocab.size() != m.params.embed[0].rows) throw Error("vocabulary size does not match the checkpoint");
  if (m.rules.size() != m.params.attr_embed[0].rows) throw Error("rule table does not match the checkpoint");
  return m;
}

/// Builds the vocabulary and rule table from the training split, initializes
/// from the config seed and trains.
inline std::pair<TrainedModel, TrainResult> fit(const std::vector<PreparedSample>& train_samples,
                                                const std::vector<PreparedSample>& valid_samples,
                                                const ModelConfig& cfg, const TrainOptions& opt = {}) {
  cfg.validate();
  TrainedModel m;
  m.config = cfg;
  m.vocab = build_vocab(train_samples, cfg.vocab_size);
  std::vector<LabeledWarning> entries;
  for (const auto& s : train_samples) entries.push_back(s.entry);
  m.rules = RuleIds::build(entries);
  const auto tr = encode_all(train_samples, m.vocab, m.rules, cfg);
  const auto va = encode_all(valid_samples, m.vocab, m.rules, cfg);
  std::mt19937_64 rng(cfg.seed);
  ModelShape shape{m.vocab.size(), m.rules.size(), cfg.embed_dim, cfg.hidden_dim, cfg.attr_dim};
  auto res = train(tr, va, cfg, ModelParams::init(shape, rng), opt);
  m.params = res.params;
  return {std::move(m), std::move(res)};
}

// ---------------------------------------------------------------------------
// Filtering

struct ScoredWarning {
  WarningRecord warning;
  double score = 0.0;
  bool fallback = false;
};

/// Scores every warning; keeps those with score > δ, highest first (ties in
/// report order). Sources are looked up as `<sources_root>/<source_path>`.
inline std::vector<ScoredWarning> filter_report(const std::vector<WarningRecord>& report, const TrainedModel& model,
                                                const fs::path& sources_root, double delta) {
  if (!(delta > 0 && delta < 1)) throw Error("threshold must lie in (0,1)");
  SourceCache cache;
  std::vector<ScoredWarning> kept;
  for (const auto& w : report) {
    auto r = cache.context_for(sources_root / w.source_path, w);
    const auto enc = encode(w, Label::Insensitive, r.context, model.vocab, model.rules, model.config.lengths,
                            model.config.truncation);
    const double L = score(model.params, enc);
    if (predict(L, delta)) kept.push_back({w, L, r.fallback});
  }
  std::stable_sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) { return a.score > b.score; });
  return kept;
}

inline nlohmann::ordered_json to_json(const ScoredWarning& s) {
  LabeledWarning tmp{s.warning, Label::Insensitive, {}};
  auto j = to_json(tmp);
  for (const char* k : {"label", "repo_id", "commit"}) j.erase(k);
  j["score"] = s.score;
  j["fallback"] = s.fallback;
  return j;
}

}  // namespace warnsift
