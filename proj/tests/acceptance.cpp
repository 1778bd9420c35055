// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <regex>

#include <nlohmann/json.hpp>

#include "warnsift/pipeline.hpp"
#include "ir_oracle.hpp"
#include "model_util.hpp"
#include "test_util.hpp"

using namespace warnsift;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string fmt(const char* f, double v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string q(const fs::path& p) { return "'" + p.string() + "'"; }

java::SourceUnit http_sender() {
  return java::parse_java_subset(test::read(test::fixture("src/io/dongtai/HttpRequestSender.java")));
}

// ---------------------------------------------------------------------------

Outcome gradient_oracle() {
  Outcome o;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(11);
  const auto shape = test::tiny_shape(50, 8);
  const auto p = ModelParams::init(shape, rng);
  std::vector<EncodedSample> batch;
  for (int k = 0; k < 4; ++k) batch.push_back(test::random_sample(rng, shape, 6));
  const double worst = test::worst_gradient_error(p, batch, 0.25, 2.0, 20, rng);
  const double took = seconds_since(t0);
  o.require(worst < 1e-4, "worst relative error " + fmt("%.3g", worst));
  o.require(took < 60, "took " + fmt("%.1f s", took));
  if (o.pass) o.detail = "worst relative error " + fmt("%.2e", worst) + " over 20 coordinates per tensor, " + fmt("%.1f s", took);
  return o;
}

Outcome attention_normalization() {
  Outcome o;
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 1000 && o.pass; ++trial) {
    const std::size_t n = 1 + rng() % 12, d = 1 + rng() % 8;
    const double scale = trial % 10 == 0 ? 200.0 : 3.0;
    std::vector<std::uint8_t> mask(n);
    for (auto& m : mask) m = rng() % 3 != 0;
    mask[rng() % n] = 1;
    const auto [ctx, w] = cross_attention(nn::uniform(1, d, scale, rng), nn::uniform(n, d, scale, rng), mask);
    double sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      o.require(w.data[i] >= 0, "negative weight");
      o.require(mask[i] || w.data[i] == 0, "weight on a masked position");
      sum += w.data[i];
    }
    o.require(std::abs(sum - 1) <= 1e-9, "weights sum to " + fmt("%.17g", sum));
    o.require(ctx.all_finite(), "non-finite context");
  }
  // all states equal: the context is that state
  for (int trial = 0; trial < 200 && o.pass; ++trial) {
    const std::size_t n = 1 + rng() % 12, d = 1 + rng() % 8;
    const auto h = nn::uniform(1, d, 5.0, rng);
    Tensor H(n, d);
    for (std::size_t i = 0; i < n; ++i) std::copy(h.data.begin(), h.data.end(), H.data.begin() + i * d);
    const auto [ctx, w] = cross_attention(nn::uniform(1, d, 5.0, rng), H, std::vector<std::uint8_t>(n, 1));
    o.require(ctx.data == h.data, "equal states do not return the shared state");
  }
  if (o.pass) o.detail = "1000 random cases, 200 equal-state cases";
  return o;
}

Outcome focal_reductions() {
  Outcome o;
  std::mt19937_64 rng(13);
  double worst = 0;
  for (int k = 0; k < 1000; ++k) {
    const double L = 1e-6 + (1 - 2e-6) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const int y = static_cast<int>(rng() % 2);
    const double bce = -(y * std::log(L) + (1 - y) * std::log(1 - L));
    worst = std::max(worst, std::abs(nn::focal_value(L, y, 0.5, 0.0) - 0.5 * bce));
  }
  o.require(worst <= 1e-12, "reduction differs by " + fmt("%.3g", worst));
  const double hand = nn::focal_value(0.9, 1, 0.25, 2.0);
  o.require(std::abs(hand - 2.6341e-4) <= 1e-8, "hand value " + fmt("%.6e", hand));
  if (o.pass) o.detail = "max deviation " + fmt("%.1e", worst) + "; hand value " + fmt("%.6e", hand);
  return o;
}

Outcome slicer_oracle() {
  Outcome o;
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 500 && o.pass; ++trial) {
    const auto f = test::random_function(rng);
    const auto g = build_pdg(f);
    std::set<int> lines;
    for (std::size_t k = 1 + rng() % 3; k > 0; --k) lines.insert(static_cast<int>(1 + rng() % 10));
    o.require(g.data_edges == test::oracle_data_edges(f), "data edges differ in trial " + std::to_string(trial));
    o.require(slice_indices(g, f, lines) == test::oracle_slice(g, f, lines),
              "slice differs in trial " + std::to_string(trial));
  }
  const auto u = http_sender();
  const auto f = lower_to_ir(u.methods[0], &u);
  const auto g = build_pdg(f);
  const auto slice = slice_indices(g, f, {5});
  o.require(slice == test::oracle_slice(g, f, {5}), "sender slice differs from the closure");
  std::size_t on_five = 0;
  for (auto i : slice) on_five += f.instructions[i].source_line == 5;
  o.require(on_five == 4, "sender slice holds " + std::to_string(on_five) + " line-5 instructions");
  if (o.pass) o.detail = "500 random functions; sender line 5 slice has " + std::to_string(slice.size()) + " instructions";
  return o;
}

Outcome lowering_fixture() {
  Outcome o;
  const auto u = http_sender();
  const auto f = lower_to_ir(u.methods[0], &u);
  std::vector<const IrInstruction*> five;
  for (const auto& i : f.instructions) {
    if (i.source_line == 5) five.push_back(&i);
  }
  o.require(five.size() == 4, "line 5 lowers to " + std::to_string(five.size()) + " instructions");
  if (!o.pass) return o;
  const std::vector<std::regex> shapes = {
      std::regex(R"(\$stack\d+ = virtualinvoke v\d+\.<getBytes>\(\))"),
      std::regex(R"(\$stack\d+ = lengthof \$stack\d+)"),
      std::regex(R"(\$stack\d+ = staticinvoke <Integer: toString>\(\$stack\d+\))"),
      std::regex(R"(virtualinvoke v\d+\.<setRequestProperty>\(.*\$stack\d+\))"),
  };
  for (std::size_t k = 0; k < 4; ++k) o.require(std::regex_match(five[k]->render, shapes[k]), "unexpected " + five[k]->render);
  for (std::size_t k = 0; k < 3 && o.pass; ++k) {
    o.require(five[k]->defs.size() == 1 && five[k + 1]->uses.contains(*five[k]->defs.begin()),
              "temporary chain broken at " + five[k]->render);
  }
  // the discipline on every Java fixture the subset parser accepts
  std::size_t methods = 0;
  for (const auto& root : {fs::path(WARNSIFT_FIXTURES), fs::path(WARNSIFT_DATA)}) {
    for (const auto& e : fs::recursive_directory_iterator(root)) {
      if (e.path().extension() != ".java") continue;
      java::SourceUnit unit;
      try {
        unit = java::parse_java_subset(test::read(e.path()));
      } catch (const ParseError&) {
        continue;
      }
      for (const auto& m : unit.methods) {
        const auto fn = lower_to_ir(m, &unit);
        const auto why = test::discipline_violation(m, fn);
        o.require(why.empty(), e.path().filename().string() + ": " + why);
        ++methods;
      }
    }
  }
  if (o.pass) o.detail = "getBytes, lengthof, toString, setRequestProperty; discipline holds on " + std::to_string(methods) + " methods";
  return o;
}

WarningRecord warn(const std::string& rule, const std::string& path, const std::string& msg, int line) {
  WarningRecord w;
  w.rule = rule;
  w.category = Category::Correctness;
  w.rank = 5;
  w.confidence = 1;
  w.message = msg;
  w.class_name = "C";
  w.method_name = "f";
  w.source_path = path;
  w.line_start = w.line_end = line;
  return w;
}

Outcome dataset_rules() {
  Outcome o;
  const auto np = warn("NP_NULL", "src/A.java", "null deref of x", 10);
  const auto enc = warn("DM_DEFAULT_ENCODING", "src/A.java", "encoding at 12", 12);
  const auto dls = warn("DLS", "src/B.java", "dead store", 4);
  const auto other = warn("SE", "src/Untouched.java", "serial", 1);
  auto enc_moved = enc;
  enc_moved.line_start = enc_moved.line_end = 14;
  enc_moved.message = "encoding at 14";

  // disappearance: np is fixed; enc survives a line shift; Untouched is outside the diff
  const auto p1 = label_warnings({np, enc, dls, other}, {enc_moved, dls, other}, {"src/A.java", "src/B.java"}, {"r", "c1"});
  const std::vector<LabeledWarning> want1 = {
      {np, Label::Sensitive, {"r", "c1"}}, {enc, Label::Insensitive, {"r", "c1"}}, {dls, Label::Insensitive, {"r", "c1"}}};
  o.require(p1 == want1, "disappearance labels differ");

  // promotion: dls is fixed in c3, so its c1 occurrence becomes sensitive
  const auto p3 = label_warnings({dls}, {}, {"src/B.java"}, {"r", "c3"});
  auto all = p1;
  all.insert(all.end(), p3.begin(), p3.end());
  const std::vector<LabeledWarning> want2 = {{np, Label::Sensitive, {"r", "c1"}},
                                             {enc, Label::Insensitive, {"r", "c1"}},
                                             {dls, Label::Sensitive, {"r", "c1"}},
                                             {dls, Label::Sensitive, {"r", "c3"}}};
  o.require(promote_labels(all) == want2, "promotion differs");

  // dedup: enc persists in c2 and c4 too; one insensitive copy remains
  const auto p2 = label_warnings({enc}, {enc}, {"src/A.java"}, {"r", "c2"});
  const auto p4 = label_warnings({enc, np}, {enc}, {"src/A.java"}, {"r", "c4"});
  all.insert(all.end(), p2.begin(), p2.end());
  all.insert(all.end(), p4.begin(), p4.end());
  const std::vector<LabeledWarning> want3 = {{np, Label::Sensitive, {"r", "c1"}},
                                             {enc, Label::Insensitive, {"r", "c1"}},
                                             {dls, Label::Sensitive, {"r", "c1"}},
                                             {dls, Label::Sensitive, {"r", "c3"}},
                                             {np, Label::Sensitive, {"r", "c4"}}};
  o.require(dedup(promote_labels(all)) == want3, "deduplicated corpus differs");
  if (o.pass) o.detail = "disappearance, promotion and dedup corpora match exactly";
  return o;
}

Outcome metric_interpretation() {
  Outcome o;
  // sensitive : insensitive = 1 : 12.94
  const std::size_t ns = 10000, ni = 129400;
  const double p = *weighted_overall({{75.52, ns}, {97.08, ni}});
  const double r = *weighted_overall({{60.31, ns}, {98.51, ni}});
  const double f = *weighted_overall({{67.06, ns}, {97.79, ni}});
  o.require(std::abs(p - 77.03) <= 0.5 && std::abs(r - 62.99) <= 0.5 && std::abs(f - 69.21) <= 0.5,
            "overall " + fmt("%.2f", p) + "/" + fmt("%.2f", r) + "/" + fmt("%.2f", f));
  // the same through compute_metrics, on predictions with the sensitive
  // class's precision and recall at the reference values
  const std::size_t tp = 6031, fn = ns - tp, fp = 1955, tn = ni - fp;
  std::vector<int> pred, gold;
  auto push = [&](std::size_t n, int a, int b) {
    pred.insert(pred.end(), n, a);
    gold.insert(gold.end(), n, b);
  };
  push(tp, 1, 1);
  push(fn, 0, 1);
  push(fp, 1, 0);
  push(tn, 0, 0);
  const auto m = compute_metrics(pred, gold);
  o.require(std::abs(*m.precision - 77.03) <= 0.5 && std::abs(*m.recall - 62.99) <= 0.5 && std::abs(*m.f1 - 69.21) <= 0.5,
            "compute_metrics overall " + fmt("%.2f", *m.precision) + "/" + fmt("%.2f", *m.recall) + "/" + fmt("%.2f", *m.f1));
  if (o.pass) {
    o.detail = "overall " + fmt("%.2f", p) + "/" + fmt("%.2f", r) + "/" + fmt("%.2f", f) + " from the per-class row; " +
               fmt("%.2f", *m.precision) + "/" + fmt("%.2f", *m.recall) + "/" + fmt("%.2f", *m.f1) + " from predictions";
  }
  return o;
}

Outcome overfit_smoke() {
  Outcome o;
  const auto t0 = Clock::now();
  // 61:3 sits at the α balance point (1 − α) : α for α = 0.05
  std::mt19937_64 rng(105);
  const std::size_t len = 8;
  std::vector<EncodedSample> data;
  for (std::size_t i = 0; i < 64; ++i) {
    const bool pos = i < 61;
    EncodedSample s;
    EncodedChannel ch;
    ch.ids.resize(len);
    ch.mask.assign(len, 1);
    for (auto& id : ch.ids) id = static_cast<int>((pos ? 2 : 10) + rng() % 6);
    s.function = s.field = s.slice = s.message = ch;
    s.attrs = pos ? AttributeIds{1, 1, 5, 1} : AttributeIds{2, 3, 15, 3};
    s.label = pos ? 1 : 0;
    data.push_back(s);
  }
  ModelConfig cfg;  // full-scale learning rate, batch size, α and γ
  cfg.embed_dim = cfg.hidden_dim = 16;
  cfg.max_epochs = 200;
  cfg.decay_factor = 1.0;
  cfg.seed = 5;
  std::mt19937_64 init_rng(cfg.seed);
  const auto init = ModelParams::init({20, 4, 16, 16, 32}, init_rng);
  const double before = evaluate(init, data, cfg.threshold).sensitive.f1.value_or(0);
  TrainOptions opt;
  opt.stop_when_perfect = true;
  const auto res = train(data, data, cfg, init, opt);
  const double after = evaluate(res.params, data, cfg.threshold).sensitive.f1.value_or(0);
  const double took = seconds_since(t0);
  o.require(before < 100, "the initial model is already perfect");
  o.require(after == 100, "training F1 " + fmt("%.2f", after) + " after " + std::to_string(res.history.size()) + " epochs");
  o.require(took < 300, "took " + fmt("%.1f s", took));
  if (o.pass) {
    o.detail = "F1 " + fmt("%.2f", before) + " -> 100 at epoch " + std::to_string(res.best_epoch) + ", " + fmt("%.1f s", took);
  }
  return o;
}

// ---------------------------------------------------------------------------
// End to end through the command-line tool

struct PipelineRun {
  bool ok = false;
  std::string error;
  fs::path dir;
  nlohmann::json eval;
  std::vector<double> filter_scores;
  std::size_t report_size = 0;
};

PipelineRun run_pipeline(const std::string& name) {
  PipelineRun r;
  r.dir = test::scratch("acceptance_" + name);
  const std::string cli = WARNSIFT_CLI;
  const fs::path data = WARNSIFT_DATA;
  const auto corpus = r.dir / "corpus" / "corpus.jsonl";
  fs::create_directories(corpus.parent_path());
  auto step = [&](const std::string& cmd, const std::string& log) {
    if (test::run(cmd, r.dir / log) == 0) return true;
    r.error = log + ": " + test::read(r.dir / log);
    return false;
  };
  if (!step(cli + " build-dataset --pairs " + q(data / "minicorpus/manifest.json") + " --out " + q(corpus) + " --seed 11",
            "build.log"))
    return r;
  const auto ckpt = r.dir / "model" / "model.ckpt";
  if (!step(cli + " train --config " + q(data / "minicorpus.cfg") + " --data " + q(split_path(corpus, "train")) +
                " --out " + q(ckpt),
            "train.log"))
    return r;
  if (!step(cli + " eval --json --model " + q(ckpt) + " --data " + q(split_path(corpus, "test")), "eval.json")) return r;
  r.eval = nlohmann::json::parse(test::read(r.dir / "eval.json"));
  const auto report = data / "minicorpus/filter/report.xml";
  if (!step(cli + " filter --model " + q(ckpt) + " --report " + q(report) + " --src " + q(data / "minicorpus/filter/src"),
            "filter.log"))
    return r;
  std::istringstream lines(test::read(r.dir / "filter.log"));
  std::string line;
  while (std::getline(lines, line)) {
    if (line.starts_with("{")) r.filter_scores.push_back(nlohmann::json::parse(line)["score"].get<double>());
  }
  r.report_size = parse_report(test::read(report)).records.size();
  r.ok = true;
  return r;
}

double sensitive_f1(const nlohmann::json& m) {
  const auto& v = m["sensitive"]["f1"];
  return v.is_null() ? 0.0 : v.get<double>();
}

Outcome end_to_end(const PipelineRun& r) {
  Outcome o;
  o.require(r.ok, r.error);
  if (!o.pass) return o;
  const double model = sensitive_f1(r.eval["model"]);
  const double pos = sensitive_f1(r.eval["baselines"]["all_positive"]);
  const double neg = sensitive_f1(r.eval["baselines"]["all_negative"]);
  o.require(model > pos && model > neg, "sensitive F1 " + fmt("%.2f", model) + " vs baselines " + fmt("%.2f", pos) +
                                            " and " + fmt("%.2f", neg));
  o.require(r.filter_scores.size() < r.report_size, "filter kept every warning");
  o.require(std::is_sorted(r.filter_scores.rbegin(), r.filter_scores.rend()), "filter output is not sorted by score");
  if (o.pass) {
    o.detail = "test sensitive F1 " + fmt("%.2f", model) + " vs all-positive " + fmt("%.2f", pos) + " and all-negative " +
               fmt("%.2f", neg) + "; filter kept " + std::to_string(r.filter_scores.size()) + " of " +
               std::to_string(r.report_size);
  }
  return o;
}

Outcome determinism(const PipelineRun& a, const PipelineRun& b) {
  Outcome o;
  o.require(a.ok && b.ok, a.ok ? b.error : a.error);
  if (!o.pass) return o;
  std::size_t compared = 0;
  for (const char* sub : {"corpus", "model"}) {
    for (const auto& e : fs::recursive_directory_iterator(a.dir / sub)) {
      if (!e.is_regular_file()) continue;
      const auto rel = fs::relative(e.path(), a.dir);
      o.require(fs::exists(b.dir / rel) && test::read(e.path()) == test::read(b.dir / rel), rel.string() + " differs");
      ++compared;
    }
  }
  for (const char* f : {"eval.json", "filter.log"}) {
    o.require(test::read(a.dir / f) == test::read(b.dir / f), std::string(f) + " differs");
    ++compared;
  }
  if (o.pass) o.detail = std::to_string(compared) + " files byte-identical across two runs";
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"gradient oracle", gradient_oracle},
      {"attention normalization", attention_normalization},
      {"focal-loss reductions", focal_reductions},
      {"slicer oracle", slicer_oracle},
      {"lowering fixture", lowering_fixture},
      {"dataset rules", dataset_rules},
      {"metric interpretation", metric_interpretation},
      {"overfit smoke test", overfit_smoke},
  };
  std::optional<PipelineRun> first, second;
  criteria.emplace_back("desk-scale end to end", [&] {
    first = run_pipeline("a");
    return end_to_end(*first);
  });
  criteria.emplace_back("determinism", [&] {
    second = run_pipeline("b");
    return determinism(*first, *second);
  });

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << k + 1 << " " << criteria[k].first << ": " << o.detail << std::endl;
  }
  return failures ? 1 : 0;
}
