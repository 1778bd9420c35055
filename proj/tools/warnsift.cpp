// warnsift: build a labeled warning corpus, train the verifier, evaluate it,
// and filter analyzer reports.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "warnsift/pipeline.hpp"

namespace fs = std::filesystem;
using namespace warnsift;
using ojson = nlohmann::ordered_json;

namespace {

ojson metric_value(const std::optional<double>& v) {
  if (!v) return nullptr;
  return std::round(*v * 100.0) / 100.0;
}

ojson class_json(const ClassMetrics& m) {
  ojson j;
  j["precision"] = metric_value(m.precision);
  j["recall"] = metric_value(m.recall);
  j["f1"] = metric_value(m.f1);
  j["support"] = m.support;
  return j;
}

ojson metrics_json(const MetricsReport& r) {
  ojson j;
  j["sensitive"] = class_json(r.sensitive);
  j["insensitive"] = class_json(r.insensitive);
  j["overall"] = {{"precision", metric_value(r.precision)}, {"recall", metric_value(r.recall)}, {"f1", metric_value(r.f1)}};
  j["counts"] = {{"tp", r.counts.tp}, {"fp", r.counts.fp}, {"tn", r.counts.tn}, {"fn", r.counts.fn}};
  return j;
}

std::string fmt(const std::optional<double>& v) {
  if (!v) return "   n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%6.2f", *v);
  return buf;
}

void print_metrics(const std::string& title, const MetricsReport& r) {
  std::cout << title << "\n";
  std::cout << "  class        precision  recall      f1  support\n";
  auto row = [](const char* name, const std::optional<double>& p, const std::optional<double>& rc,
                const std::optional<double>& f, std::optional<std::size_t> n) {
    std::cout << "  " << name << "     " << fmt(p) << "  " << fmt(rc) << "  " << fmt(f);
    if (n) std::cout << "  " << *n;
    std::cout << "\n";
  };
  row("sensitive  ", r.sensitive.precision, r.sensitive.recall, r.sensitive.f1, r.sensitive.support);
  row("insensitive", r.insensitive.precision, r.insensitive.recall, r.insensitive.f1, r.insensitive.support);
  row("overall    ", r.precision, r.recall, r.f1, std::nullopt);
}

fs::path default_sources(const fs::path& data) { return data.parent_path() / "sources"; }

int run_build(const std::string& pairs, const std::string& out, std::uint64_t seed, bool json) {
  const auto s = build_dataset(pairs, out, seed);
  std::size_t sensitive = 0;
  for (const auto& e : s.corpus) sensitive += e.label == Label::Sensitive;
  if (json) {
    ojson j;
    j["pairs"] = s.pairs;
    j["bugfix_pairs"] = s.bugfix_pairs;
    j["skipped_merges"] = s.skipped_merges;
    j["labeled"] = s.labeled;
    j["corpus"] = s.corpus.size();
    j["sensitive"] = sensitive;
    j["train"] = s.splits.train.size();
    j["validation"] = s.splits.validation.size();
    j["test"] = s.splits.test.size();
    j["diagnostics"] = s.diagnostics;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "pairs " << s.pairs << ", bug-fixing " << s.bugfix_pairs << ", merges skipped " << s.skipped_merges
              << "\nwarnings labeled " << s.labeled << ", corpus " << s.corpus.size() << " (" << sensitive
              << " sensitive)\nsplits train " << s.splits.train.size() << " / validation "
              << s.splits.validation.size() << " / test " << s.splits.test.size() << "\n";
    for (const auto& d : s.diagnostics) std::cerr << "note: " << d << "\n";
  }
  return 0;
}

int run_train(const std::string& config, const std::string& data, const std::string& out, std::string valid,
              std::string src, bool json) {
  const auto cfg = load_config(config);
  const fs::path data_path(data);
  if (src.empty()) src = default_sources(data_path).string();
  if (valid.empty()) {
    // corpus.train.jsonl pairs with corpus.valid.jsonl when it exists.
    const auto name = data_path.filename().string();
    const std::string suffix = ".train.jsonl";
    if (name.size() > suffix.size() && name.ends_with(suffix)) {
      const auto sib = data_path.parent_path() / (name.substr(0, name.size() - suffix.size()) + ".valid.jsonl");
      if (fs::exists(sib)) valid = sib.string();
    }
  }
  SourceCache cache;
  const auto tr = prepare(load_corpus(data_path), src, cache);
  const auto va = valid.empty() ? tr : prepare(load_corpus(valid), src, cache);
  TrainOptions opt;
  if (!json) {
    opt.on_epoch = [](const EpochRecord& e) {
      std::printf("epoch %3zu  loss %.6f  valid-F1 %6.2f  lr %.3g%s\n", e.epoch, e.train_loss, e.valid_f1, e.lr,
                  e.decayed ? "  (decay)" : "");
    };
  }
  auto [model, res] = fit(tr, va, cfg, opt);
  save_model(out, model);
  if (json) {
    ojson j;
    j["best_epoch"] = res.best_epoch;
    j["best_valid_f1"] = res.best_valid_f1;
    j["vocab"] = model.vocab.size();
    j["parameters"] = model.params.parameter_count();
    ojson hist = ojson::array();
    for (const auto& e : res.history) {
      hist.push_back({{"epoch", e.epoch}, {"train_loss", e.train_loss}, {"valid_f1", e.valid_f1}, {"lr", e.lr},
                      {"decayed", e.decayed}});
    }
    j["history"] = hist;
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("best epoch %zu, validation F1 %.2f; wrote %s\n", res.best_epoch, res.best_valid_f1, out.c_str());
  }
  return 0;
}

int run_eval(const std::string& model_path, const std::string& data, std::string src, std::optional<double> threshold,
             bool json) {
  const auto model = load_model(model_path);
  const double delta = threshold.value_or(model.config.threshold);
  if (src.empty()) src = default_sources(data).string();
  SourceCache cache;
  const auto samples = prepare(load_corpus(data), src, cache);
  if (samples.empty()) throw Error("evaluation split is empty");
  const auto enc = encode_all(samples, model.vocab, model.rules, model.config);
  std::vector<int> pred, gold, all_pos, all_neg;
  std::size_t fallback = 0;
  for (std::size_t i = 0; i < enc.size(); ++i) {
    pred.push_back(predict(score(model.params, enc[i]), delta) ? 1 : 0);
    gold.push_back(enc[i].label);
    all_pos.push_back(1);
    all_neg.push_back(0);
    fallback += samples[i].fallback;
  }
  const auto m = compute_metrics(pred, gold);
  const auto bp = compute_metrics(all_pos, gold);
  const auto bn = compute_metrics(all_neg, gold);
  if (json) {
    ojson j;
    j["samples"] = samples.size();
    j["fallback_contexts"] = fallback;
    j["threshold"] = delta;
    j["model"] = metrics_json(m);
    j["baselines"] = {{"all_positive", metrics_json(bp)}, {"all_negative", metrics_json(bn)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << samples.size() << " samples (" << fallback << " with fallback context), threshold " << delta << "\n";
    print_metrics("model", m);
    print_metrics("baseline: all sensitive", bp);
    print_metrics("baseline: all insensitive", bn);
  }
  return 0;
}

int run_filter(const std::string& model_path, const std::string& report, const std::string& src,
               std::optional<double> threshold) {
  const auto model = load_model(model_path);
  const auto parsed = parse_report(read_file(report));
  for (const auto& d : parsed.diagnostics) std::cerr << "note: " << d << "\n";
  const auto kept = filter_report(parsed.records, model, src, threshold.value_or(model.config.threshold));
  for (const auto& s : kept) std::cout << to_json(s).dump() << "\n";
  std::cerr << "retained " << kept.size() << " of " << parsed.records.size() << " warnings\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify static-analysis warnings as bug-sensitive or bug-insensitive"};
  app.require_subcommand(1);

  std::string pairs, out, config, data, model, report, src, valid;
  std::uint64_t seed = 0;
  std::optional<double> threshold;
  bool json = false;

  auto* build = app.add_subcommand("build-dataset", "Label warnings from commit pairs and split the corpus");
  build->add_option("--pairs", pairs, "Commit-pair manifest (JSON)")->required()->check(CLI::ExistingFile);
  build->add_option("--out", out, "Corpus output (JSON lines)")->required();
  build->add_option("--seed", seed, "Split seed")->required();
  build->add_flag("--json", json, "Machine-readable summary");

  auto* train_cmd = app.add_subcommand("train", "Train a model on a corpus split");
  train_cmd->add_option("--config", config, "key=value configuration")->required()->check(CLI::ExistingFile);
  train_cmd->add_option("--data", data, "Training split (JSON lines)")->required()->check(CLI::ExistingFile);
  train_cmd->add_option("--out", out, "Checkpoint to write")->required();
  train_cmd->add_option("--valid", valid, "Validation split; defaults to the sibling .valid.jsonl")
      ->check(CLI::ExistingFile);
  train_cmd->add_option("--src", src, "Source root; defaults to <data dir>/sources");
  train_cmd->add_flag("--json", json, "Machine-readable history");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a model on a corpus split");
  eval_cmd->add_option("--model", model, "Checkpoint")->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--data", data, "Split to evaluate (JSON lines)")->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--src", src, "Source root; defaults to <data dir>/sources");
  eval_cmd->add_option("--threshold", threshold, "Decision threshold; defaults to the model's");
  eval_cmd->add_flag("--json", json, "Machine-readable metrics");

  auto* filter_cmd = app.add_subcommand("filter", "Keep the warnings a model scores as bug-sensitive");
  filter_cmd->add_option("--model", model, "Checkpoint")->required()->check(CLI::ExistingFile);
  filter_cmd->add_option("--report", report, "SpotBugs XML report")->required()->check(CLI::ExistingFile);
  filter_cmd->add_option("--src", src, "Source root the report's paths are relative to")->required();
  filter_cmd->add_option("--threshold", threshold, "Decision threshold; defaults to the model's");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 2;
  }

  try {
    if (*build) return run_build(pairs, out, seed, json);
    if (*train_cmd) return run_train(config, data, out, valid, src, json);
    if (*eval_cmd) return run_eval(model, data, src, threshold, json);
    if (*filter_cmd) return run_filter(model, report, src, threshold);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
