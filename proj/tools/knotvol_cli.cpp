#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "knotvol/errors.hpp"
#include "knotvol/generate.hpp"
#include "knotvol/pipeline.hpp"
#include "knotvol/seifert.hpp"

namespace fs = std::filesystem;
using namespace knotvol;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInternalError = 2;

struct Config {
  std::vector<std::string> inputs;
  std::string format;
  std::string target = "K'";
  std::string select;
  std::string out_dir;
  bool no_improve = false;
  bool keep_zero_loops = true;
  std::uint64_t seed = 1;
  int random = 0;
  int max_crossings = 0;
  bool alternating_only = false;
  unsigned jobs = 0;
};

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw DiagramError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Exactly one diagram per command; --select picks one out of a named list.
Diagram load_one(const Config& cfg) {
  if (cfg.inputs.size() != 1) throw DiagramError("expected exactly one input file");
  auto all = parse_pd_lines(read_file(cfg.inputs[0]));
  if (all.empty()) return parse_pd("");
  if (!cfg.select.empty()) {
    for (auto& d : all)
      if (d.name() == cfg.select) return d;
    throw DiagramError("no diagram named " + cfg.select + " in " + cfg.inputs[0]);
  }
  if (all.size() > 1) throw DiagramError(cfg.inputs[0] + " holds several diagrams; pick one with --select");
  return all.front();
}

PipelineOptions options(const Config& cfg) {
  PipelineOptions o;
  o.improve = !cfg.no_improve;
  o.target = cfg.target == "K" ? Target::K : Target::KPrime;
  o.keep_zero_loops = cfg.keep_zero_loops;
  return o;
}

void write_text(const fs::path& p, const std::string& s) {
  std::ofstream out(p);
  if (!out) throw DiagramError("cannot write " + p.string());
  out << s;
  if (!s.empty() && s.back() != '\n') out << "\n";
}

int cmd_analyze(const Config& cfg) {
  Diagram d = load_one(cfg);
  if (cfg.format == "dot") {
    std::cout << to_dot(seifert_graph(d), d.name().empty() ? "seifert" : d.name());
  } else if (cfg.format == "pd") {
    std::cout << canonical(d).to_line() << "\n";
  } else {
    std::cout << analysis_json(d) << "\n";
  }
  return kOk;
}

int cmd_graph(const Config& cfg) {
  Diagram d = load_one(cfg);
  std::cout << to_dot(seifert_graph(d), d.name().empty() ? "seifert" : d.name());
  return kOk;
}

void write_artifacts(const fs::path& dir, const PipelineResult& r, const PipelineOptions& opts) {
  fs::create_directories(dir);
  write_text(dir / "pipeline.json", pipeline_json(r, opts));
  if (r.degenerate()) return;
  write_text(dir / "record.json", reduction_json(*r.reduction.record));
  write_text(dir / "link.pd", r.link->annotated_pd());
  if (r.improved) write_text(dir / "link_improved.pd", r.improved->annotated_pd());
  write_text(dir / "surgery.json", surgery_json(r.surgery));
  write_text(dir / "bounds.json", bounds_json(*r.bounds));
  write_text(dir / "bounds.csv", bounds_csv_header() + "\n" + bounds_csv_row(r.reduction.input.name(), r));
  write_text(dir / "seifert.dot", to_dot(seifert_graph(r.reduction.record->reduced), "reduced"));
}

int cmd_pipeline(const Config& cfg) {
  Diagram d = load_one(cfg);
  if (d.num_components() != 1) throw MultiComponentError("pipeline expects a knot");
  PipelineOptions opts = options(cfg);
  PipelineResult r = run_pipeline(d, opts);
  if (!cfg.out_dir.empty()) write_artifacts(cfg.out_dir, r, opts);
  if (cfg.format == "pd") {
    if (r.degenerate())
      std::cout << "# " << r.reduction.outcome->describe() << "\n" << r.reduction.reduced.to_line() << "\n";
    else
      std::cout << r.final_link().annotated_pd();
  } else if (cfg.format == "csv") {
    std::cout << bounds_csv_header() << "\n" << bounds_csv_row(d.name(), r) << "\n";
  } else if (cfg.format == "dot") {
    const Diagram& base = r.degenerate() ? r.reduction.reduced : r.reduction.record->reduced;
    std::cout << to_dot(seifert_graph(base), "reduced");
  } else {
    std::cout << pipeline_json(r, opts) << "\n";
  }
  return kOk;
}

struct CensusItem {
  std::string name;
  std::optional<Diagram> diagram;
  std::string error;  // set when the input could not be read or parsed
};

std::vector<fs::path> census_files(const std::vector<std::string>& inputs) {
  std::vector<fs::path> files;
  for (const auto& in : inputs) {
    fs::path p(in);
    if (fs::is_directory(p)) {
      std::vector<fs::path> here;
      for (const auto& e : fs::directory_iterator(p))
        if (e.is_regular_file() && e.path().extension() == ".pd") here.push_back(e.path());
      std::sort(here.begin(), here.end());
      files.insert(files.end(), here.begin(), here.end());
    } else {
      files.push_back(p);
    }
  }
  return files;
}

std::vector<CensusItem> census_items(const Config& cfg) {
  std::vector<CensusItem> items;
  for (const auto& file : census_files(cfg.inputs)) {
    std::string stem = file.stem().string();
    std::string text;
    try {
      text = read_file(file.string());
    } catch (const std::exception& e) {
      items.push_back({stem, std::nullopt, e.what()});
      continue;
    }
    std::istringstream lines(text);
    std::string line;
    int lineno = 0, count = 0;
    std::vector<CensusItem> here;
    while (std::getline(lines, line)) {
      ++lineno;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      ++count;
      try {
        Diagram d = parse_pd(line);
        std::string name = d.name().empty() ? stem + ":" + std::to_string(lineno) : d.name();
        here.push_back({name, std::move(d), {}});
      } catch (const std::exception& e) {
        here.push_back({stem + ":" + std::to_string(lineno), std::nullopt, e.what()});
      }
    }
    if (count == 1 && here.front().name.rfind(stem + ":", 0) == 0) here.front().name = stem;
    for (auto& h : here) items.push_back(std::move(h));
  }
  std::mt19937_64 rng(cfg.seed);
  for (int i = 0; i < cfg.random; ++i) {
    Diagram d = random_knot_diagram(rng);
    items.push_back({"random-" + std::to_string(i + 1), std::move(d), {}});
  }
  std::erase_if(items, [&](const CensusItem& it) {
    if (!it.diagram) return false;
    if (cfg.max_crossings > 0 && it.diagram->num_crossings() > cfg.max_crossings) return true;
    return cfg.alternating_only && !is_alternating(*it.diagram);
  });
  return items;
}

struct CensusRow {
  std::string csv;
  std::string json;
  int code = kOk;
};

CensusRow census_row(const CensusItem& it, const PipelineOptions& opts) {
  auto error = [&](const std::string& msg, int code) {
    nlohmann::ordered_json j = {{"name", it.name}, {"error", msg}};
    return CensusRow{error_csv_row(it.name, msg), j.dump(2), code};
  };
  if (!it.diagram) return error(it.error, kInputError);
  try {
    if (it.diagram->num_components() != 1) throw MultiComponentError("not a knot");
    PipelineResult r = run_pipeline(*it.diagram, opts);
    bool ok = r.degenerate() || (r.bounds->all_pass() && r.roundtrip);
    return {bounds_csv_row(it.name, r), pipeline_json(r, opts), ok ? kOk : kInputError};
  } catch (const DiagramError& e) {
    return error(e.what(), kInputError);
  } catch (const InvariantError& e) {
    return error(std::string("internal: ") + e.what(), kInternalError);
  }
}

int cmd_census(const Config& cfg) {
  auto items = census_items(cfg);
  PipelineOptions opts = options(cfg);
  std::vector<CensusRow> rows(items.size());
  std::atomic<std::size_t> next{0};
  unsigned jobs = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, std::max<std::size_t>(1, items.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < items.size();) rows[i] = census_row(items[i], opts);
    });
  for (auto& t : pool) t.join();

  int code = kOk;
  for (const auto& r : rows) code = std::max(code, r.code);
  if (cfg.format == "json") {
    std::cout << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) std::cout << (i ? ",\n" : "\n") << rows[i].json;
    std::cout << (rows.empty() ? "]\n" : "\n]\n");
  } else {
    if (!rows.empty()) std::cout << bounds_csv_header() << "\n";
    for (const auto& r : rows) std::cout << r.csv << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knotvol: Seifert surfaces, augmented links and volume bounds for knot diagrams"};
  app.require_subcommand(1, 1);
  Config cfg;

  auto add_pipeline_flags = [&](CLI::App* sub) {
    sub->add_option("--target", cfg.target, "Surgery target")->check(CLI::IsMember({"K", "K'"}));
    sub->add_flag("--no-improve", cfg.no_improve, "Keep the bands that the improved link removes");
    sub->add_flag("--keep-zero-loops,!--drop-zero-loops", cfg.keep_zero_loops,
                  "List loops with surgery coefficient 1/0 in the manifest");
  };

  auto* analyze = app.add_subcommand("analyze", "Seifert circles, Seifert graph and canonical genus");
  analyze->add_option("input", cfg.inputs, "PD file, or - for stdin")->required();
  analyze->add_option("--select", cfg.select, "Diagram name inside a multi-diagram file");
  analyze->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "pd", "dot"}));

  auto* pipeline = app.add_subcommand("pipeline", "Reduce, augment and report bounds for one knot");
  pipeline->add_option("input", cfg.inputs, "PD file, or - for stdin")->required();
  pipeline->add_option("--select", cfg.select, "Diagram name inside a multi-diagram file");
  pipeline->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "pd", "dot", "csv"}));
  pipeline->add_option("--out", cfg.out_dir, "Directory receiving every artifact");
  add_pipeline_flags(pipeline);

  auto* census = app.add_subcommand("census", "Bounds report for every diagram in a file set");
  census->add_option("inputs", cfg.inputs, "PD files or directories of .pd files");
  census->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  census->add_option("--random", cfg.random, "Also run this many random knot diagrams")->check(CLI::NonNegativeNumber);
  census->add_option("--seed", cfg.seed, "Seed for random diagrams");
  census->add_option("--max-crossings", cfg.max_crossings, "Skip diagrams with more crossings");
  census->add_flag("--alternating-only", cfg.alternating_only, "Skip non-alternating diagrams");
  census->add_option("-j,--jobs", cfg.jobs, "Worker threads (default: hardware concurrency)");
  add_pipeline_flags(census);

  auto* graph = app.add_subcommand("graph", "Seifert graph in DOT format");
  graph->add_option("input", cfg.inputs, "PD file, or - for stdin")->required();
  graph->add_option("--select", cfg.select, "Diagram name inside a multi-diagram file");
  graph->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"dot"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return cmd_analyze(cfg);
    if (*pipeline) return cmd_pipeline(cfg);
    if (*census) return cmd_census(cfg);
    return cmd_graph(cfg);
  } catch (const DiagramError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
