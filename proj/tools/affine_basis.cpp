// affine-basis: command-line driver for enumeration, graded dimensions and
// the basis verification sweeps.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "affine_basis/gram_cache.hpp"
#include "affine_basis/intertwiner.hpp"
#include "affine_basis/verifier.hpp"

namespace fs = std::filesystem;
using namespace affine_basis;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string kind = "a1";
  int k0 = 1;
  int k1 = 0;
  int k2 = 0;
  int max_degree = 3;
  int depth = -1;  // defaults to max_degree
  int jobs = 1;
  std::string cache_dir;
  std::string format = "text";
  std::string out = "affine-basis-out";
  bool quiet = false;
  bool mutate_derivation = false;
};

class Session {
 public:
  explicit Session(Config config) : config_(std::move(config)) {
    if (config_.kind != "a1" && config_.kind != "c2fs") throw UsageError("--kind must be a1 or c2fs");
    if (config_.k0 < 0 || config_.k1 < 0 || config_.k2 < 0) throw UsageError("highest weight labels must be >= 0");
    if (config_.kind == "a1" && config_.k2 != 0) throw UsageError("--k2 applies to --kind c2fs only");
    if (config_.k0 + config_.k1 + config_.k2 < 1) throw UsageError("the level k0 + k1 + k2 must be >= 1");
    if (config_.max_degree < 0) throw UsageError("--max-degree must be >= 0");
    if (config_.depth < 0) config_.depth = config_.max_degree;
    if (config_.jobs < 1) throw UsageError("--jobs must be >= 1");
    try {
      format_ = parse_output_format(config_.format);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    kind_ = config_.kind == "a1" ? ModuleKind::a1(config_.k0, config_.k1)
                                 : ModuleKind::c2fs(config_.k0, config_.k1, config_.k2);
    if (const char* env = std::getenv("AFFINE_BASIS_CACHE"); env && *env) config_.cache_dir = env;
    if (!config_.cache_dir.empty()) cache_ = std::make_unique<GramCache>(config_.cache_dir);
    fs::create_directories(config_.out);
  }

  const Config& config() const { return config_; }
  const ModuleKind& kind() const { return kind_; }
  OutputFormat format() const { return format_; }
  VerifyOptions options() const { return {config_.jobs, cache_.get()}; }

  void log(const std::string& line) const {
    if (!config_.quiet) std::cerr << "[affine-basis] " << line << '\n';
  }

  void require_a1(const std::string& what) const {
    if (kind_.type != ModuleKind::Type::a1_standard) throw UsageError(what + " needs --kind a1");
  }

  DerivationTable derivation() const {
    return DerivationTable(c2_table(), config_.mutate_derivation ? DerivationTable::Mutation::annihilator
                                                                 : DerivationTable::Mutation::none);
  }

  std::string stem(const std::string& step) const {
    std::string s = step + "-" + config_.kind + "-" + std::to_string(config_.k0) + "-" + std::to_string(config_.k1);
    if (config_.kind == "c2fs") s += "-" + std::to_string(config_.k2);
    return s + "-d" + std::to_string(config_.max_degree);
  }

  fs::path write(const std::string& name, const std::string& content) const {
    const fs::path path = fs::path(config_.out) / name;
    std::ofstream os(path, std::ios::binary);
    os << content;
    if (!os) throw std::runtime_error("cannot write " + path.string());
    return path;
  }

  // Writes the reports, prints them and returns the exit status.
  int finish(const std::string& name, const std::vector<SweepReport>& sweeps) const {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& s : sweeps) doc.push_back(s.to_json());
    write(name + ".json", doc.dump(2) + "\n");
    write(name + ".csv", render(sweeps, OutputFormat::csv));
    std::cout << render(sweeps, format_);

    for (const auto& s : sweeps)
      if (const StepReport* f = s.first_failure()) {
        const fs::path path = write(name + "-counterexample.json", f->to_json().dump(2) + "\n");
        std::cerr << "verification failed: " << s.step << " " << s.spec << "\n";
        std::cerr << "counterexample: " << path.string() << "\n";
        return kExitFail;
      }
    log("all checks passed; reports in " + config_.out);
    return kExitPass;
  }

 private:
  Config config_;
  ModuleKind kind_;
  OutputFormat format_ = OutputFormat::text;
  std::unique_ptr<GramCache> cache_;
};

int cmd_enumerate(const Session& s) {
  const auto parts = enumerate_admissible(s.kind(), s.config().max_degree);
  s.write(s.stem("partitions") + ".jsonl", partitions_jsonl(parts));
  std::ostringstream os;
  switch (s.format()) {
    case OutputFormat::json:
      os << partitions_jsonl(parts);
      break;
    case OutputFormat::csv:
      os << "partition,degree,weight,N,Nprime\n";
      for (const auto& p : parts)
        os << '"' << p.to_string() << "\"," << p.degree() << ",\"" << to_string(partition_weight(p, s.kind()))
           << "\"," << n_of(p) << ',' << n_prime(p) << '\n';
      break;
    case OutputFormat::text:
      for (const auto& p : parts)
        os << p.to_string() << "  degree=" << p.degree() << " weight=" << to_string(partition_weight(p, s.kind()))
           << " N=" << n_of(p) << " N'=" << n_prime(p) << '\n';
      break;
  }
  std::cout << os.str();
  s.log(std::to_string(parts.size()) + " admissible partitions for " + s.kind().label());
  return kExitPass;
}

int cmd_dims(const Session& s) {
  // The spanning sweep carries the Gram rank of every block.
  const SweepReport span = verify_spanning(s.kind(), s.config().max_degree, s.options());
  const int top = s.config().max_degree;
  std::vector<std::size_t> dims(top + 1), counts(top + 1);
  for (const auto& r : span.reports) dims[*r.degree] += *r.rank;
  for (const auto& p : enumerate_admissible(s.kind(), top)) ++counts[p.degree()];

  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream csv, text;
  csv << "degree,admissible,dimension\n";
  for (int d = 0; d <= top; ++d) {
    rows.push_back({{"degree", d}, {"admissible", counts[d]}, {"dimension", dims[d]}});
    csv << d << ',' << counts[d] << ',' << dims[d] << '\n';
    text << "degree " << d << ": admissible=" << counts[d] << " dimension=" << dims[d] << '\n';
  }
  const nlohmann::json doc = {{"spec", s.kind().label()}, {"table_version", c2_table().version()}, {"rows", rows}};
  s.write(s.stem("dims") + ".json", doc.dump(2) + "\n");
  s.write(s.stem("dims") + ".csv", csv.str());
  switch (s.format()) {
    case OutputFormat::json:
      std::cout << doc.dump(2) << '\n';
      break;
    case OutputFormat::csv:
      std::cout << csv.str();
      break;
    case OutputFormat::text:
      std::cout << text.str();
      break;
  }
  return kExitPass;
}

std::vector<SweepReport> intertwiner_sweeps(const Session& s) {
  const int depth = std::max(s.config().depth, s.config().max_degree);
  LevelOneFactors factors(depth);
  const IntertwinerMap w = solve_w(factors.fundamental(1), factors.fundamental(2));
  s.write("intertwiner-D" + std::to_string(depth) + ".json", w.to_json().dump(2) + "\n");
  s.write("intertwiner-D" + std::to_string(depth) + "-solutions.csv", w.solution_table_csv());
  s.log("solved w at depth " + std::to_string(depth) + ": " + std::to_string(w.unknowns) + " unknowns, rank " +
        std::to_string(w.rank));

  SweepReport checks{"intertwiner", "w: (0,1,0) -> (0,0,1)", {}};
  checks.reports.push_back(verify_w_commutation(w, factors.fundamental(1), factors.fundamental(2)));
  checks.reports.push_back(verify_w_on_g1_orbits(w, factors.fundamental(1), factors.fundamental(2), depth));
  std::vector<SweepReport> sweeps{checks};
  if (s.kind().type == ModuleKind::Type::a1_standard)
    sweeps.push_back(sweep_projection_chain(s.kind(), s.config().max_degree, factors, w));
  sweeps.push_back(verify_cross_model(s.kind(), s.config().max_degree, factors));
  return sweeps;
}

int cmd_verify(const Session& s, const std::string& step) {
  const ModuleKind& kind = s.kind();
  const int d = s.config().max_degree;
  std::vector<SweepReport> sweeps;
  if (step == "independence") {
    sweeps.push_back(verify_independence(kind, d, s.options()));
  } else if (step == "spanning") {
    sweeps.push_back(verify_spanning(kind, d, s.options()));
  } else if (step == "tpower") {
    s.require_a1("verify tpower");
    sweeps.push_back(sweep_t_power(kind, d, s.derivation()));
  } else if (step == "translation") {
    s.require_a1("verify translation");
    sweeps.push_back(sweep_translation(kind, d, s.derivation()));
  } else if (step == "icprop") {
    s.require_a1("verify icprop");
    sweeps.push_back(sweep_ic_propagation(kind, d));
  } else if (step == "intertwiner") {
    sweeps = intertwiner_sweeps(s);
  } else {
    throw UsageError("unknown verification step '" + step + "'");
  }
  return s.finish(s.stem(step), sweeps);
}

int cmd_report(const Session& s) {
  const ModuleKind& kind = s.kind();
  const int d = s.config().max_degree;
  nlohmann::json table = c2_table().to_json();
  table["version"] = c2_table().version();
  s.write("structure-table.json", table.dump(2) + "\n");
  std::vector<SweepReport> sweeps;
  sweeps.push_back(verify_independence(kind, d, s.options()));
  sweeps.push_back(verify_spanning(kind, d, s.options()));
  if (kind.type == ModuleKind::Type::a1_standard) {
    const DerivationTable t = s.derivation();
    sweeps.push_back(sweep_t_power(kind, d, t));
    sweeps.push_back(sweep_translation(kind, d, t));
    sweeps.push_back(sweep_ic_propagation(kind, d));
  }
  for (auto& sweep : intertwiner_sweeps(s)) sweeps.push_back(std::move(sweep));
  return s.finish(s.stem("report"), sweeps);
}

void add_common(CLI::App& app, Config& c) {
  app.add_option("--kind", c.kind, "Module kind: a1 (standard A1 module) or c2fs (C2 Feigin-Stoyanovsky subspace)")
      ->capture_default_str();
  app.add_option("--k0", c.k0, "Coefficient of Lambda0")->capture_default_str();
  app.add_option("--k1", c.k1, "Coefficient of Lambda1")->capture_default_str();
  app.add_option("--k2", c.k2, "Coefficient of Lambda2 (c2fs only)")->capture_default_str();
  app.add_option("--max-degree", c.max_degree, "Largest degree to enumerate or verify")->capture_default_str();
  app.add_option("--depth", c.depth, "Truncation depth of the level-1 modules (default: max degree)");
  app.add_option("--jobs", c.jobs, "Worker threads for block sweeps")->capture_default_str();
  app.add_option("--cache-dir", c.cache_dir, "Gram block cache directory (AFFINE_BASIS_CACHE overrides)");
  app.add_option("--format", c.format, "Output format: json, csv or text")->capture_default_str();
  app.add_option("--out", c.out, "Directory for report files")->capture_default_str();
  app.add_flag("--quiet", c.quiet, "Print only the result tables");
  // Test hook: a derivation table with T x11 = x12, which must be detected.
  app.add_flag("--mutate-derivation", c.mutate_derivation)->group("");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of monomial bases of standard A1^(1) modules"};
  app.require_subcommand(1);
  Config config;
  add_common(app, config);

  auto* enumerate = app.add_subcommand("enumerate", "List admissible colored partitions");
  auto* dims = app.add_subcommand("dims", "Graded dimensions by Gram rank");
  auto* verify = app.add_subcommand("verify", "Run one verification sweep");
  auto* report = app.add_subcommand("report", "Run every applicable sweep and write a combined report");
  std::string step;
  verify->add_option("step", step, "independence, spanning, translation, tpower, intertwiner or icprop")
      ->required()
      ->check(CLI::IsMember({"independence", "spanning", "translation", "tpower", "intertwiner", "icprop"}));
  // Options live on the top-level app and may follow the subcommand.
  for (auto* sub : {enumerate, dims, verify, report}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const Session session(config);
    if (*enumerate) return cmd_enumerate(session);
    if (*dims) return cmd_dims(session);
    if (*verify) return cmd_verify(session, step);
    return cmd_report(session);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
