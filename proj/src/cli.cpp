#include "ontomap/cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ontomap/corridor.hpp"
#include "ontomap/errors.hpp"
#include "ontomap/optimizer.hpp"
#include "ontomap/oracle.hpp"
#include "ontomap/text_format.hpp"
#include "ontomap/utility.hpp"

namespace ontomap::cli {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

// A path to a model file, or a built-in corridor name such as "corridor4".
FiniteStateModel load_model(const std::string& arg) {
  if (fs::exists(arg)) return read_model(read_file(arg));
  static const std::regex builtin("corridor([0-9]+)");
  std::smatch m;
  if (std::regex_match(arg, m, builtin)) return build_corridor({std::stoul(m[1].str())});
  throw IoError("cannot open '" + arg + "'");
}

// Three significant figures; magnitudes below 5e-4 print as 0.
double for_display(double v) { return std::abs(v) < 5e-4 ? 0.0 : v; }

void print_matrix(std::ostream& out, const std::string& name, const Matrix& m) {
  out << name << " =\n";
  std::ostringstream cell;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << " ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      cell.str("");
      cell << std::setprecision(3) << for_display(m(i, j));
      out << std::setw(10) << cell.str();
    }
    out << "\n";
  }
}

void print_vector(std::ostream& out, const std::string& name, const Vector& v) {
  out << name << " = (";
  for (Eigen::Index i = 0; i < v.size(); ++i) out << (i ? ", " : "") << std::setprecision(3) << for_display(v(i));
  out << ")\n";
}

void print_report(std::ostream& out, const ObjectiveReport& r) {
  out << std::setprecision(10);
  for (const auto& [x, v] : r.forward_transition_terms) out << "  KL(T1^" << x << " || phi_inv T0^" << x << " phi) = " << v << "\n";
  out << "  KL(A1 || A0 phi) = " << r.forward_output_term << "\n";
  for (const auto& [x, v] : r.backward_transition_terms) out << "  KL(T0^" << x << " || phi T1^" << x << " phi_inv) = " << v << "\n";
  out << "  KL(A0 || A1 phi_inv) = " << r.backward_output_term << "\n";
  out << "  total = " << std::setprecision(17) << r.total << "\n";
}

std::string timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

struct Manifest {
  std::string command;
  std::vector<std::string> models;
  std::optional<std::string> utility;
  std::optional<std::string> map;
  Json config = Json::object();
  std::string output;
};

void write_manifest(const fs::path& dir, const Manifest& m) {
  Json j;
  j["command"] = m.command;
  j["models"] = m.models;
  j["utility"] = m.utility ? Json(*m.utility) : Json(nullptr);
  j["map"] = m.map ? Json(*m.map) : Json(nullptr);
  j["config"] = m.config;
  j["output"] = m.output;
  j["timestamp"] = timestamp();
  write_file(dir / "manifest.json", j.dump(2) + "\n");
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory '" + dir.string() + "': " + ec.message());
}

struct Options {
  std::string model_path;
  std::string o0_path, o1_path, map_path, utility_path;
  std::string out_dir;
  std::string out_file, goal_file;
  std::size_t length = 4;
  double epsilon = SmoothingPolicy::kDefaultEpsilon;
  double resolution = 0.05;
  OptimizerConfig config;
};

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  try {
    load_model(o.model_path);
  } catch (const ValidationError& e) {
    err << o.model_path << ": " << e.report().size() << " violation(s)\n" << format_report(e.report());
    return kExitDomain;
  }
  out << o.model_path << ": ok\n";
  return kExitOk;
}

int cmd_map(const Options& o, std::ostream& out) {
  const FiniteStateModel o0 = load_model(o.o0_path);
  const FiniteStateModel o1 = load_model(o.o1_path);
  OptimizerConfig config = o.config;
  config.policy = SmoothingPolicy(o.epsilon);
  const OptimizationResult result = optimize(o0, o1, config);

  const auto& map = result.best_map;
  print_matrix(out, "phi", map.phi);
  print_matrix(out, "phi_inv", map.phi_inv);
  print_matrix(out, "phi phi_inv", map.phi * map.phi_inv);
  print_matrix(out, "phi_inv phi", map.phi_inv * map.phi);
  out << "best restart " << result.best_restart << " of " << result.per_restart.size() << "\n";
  print_report(out, result.best_report);

  const fs::path dir = o.out_dir;
  ensure_dir(dir);
  write_file(dir / "map.json", write_map(map));
  write_file(dir / "report.json", write_report(result.best_report));
  write_file(dir / "result.json", write_result(result));
  Manifest m{"map", {o.o0_path, o.o1_path}, std::nullopt, std::nullopt, Json::object(), dir.string()};
  m.config["seed"] = config.seed;
  m.config["restarts"] = config.restarts;
  m.config["max_iters"] = config.max_iters;
  m.config["initial_step"] = config.initial_step;
  m.config["step_decay"] = config.step_decay;
  m.config["patience"] = config.patience;
  m.config["min_step"] = config.min_step;
  m.config["epsilon"] = config.policy.epsilon();
  write_manifest(dir, m);
  out << "wrote " << (dir / "map.json").string() << "\n";
  return kExitOk;
}

int cmd_translate(const Options& o, std::ostream& out) {
  const UtilityVector u = read_utility(read_file(o.utility_path));
  const OntologyMap map = read_map(read_file(o.map_path));
  const UtilityVector translated = translate(u, map);
  print_vector(out, "utility", u.values());
  print_vector(out, "translated", translated.values());

  const fs::path dir = o.out_dir;
  ensure_dir(dir);
  write_file(dir / "utility.json", write_utility(translated));
  write_manifest(dir, {"translate", {}, o.utility_path, o.map_path, Json::object(), dir.string()});
  out << "wrote " << (dir / "utility.json").string() << "\n";
  return kExitOk;
}

int cmd_objective(const Options& o, std::ostream& out) {
  const FiniteStateModel o0 = load_model(o.o0_path);
  const FiniteStateModel o1 = load_model(o.o1_path);
  const OntologyMap map = read_map(read_file(o.map_path));
  const ObjectiveReport report = evaluate(o0, o1, map, SmoothingPolicy(o.epsilon));
  out << "objective\n";
  print_report(out, report);
  if (!o.out_dir.empty()) {
    const fs::path dir = o.out_dir;
    ensure_dir(dir);
    write_file(dir / "report.json", write_report(report));
    Manifest m{"objective", {o.o0_path, o.o1_path}, std::nullopt, o.map_path, Json::object(), dir.string()};
    m.config["epsilon"] = o.epsilon;
    write_manifest(dir, m);
  }
  return kExitOk;
}

int cmd_corridor(const Options& o, std::ostream& out) {
  const CorridorSpec spec{o.length};
  const std::string text = write_model(build_corridor(spec));
  if (o.out_file.empty())
    out << text;
  else
    write_file(o.out_file, text);
  if (!o.goal_file.empty()) write_file(o.goal_file, write_utility(corridor_goal(spec)));
  return kExitOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const FiniteStateModel o0 = load_model(o.o0_path);
  const FiniteStateModel o1 = load_model(o.o1_path);
  const OracleResult r = oracle_search(o0, o1, o.resolution, SmoothingPolicy(o.epsilon));
  print_matrix(out, "phi", r.map.phi);
  print_matrix(out, "phi_inv", r.map.phi_inv);
  out << "grid points " << r.evaluated << "\n"
      << "total = " << std::setprecision(17) << r.total << "\n"
      << "one-step variation = " << r.step_variation << "\n";
  if (!o.out_dir.empty()) {
    const fs::path dir = o.out_dir;
    ensure_dir(dir);
    write_file(dir / "map.json", write_map(r.map));
    Manifest m{"oracle", {o.o0_path, o.o1_path}, std::nullopt, std::nullopt, Json::object(), dir.string()};
    m.config["resolution"] = o.resolution;
    m.config["epsilon"] = o.epsilon;
    write_manifest(dir, m);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Translate utility functions between finite state models"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "Check that a model file is stochastic");
  validate->add_option("model", o.model_path, "Model file or built-in corridorN")->required();

  auto* map = app.add_subcommand("map", "Optimize a map from the new model to the old one");
  map->add_option("o0", o.o0_path, "Old model")->required();
  map->add_option("o1", o.o1_path, "New model")->required();
  map->add_option("--seed", o.config.seed, "Base seed")->capture_default_str();
  map->add_option("--restarts", o.config.restarts, "Independent hill climbs")->capture_default_str();
  map->add_option("--max-iters", o.config.max_iters, "Proposals per restart")->capture_default_str();
  map->add_option("--epsilon", o.epsilon, "KL smoothing floor")->capture_default_str();
  map->add_option("--threads", o.config.threads, "Worker threads (0 = all cores)")->capture_default_str();
  map->add_option("--out", o.out_dir, "Output directory")->default_val("ontomap-out");

  auto* tr = app.add_subcommand("translate", "Compose a utility over the old model with a map");
  tr->add_option("utility", o.utility_path, "Utility file")->required();
  tr->add_option("map", o.map_path, "Map file")->required();
  tr->add_option("--out", o.out_dir, "Output directory")->default_val("ontomap-out");

  auto* obj = app.add_subcommand("objective", "Evaluate the objective of a given map");
  obj->add_option("o0", o.o0_path, "Old model")->required();
  obj->add_option("o1", o.o1_path, "New model")->required();
  obj->add_option("map", o.map_path, "Map file")->required();
  obj->add_option("--epsilon", o.epsilon, "KL smoothing floor")->capture_default_str();
  obj->add_option("--out", o.out_dir, "Also write report.json here");

  auto* cor = app.add_subcommand("corridor", "Emit a corridor model");
  cor->add_option("--length", o.length, "Number of cells")->required();
  cor->add_option("--out", o.out_file, "Write the model here instead of stdout");
  cor->add_option("--goal", o.goal_file, "Also write the right-end goal utility here");

  auto* orc = app.add_subcommand("oracle", "Exhaustive grid search on tiny instances");
  orc->add_option("o0", o.o0_path, "Old model")->required();
  orc->add_option("o1", o.o1_path, "New model")->required();
  orc->add_option("--resolution", o.resolution, "Grid spacing")->capture_default_str();
  orc->add_option("--epsilon", o.epsilon, "KL smoothing floor")->capture_default_str();
  orc->add_option("--out", o.out_dir, "Output directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitIo;
  }

  try {
    if (*validate) return cmd_validate(o, out, err);
    if (*map) return cmd_map(o, out);
    if (*tr) return cmd_translate(o, out);
    if (*obj) return cmd_objective(o, out);
    if (*cor) return cmd_corridor(o, out);
    if (*orc) return cmd_oracle(o, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what();
    return kExitDomain;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitIo;
}

}  // namespace ontomap::cli
