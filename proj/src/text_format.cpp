#include "ontomap/text_format.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include <json.hpp>

namespace ontomap {

using Json = nlohmann::ordered_json;

namespace {

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

// Two-space indented JSON with arrays of scalars kept on one line, so each
// matrix row reads as one line of text.
void emit(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += inner + Json(key).dump() + ": ";
      emit(value, indent + 2, out);
    }
    out += "\n" + pad + "}";
  } else if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), is_scalar);
    if (j.empty() || flat) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ", ";
        out += j[i].dump();
      }
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += inner;
      emit(j[i], indent + 2, out);
    }
    out += "\n" + pad + "]";
  } else {
    out += j.dump();
  }
}

std::string to_text(const Json& j) {
  std::string out;
  emit(j, 0, out);
  out += '\n';
  return out;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object()) throw ParseError("document must be an object");
  const auto it = doc.find(name);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix parse_matrix(const Json& j, const std::string& name) {
  if (!j.is_array() || j.empty()) throw ParseError("'" + name + "' must be a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array()) throw ParseError("'" + name + "' row 1 is not an array");
  const std::size_t cols = j[0].size();
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j[i];
    if (!row.is_array()) throw ParseError("'" + name + "' row " + std::to_string(i + 1) + " is not an array");
    if (row.size() != cols) throw DimensionError("'" + name + "' has ragged rows");
    for (std::size_t k = 0; k < cols; ++k) {
      if (!row[k].is_number())
        throw ParseError("'" + name + "' entry (" + std::to_string(i + 1) + "," + std::to_string(k + 1) +
                         ") is not a number");
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = row[k].get<double>();
    }
  }
  return m;
}

void require_shape(const Matrix& m, Eigen::Index rows, Eigen::Index cols, const std::string& name) {
  if (m.rows() != rows || m.cols() != cols)
    throw DimensionError("'" + name + "' is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
}

std::vector<std::string> parse_symbols(const Json& j, const char* name) {
  if (!j.is_array()) throw ParseError(std::string("'") + name + "' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& s : j) {
    if (!s.is_string()) throw ParseError(std::string("'") + name + "' must be an array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

Json report_json(const ObjectiveReport& r) {
  Json j;
  j["total"] = r.total;
  Json fwd = Json::object();
  for (const auto& [k, v] : r.forward_transition_terms) fwd[k] = v;
  j["forward_transition_terms"] = fwd;
  j["forward_output_term"] = r.forward_output_term;
  Json bwd = Json::object();
  for (const auto& [k, v] : r.backward_transition_terms) bwd[k] = v;
  j["backward_transition_terms"] = bwd;
  j["backward_output_term"] = r.backward_output_term;
  return j;
}

Json map_json(const OntologyMap& map) {
  Json j;
  j["phi"] = matrix_json(map.phi);
  j["phi_inv"] = matrix_json(map.phi_inv);
  return j;
}

}  // namespace

ValidationError::ValidationError(ValidationReport report)
    : DomainError("validation failed:\n" + format_report(report)), report_(std::move(report)) {}

std::string write_model(const FiniteStateModel& model) {
  Json j;
  j["states"] = model.states();
  j["motor"] = model.motor().symbols();
  j["sensor"] = model.sensor().symbols();
  Json ts = Json::object();
  for (std::size_t x = 0; x < model.motor().size(); ++x) ts[model.motor()[x]] = matrix_json(model.transition(x));
  j["transitions"] = std::move(ts);
  j["output"] = matrix_json(model.output());
  return to_text(j);
}

FiniteStateModel read_model(std::string_view text) {
  const Json doc = parse(text);
  const Json& states_json = field(doc, "states");
  if (!states_json.is_number_integer() || states_json.get<long long>() < 1)
    throw ParseError("'states' must be a positive integer");
  const auto n = static_cast<std::size_t>(states_json.get<long long>());
  const auto ni = static_cast<Eigen::Index>(n);

  Alphabet motor(parse_symbols(field(doc, "motor"), "motor"));
  Alphabet sensor(parse_symbols(field(doc, "sensor"), "sensor"));

  const Json& ts = field(doc, "transitions");
  if (!ts.is_object()) throw ParseError("'transitions' must map motor symbols to matrices");
  if (ts.size() != motor.size())
    throw DimensionError("'transitions' has " + std::to_string(ts.size()) + " matrices for " +
                         std::to_string(motor.size()) + " motor symbols");
  std::vector<Matrix> transitions;
  for (const auto& symbol : motor.symbols()) {
    const auto it = ts.find(symbol);
    if (it == ts.end()) throw DimensionError("no transition matrix for motor symbol '" + symbol + "'");
    Matrix t = parse_matrix(*it, "transitions." + symbol);
    require_shape(t, ni, ni, "transitions." + symbol);
    transitions.push_back(std::move(t));
  }
  Matrix output = parse_matrix(field(doc, "output"), "output");
  require_shape(output, static_cast<Eigen::Index>(sensor.size()), ni, "output");

  FiniteStateModel model(n, std::move(motor), std::move(sensor), std::move(transitions), std::move(output));
  if (auto report = validate_model(model); !report.empty()) throw ValidationError(std::move(report));
  return renormalized(model);
}

std::string write_map(const OntologyMap& map) { return to_text(map_json(map)); }

OntologyMap read_map(std::string_view text) {
  const Json doc = parse(text);
  OntologyMap map{parse_matrix(field(doc, "phi"), "phi"), parse_matrix(field(doc, "phi_inv"), "phi_inv")};
  require_shape(map.phi_inv, map.phi.cols(), map.phi.rows(), "phi_inv");
  ValidationReport report;
  check_column_stochastic("phi", map.phi, report);
  check_column_stochastic("phi_inv", map.phi_inv, report);
  if (!report.empty()) throw ValidationError(std::move(report));
  normalize_columns(map.phi);
  normalize_columns(map.phi_inv);
  return map;
}

std::string write_utility(const UtilityVector& u) {
  Json j;
  j["model_states"] = u.model_states();
  Json values = Json::array();
  for (Eigen::Index i = 0; i < u.values().size(); ++i) values.push_back(u.values()(i));
  j["values"] = std::move(values);
  return to_text(j);
}

UtilityVector read_utility(std::string_view text) {
  const Json doc = parse(text);
  const Json& n = field(doc, "model_states");
  if (!n.is_number_integer() || n.get<long long>() < 1) throw ParseError("'model_states' must be a positive integer");
  const Json& values = field(doc, "values");
  if (!values.is_array()) throw ParseError("'values' must be an array of numbers");
  if (values.size() != n.get<std::size_t>())
    throw DimensionError("'values' has " + std::to_string(values.size()) + " entries but model_states is " +
                         std::to_string(n.get<long long>()));
  Vector v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i].is_number()) throw ParseError("'values' must be an array of numbers");
    v(static_cast<Eigen::Index>(i)) = values[i].get<double>();
  }
  return UtilityVector(std::move(v));
}

std::string write_report(const ObjectiveReport& report) { return to_text(report_json(report)); }

std::string write_result(const OptimizationResult& result) {
  Json j;
  j["best_restart"] = result.best_restart;
  j["best_map"] = map_json(result.best_map);
  j["best_report"] = report_json(result.best_report);
  Json runs = Json::array();
  for (const auto& r : result.per_restart) {
    Json run;
    run["restart"] = r.restart;
    run["stream_seed"] = r.stream_seed;
    run["final_total"] = r.final_total;
    run["iterations"] = r.iterations;
    runs.push_back(std::move(run));
  }
  j["per_restart"] = std::move(runs);
  return to_text(j);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path.string() + "'");
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("error writing '" + path.string() + "'");
}

}  // namespace ontomap
