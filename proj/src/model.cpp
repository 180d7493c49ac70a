#include "ontomap/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "ontomap/errors.hpp"

namespace ontomap {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw DomainError("alphabet must not be empty");
  std::set<std::string> seen;
  for (const auto& s : symbols_) {
    if (!seen.insert(s).second) throw DomainError("duplicate alphabet symbol '" + s + "'");
  }
}

std::optional<std::size_t> Alphabet::index_of(const std::string& symbol) const {
  const auto it = std::find(symbols_.begin(), symbols_.end(), symbol);
  if (it == symbols_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - symbols_.begin());
}

StateDistribution::StateDistribution(Vector probs) : probs_(std::move(probs)) {
  if (probs_.size() == 0) throw DomainError("state distribution must not be empty");
  if ((probs_.array() < 0.0).any() || !probs_.allFinite())
    throw DomainError("state distribution has a negative or non-finite entry");
  if (std::abs(probs_.sum() - 1.0) > kStochasticTolerance)
    throw DomainError("state distribution does not sum to 1");
}

StateDistribution StateDistribution::point_mass(std::size_t n, std::size_t state) {
  if (state >= n) throw DimensionError("point mass state out of range");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(n));
  v(static_cast<Eigen::Index>(state)) = 1.0;
  return StateDistribution(std::move(v));
}

StateDistribution StateDistribution::uniform(std::size_t n) {
  return StateDistribution(Vector::Constant(static_cast<Eigen::Index>(n), 1.0 / static_cast<double>(n)));
}

FiniteStateModel::FiniteStateModel(std::size_t states, Alphabet motor, Alphabet sensor,
                                   std::vector<Matrix> transitions, Matrix output)
    : states_(states),
      motor_(std::move(motor)),
      sensor_(std::move(sensor)),
      transitions_(std::move(transitions)),
      output_(std::move(output)) {
  if (states_ == 0) throw DomainError("model needs at least one state");
  const auto n = static_cast<Eigen::Index>(states_);
  if (transitions_.size() != motor_.size()) {
    throw DimensionError("expected " + std::to_string(motor_.size()) + " transition matrices, got " +
                         std::to_string(transitions_.size()));
  }
  for (std::size_t x = 0; x < transitions_.size(); ++x) {
    if (transitions_[x].rows() != n || transitions_[x].cols() != n)
      throw DimensionError("transition matrix for '" + motor_[x] + "' is not " +
                           std::to_string(states_) + "x" + std::to_string(states_));
  }
  if (output_.rows() != static_cast<Eigen::Index>(sensor_.size()) || output_.cols() != n)
    throw DimensionError("output matrix is not " + std::to_string(sensor_.size()) + "x" +
                         std::to_string(states_));
}

const Matrix& FiniteStateModel::transition(const std::string& motor_symbol) const {
  const auto idx = motor_.index_of(motor_symbol);
  if (!idx) throw DomainError("unknown motor symbol '" + motor_symbol + "'");
  return transitions_[*idx];
}

bool FiniteStateModel::operator==(const FiniteStateModel& other) const {
  if (states_ != other.states_ || motor_ != other.motor_ || sensor_ != other.sensor_) return false;
  for (std::size_t x = 0; x < transitions_.size(); ++x) {
    if (transitions_[x] != other.transitions_[x]) return false;
  }
  return output_ == other.output_;
}

void check_column_stochastic(const std::string& name, const Matrix& m, ValidationReport& out) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const double v = m(i, j);
      if (!(v >= 0.0 && v <= 1.0)) {
        std::ostringstream msg;
        msg << name << " entry (" << i + 1 << "," << j + 1 << ") = " << v << " outside [0,1]";
        out.push_back({name, static_cast<std::size_t>(j + 1), static_cast<std::size_t>(i + 1), v, msg.str()});
      }
      sum += v;
    }
    if (!(std::abs(sum - 1.0) <= kStochasticTolerance)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << name << " column " << j + 1 << " sums to " << sum;
      out.push_back({name, static_cast<std::size_t>(j + 1), std::nullopt, sum, msg.str()});
    }
  }
}

ValidationReport validate_model(const FiniteStateModel& model) {
  ValidationReport report;
  for (std::size_t x = 0; x < model.motor().size(); ++x) {
    check_column_stochastic("T^" + model.motor()[x], model.transition(x), report);
  }
  check_column_stochastic("A", model.output(), report);
  return report;
}

std::string format_report(const ValidationReport& report) {
  std::string out;
  for (const auto& v : report) {
    out += v.message;
    out += '\n';
  }
  return out;
}

StateDistribution step(const FiniteStateModel& model, const StateDistribution& d,
                       const std::string& motor_symbol) {
  if (d.size() != model.states())
    throw DimensionError("distribution has " + std::to_string(d.size()) + " entries, model has " +
                         std::to_string(model.states()) + " states");
  return StateDistribution(model.transition(motor_symbol) * d.probs());
}

Vector observe(const FiniteStateModel& model, const StateDistribution& d) {
  if (d.size() != model.states())
    throw DimensionError("distribution has " + std::to_string(d.size()) + " entries, model has " +
                         std::to_string(model.states()) + " states");
  return model.output() * d.probs();
}

void require_same_alphabets(const FiniteStateModel& a, const FiniteStateModel& b) {
  if (a.motor() != b.motor()) throw DimensionError("models have different motor alphabets");
  if (a.sensor() != b.sensor()) throw DimensionError("models have different sensor alphabets");
}

FiniteStateModel renormalized(const FiniteStateModel& model) {
  std::vector<Matrix> ts = model.transitions();
  for (auto& t : ts) normalize_columns(t);
  Matrix a = model.output();
  normalize_columns(a);
  return FiniteStateModel(model.states(), model.motor(), model.sensor(), std::move(ts), std::move(a));
}

Matrix permutation_matrix(const std::vector<std::size_t>& perm) {
  const auto n = static_cast<Eigen::Index>(perm.size());
  Matrix p = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) p(static_cast<Eigen::Index>(perm[i]), i) = 1.0;
  return p;
}

FiniteStateModel permute_states(const FiniteStateModel& model, const std::vector<std::size_t>& perm) {
  if (perm.size() != model.states()) throw DimensionError("permutation length differs from state count");
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) throw DomainError("not a permutation");
    seen[p] = true;
  }
  const Matrix p = permutation_matrix(perm);
  std::vector<Matrix> ts;
  for (const auto& t : model.transitions()) ts.push_back(p * t * p.transpose());
  return FiniteStateModel(model.states(), model.motor(), model.sensor(), std::move(ts),
                          model.output() * p.transpose());
}

}  // namespace ontomap
