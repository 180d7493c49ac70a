#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ontomap/matrix.hpp"

namespace ontomap {

/// Ordered set of distinct symbol names. The order fixes matrix indexing.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols);
  Alphabet(std::initializer_list<std::string> symbols)
      : Alphabet(std::vector<std::string>(symbols)) {}

  std::size_t size() const { return symbols_.size(); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  const std::string& operator[](std::size_t i) const { return symbols_[i]; }

  std::optional<std::size_t> index_of(const std::string& symbol) const;
  bool contains(const std::string& symbol) const { return index_of(symbol).has_value(); }

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> symbols_;
};

/// Probability vector over the hidden states of a model.
class StateDistribution {
 public:
  /// Throws DomainError unless entries are nonnegative and sum to 1 within 1e-9.
  explicit StateDistribution(Vector probs);

  static StateDistribution point_mass(std::size_t n, std::size_t state);
  static StateDistribution uniform(std::size_t n);

  std::size_t size() const { return static_cast<std::size_t>(probs_.size()); }
  const Vector& probs() const { return probs_; }
  double operator[](std::size_t i) const { return probs_(static_cast<Eigen::Index>(i)); }

 private:
  Vector probs_;
};

/// Hidden-state model driven by motor symbols and emitting sensor symbols.
///
/// Matrices are column-stochastic: column j of T^x is the distribution of the
/// next state given current state j and motor symbol x; column j of the output
/// matrix is the sensor distribution in state j. The constructor checks shapes
/// only; use validate_model() for the stochasticity invariants.
class FiniteStateModel {
 public:
  FiniteStateModel(std::size_t states, Alphabet motor, Alphabet sensor,
                   std::vector<Matrix> transitions, Matrix output);

  std::size_t states() const { return states_; }
  const Alphabet& motor() const { return motor_; }
  const Alphabet& sensor() const { return sensor_; }

  /// Transition matrices in motor-alphabet order.
  const std::vector<Matrix>& transitions() const { return transitions_; }
  const Matrix& transition(std::size_t motor_index) const { return transitions_.at(motor_index); }
  /// Throws DomainError for an unknown symbol.
  const Matrix& transition(const std::string& motor_symbol) const;
  const Matrix& output() const { return output_; }

  bool operator==(const FiniteStateModel& other) const;

 private:
  std::size_t states_;
  Alphabet motor_;
  Alphabet sensor_;
  std::vector<Matrix> transitions_;
  Matrix output_;
};

struct Violation {
  std::string matrix;   // "T^<symbol>" or "A"
  std::size_t column;   // 1-based
  std::optional<std::size_t> row;  // 1-based; set for an out-of-range entry
  double value;         // column sum, or the offending entry
  std::string message;
};

using ValidationReport = std::vector<Violation>;

ValidationReport validate_model(const FiniteStateModel& model);

/// Appends one violation per out-of-range entry and per column whose sum is
/// off by more than 1e-9.
void check_column_stochastic(const std::string& name, const Matrix& m, ValidationReport& out);
std::string format_report(const ValidationReport& report);

/// T^x · d
StateDistribution step(const FiniteStateModel& model, const StateDistribution& d,
                       const std::string& motor_symbol);

/// A · d, a distribution over the sensor alphabet.
Vector observe(const FiniteStateModel& model, const StateDistribution& d);

/// Throws DimensionError if the two models do not share motor and sensor alphabets.
void require_same_alphabets(const FiniteStateModel& a, const FiniteStateModel& b);

/// Copy of `model` with every column rescaled to sum to exactly 1.
FiniteStateModel renormalized(const FiniteStateModel& model);

/// Relabels states: new state perm[i] is old state i.
FiniteStateModel permute_states(const FiniteStateModel& model, const std::vector<std::size_t>& perm);

/// Permutation matrix P with P(perm[i], i) = 1, so P·e_i = e_perm[i].
Matrix permutation_matrix(const std::vector<std::size_t>& perm);

}  // namespace ontomap
