#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ontomap/errors.hpp"
#include "ontomap/model.hpp"
#include "ontomap/objective.hpp"
#include "ontomap/optimizer.hpp"
#include "ontomap/utility.hpp"

// Text formats for models, maps, utilities and reports. Documents are JSON;
// matrices are nested arrays written row by row (row-major) but read with the
// column-stochastic convention: each column must sum to 1. See
// docs/file_formats.md.

namespace ontomap {

/// A model or map file parsed but its matrices are not stochastic.
class ValidationError : public DomainError {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Canonical text of a model. Writing the same model always yields the same bytes.
std::string write_model(const FiniteStateModel& model);

/// Parses, validates (tolerance 1e-9) and renormalizes columns to sum to 1.
/// Throws ParseError, DimensionError (declared alphabets vs matrix shapes) or
/// ValidationError.
FiniteStateModel read_model(std::string_view text);

std::string write_map(const OntologyMap& map);
/// Same validation and renormalization rules as read_model.
OntologyMap read_map(std::string_view text);

std::string write_utility(const UtilityVector& u);
UtilityVector read_utility(std::string_view text);

std::string write_report(const ObjectiveReport& report);
std::string write_result(const OptimizationResult& result);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

}  // namespace ontomap
