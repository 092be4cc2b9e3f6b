#pragma once

// The acceptance suite, shared by `heatinv verify` and the acceptance test
// binary. Each criterion runs independently and reports pass/fail with timing.

#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "heatinv/heat_constants.hpp"
#include "heatinv/jet.hpp"
#include "heatinv/rational.hpp"
#include "heatinv/rational_matrix.hpp"

namespace heatinv::verify {

enum class Level { Quick, Full };

std::optional<Level> parseLevel(std::string_view name);

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  bool skipped = false;
  std::string detail;
  double seconds = 0;
  double budgetSeconds = 0;
};

struct Criterion {
  int id;
  std::string title;
  double budgetSeconds;
  // Returns a detail line; throws std::runtime_error (or Error) on failure.
  std::function<std::string(Level)> check;
  bool fullOnly = false;
};

const std::vector<Criterion>& acceptanceCriteria();

/// Runs every criterion (full-only ones are reported as skipped at Quick).
/// A criterion over its time budget fails. `progress`, when given, receives a
/// line per criterion as it finishes.
std::vector<CriterionResult> runAll(Level level, std::ostream* progress = nullptr);

CriterionResult runCriterion(const Criterion& criterion, Level level);

std::string formatLine(const CriterionResult& r);

/// Criterion 1 with an explicit constant table (mutation tests swap in a
/// perturbed one). Throws on mismatch.
std::string checkGoldenA1(const HeatConstantTable& table);

// Random inputs. Numerators in [-range, range], denominators in [1, range].
Rational randomRational(std::mt19937_64& rng, int range = 5);
/// rho-jet with rho(0,0) in [1, range] and every coefficient up to `order` random.
Jet2D<Rational> randomRhoJet(std::mt19937_64& rng, int order, int range = 5);
RationalMatrix randomMatrix(std::mt19937_64& rng, int dim, int range = 5);

}  // namespace heatinv::verify
