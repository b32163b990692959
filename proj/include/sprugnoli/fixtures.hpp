#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sprugnoli/matrix.hpp"
#include "sprugnoli/series.hpp"

namespace sprugnoli::fixtures {

using Rows = std::vector<std::vector<long>>;

/// A printed value known to be wrong. `location` names the compared object
/// and index, e.g. "production(7,3)" or "C[2]"; `printed` is the value as
/// published and `corrected` the value the computation must produce.
struct Erratum {
  std::string fixture;
  std::string location;
  std::string printed;
  std::string corrected;
  std::string evidence;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  std::vector<std::string> errata;  // one line per tolerated erratum
};

struct FixtureReport {
  std::string id;
  std::string source;
  std::vector<CheckResult> checks;

  bool pass() const;
};

struct Fixture {
  std::string id;
  std::string family;
  /// Slot name and expression, e.g. {"g", "1/(1-x)"}.
  std::vector<std::pair<std::string, std::string>> construction;
  std::size_t period = 2;
  /// Where the expected values were published.
  std::string source;
  FixtureReport (*run)();
};

const std::vector<Fixture>& registry();
const std::vector<Erratum>& errata();

/// Fixtures whose id matches the shell-style glob (empty matches all).
std::vector<const Fixture*> select(const std::string& glob);

/// Collects comparisons of published values against computed ones.
/// A mismatch passes only if it is a listed erratum and the computed value
/// equals the listed correction.
class Checker {
 public:
  Checker(std::string fixture, std::string source);

  void matrix(const std::string& name, const Rows& printed, const TriMatrix& computed);
  void matrix(const std::string& name, const Rows& printed, const Matrix& computed);
  void sequence(const std::string& name, const std::vector<long>& printed, const std::vector<Rational>& computed);
  void sequence(const std::string& name, const std::vector<long>& printed, const Series& computed);
  /// Evaluates `printed` with the expression parser at the computed order.
  void series(const std::string& name, const std::string& printed, const Series& computed);
  void series_equal(const std::string& name, const Series& expected, const Series& computed);
  void truth(const std::string& name, bool ok, const std::string& detail = {});
  /// Runs `body`, recording any exception as a failed check.
  template <class F>
  void guarded(const std::string& name, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      truth(name, false, e.what());
    }
  }

  FixtureReport take() { return std::move(report_); }

 private:
  const Erratum* find(const std::string& location) const;
  void entries(const std::string& name, const std::vector<std::pair<std::string, std::pair<long, Rational>>>& cells);

  std::string fixture_;
  FixtureReport report_;
};

}  // namespace sprugnoli::fixtures
