#include "doctest.h"

#include <set>

#include "sprugnoli/fixtures.hpp"

namespace fx = sprugnoli::fixtures;

TEST_CASE("every fixture passes") {
  for (const auto& f : fx::registry()) {
    const auto report = f.run();
    CAPTURE(f.id);
    for (const auto& c : report.checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("each erratum is used by its fixture") {
  std::set<std::string> seen;
  for (const auto& f : fx::registry())
    for (const auto& c : f.run().checks)
      for (const auto& line : c.errata) seen.insert(f.id + ": " + line);
  for (const auto& e : fx::errata()) {
    bool used = false;
    for (const auto& line : seen) used = used || (line.find(e.fixture) == 0 && line.find(e.location) != std::string::npos);
    CAPTURE(e.location);
    CHECK(used);
    CHECK_FALSE(e.evidence.empty());
  }
}

TEST_CASE("glob selection") {
  CHECK(fx::select("").size() == fx::registry().size());
  CHECK(fx::select("higher-*").size() == 1);
  CHECK(fx::select("nothing").empty());
}

TEST_CASE("a mismatch without an erratum fails") {
  fx::Checker c("scratch", "test");
  c.sequence("seq", {1, 2, 3}, std::vector<sprugnoli::Rational>{1, 2, 4});
  c.sequence("ok", {1, 2}, std::vector<sprugnoli::Rational>{1, 2});
  const auto r = c.take();
  CHECK_FALSE(r.pass());
  CHECK_FALSE(r.checks[0].pass);
  CHECK(r.checks[1].pass);
}
