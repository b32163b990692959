#include "sprugnoli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include "sprugnoli/double_riordan.hpp"
#include "sprugnoli/expr.hpp"
#include "sprugnoli/fixtures.hpp"
#include "sprugnoli/higher_order.hpp"
#include "sprugnoli/production.hpp"
#include "sprugnoli/riordan.hpp"
#include "sprugnoli/sprugnoli.hpp"

namespace sprugnoli {

namespace {

using json = nlohmann::ordered_json;
using Element = std::variant<RiordanPair, StretchedPair, DoubleTriple, SprugnoliTriple, GeneralTuple>;
using Named = std::vector<std::pair<std::string, Series>>;

constexpr std::size_t kMaxSlots = 5;

struct Options {
  std::string family = "sprugnoli";
  std::string g;
  std::vector<std::string> f = std::vector<std::string>(kMaxSlots);
  std::string u;
  std::vector<std::string> v = std::vector<std::string>(kMaxSlots);
  std::size_t m = 3;
  std::size_t order = 12;
  std::size_t dim = 9;
  std::string format = "pretty";
  std::string seq;
  std::size_t period = 0;
  std::string glob;
  bool list = false;
};

// Usage problems that CLI11 cannot see, e.g. a missing series slot.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Series slot(const std::string& text, const std::string& name, std::size_t order) {
  if (text.empty()) throw UsageError("missing --" + name);
  return expr::eval(text, order);
}

Element make_element(const Options& o, const std::string& g, const std::vector<std::string>& f, char prefix) {
  const std::string p(1, prefix);
  const std::string gname = prefix == 'f' ? "g" : "u";
  const std::size_t n = o.order;
  if (o.family == "riordan") return RiordanPair(slot(g, gname, n), slot(f[0], p + "1", n));
  if (o.family == "stretched") return StretchedPair(slot(g, gname, n), slot(f[0], p + "1", n));
  if (o.family == "double") return DoubleTriple(slot(g, gname, n), slot(f[0], p + "1", n), slot(f[1], p + "2", n));
  if (o.family == "sprugnoli")
    return SprugnoliTriple(slot(g, gname, n), slot(f[0], p + "1", n), slot(f[1], p + "2", n));
  if (o.m < 2 || o.m > kMaxSlots) throw UsageError("--m must be between 2 and " + std::to_string(kMaxSlots));
  std::vector<Series> fs;
  for (std::size_t i = 0; i + 1 < o.m; ++i) fs.push_back(slot(f[i], p + std::to_string(i + 1), n));
  return GeneralTuple(o.m, slot(g, gname, n), std::move(fs), slot(f[o.m - 1], p + std::to_string(o.m), n));
}

TriMatrix matrix_of(const Element& e, std::size_t dim) {
  struct {
    std::size_t dim;
    TriMatrix operator()(const RiordanPair& x) const { return build_riordan(x, dim); }
    TriMatrix operator()(const StretchedPair& x) const { return build_stretched(x, dim); }
    TriMatrix operator()(const DoubleTriple& x) const { return build_double(x, dim); }
    TriMatrix operator()(const SprugnoliTriple& x) const { return build_sprugnoli(x, dim); }
    TriMatrix operator()(const GeneralTuple& x) const { return build_general(x, dim); }
  } v{dim};
  return std::visit(v, e);
}

Series apply_element(const Element& e, const Series& h) {
  struct {
    const Series& h;
    Series operator()(const RiordanPair& x) const { return riordan_apply(x, h); }
    Series operator()(const StretchedPair& x) const { return stretched_apply(x, h); }
    Series operator()(const DoubleTriple& x) const {
      return Series(apply(build_double(x, x.order() + 1), h.truncated(x.order())));
    }
    Series operator()(const SprugnoliTriple& x) const { return sprugnoli_apply(x, h); }
    Series operator()(const GeneralTuple& x) const { return general_apply(x, h); }
  } v{h};
  return std::visit(v, e);
}

Named components(const Element& e) {
  struct {
    Named operator()(const RiordanPair& x) const { return {{"g", x.g()}, {"f", x.f()}}; }
    Named operator()(const StretchedPair& x) const { return {{"g", x.g()}, {"f", x.xf()}}; }
    Named operator()(const DoubleTriple& x) const { return {{"g", x.g()}, {"f1", x.f1()}, {"f2", x.f2()}}; }
    Named operator()(const SprugnoliTriple& x) const { return {{"g", x.g()}, {"f1", x.f1()}, {"f2", x.f2()}}; }
    Named operator()(const GeneralTuple& x) const {
      Named out{{"g", x.g()}};
      for (std::size_t i = 0; i < x.fs().size(); ++i) out.push_back({"f" + std::to_string(i + 1), x.fs()[i]});
      out.push_back({"f" + std::to_string(x.period()), x.fm()});
      return out;
    }
  } v;
  return std::visit(v, e);
}

std::size_t default_period(const Element& e) {
  if (const auto* t = std::get_if<GeneralTuple>(&e)) return t->period();
  if (std::holds_alternative<SprugnoliTriple>(e) || std::holds_alternative<DoubleTriple>(e)) return 2;
  return 1;
}

// --- formatting -------------------------------------------------------------

json strings(std::span<const Rational> v) {
  json a = json::array();
  for (const Rational& q : v) a.push_back(q.get_str());
  return a;
}

json entries(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

std::string joined(std::span<const Rational> v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += v[i].get_str();
  }
  return s;
}

void write_csv(std::ostream& out, const Matrix& m) {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out << (j ? "," : "") << m(i, j).get_str();
    out << '\n';
  }
}

json components_json(const Named& parts) {
  json c = json::object();
  for (const auto& [name, s] : parts) c[name] = strings(s.coeffs());
  return c;
}

void write_components(std::ostream& out, const Named& parts) {
  for (const auto& [name, s] : parts) out << name << " = " << s.to_string() << '\n';
}

json stripes_json(const ProductionStripes& s) {
  json j;
  j["period"] = s.period;
  j["z"] = strings(s.z);
  json st = json::array();
  for (const auto& v : s.stripes) st.push_back(strings(v));
  j["stripes"] = st;
  return j;
}

// --- commands ---------------------------------------------------------------

struct Context {
  const Options& o;
  std::ostream& out;
  std::ostream& err;
};

void emit_matrix(const Context& c, const Matrix& m, const Named* parts, json extra = json::object()) {
  if (c.o.format == "json") {
    json j;
    j["family"] = c.o.family;
    j["dim"] = m.dim();
    if (parts) j["components"] = components_json(*parts);
    j["entries"] = entries(m);
    for (auto& [k, v] : extra.items()) j[k] = v;
    c.out << j.dump(2) << '\n';
  } else if (c.o.format == "csv") {
    write_csv(c.out, m);
  } else {
    if (parts) write_components(c.out, *parts);
    c.out << to_string(m);
  }
}

int cmd_build(const Context& c) {
  const Element e = make_element(c.o, c.o.g, c.o.f, 'f');
  emit_matrix(c, matrix_of(e, c.o.dim).dense(), nullptr);
  return kOk;
}

int cmd_apply(const Context& c) {
  const Element e = make_element(c.o, c.o.g, c.o.f, 'f');
  const Series h = slot(c.o.seq, "seq", c.o.order);
  const Series r = apply_element(e, h);
  const std::vector<Rational> direct = apply(matrix_of(e, c.o.dim), h);
  const std::span<const Rational> shown = r.coeffs().subspan(0, std::min(c.o.dim, r.coeffs().size()));
  if (!std::equal(shown.begin(), shown.end(), direct.begin())) {
    c.err << "error: series action disagrees with the matrix product\n";
    return kMismatch;
  }
  if (c.o.format == "json") {
    json j;
    j["family"] = c.o.family;
    j["dim"] = c.o.dim;
    j["sequence"] = strings(shown);
    c.out << j.dump(2) << '\n';
  } else {
    c.out << joined(shown, c.o.format == "csv" ? "," : ", ") << '\n';
  }
  return kOk;
}

std::optional<Element> multiply(const Element& a, const Element& b) {
  if (const auto* x = std::get_if<RiordanPair>(&a)) return riordan_mul(*x, std::get<RiordanPair>(b));
  if (const auto* x = std::get_if<DoubleTriple>(&a)) return double_mul(*x, std::get<DoubleTriple>(b));
  if (const auto* x = std::get_if<SprugnoliTriple>(&a)) return sprugnoli_mul(*x, std::get<SprugnoliTriple>(b));
  return std::nullopt;
}

int cmd_mul(const Context& c) {
  if (c.o.family == "stretched") throw MembershipError("stretched arrays are not closed under multiplication");
  const Element a = make_element(c.o, c.o.g, c.o.f, 'f');
  const Element b = make_element(c.o, c.o.u, c.o.v, 'v');
  const TriMatrix product = matrix_of(a, c.o.dim) * matrix_of(b, c.o.dim);
  const std::optional<Element> r = multiply(a, b);
  if (!r) {
    emit_matrix(c, product.dense(), nullptr);
    return kOk;
  }
  if (matrix_of(*r, c.o.dim) != product) {
    c.err << "error: product components disagree with the matrix product\n";
    return kMismatch;
  }
  const Named parts = components(*r);
  emit_matrix(c, product.dense(), &parts);
  return kOk;
}

int cmd_inv(const Context& c) {
  if (c.o.family == "stretched") throw MembershipError("stretched arrays are not invertible");
  const Element a = make_element(c.o, c.o.g, c.o.f, 'f');
  const TriMatrix m = matrix_of(a, c.o.dim);
  if (const auto* t = std::get_if<GeneralTuple>(&a)) {
    const GeneralInverse gi = general_inv(*t, c.o.dim);
    if (gi.matrix * m != TriMatrix::identity(c.o.dim)) {
      c.err << "error: inverse check failed\n";
      return kMismatch;
    }
    json extra;
    extra["read_back"] = gi.message;
    if (c.o.format == "pretty") c.out << "read-back: " << gi.message << '\n';
    emit_matrix(c, gi.matrix.dense(), nullptr, extra);
    return kOk;
  }
  Element r = a;
  if (const auto* x = std::get_if<RiordanPair>(&a)) r = riordan_inv(*x);
  if (const auto* x = std::get_if<DoubleTriple>(&a)) r = double_inv(*x);
  if (const auto* x = std::get_if<SprugnoliTriple>(&a)) r = sprugnoli_inv(*x);
  const TriMatrix inv = matrix_of(r, c.o.dim);
  if (inv * m != TriMatrix::identity(c.o.dim)) {
    c.err << "error: inverse components disagree with the matrix inverse\n";
    return kMismatch;
  }
  const Named parts = components(r);
  emit_matrix(c, inv.dense(), &parts);
  return kOk;
}

int cmd_production(const Context& c) {
  const Element e = make_element(c.o, c.o.g, c.o.f, 'f');
  const std::size_t period = c.o.period ? c.o.period : default_period(e);
  const Matrix p = production_matrix(matrix_of(e, c.o.dim + 1));
  json extra;
  std::optional<ProductionStripes> stripes;
  try {
    stripes = extract_stripes(p, period);
    extra["stripes"] = stripes_json(*stripes);
  } catch (const MatrixError& ex) {
    extra["stripes"] = nullptr;
    extra["stripe_error"] = ex.what();
  }
  emit_matrix(c, p, nullptr, extra);
  if (c.o.format == "pretty") {
    if (stripes) {
      c.out << "Z: " << joined(stripes->z, ", ") << '\n';
      for (std::size_t j = 0; j < stripes->stripes.size(); ++j)
        c.out << "stripe " << j << ": " << joined(stripes->stripes[j], ", ") << '\n';
    } else {
      c.out << "stripes: " << extra["stripe_error"].get<std::string>() << '\n';
    }
  }
  return kOk;
}

int cmd_verify(const Context& c) {
  const auto selected = fixtures::select(c.o.glob);
  if (c.o.list) {
    for (const auto* f : selected) {
      c.out << std::left << std::setw(22) << f->id << std::setw(11) << f->family << f->source << '\n';
      for (const auto& [slot_name, text] : f->construction) c.out << "    " << slot_name << " = " << text << '\n';
    }
    c.out << "\nerrata:\n";
    for (const auto& e : fixtures::errata())
      if (c.o.glob.empty() || std::any_of(selected.begin(), selected.end(), [&](auto* f) { return f->id == e.fixture; }))
        c.out << "  " << e.fixture << " " << e.location << ": printed " << e.printed << ", corrected " << e.corrected
              << "\n      " << e.evidence << '\n';
    return kOk;
  }
  if (selected.empty()) {
    c.err << "no fixture matches '" << c.o.glob << "'\n";
    return kMismatch;
  }
  std::size_t passed = 0;
  for (const auto* f : selected) {
    const fixtures::FixtureReport r = f->run();
    c.out << (r.pass() ? "PASS " : "FAIL ") << r.id << "  (" << r.source << ")\n";
    for (const auto& check : r.checks) {
      if (!check.pass) c.out << "  FAIL " << check.name << ": " << check.detail << '\n';
      for (const auto& e : check.errata) c.out << "  ERRATUM " << e << '\n';
    }
    passed += r.pass();
  }
  c.out << passed << "/" << selected.size() << " fixtures passed\n";
  return passed == selected.size() ? kOk : kMismatch;
}

void add_element_flags(CLI::App* cmd, Options& o, bool second_operand) {
  cmd->add_option("--family", o.family, "riordan|stretched|double|sprugnoli|general")
      ->check(CLI::IsMember({"riordan", "stretched", "double", "sprugnoli", "general"}));
  cmd->add_option("--g", o.g, "first component");
  cmd->add_option("--f1,--f", o.f[0], "second component");
  for (std::size_t i = 1; i < kMaxSlots; ++i)
    cmd->add_option("--f" + std::to_string(i + 1), o.f[i], "component f" + std::to_string(i + 1));
  if (second_operand) {
    cmd->add_option("--u", o.u, "first component of the right operand");
    cmd->add_option("--v1,--v", o.v[0], "second component of the right operand");
    for (std::size_t i = 1; i < kMaxSlots; ++i)
      cmd->add_option("--v" + std::to_string(i + 1), o.v[i], "component v" + std::to_string(i + 1));
  }
  cmd->add_option("--m", o.m, "period of a general tuple (number of f components)");
  cmd->add_option("--order", o.order, "truncation order of every series")->check(CLI::Range(1, 400));
  cmd->add_option("--dim", o.dim, "matrix dimension")->check(CLI::Range(1, 400));
  cmd->add_option("--format", o.format, "pretty|json|csv")->check(CLI::IsMember({"pretty", "json", "csv"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Riordan, Sprugnoli and related triangular arrays with exact rational arithmetic", "sprugnoli"};
  app.require_subcommand(1);
  auto* build = app.add_subcommand("build", "print the matrix of an element");
  auto* apply_cmd = app.add_subcommand("apply", "apply an element to a power series");
  auto* mul = app.add_subcommand("mul", "multiply two elements");
  auto* inv = app.add_subcommand("inv", "invert an element");
  auto* production = app.add_subcommand("production", "production matrix and its stripes");
  auto* verify = app.add_subcommand("verify", "check the built-in fixtures");
  for (auto* cmd : {build, apply_cmd, mul, inv, production}) add_element_flags(cmd, o, cmd == mul);
  apply_cmd->add_option("--seq", o.seq, "series to transform")->required();
  production->add_option("--period", o.period, "stripe period (default from the family)");
  verify->add_option("filter", o.glob, "fixture id glob");
  verify->add_flag("--list", o.list, "print fixtures, their sources and the errata table");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  if (o.dim > o.order + 1) o.order = o.dim - 1;
  const Context c{o, out, err};
  try {
    if (*build) return cmd_build(c);
    if (*apply_cmd) return cmd_apply(c);
    if (*mul) return cmd_mul(c);
    if (*inv) return cmd_inv(c);
    if (*production) return cmd_production(c);
    return cmd_verify(c);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const MembershipError& e) {
    err << "membership error: " << e.what() << '\n';
    return kMembershipError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kMembershipError;
  }
}

}  // namespace sprugnoli
