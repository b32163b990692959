#include "sprugnoli/fixtures.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <iterator>

#include "sprugnoli/double_riordan.hpp"
#include "sprugnoli/expr.hpp"
#include "sprugnoli/higher_order.hpp"
#include "sprugnoli/poly_recurrence.hpp"
#include "sprugnoli/production.hpp"
#include "sprugnoli/riordan.hpp"
#include "sprugnoli/sprugnoli.hpp"

namespace sprugnoli::fixtures {

namespace {

constexpr std::size_t kOrder = 12;

Series E(const std::string& text, std::size_t order = kOrder) { return expr::eval(text, order); }

SprugnoliTriple triple(const std::string& g, const std::string& f1, const std::string& f2,
                       std::size_t order = kOrder) {
  return SprugnoliTriple(E(g, order), E(f1, order), E(f2, order));
}

std::vector<Rational> prefix(const std::vector<Rational>& v, std::size_t n) {
  return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(n, v.size()))};
}

std::vector<Rational> to_rationals(const std::vector<long>& v) { return {v.begin(), v.end()}; }

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational acc;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) acc += a[i] * b[i];
  return acc;
}

std::vector<std::size_t> zeros_below(const StripeSumReport& r, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i : r.zero_indices)
    if (i < n) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------------------

FixtureReport riordan_binomial() {
  const auto& f = registry()[0];
  Checker c(f.id, f.source);
  c.guarded("build", [&] {
    RiordanPair p(E("1/(1-x)"), E("x/(1-x)^2"));
    const TriMatrix m = build_riordan(p, 7);
    c.matrix("matrix", {{1, 0, 0, 0, 0, 0, 0},
                        {1, 1, 0, 0, 0, 0, 0},
                        {1, 3, 1, 0, 0, 0, 0},
                        {1, 6, 5, 1, 0, 0, 0},
                        {1, 10, 15, 7, 1, 0, 0},
                        {1, 15, 35, 28, 9, 1, 0},
                        {1, 21, 70, 84, 45, 11, 1}},
             m);
    c.sequence("row sums", {1, 2, 5, 13, 34, 89, 233, 610, 1597, 4181, 10946}, riordan_apply(p, E("1/(1-x)")));
    c.series("row sums gf", "(1-x)/(1-3*x+x^2)", riordan_apply(p, E("1/(1-x)")));
  });
  return c.take();
}

FixtureReport stretched_fibonacci() {
  const auto& f = registry()[1];
  Checker c(f.id, f.source);
  c.guarded("build", [&] {
    StretchedPair p(E("1/(1-x)"), E("x^2/(1-x-x^2)"));
    const Rows printed = {{1, 0, 0, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0, 0, 0},  {1, 1, 0, 0, 0, 0, 0, 0, 0},
                          {1, 2, 0, 0, 0, 0, 0, 0, 0}, {1, 4, 1, 0, 0, 0, 0, 0, 0},  {1, 7, 3, 0, 0, 0, 0, 0, 0},
                          {1, 12, 8, 1, 0, 0, 0, 0, 0}, {1, 20, 18, 4, 0, 0, 0, 0, 0}, {1, 33, 38, 13, 1, 0, 0, 0, 0}};
    const TriMatrix m = build_stretched(p, 9);
    c.matrix("matrix", printed, m);
    const Series fib = E("1/(1-x-x^2)");
    c.sequence("matrix times Fibonacci", {1, 1, 2, 3, 7, 14, 32, 69, 159}, apply(m, fib));
    c.sequence("action on Fibonacci", {1, 1, 2, 3, 7, 14, 32, 69, 159}, stretched_apply(p, fib));
    c.series("action gf", "(1-x-x^2)^2/((1-x)*(1-2*x+3*x^3+x^4))", stretched_apply(p, fib));
  });
  return c.take();
}

FixtureReport sprugnoli_example() {
  const auto& f = registry()[2];
  Checker c(f.id, f.source);
  c.guarded("build", [&] {
    const SprugnoliTriple t = triple("1/(1-x)", "x*(1+x)/(1-x)", "x/(1-x^2)");
    c.matrix("matrix", {{1, 0, 0, 0, 0, 0, 0, 0, 0},
                        {1, 1, 0, 0, 0, 0, 0, 0, 0},
                        {1, 3, 1, 0, 0, 0, 0, 0, 0},
                        {1, 5, 1, 1, 0, 0, 0, 0, 0},
                        {1, 7, 2, 3, 1, 0, 0, 0, 0},
                        {1, 9, 2, 6, 1, 1, 0, 0, 0},
                        {1, 11, 3, 10, 3, 3, 1, 0, 0},
                        {1, 13, 3, 15, 3, 7, 1, 1, 0},
                        {1, 15, 4, 21, 6, 13, 4, 3, 1}},
             build_sprugnoli(t, 9));
    const AerationParts parts = aeration_split(t, 9);
    c.matrix("even aeration", {{1, 0, 0, 0, 0, 0, 0, 0, 0},
                               {1, 0, 0, 0, 0, 0, 0, 0, 0},
                               {1, 0, 1, 0, 0, 0, 0, 0, 0},
                               {1, 0, 1, 0, 0, 0, 0, 0, 0},
                               {1, 0, 2, 0, 1, 0, 0, 0, 0},
                               {1, 0, 2, 0, 1, 0, 0, 0, 0},
                               {1, 0, 3, 0, 3, 0, 1, 0, 0},
                               {1, 0, 3, 0, 3, 0, 1, 0, 0},
                               {1, 0, 4, 0, 6, 0, 4, 0, 1}},
             parts.even);
    c.matrix("odd aeration", {{0, 0, 0, 0, 0, 0, 0, 0, 0},
                              {0, 1, 0, 0, 0, 0, 0, 0, 0},
                              {0, 3, 0, 0, 0, 0, 0, 0, 0},
                              {0, 5, 0, 1, 0, 0, 0, 0, 0},
                              {0, 7, 0, 3, 0, 0, 0, 0, 0},
                              {0, 9, 0, 6, 0, 1, 0, 0, 0},
                              {0, 11, 0, 10, 0, 3, 0, 0, 0},
                              {0, 13, 0, 15, 0, 7, 0, 1, 0},
                              {0, 15, 0, 21, 0, 13, 0, 3, 0}},
             parts.odd);
    const Series xf2 = shift_up(t.f2(), 1).truncated(kOrder);
    c.matrix("compressed even part", {{1, 0, 0, 0, 0, 0, 0, 0, 0},
                                      {1, 0, 0, 0, 0, 0, 0, 0, 0},
                                      {1, 1, 0, 0, 0, 0, 0, 0, 0},
                                      {1, 1, 0, 0, 0, 0, 0, 0, 0},
                                      {1, 2, 1, 0, 0, 0, 0, 0, 0},
                                      {1, 2, 1, 0, 0, 0, 0, 0, 0},
                                      {1, 3, 3, 1, 0, 0, 0, 0, 0},
                                      {1, 3, 3, 1, 0, 0, 0, 0, 0},
                                      {1, 4, 6, 4, 1, 0, 0, 0, 0}},
             build_stretched(StretchedPair(t.g(), xf2), 9));
    c.matrix("compressed odd part", {{0, 0, 0, 0, 0, 0, 0, 0, 0},
                                     {1, 0, 0, 0, 0, 0, 0, 0, 0},
                                     {3, 0, 0, 0, 0, 0, 0, 0, 0},
                                     {5, 1, 0, 0, 0, 0, 0, 0, 0},
                                     {7, 3, 0, 0, 0, 0, 0, 0, 0},
                                     {9, 6, 1, 0, 0, 0, 0, 0, 0},
                                     {11, 10, 3, 0, 0, 0, 0, 0, 0},
                                     {13, 15, 7, 1, 0, 0, 0, 0, 0},
                                     {15, 21, 13, 3, 0, 0, 0, 0, 0}},
             geometric_columns(mul(t.g(), t.f1()), xf2, 9));
    const Series fib = E("1/(1-x-x^2)", 2 * kOrder + 1);
    c.sequence("Fibonacci even bisection", {1, 2, 5, 13, 34, 89, 233, 610, 1597}, even_part(fib));
    c.sequence("Fibonacci odd bisection", {1, 3, 8, 21, 55, 144, 377, 987, 2584}, odd_part(fib));
    c.sequence("action on Fibonacci", {1, 2, 6, 11, 26, 45, 100, 170, 370}, sprugnoli_apply(t, fib));
    c.sequence("matrix times Fibonacci", {1, 2, 6, 11, 26, 45, 100, 170, 370}, apply(build_sprugnoli(t, 9), fib));
    c.series("action gf", "(1+x)*(1+x+x^3)/(1-5*x^2+5*x^4)", sprugnoli_apply(t, fib));
  });
  return c.take();
}

FixtureReport a051159() {
  const auto& f = registry()[3];
  Checker c(f.id, f.source);
  c.guarded("inverse", [&] {
    const SprugnoliTriple t = triple("1/(1-x)", "x/(1+x)", "x/(1-x^2)");
    const InverseParts p = inverse_parts(t);
    c.series("r2", "x/(1+x^2)", p.r2);
    c.series("r1", "x*(1+x)/(1+x^2)", p.r1);
    c.series("w", "(1-x)/(1+x^2)", p.w);
    c.series("s1", "x/(1-x)", p.s1);
    c.series("s2", "x/(1+x^2)", p.s2);
    const TriMatrix m = build_sprugnoli(t, 9);
    c.matrix("Pascal-like matrix", {{1, 0, 0, 0, 0, 0, 0, 0, 0},
                                    {1, 1, 0, 0, 0, 0, 0, 0, 0},
                                    {1, 0, 1, 0, 0, 0, 0, 0, 0},
                                    {1, 1, 1, 1, 0, 0, 0, 0, 0},
                                    {1, 0, 2, 0, 1, 0, 0, 0, 0},
                                    {1, 1, 2, 2, 1, 1, 0, 0, 0},
                                    {1, 0, 3, 0, 3, 0, 1, 0, 0},
                                    {1, 1, 3, 3, 3, 3, 1, 1, 0},
                                    {1, 0, 4, 0, 6, 0, 4, 0, 1}},
             m);
    bool palindromic = true;
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t j = 0; j <= i; ++j) palindromic = palindromic && m(i, j) == m(i, i - j);
    c.truth("rows palindromic", palindromic);
    c.truth("inverse matrix", build_sprugnoli(sprugnoli_inv(t), 9) == inverse(m));
  });
  return c.take();
}

FixtureReport hard_inverse() {
  const auto& f = registry()[4];
  Checker c(f.id, f.source);
  c.guarded("inverse", [&] {
    const SprugnoliTriple t = triple("(1+2*x)/(1-4*x)", "x*(1+3*x)/(1-2*x)", "x*(1+x^2)/(1-x^2)");
    const InverseParts p = inverse_parts(t);
    c.series("f1 even bisection", "5*x/(1-4*x)", even_part(t.f1()));
    c.series("f1 odd bisection", "(1+6*x)/(1-4*x)", odd_part(t.f1()));
    c.series("1/g even bisection", "(1+8*x)/(1-4*x)", even_part(mul_inv(t.g())));
    c.series("1/g odd bisection", "-6/(1-4*x)", odd_part(mul_inv(t.g())));
    c.series("r2", "(sqrt(1+6*x^2+x^4)-x^2-1)/(2*x)", p.r2);
    // f1^e and f1^o evaluated at x r2 = (sqrt(1+6x^2+x^4) - x^2 - 1)/2, written out.
    c.series("r1 quotient",
             "(x-5*((sqrt(1+6*x^2+x^4)-x^2-1)/2)/(1-4*((sqrt(1+6*x^2+x^4)-x^2-1)/2)))/"
             "((1+6*((sqrt(1+6*x^2+x^4)-x^2-1)/2))/(1-4*((sqrt(1+6*x^2+x^4)-x^2-1)/2)))",
             p.r1);
    c.series("r1", "(5*(1+2*x)*sqrt(1+6*x^2+x^4)-46*x^3-65*x^2-5)/(2*(5+42*x^2))", p.r1);
    c.series("w",
             "(3*(5-30*x+204*x^2+72*x^3)*sqrt(1+6*x^2+x^4)+216*x^5+1620*x^4+54*x^3+543*x^2-60*x+10)/"
             "((5-12*x^2)*(5+42*x^2))",
             p.w);
    c.series("second column",
             "((24*x^3-492*x^2-10*x-65)*sqrt(1+6*x^2+x^4)-1320*x^5-3684*x^4+406*x^4+137*x^2+60*x+65)/"
             "(2*(5-12*x^2)*(5+42*x^2))",
             mul(p.w, p.s1));
    c.series("s1",
             "((24*x^3-492*x^2-10*x-65)*sqrt(1+6*x^2+x^4)-1320*x^5-3684*x^4+406*x^3+137*x^2+60*x+65)/"
             "(2*(3*(5-30*x+204*x^2+72*x^3)*sqrt(1+6*x^2+x^4)+216*x^5+1620*x^4+54*x^2-60*x+10))",
             p.s1);
    const TriMatrix m = build_sprugnoli(t, 9);
    const TriMatrix inv = inverse(m);
    c.truth("inverse times matrix", build_sprugnoli(sprugnoli_inv(t), 9) * m == TriMatrix::identity(9));
    c.series_equal("w against matrix column 0", inv.column(0), p.w.truncated(8));
    c.series_equal("w s1 against matrix column 1", inv.column(1), mul(p.w, p.s1).truncated(8));
  });
  return c.take();
}

FixtureReport production_example() {
  const auto& f = registry()[5];
  Checker c(f.id, f.source);
  c.guarded("production", [&] {
    const SprugnoliTriple t = triple("1/(1-x-x^2)", "x*(1+x)/(1-x)", "x/(1-x^2)");
    const TriMatrix m = build_sprugnoli(t, 13);
    c.matrix("matrix", {{1, 0, 0, 0, 0, 0, 0, 0, 0},
                        {1, 1, 0, 0, 0, 0, 0, 0, 0},
                        {2, 3, 1, 0, 0, 0, 0, 0, 0},
                        {3, 6, 1, 1, 0, 0, 0, 0, 0},
                        {5, 11, 3, 3, 1, 0, 0, 0, 0},
                        {8, 19, 4, 7, 1, 1, 0, 0, 0},
                        {13, 32, 8, 14, 4, 3, 1, 0, 0},
                        {21, 53, 12, 26, 5, 8, 1, 1, 0},
                        {34, 87, 21, 46, 12, 17, 5, 3, 1}},
             m);
    const Matrix p = production_matrix(m);
    c.matrix("production", {{1, 1, 0, 0, 0, 0, 0, 0, 0},
                            {1, 2, 1, 0, 0, 0, 0, 0, 0},
                            {-2, -2, -2, 1, 0, 0, 0, 0, 0},
                            {-2, -2, -1, 2, 1, 0, 0, 0, 0},
                            {4, 4, 2, -2, -2, 1, 0, 0, 0},
                            {4, 4, 2, -2, -1, 2, 1, 0, 0},
                            {-8, -8, -4, 4, 2, -2, -2, 1, 0},
                            {-8, -8, -4, -4, 2, -2, -1, 2, 1},
                            {16, 16, 8, -8, -4, 4, 2, -2, -2}},
             p);
    const ProductionStripes s = extract_stripes(p, 2);
    c.sequence("Z", {1, 1, -2, -2, 4, 4, -8, -8, 16}, s.z);
    c.sequence("A", {1, 2, -2, -2, 4, 4, -8, -8, 16}, s.stripes[0]);
    c.sequence("B", {1, -2, -1, 2, 2, -4, -4, 8, 8}, s.stripes[1]);

    // Dot products: row of M above the entry, times the coefficient sequence.
    c.sequence("t(6,0) row", {8, 19, 4, 7, 1, 1}, m.row(5));
    c.sequence("t(6,0) coefficients", {1, 1, -2, -2, 4, 4}, s.z);
    c.truth("t(6,0) = 13", dot(to_rationals({8, 19, 4, 7, 1, 1}), s.z) == 13 && m(6, 0) == 13);
    c.sequence("t(7,1) row", {13, 32, 8, 14, 4, 3, 1}, m.row(6));
    c.sequence("t(7,1) coefficients", {1, 2, -2, -2, 4, 4, 8}, s.stripes[0]);
    c.truth("t(7,1) = 53", dot(to_rationals({13, 32, 8, 14, 4, 3, 1}), s.stripes[0]) == 53 && m(7, 1) == 53);
    const std::vector<Rational> row5 = m.row(5);
    c.sequence("t(6,2) row", {19, 4, 7, 1, 1}, std::vector<Rational>(row5.begin() + 1, row5.end()));
    c.sequence("t(6,2) coefficients", {1, -2, -1, 2, 2}, s.stripes[1]);
    c.truth("t(6,2) = 8", dot(to_rationals({19, 4, 7, 1, 1}), s.stripes[1]) == 8 && m(6, 2) == 8);
    const RecurrenceReport rec = recurrence_check(m, s);
    c.truth("all entries satisfy the recurrences", rec.ok, rec.message);

    const ClosedFormStripes cf = ab_series_closed_form(t);
    c.sequence("closed-form Z", {1, 1, -2, -2, 4, 4, -8, -8, 16}, cf.z);
    c.sequence("closed-form A", {1, 2, -2, -2, 4, 4, -8, -8, 16}, cf.a);
    c.sequence("closed-form B", {1, -2, -1, 2, 2, -4, -4, 8, 8}, cf.b);
    c.truth("closed forms equal extracted stripes",
            prefix(s.z, 10) == prefix(std::vector<Rational>(cf.z.coeffs().begin(), cf.z.coeffs().end()), 10) &&
                prefix(s.stripes[0], 10) ==
                    prefix(std::vector<Rational>(cf.a.coeffs().begin(), cf.a.coeffs().end()), 10) &&
                prefix(s.stripes[1], 10) ==
                    prefix(std::vector<Rational>(cf.b.coeffs().begin(), cf.b.coeffs().end()), 10));
    c.truth("A + B is even", add(cf.a, cf.b).is_even());
  });
  return c.take();
}

FixtureReport pnorm() {
  const auto& f = registry()[6];
  Checker c(f.id, f.source);
  c.guarded("polynomials", [&] {
    const auto polys = poly_sequence(PolyRecurrence{}, 5);
    const char* printed[] = {"1", "x-1", "x^2-2", "x^3-x^2-3*x+3", "x^4-5*x^2+5"};
    for (std::size_t n = 0; n < 5; ++n) {
      const Series p = E(printed[n], 4);
      std::vector<Rational> want(p.coeffs().begin(), p.coeffs().begin() + static_cast<std::ptrdiff_t>(n + 1));
      std::vector<Rational> got = polys[n];
      got.resize(n + 1);
      c.truth("P_" + std::to_string(n) + " = " + printed[n], want == got);
    }
    const SprugnoliTriple t = triple("(1-x+x^2)/(1+3*x^2+x^4)", "x/(1-x+x^2)", "x/(1+3*x^2+x^4)");
    const Rows array = {{1, 0, 0, 0, 0, 0, 0, 0, 0},    {-1, 1, 0, 0, 0, 0, 0, 0, 0},  {-2, 0, 1, 0, 0, 0, 0, 0, 0},
                        {3, -3, -1, 1, 0, 0, 0, 0, 0},  {5, 0, -5, 0, 1, 0, 0, 0, 0},  {-8, 8, 6, -6, -1, 1, 0, 0, 0},
                        {-13, 0, 19, 0, -8, 0, 1, 0, 0}, {21, -21, -25, 25, 9, -9, -1, 1, 0},
                        {34, 0, -65, 0, 42, 0, -11, 0, 1}};
    const TriMatrix rec = build_poly_recurrence(PolyRecurrence{}, 9);
    c.matrix("recurrence array", array, rec);
    c.truth("recurrence array equals the Sprugnoli build", rec == build_sprugnoli(t, 9));
    c.sequence("first column (signed Fibonacci, A000045)", {1, -1, -2, 3, 5, -8, -13, 21, 34}, rec.column(0));

    const TriMatrix inv = inverse(build_sprugnoli(t, 11));
    c.matrix("inverse", {{1, 0, 0, 0, 0, 0, 0, 0, 0},
                         {1, 1, 0, 0, 0, 0, 0, 0, 0},
                         {2, 0, 1, 0, 0, 0, 0, 0, 0},
                         {2, 3, 1, 1, 0, 0, 0, 0, 0},
                         {5, 0, 5, 0, 1, 0, 0, 0, 0},
                         {5, 10, 5, 6, 1, 1, 0, 0, 0},
                         {15, 0, 21, 0, 8, 0, 1, 0, 0},
                         {15, 36, 21, 29, 8, 9, 1, 1, 0},
                         {51, 0, 86, 0, 46, 0, 11, 0, 1}},
             inv);
    c.sequence("moments (A055879)", {1, 1, 2, 2, 5, 5, 15, 15, 51, 51}, inv.column(0));
    c.matrix("inverse production", {{1, 1, 0, 0, 0, 0, 0, 0, 0},
                                    {1, -1, 1, 0, 0, 0, 0, 0, 0},
                                    {0, 1, 1, 1, 0, 0, 0, 0, 0},
                                    {0, 0, 1, -1, 1, 0, 0, 0, 0},
                                    {0, 0, 0, 1, 1, 1, 0, 0, 0},
                                    {0, 0, 0, 0, 1, -1, 1, 0, 0},
                                    {0, 0, 0, 0, 0, 1, 1, 1, 0},
                                    {0, 0, 0, 0, 0, 0, 1, -1, 1},
                                    {0, 0, 0, 0, 0, 0, 0, 1, 1}},
             production_matrix(inv));
    const std::vector<Rational> b{1, -1};
    const std::vector<Rational> lambda{1};
    c.sequence("continued fraction", {1, 1, 2, 2, 5, 5, 15, 15, 51, 51}, jacobi_cf(b, lambda, kOrder));
    c.series_equal("continued fraction equals first column", jacobi_cf(b, lambda, 10), inv.column(0));

    const SprugnoliTriple it = sprugnoli_inv(t);
    const ReadBack rb = read_back(inverse(build_sprugnoli(t, 13)), 2);
    c.series_equal("read-back g", rb.g, it.g());
    c.series_equal("read-back f1", rb.fs[0], it.f1().truncated(rb.fs[0].order()));
    c.series_equal("read-back f2", rb.fm, it.f2().truncated(rb.fm.order()));
    c.series("g", "(1+x)/(2*x^2)*(1-sqrt((1-5*x^2)/(1-x^2)))", rb.g);
    c.series("g expanded", "(1-x^2-sqrt((1-x^2)*(1-5*x^2)))/(2*x^2*(1-x))", rb.g);
    c.series("f1", "x*(1-x)/(2*x^2)*(1-sqrt((1-5*x^2)/(1-x^2)))", rb.fs[0]);
    c.series("f1 expanded", "(1-x^2-sqrt((1-x^2)*(1-5*x^2)))/(2*x*(1+x))", rb.fs[0]);
    c.series("f2", "(1-3*x^2-sqrt((1-x^2)*(1-5*x^2)))/(2*x^3)", rb.fm);
  });
  return c.take();
}

FixtureReport higher_order_m3() {
  const auto& f = registry()[7];
  Checker c(f.id, f.source);
  c.guarded("order three", [&] {
    const std::size_t order = 14;
    const GeneralTuple t(3, E("1/(1-x)", order), {E("x*(1+x)", order), E("x/(1-3*x)", order)},
                         E("x/(1-x^3)", order));
    const TriMatrix m = build_general(t, 13);
    c.matrix("matrix", {{1, 0, 0, 0, 0, 0, 0},
                        {1, 1, 0, 0, 0, 0, 0},
                        {1, 2, 1, 0, 0, 0, 0},
                        {1, 2, 5, 1, 0, 0, 0},
                        {1, 2, 17, 1, 1, 0, 0},
                        {1, 2, 53, 1, 2, 1, 0},
                        {1, 2, 161, 1, 3, 5, 1}},
             m);
    const Matrix p = production_matrix(m);
    c.matrix("production", {{1, 1, 0, 0, 0, 0, 0},
                            {0, 1, 1, 0, 0, 0, 0},
                            {0, -1, 3, 1, 0, 0, 0},
                            {0, 4, 0, -4, 1, 0, 0},
                            {0, 12, 0, 12, -1, 1, 0},
                            {0, 24, 0, -23, 4, 3, 1},
                            {0, 8, 0, -12, 12, 0, -4}},
             p);
    const TriMatrix inv = inverse(m);
    const Matrix pi = production_matrix(inv);
    c.matrix("inverse production", {{-1, 1, 0, 0, 0, 0, 0},
                                    {0, -1, 1, 0, 0, 0, 0},
                                    {-3, 5, -3, 1, 0, 0, 0},
                                    {-31, 61, -35, 4, 1, 0, 0},
                                    {-103, 205, -119, 17, -1, 1, 0},
                                    {-279, 557, -330, 49, 5, -3, 1},
                                    {-779, 1557, -934, 125, 61, -35, 4}},
             pi);
    const ProductionStripes s = extract_stripes(p, 3);
    const ProductionStripes si = extract_stripes(pi, 3);
    c.sequence("A", {1, 1, -1, 4, 12, 24, 8, 24, 48}, s.stripes[0]);
    c.sequence("B", {1, 3, 0, 0, 0, 0, 0, 0, 0}, s.stripes[1]);
    c.sequence("C", {1, -4, 12, -23, -12, -36, -72, -24, -72}, s.stripes[2]);
    const StripeSumReport sum = stripe_zero_pattern(s);
    c.sequence("A+B+C", {3, 0, 11, -19, 0, -12, -64, 0, -24}, sum.sums);
    c.sequence("A*", {1, -1, 5, 61, 205, 557, 1557, 4485, 13029}, si.stripes[0]);
    c.sequence("B*", {1, -3, -35, -119, -350, -934, -2710, -7918, -23458}, si.stripes[1]);
    c.sequence("C*", {1, 4, 17, 49, 125, 365, 1125, 3433, 10393}, si.stripes[2]);
    const StripeSumReport sumi = stripe_zero_pattern(si);
    c.sequence("A*+B*+C*", {3, 0, -13, -9, 0, -12, -28, 0, -36}, sumi.sums);
    const std::vector<std::size_t> zeros{1, 4, 7};
    c.truth("A+B+C zeros at 1, 4, 7", zeros_below(sum, 9) == zeros);
    c.truth("A*+B*+C* zeros at 1, 4, 7", zeros_below(sumi, 9) == zeros);
    c.truth("matrix times inverse", m * inv == TriMatrix::identity(13));
    const GeneralInverse gi = general_inv(t, 13);
    c.truth("inverse read-back regenerates", gi.regenerates, gi.message);

    const SprugnoliTriple s2 = triple("1/(1-x)", "x*(1+x)/(1-x)", "x/(1-x^2)");
    c.truth("period 2 reduces to the Sprugnoli build",
            build_general(GeneralTuple::from_sprugnoli(s2), 9) == build_sprugnoli(s2, 9));
  });
  return c.take();
}

FixtureReport further_examples() {
  const auto& f = registry()[8];
  Checker c(f.id, f.source);
  struct Item {
    const char* g;
    const char* f1;
    const char* f2;
    const char* w;
    const char* s1;
    const char* s2;
  };
  const Item items[] = {
      {"1/(1+x)", "x/(1-x)", "x/(1-x^2)", "(1+x)/(1+x^2)", "x/(1+x)", "x/(1+x^2)"},
      {"1/(1-x)", "x", "x*(1+x^2)", "1-x", "x*(1-x*c(-x^2))/(1-x)", "x*c(-x^2)"},
      {"1/(1-x)", "x*(1+x)", "x*(1+x^2)", "1-x+x^2*c(-x^2)", "x*(-1+(2-x)*c(-x^2))", "x*c(-x^2)"},
      {"1/(1-2*x)", "x*(1+x)/(1-x)", "x/(1-x^2)", "(1-2*x+6*x^2)/(1+2*x^2)",
       "x*(1-4*x-x^2-6*x^3)/((1+x^2)*(1-2*x+6*x^2))", "x/(1+x^2)"},
      {"1/(1-x)", "x*(1+2*x)/(1-x)", "x/(1-x^2)", "(1-x+6*x^2)/(1+3*x^2)",
       "x*(1-4*x+x^2-6*x^3)/((1+x^2)*(1-x+6*x^2))", "x/(1+x^2)"},
      {"1/(1-x)", "x*(1+x)/(1-x)", "x/(1-x^2)", "(1-x+4*x^2)/(1+2*x^2)",
       "x*(1-3*x+x^2-4*x^3)/((1+x^2)*(1-x+4*x^2))", "x/(1+x^2)"},
  };
  const std::size_t order = 10;
  for (std::size_t i = 0; i < std::size(items); ++i) {
    const std::string tag = "item " + std::to_string(i + 1);
    c.guarded(tag, [&] {
      const Item& it = items[i];
      const SprugnoliTriple t = triple(it.g, it.f1, it.f2, order);
      const SprugnoliTriple inv = sprugnoli_inv(t);
      c.series(tag + " w", it.w, inv.g());
      c.series(tag + " s1", it.s1, inv.f1());
      c.series(tag + " s2", it.s2, inv.f2());
      c.truth(tag + " matrix inverse", build_sprugnoli(inv, 9) * build_sprugnoli(t, 9) == TriMatrix::identity(9));
    });
  }
  return c.take();
}

FixtureReport involution() {
  const auto& f = registry()[9];
  Checker c(f.id, f.source);
  c.guarded("involution", [&] {
    const SprugnoliTriple t = triple("1/(1-x)", "-x/(1+x)", "-x/(1-x^2)");
    const TriMatrix m = build_sprugnoli(t, 12);
    c.truth("M^2 = I at dimension 12", m * m == TriMatrix::identity(12));
    c.truth("inverse triple equals the triple", sprugnoli_inv(t) == t);
    c.matrix("production", {{1, -1, 0, 0, 0, 0, 0},
                            {0, -1, 1, 0, 0, 0, 0},
                            {0, 0, 1, -1, 0, 0, 0},
                            {0, 0, 0, -1, 1, 0, 0},
                            {0, 0, 0, 0, 1, -1, 0},
                            {0, 0, 0, 0, 0, -1, 1},
                            {0, 0, 0, 0, 0, 0, 1}},
             production_matrix(m));
  });
  return c.take();
}

std::string location(const std::string& name, std::size_t i, std::size_t j) {
  return name + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

bool FixtureReport::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const std::vector<Fixture>& registry() {
  static const std::vector<Fixture> list = {
      {"riordan-binomial",
       "riordan",
       {{"g", "1/(1-x)"}, {"f", "x/(1-x)^2"}},
       1,
       "Riordan array example with t(n,k) = C(n+k,2k); row sums A122367",
       riordan_binomial},
      {"stretched-fibonacci",
       "stretched",
       {{"g", "1/(1-x)"}, {"f", "x^2/(1-x-x^2)"}},
       1,
       "vertically stretched Riordan array example acting on the Fibonacci numbers",
       stretched_fibonacci},
      {"sprugnoli-example",
       "sprugnoli",
       {{"g", "1/(1-x)"}, {"f1", "x*(1+x)/(1-x)"}, {"f2", "x/(1-x^2)"}},
       2,
       "first Sprugnoli array example: matrix, aeration summands, action on Fibonacci",
       sprugnoli_example},
      {"a051159",
       "sprugnoli",
       {{"g", "1/(1-x)"}, {"f1", "x/(1+x)"}, {"f2", "x/(1-x^2)"}},
       2,
       "inverse calculation for A051159 and its Pascal-like display",
       a051159},
      {"hard-inverse",
       "sprugnoli",
       {{"g", "(1+2*x)/(1-4*x)"}, {"f1", "x*(1+3*x)/(1-2*x)"}, {"f2", "x*(1+x^2)/(1-x^2)"}},
       2,
       "inverse calculation with surd closed forms for r2, r1, w and s1",
       hard_inverse},
      {"production-example",
       "sprugnoli",
       {{"g", "1/(1-x-x^2)"}, {"f1", "x*(1+x)/(1-x)"}, {"f2", "x/(1-x^2)"}},
       2,
       "production matrix example: Z, A, B sequences and dot-product recurrences",
       production_example},
      {"pnorm",
       "sprugnoli",
       {{"g", "(1-x+x^2)/(1+3*x^2+x^4)"}, {"f1", "x/(1-x+x^2)"}, {"f2", "x/(1+3*x^2+x^4)"}},
       2,
       "coefficient array of the polynomials P_n, its inverse (A055879) and continued fraction",
       pnorm},
      {"higher-order-m3",
       "general",
       {{"g", "1/(1-x)"}, {"f1", "x*(1+x)"}, {"f2", "x/(1-3*x)"}, {"f3", "x/(1-x^3)"}},
       3,
       "four-element generalization: matrix, production arrays, stripe alignment table",
       higher_order_m3},
      {"further-examples",
       "sprugnoli",
       {},
       2,
       "list of six simple arrays and their inverses, including x c(-x^2) forms",
       further_examples},
      {"involution",
       "sprugnoli",
       {{"g", "1/(1-x)"}, {"f1", "-x/(1+x)"}, {"f2", "-x/(1-x^2)"}},
       2,
       "involution example and its bidiagonal production matrix",
       involution},
  };
  return list;
}

const std::vector<Erratum>& errata() {
  static const std::vector<Erratum> list = {
      {"stretched-fibonacci", "matrix times Fibonacci[8]", "159", "154",
       "row 8 of the printed matrix, 1 33 38 13 1, against 1 1 2 3 5 gives 1 + 33 + 76 + 39 + 5 = 154"},
      {"stretched-fibonacci", "action on Fibonacci[8]", "159", "154", "same value as the matrix product above"},
      {"stretched-fibonacci", "action gf", "(1-x-x^2)^2/((1-x)*(1-2*x+3*x^3+x^4))",
       "(1-x-x^2)^2/((1-x)*(1-2*x-2*x^2+3*x^3+x^4))",
       "clearing denominators in the printed unsimplified form, (1-x-x^2)^2 - x^2(1-x-x^2) - x^4 = "
       "1-2x-2x^2+3x^3+x^4; the printed form expands to 1, 1, 0, -3, ..."},
      {"production-example", "production(7,3)", "-4", "4",
       "column 3 repeats the A stripe, whose printed a_5 is 4; row 5 of the same column prints 4"},
      {"production-example", "t(7,1) coefficients[6]", "8", "-8",
       "the printed A sequence has a_6 = -8, and only -8 yields 53"},
      {"hard-inverse", "second column",
       "((24*x^3-492*x^2-10*x-65)*sqrt(1+6*x^2+x^4)-1320*x^5-3684*x^4+406*x^4+137*x^2+60*x+65)/"
       "(2*(5-12*x^2)*(5+42*x^2))",
       "((24*x^3-492*x^2-10*x-65)*sqrt(1+6*x^2+x^4)-1320*x^5-3684*x^4+406*x^3+137*x^2+60*x+65)/"
       "(2*(5-12*x^2)*(5+42*x^2))",
       "the s1 display repeats this numerator with 406x^3; the matrix inverse column agrees with 406x^3"},
      {"hard-inverse", "s1",
       "((24*x^3-492*x^2-10*x-65)*sqrt(1+6*x^2+x^4)-1320*x^5-3684*x^4+406*x^3+137*x^2+60*x+65)/"
       "(2*(3*(5-30*x+204*x^2+72*x^3)*sqrt(1+6*x^2+x^4)+216*x^5+1620*x^4+54*x^2-60*x+10))",
       "((24*x^3-492*x^2-10*x-65)*sqrt(1+6*x^2+x^4)-1320*x^5-3684*x^4+406*x^3+137*x^2+60*x+65)/"
       "(2*(3*(5-30*x+204*x^2+72*x^3)*sqrt(1+6*x^2+x^4)+216*x^5+1620*x^4+54*x^3+543*x^2-60*x+10))",
       "the denominator is twice the numerator of w, printed in full one display earlier"},
      {"further-examples", "item 4 s1", "x*(1-4*x-x^2-6*x^3)/((1+x^2)*(1-2*x+6*x^2))",
       "x*(1-4*x+x^2-6*x^3)/((1+x^2)*(1-2*x+6*x^2))",
       "exact matrix inverse column 1 divided by column 0; same shape as items 5 and 6"},
      {"higher-order-m3", "matrix(6,3)", "1", "2",
       "column 3 is g x^2 f3 = x^3/((1-x)(1-x^3)) + ..., and the printed inverse production array is the "
       "inverse production of the corrected matrix"},
      {"higher-order-m3", "matrix(6,4)", "3", "2",
       "column 4 is g f1 x^2 f3, coefficient of x^6 is 2; see matrix(6,3)"},
      {"higher-order-m3", "production(4,3)", "12", "-12",
       "rows 0..5 of the printed matrix already determine this entry, and they give -12"},
      {"higher-order-m3", "production(4,4)", "-1", "1", "column 4 repeats stripe A from row 3; printed column 1 gives A = 1, 1, -1, 4, 12"},
      {"higher-order-m3", "production(5,4)", "4", "-1", "column 4 repeats stripe A shifted: A[2] = -1"},
      {"higher-order-m3", "production(6,4)", "12", "4", "column 4 repeats stripe A shifted: A[3] = 4"},
      {"higher-order-m3", "C[2]", "12", "-12", "production(4,3) of the corrected array; row 3 of the table then sums to -13"},
      {"higher-order-m3", "A+B+C[2]", "11", "-13", "-1 + 0 + (-12)"},
      {"higher-order-m3", "B*[4]", "-350", "-330",
       "the printed inverse production array shows -330, and the printed A*+B*+C* = 0 needs -330"},
  };
  return list;
}

std::vector<const Fixture*> select(const std::string& glob) {
  std::vector<const Fixture*> out;
  for (const Fixture& f : registry())
    if (glob.empty() || fnmatch(glob.c_str(), f.id.c_str(), 0) == 0) out.push_back(&f);
  return out;
}

// ---------------------------------------------------------------------------

Checker::Checker(std::string fixture, std::string source) : fixture_(std::move(fixture)) {
  report_.id = fixture_;
  report_.source = std::move(source);
}

const Erratum* Checker::find(const std::string& loc) const {
  for (const Erratum& e : errata())
    if (e.fixture == fixture_ && e.location == loc) return &e;
  return nullptr;
}

void Checker::entries(const std::string& name,
                      const std::vector<std::pair<std::string, std::pair<long, Rational>>>& cells) {
  CheckResult r{name, true, {}, {}};
  for (const auto& [loc, values] : cells) {
    const auto& [printed, computed] = values;
    if (Rational(printed) == computed) continue;
    const Erratum* e = find(loc);
    if (e && e->printed == std::to_string(printed) && e->corrected == computed.get_str()) {
      r.errata.push_back(loc + ": printed " + e->printed + ", computed " + e->corrected + " (" + e->evidence + ")");
      continue;
    }
    if (r.pass) r.detail = loc + ": printed " + std::to_string(printed) + ", computed " + computed.get_str();
    r.pass = false;
  }
  report_.checks.push_back(std::move(r));
}

void Checker::matrix(const std::string& name, const Rows& printed, const TriMatrix& computed) {
  matrix(name, printed, computed.dense());
}

void Checker::matrix(const std::string& name, const Rows& printed, const Matrix& computed) {
  if (computed.dim() < printed.size()) {
    truth(name, false, "computed matrix smaller than the printed one");
    return;
  }
  std::vector<std::pair<std::string, std::pair<long, Rational>>> cells;
  for (std::size_t i = 0; i < printed.size(); ++i)
    for (std::size_t j = 0; j < printed[i].size(); ++j)
      cells.push_back({location(name, i, j), {printed[i][j], computed(i, j)}});
  entries(name, cells);
}

void Checker::sequence(const std::string& name, const std::vector<long>& printed,
                       const std::vector<Rational>& computed) {
  if (computed.size() < printed.size()) {
    truth(name, false, "only " + std::to_string(computed.size()) + " terms computed");
    return;
  }
  std::vector<std::pair<std::string, std::pair<long, Rational>>> cells;
  for (std::size_t i = 0; i < printed.size(); ++i)
    cells.push_back({name + "[" + std::to_string(i) + "]", {printed[i], computed[i]}});
  entries(name, cells);
}

void Checker::sequence(const std::string& name, const std::vector<long>& printed, const Series& computed) {
  sequence(name, printed, std::vector<Rational>(computed.coeffs().begin(), computed.coeffs().end()));
}

void Checker::series(const std::string& name, const std::string& printed, const Series& computed) {
  CheckResult r{name, true, {}, {}};
  try {
    const Series p = expr::eval(printed, computed.order());
    if (p != computed) {
      const Erratum* e = find(name);
      if (e && e->printed == printed && expr::eval(e->corrected, computed.order()) == computed) {
        r.errata.push_back(name + ": printed " + e->printed + ", matches " + e->corrected + " (" + e->evidence + ")");
      } else {
        r.pass = false;
        r.detail = "printed " + p.to_string() + ", computed " + computed.to_string();
      }
    }
  } catch (const std::exception& ex) {
    r.pass = false;
    r.detail = ex.what();
  }
  report_.checks.push_back(std::move(r));
}

void Checker::series_equal(const std::string& name, const Series& expected, const Series& computed) {
  const bool ok = expected == computed;
  truth(name, ok, ok ? std::string{} : expected.to_string() + " vs " + computed.to_string());
}

void Checker::truth(const std::string& name, bool ok, const std::string& detail) {
  report_.checks.push_back({name, ok, detail, {}});
}

}  // namespace sprugnoli::fixtures
