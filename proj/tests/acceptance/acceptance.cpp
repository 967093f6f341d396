#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "packcert/exactnum/roots.hpp"
#include "packcert/packing/geometry.hpp"
#include "packcert/packing/packing.hpp"
#include "packcert/shell/cli.hpp"
#include "packcert/verifier/predicates.hpp"
#include "properties.hpp"

using namespace packcert;
using exactnum::Direction;
using exactnum::Interval;
using exactnum::Rational;
using exactnum::Status;
using testing::bundled_scene;
using testing::q;

namespace {

constexpr const char* kRPoly = "144,-1056,2680,-2680,665,436,-242,12,9";
constexpr const char* kSPoly = "81,-2088,15220,-29672,12846,2056,-380,-120,9";

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::string show(const Interval& iv, int digits = 16) {
  return "[" + exactnum::to_decimal(iv.lo(), digits) + ", " +
         exactnum::to_decimal(iv.hi(), digits, true) + "]";
}

bool inside(const Interval& iv, const char* lo, const char* hi) {
  return iv.lo() > q(lo) && iv.hi() < q(hi);
}

double mid(const Interval& iv) { return exactnum::to_double((iv.lo() + iv.hi()) / 2); }

Outcome isolate_radius(const char* poly, const char* lo, const char* hi, const char* near) {
  auto p = exactnum::IntegerPolynomial::parse(poly);
  auto roots = exactnum::isolate_roots(p, Interval(q(lo), q(hi)));
  if (roots.size() != 1) return {false, std::to_string(roots.size()) + " roots in bracket"};
  auto refined = exactnum::refine(roots[0], q("1e-30"));
  const auto& iv = refined.isolating();
  bool ok = iv.width() <= q("1e-30") && iv.lo() >= q(near) - q("0.0005") &&
            iv.hi() <= q(near) + q("0.0005");
  return {ok, "1 root, " + show(iv, 32)};
}

Outcome ratio() {
  auto b = bundled_scene("case110_polynomials.scene");
  auto qe = b.names.at("q");
  const auto& bind = b.packing.bindings();
  auto above = exactnum::certify_compare(qe, q("0.6376"), Direction::Above, bind);
  auto below = exactnum::certify_compare(qe, q("0.6380"), Direction::Below, bind);
  auto apart = exactnum::certify_compare(qe, q("0.6375"), Direction::Above, bind);
  auto gap = exactnum::eval(qe - exactnum::Expression(q("0.6375")), bind, q("1e-20"));
  bool ok = above.status == Status::Proved && below.status == Status::Proved &&
            apart.status == Status::Proved && gap.value.lo() > 0;
  return {ok, "q in " + show(below.enclosure) + ", q - 0.6375 in " + show(gap.value, 20)};
}

Outcome y_coordinate() {
  std::ostringstream out, err;
  int code = shell::run_cli({"certify", testing::scene_dir() + "/fig3.scene", "--expr", "Y3",
                             "--above", "1.0007"},
                            out, err);
  auto b = bundled_scene("fig3.scene");
  const auto& bind = b.packing.bindings();
  auto width = q("1e-20");
  auto y3 = exactnum::eval(b.names.at("Y3"), bind, width).value;
  auto solved = exactnum::eval(b.packing.disc(3).y, bind, width).value;
  auto qv = mid(exactnum::eval(b.names.at("q"), bind, width).value);
  auto oracle = testing::float_tangent_center(qv, 0, qv, 0, std::sqrt(2 * qv + 1), 1, 1, true);
  double solve_vs_expr = std::fabs(mid(y3) - mid(solved));
  double oracle_vs_expr = std::fabs(mid(y3) - oracle.second);
  bool ok = code == 0 && solve_vs_expr < 1e-10 && oracle_vs_expr < 1e-10;
  char buf[160];
  std::snprintf(buf, sizeof buf, "exit %d, Y3 in %s, |solve - Y3| = %.1e, |oracle - Y3| = %.1e",
                code, show(y3, 12).c_str(), solve_vs_expr, oracle_vs_expr);
  return {ok, buf};
}

Outcome hexagonal_density() {
  auto b = bundled_scene("hexagonal.scene");
  auto d = packing::density(b.packing, q("1e-20")).density;
  Interval one(Rational(1));
  auto t = packing::triangle_density(one, one, one, q("1e-20"));
  // pi / (2 sqrt 3) to 50 digits
  const auto closed = q("0.90689968211710892529703912882107786614203312404637");
  bool agree = (d.hi() - t.lo() < q("1e-12")) && (t.hi() - d.lo() < q("1e-12"));
  bool ok = inside(d, "0.90689", "0.90690") && agree && d.contains(closed) && t.contains(closed);
  return {ok, "density " + show(d, 20) + ", triangle " + show(t, 20)};
}

Outcome descartes_demo() {
  Interval one(Rational(1));
  auto rho = packing::descartes_inner(one, one, one, q("1e-20"));
  double oracle = testing::apollonius_inner(1, 1, 1);
  bool close = std::fabs(mid(rho) - oracle) < 1e-12;
  auto b = bundled_scene("hexagonal.scene");
  auto g = verifier::contact_graph(b.packing);
  auto small = verifier::check_saturated(b.packing, g, exactnum::Expression(q("0.15")));
  auto large = verifier::check_saturated(b.packing, g, exactnum::Expression(q("0.16")));
  bool ok = inside(rho, "0.15470", "0.15471") && close &&
            small.saturated == verifier::Answer::No && large.saturated == verifier::Answer::Yes;
  return {ok, "inner radius " + show(rho, 12) + ", probe 0.15: saturated=" +
                  verifier::to_string(small.saturated) +
                  ", probe 0.16: saturated=" + verifier::to_string(large.saturated)};
}

Outcome compactness() {
  struct Expect {
    const char* file;
    verifier::Answer compact;
    std::size_t witness;
  };
  const Expect cases[] = {{"hexagonal.scene", verifier::Answer::Yes, 0},
                          {"square.scene", verifier::Answer::No, 4},
                          {"fig3.scene", verifier::Answer::No, 0},
                          {"case110.scene", verifier::Answer::Yes, 0}};
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    auto start = std::chrono::steady_clock::now();
    auto b = bundled_scene(c.file);
    auto g = verifier::contact_graph(b.packing);
    auto v = verifier::check_compact(g);
    bool good = v.compact == c.compact && g.euler_characteristic() == 0;
    if (c.witness > 0) good = good && v.witness && v.witness->size() == c.witness;
    good = good && std::chrono::steady_clock::now() - start < std::chrono::seconds(1);
    ok = ok && good;
    if (!detail.empty()) detail += "; ";
    detail += std::string(c.file) + " " + verifier::to_string(v.compact) +
              " (V-E+F=" + std::to_string(g.euler_characteristic()) + ")";
  }
  return {ok, detail};
}

Outcome certify_density(const char* file, const char* threshold, Direction direction) {
  auto b = bundled_scene(file);
  auto e = packing::density_expression(b.packing);
  auto v = exactnum::certify_compare(e, q(threshold), direction, b.packing.bindings());
  return {v.status == Status::Proved,
          std::string(exactnum::to_string(v.status)) + ", density in " + show(v.enclosure)};
}

Outcome compare_fig3_case110() {
  auto a = bundled_scene("fig3.scene");
  auto b = bundled_scene("case110.scene");
  auto c = verifier::compare_densities(a.packing, b.packing);
  return {c.order == verifier::Order::FirstDenser,
          std::string(verifier::to_string(c.order)) + " at depth " + std::to_string(c.depth)};
}

Outcome property_suites() {
  using namespace testing;
  const std::vector<PropertyResult> results = {
      interval_soundness(1, 1000),    isolation_matches_grid_scan(1, 200),
      density_invariance(1, 50),      descartes_identity(1, 100),
      compare_antisymmetry(1, 30),    face_trace_conservation(1, 12),
      compactness_invariance(1, 12),  saturation_monotonicity(1, 40),
      scene_round_trip(1, 100),       solved_tangencies_in_graph(1, 10)};
  bool ok = true;
  std::string detail;
  for (const auto& r : results) {
    if (!detail.empty()) detail += ", ";
    detail += r.name + " " + std::to_string(r.cases - r.failures) + "/" + std::to_string(r.cases);
    if (!r.ok()) {
      ok = false;
      detail += " (" + r.first_failure + ")";
    }
  }
  return {ok, detail};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1", "root isolation of r", 1,
       [] { return isolate_radius(kRPoly, "0.7", "0.8", "0.779"); }},
      {"2", "root isolation of s", 1,
       [] { return isolate_radius(kSPoly, "0.4", "0.6", "0.497"); }},
      {"3", "ratio q = s/r in (0.6376, 0.6380) and q != 0.6375", 1, ratio},
      {"4", "Y3 > 1.0007 and solve/closed form/oracle agree", 5, y_coordinate},
      {"5", "hexagonal density", 1, hexagonal_density},
      {"6", "inner Soddy radius and saturation flip", 1, descartes_demo},
      {"7", "compactness verdicts and Euler relation", 4, compactness},
      {"8a", "density(fig3) > 0.9105", 10,
       [] { return certify_density("fig3.scene", "0.9105", Direction::Above); }},
      {"8b", "density(case110) < 0.9104", 10,
       [] { return certify_density("case110.scene", "0.9104", Direction::Below); }},
      {"8c", "compare fig3 case110 gives fig3 denser", 10, compare_fig3_case110},
      {"9", "property suites", 60, property_suites},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = o.pass && seconds < c.limit_seconds;
    if (!pass) ++failed;
    std::printf("%s %-3s %s (%.3f s, limit %.0f s): %s\n", pass ? "PASS" : "FAIL", c.id.c_str(),
                c.title.c_str(), seconds, c.limit_seconds, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
