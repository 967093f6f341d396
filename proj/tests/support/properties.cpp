#include "properties.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "generators.hpp"
#include "oracles.hpp"
#include "packcert/exactnum/evaluate.hpp"
#include "packcert/exactnum/roots.hpp"
#include "packcert/packing/geometry.hpp"
#include "packcert/shell/scene.hpp"
#include "packcert/verifier/predicates.hpp"

namespace packcert::testing {

using exactnum::Interval;
using verifier::Order;

std::string scene_dir() { return PACKCERT_SCENE_DIR; }

namespace {

shell::BuiltScene bundled(const std::string& name) {
  return shell::build_scene(shell::load_scene(scene_dir() + "/" + name));
}

std::string describe(const Interval& iv) {
  std::ostringstream os;
  os << iv;
  return os.str();
}

}  // namespace

PropertyResult interval_soundness(std::uint64_t seed, int cases) {
  PropertyResult res{"interval soundness"};
  Rng rng(seed);
  const std::vector<std::string> names = {"x", "y"};
  for (int i = 0; i < cases; ++i) {
    ++res.cases;
    Expression e = random_expression(rng, 5, names);
    std::map<std::string, Rational, std::less<>> values = {{"x", random_rational(rng, 30, 7)},
                                                           {"y", random_rational(rng, 30, 7)}};
    const Rational exact = exactnum::evaluate_exact(e, values);
    // Variables as points and as small intervals around the points.
    const Rational eps = exactnum::power_of_two(-static_cast<long>(uniform(rng, 4, 30)));
    for (bool widen : {false, true}) {
      exactnum::Environment env;
      for (const auto& [n, v] : values) {
        env[n] = widen ? Interval(v - eps, v + eps) : Interval(v);
      }
      for (long bits : {4L, 16L, 64L, 200L}) {
        Interval iv;
        try {
          iv = exactnum::evaluate(e, env, bits);
        } catch (const exactnum::EvalError& err) {
          res.fail(e.to_string() + ": " + err.what());
          continue;
        }
        if (!iv.contains(exact)) {
          res.fail(e.to_string() + " = " + exactnum::to_string(exact) + " not in " + describe(iv));
        }
      }
    }
  }
  return res;
}

PropertyResult isolation_matches_grid_scan(std::uint64_t seed, int cases) {
  PropertyResult res{"isolation vs grid scan"};
  Rng rng(seed);
  const int shift = 10;
  for (int i = 0; i < cases; ++i) {
    ++res.cases;
    RootPolynomial rp = random_root_polynomial(rng);
    const long long lo_k = uniform(rng, -5 << shift, 0), hi_k = uniform(rng, 0, 5 << shift);
    const Rational step = exactnum::power_of_two(-shift);
    const Rational lo = Rational(static_cast<long>(lo_k)) * step;
    const Rational hi = Rational(static_cast<long>(hi_k)) * step;
    auto oracle = grid_scan(rp.coeffs, lo_k, hi_k, shift);

    std::vector<exactnum::Integer> c;
    for (long long v : rp.coeffs) c.emplace_back(static_cast<long>(v));
    auto roots = exactnum::isolate_roots(exactnum::IntegerPolynomial(c), Interval(lo, hi));

    std::ostringstream poly;
    for (long long v : rp.coeffs) poly << v << ",";
    if (roots.size() != oracle.size()) {
      res.fail("poly " + poly.str() + ": " + std::to_string(roots.size()) + " roots vs " +
               std::to_string(oracle.size()) + " by scan");
      continue;
    }
    for (std::size_t k = 0; k < roots.size(); ++k) {
      auto fine = exactnum::refine(roots[k], step / 4);
      const auto& o = oracle[k];
      const Interval& iv = fine.isolating();
      // Roots pair up in order; a refined interval may straddle a grid point.
      const bool ok = o.lo == o.hi ? iv.contains(o.lo) : (iv.hi() > o.lo && iv.lo() < o.hi);
      if (!ok) {
        res.fail("poly " + poly.str() + " on [" + exactnum::to_string(lo) + ", " +
                 exactnum::to_string(hi) + "]: root " + std::to_string(k) + " " + describe(iv) +
                 " outside scan bracket [" + exactnum::to_string(o.lo) + ", " +
                 exactnum::to_string(o.hi) + "]");
      }
    }
  }
  return res;
}

PropertyResult density_invariance(std::uint64_t seed, int cases) {
  PropertyResult res{"density scale and basis invariance"};
  Rng rng(seed);
  const Rational width = exactnum::power_of_two(-80);
  for (int i = 0; i < cases; ++i) {
    ++res.cases;
    PeriodicPacking p = random_lattice_packing(rng);
    const Rational f = random_rational_in(rng, Rational(1, 4), Rational(4), 12);
    PeriodicPacking scaled = p.scaled(f == 0 ? Rational(1) : f);
    PeriodicPacking rebased = change_basis(p, random_unimodular(rng));
    auto d0 = packing::density(p, width).density;
    auto d1 = packing::density(scaled, width).density;
    auto d2 = packing::density(rebased, width).density;
    for (const auto& d : {d1, d2}) {
      if (!d.overlaps(d0) || d.width() > width) {
        res.fail("density " + describe(d0) + " vs " + describe(d));
      }
    }
  }
  return res;
}

PropertyResult descartes_identity(std::uint64_t seed, int cases) {
  PropertyResult res{"descartes quadratic identity"};
  Rng rng(seed);
  const Rational width = exactnum::power_of_two(-70);
  for (int i = 0; i < cases; ++i) {
    ++res.cases;
    Rational r[3];
    for (auto& x : r) x = random_rational_in(rng, Rational(1, 10), Rational(10), 40);
    for (auto& x : r)
      if (x == 0) x = Rational(1, 10);
    Expression inner = packing::descartes_inner_expression(r[0], r[1], r[2]);
    Expression k1 = 1 / Expression(r[0]), k2 = 1 / Expression(r[1]), k3 = 1 / Expression(r[2]);
    Expression k4 = 1 / inner;
    Expression residual = exactnum::square(k1 + k2 + k3 + k4) -
                          2 * (exactnum::square(k1) + exactnum::square(k2) +
                               exactnum::square(k3) + exactnum::square(k4));
    auto enc = exactnum::eval(residual, exactnum::Bindings(), width);
    if (!enc.value.contains(0) || !enc.width_reached) {
      res.fail("residual " + describe(enc.value));
    }
    const double oracle = apollonius_inner(exactnum::to_double(r[0]), exactnum::to_double(r[1]),
                                           exactnum::to_double(r[2]));
    auto rho = exactnum::eval(inner, exactnum::Bindings(), width).value;
    if (std::abs(exactnum::to_double(rho.midpoint()) - oracle) > 1e-9 * (1 + oracle)) {
      res.fail("inner radius " + describe(rho) + " vs Newton " + std::to_string(oracle));
    }
  }
  return res;
}

PropertyResult compare_antisymmetry(std::uint64_t seed, int cases) {
  PropertyResult res{"compare_densities antisymmetry"};
  Rng rng(seed);
  auto swapped = [](Order o) {
    return o == Order::FirstDenser    ? Order::SecondDenser
           : o == Order::SecondDenser ? Order::FirstDenser
                                      : Order::Inconclusive;
  };
  for (int i = 0; i < cases; ++i) {
    ++res.cases;
    PeriodicPacking a = random_lattice_packing(rng);
    // Every third case compares against an equally dense copy.
    PeriodicPacking b = i % 3 == 0 ? a.scaled(Rational(3, 2)) : random_lattice_packing(rng);
    const int depth = 64;
    Order ab = verifier::compare_densities(a, b, depth).order;
    Order ba = verifier::compare_densities(b, a, depth).order;
    if (ba != swapped(ab)) {
      res.fail(std::string("compare(a,b) = ") + verifier::to_string(ab) + ", compare(b,a) = " +
               verifier::to_string(ba));
    }
    if (i % 3 == 0 && ab != Order::Inconclusive) res.fail("equal densities were ordered");
  }
  return res;
}

namespace {

std::vector<PeriodicPacking> graph_fixtures(Rng& rng, int cases) {
  std::vector<PeriodicPacking> out;
  const char* names[] = {"hexagonal.scene", "square.scene", "fig3.scene", "case110.scene"};
  std::vector<PeriodicPacking> base;
  for (const char* n : names) base.push_back(bundled(n).packing);
  out = base;
  for (int i = 0; i < cases; ++i) {
    const PeriodicPacking& p = base[i % base.size()];
    std::vector<int> ids(p.discs().size());
    std::iota(ids.begin(), ids.end(), 100);
    std::shuffle(ids.begin(), ids.end(), rng);
    out.push_back(change_basis(relabel(p, ids), random_unimodular(rng)));
  }
  return out;
}

}  // namespace

PropertyResult face_trace_conservation(std::uint64_t seed, int cases) {
  PropertyResult res{"face-trace edge conservation"};
  Rng rng(seed);
  for (const auto& p : graph_fixtures(rng, cases)) {
    ++res.cases;
    auto g = verifier::contact_graph(p);
    std::vector<int> used(g.half_edge_count(), 0);
    std::size_t total = 0;
    for (const auto& f : g.faces()) {
      total += f.size();
      for (auto h : f.half_edges) ++used[h];
    }
    if (total != 2 * g.edges().size()) res.fail("face lengths do not sum to 2E");
    if (std::any_of(used.begin(), used.end(), [](int u) { return u != 1; })) {
      res.fail("a half-edge is not used exactly once");
    }
    if (g.euler_characteristic() != 0) res.fail("V - E + F != 0");
  }
  return res;
}

PropertyResult compactness_invariance(std::uint64_t seed, int cases) {
  PropertyResult res{"compactness under relabeling and basis change"};
  Rng rng(seed);
  const char* names[] = {"hexagonal.scene", "square.scene", "fig3.scene", "case110.scene"};
  for (int i = 0; i < cases; ++i) {
    ++res.cases;
    PeriodicPacking p = bundled(names[i % 4]).packing;
    std::vector<int> ids(p.discs().size());
    std::iota(ids.begin(), ids.end(), 7);
    std::shuffle(ids.begin(), ids.end(), rng);
    PeriodicPacking q = change_basis(relabel(p, ids), random_unimodular(rng));
    auto gp = verifier::contact_graph(p), gq = verifier::contact_graph(q);
    auto sizes = [](const verifier::ContactGraph& g) {
      std::vector<std::size_t> s;
      for (const auto& f : g.faces()) s.push_back(f.size());
      std::sort(s.begin(), s.end());
      return s;
    };
    if (verifier::check_compact(gp).compact != verifier::check_compact(gq).compact ||
        sizes(gp) != sizes(gq)) {
      res.fail(std::string(names[i % 4]) + ": verdict or face sizes changed");
    }
  }
  return res;
}

PropertyResult saturation_monotonicity(std::uint64_t seed, int cases) {
  PropertyResult res{"saturation monotonicity"};
  Rng rng(seed);
  const char* names[] = {"hexagonal.scene", "case110.scene"};
  for (const char* name : names) {
    auto s = bundled(name);
    auto g = verifier::contact_graph(s.packing);
    std::vector<Rational> probes;
    for (int i = 0; i < cases / 2; ++i) {
      probes.push_back(random_rational_in(rng, Rational(1, 20), Rational(3, 10), 1000));
    }
    std::sort(probes.begin(), probes.end());
    bool seen_saturated = false;
    for (const auto& pr : probes) {
      ++res.cases;
      auto v = verifier::check_saturated(s.packing, g, Expression(pr)).saturated;
      if (v == verifier::Answer::No && seen_saturated) {
        res.fail(std::string(name) + ": unsaturated at " + exactnum::to_string(pr) +
                 " after a smaller probe was saturated");
      }
      if (v == verifier::Answer::Yes) seen_saturated = true;
    }
  }
  return res;
}

PropertyResult scene_round_trip(std::uint64_t seed, int cases) {
  PropertyResult res{"scene round trip"};
  Rng rng(seed);
  const char* names[] = {"hexagonal.scene", "square.scene", "fig3.scene", "case110.scene",
                         "case110_polynomials.scene"};
  for (const char* n : names) {
    ++res.cases;
    auto a = shell::load_scene(scene_dir() + "/" + n);
    auto b = shell::parse_scene(shell::serialize_scene(a));
    if (!shell::same_structure(a, b)) res.fail(std::string(n) + " changed on round trip");
  }
  for (int i = 0; i < cases; ++i) {
    ++res.cases;
    const std::vector<std::string> radii = {"a", "b"};
    std::ostringstream text;
    text << "name random " << i << "\n";
    text << "radius a rational " << uniform(rng, 1, 9) << "/" << uniform(rng, 10, 20) << "\n";
    text << "radius b expr " << random_expression_text(rng, 3, {"a"}) << "\n";
    text << "define k " << random_expression_text(rng, 4, radii) << "\n";
    text << "lattice " << random_expression_text(rng, 2, radii) << " 0 ; "
         << random_expression_text(rng, 2, radii) << " " << random_expression_text(rng, 2, {"k"})
         << "\n";
    const int n = static_cast<int>(uniform(rng, 1, 4));
    for (int d = 0; d < n; ++d) {
      text << "disc " << d << " " << random_expression_text(rng, 3, {"a", "b", "k"}) << " "
           << random_expression_text(rng, 3, {"k"}) << " " << radii[d % 2] << "\n";
    }
    for (int d = 1; d < n; ++d) {
      text << "contact " << d - 1 << " " << d;
      if (uniform(rng, 0, 1)) text << " " << uniform(rng, -2, 2) << " " << uniform(rng, -2, 2);
      text << "\n";
    }
    if (uniform(rng, 0, 1)) text << "solve 9 a tangent 0 tangent 0 1 0 pick upper\n";
    try {
      auto a = shell::parse_scene(text.str());
      auto b = shell::parse_scene(shell::serialize_scene(a));
      if (!shell::same_structure(a, b)) res.fail("changed on round trip:\n" + text.str());
    } catch (const shell::SceneError& e) {
      res.fail(std::string("generated scene rejected: ") + e.what() + "\n" + text.str());
    }
  }
  return res;
}

PropertyResult solved_tangencies_in_graph(std::uint64_t seed, int cases) {
  PropertyResult res{"solved tangencies appear in the contact graph"};
  Rng rng(seed);
  std::string fig3;
  {
    std::ifstream in(scene_dir() + "/fig3.scene");
    std::stringstream ss;
    ss << in.rdbuf();
    fig3 = ss.str();
  }
  for (int i = 0; i < cases; ++i) {
    ++res.cases;
    // The same row construction with a rational small radius in place of s/r.
    const Rational q = random_rational_in(rng, Rational(13, 20), Rational(19, 20), 200);
    std::string text;
    std::istringstream lines(fig3);
    for (std::string line; std::getline(lines, line);) {
      if (line.rfind("radius q ", 0) == 0) line = "radius q rational " + exactnum::to_string(q);
      text += line + "\n";
    }
    try {
      auto s = shell::build_scene(shell::parse_scene(text));
      auto g = verifier::contact_graph(s.packing);
      for (const auto& want : {packing::Contact{1, 3, {}}, packing::Contact{2, 3, {}}}) {
        if (std::find(g.edges().begin(), g.edges().end(), want.normalized()) == g.edges().end()) {
          res.fail("q = " + exactnum::to_string(q) + ": solved contact missing");
        }
      }
    } catch (const std::exception& e) {
      res.fail("q = " + exactnum::to_string(q) + ": " + e.what());
    }
  }
  return res;
}

}  // namespace packcert::testing
