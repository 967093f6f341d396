#include "packcert/shell/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "packcert/exactnum/roots.hpp"
#include "packcert/packing/geometry.hpp"
#include "packcert/shell/report.hpp"
#include "packcert/shell/scene.hpp"
#include "packcert/shell/svg.hpp"
#include "packcert/verifier/predicates.hpp"

namespace packcert::shell {

using exactnum::Direction;
using exactnum::Interval;
using exactnum::Status;
using verifier::Answer;

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational rational_arg(const std::string& text, const char* what) {
  try {
    return exactnum::parse_rational(text);
  } catch (const std::exception&) {
    throw InputError(std::string("malformed ") + what + " '" + text + "'");
  }
}

std::string show(const Interval& iv, int digits = 15) {
  return "[" + exactnum::to_decimal(iv.lo(), digits) + ", " +
         exactnum::to_decimal(iv.hi(), digits, true) + "]";
}

std::string scientific(const Rational& v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", exactnum::to_double(v));
  return buf;
}

std::string show_face(const verifier::Face& f) {
  std::string s;
  for (const auto& c : f.corners) {
    if (!s.empty()) s += " ";
    s += std::to_string(c.disc);
    if (!c.offset.is_zero()) {
      s += "(" + std::to_string(c.offset.m) + "," + std::to_string(c.offset.n) + ")";
    }
  }
  return s;
}

Outcome from_status(Status s) {
  switch (s) {
    case Status::Proved: return Outcome::Pass;
    case Status::Disproved: return Outcome::Fail;
    case Status::Inconclusive: return Outcome::Inconclusive;
  }
  return Outcome::Inconclusive;
}

struct Globals {
  std::string tol;
  int max_depth = exactnum::kDefaultMaxDepth;
  std::string format = "text";
};

BuiltScene open_scene(const std::string& path, const Globals& g) {
  BuiltScene b = [&] {
    try {
      return build_scene(load_scene(path), g.max_depth);
    } catch (const SceneError& e) {
      throw InputError(path + ": " + e.what());
    }
  }();
  if (!g.tol.empty()) b.options.tolerance = rational_arg(g.tol, "tolerance");
  b.options.max_depth = g.max_depth;
  return b;
}

void cmd_isolate(Report& report, const std::string& poly_text, const std::string& lo,
                 const std::string& hi, const std::string& width_text, int expect_count) {
  exactnum::IntegerPolynomial poly;
  try {
    poly = exactnum::IntegerPolynomial::parse(poly_text);
  } catch (const std::exception& e) {
    throw InputError(std::string("malformed polynomial: ") + e.what());
  }
  const Rational a = rational_arg(lo, "lower bound"), b = rational_arg(hi, "upper bound");
  const Rational width = rational_arg(width_text, "width");
  if (a > b) throw InputError("empty bracket");
  if (width <= 0) throw InputError("width must be positive");
  std::vector<exactnum::AlgebraicNumber> roots;
  try {
    roots = exactnum::isolate_roots(poly, Interval(a, b));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const int digits =
      std::clamp(static_cast<int>(std::ceil(-std::log10(exactnum::to_double(width)))) + 3, 6, 200);
  auto& head = report.add("isolate", Outcome::Info);
  head.fields.push_back({"polynomial", poly.to_string()});
  head.fields.push_back({"bracket", "[" + lo + ", " + hi + "]"});
  head.fields.push_back({"roots", std::to_string(roots.size())});
  for (std::size_t i = 0; i < roots.size(); ++i) {
    auto refined = exactnum::refine(roots[i], width);
    auto& e = report.add("root " + std::to_string(i + 1), Outcome::Pass);
    e.fields.push_back({"interval", show(refined.isolating(), digits)});
    e.fields.push_back({"width", scientific(refined.isolating().width())});
  }
  if (expect_count >= 0) {
    auto& e = report.add("root count",
                         static_cast<int>(roots.size()) == expect_count ? Outcome::Pass
                                                                        : Outcome::Fail);
    e.fields.push_back({"expected", std::to_string(expect_count)});
    e.fields.push_back({"found", std::to_string(roots.size())});
  }
}

void cmd_verify(Report& report, const BuiltScene& s, const std::vector<std::string>& expect,
                const std::string& probe_text) {
  for (const auto& x : expect) {
    if (x != "compact" && x != "noncompact" && x != "saturated" && x != "unsaturated") {
      throw InputError("unknown expectation '" + x + "'");
    }
  }
  auto expected = [&](const char* w) {
    return std::find(expect.begin(), expect.end(), w) != expect.end();
  };
  const auto& p = s.packing;
  auto overlap = packing::check_no_overlap(p, s.options);
  Outcome oo = overlap.pass                      ? Outcome::Pass
               : !overlap.violations.empty()     ? Outcome::Fail
                                                 : Outcome::Inconclusive;
  auto& oe = report.add("overlap", oo);
  oe.fields.push_back({"pairs checked", std::to_string(overlap.pairs_checked)});
  oe.fields.push_back({"violations", std::to_string(overlap.violations.size())});
  oe.fields.push_back({"inconclusive", std::to_string(overlap.inconclusive.size())});
  if (oo != Outcome::Pass) return;

  std::optional<verifier::ContactGraph> graph;
  try {
    graph.emplace(verifier::contact_graph(p, s.options));
  } catch (const verifier::GraphError& e) {
    report.add("contact graph", Outcome::Fail).fields.push_back({"error", e.what()});
    return;
  }
  auto& ge = report.add("contact graph", Outcome::Pass);
  ge.fields.push_back({"vertices", std::to_string(graph->vertices().size())});
  ge.fields.push_back({"edges", std::to_string(graph->edges().size())});
  ge.fields.push_back({"faces", std::to_string(graph->faces().size())});
  ge.fields.push_back({"euler", std::to_string(graph->euler_characteristic())});

  auto judged = [&](Answer a, const char* yes, const char* no) {
    if (!expected(yes) && !expected(no)) return Outcome::Info;
    if (a == Answer::Inconclusive) return Outcome::Inconclusive;
    return (a == Answer::Yes) == expected(yes) && (a == Answer::No) == expected(no)
               ? Outcome::Pass
               : Outcome::Fail;
  };
  auto compact = verifier::check_compact(*graph);
  auto& ce = report.add("compact", judged(compact.compact, "compact", "noncompact"));
  ce.fields.push_back({"answer", verifier::to_string(compact.compact)});
  if (compact.witness) ce.fields.push_back({"witness face", show_face(*compact.witness)});

  Expression probe = probe_text.empty() ? verifier::smallest_radius(p, s.options.max_depth)
                                        : resolve_expression(s, probe_text);
  auto sat = verifier::check_saturated(p, *graph, probe, s.options);
  auto& se = report.add("saturated", judged(sat.saturated, "saturated", "unsaturated"));
  se.fields.push_back({"answer", verifier::to_string(sat.saturated)});
  se.fields.push_back({"probe", probe.to_string()});
  if (sat.witness) {
    se.fields.push_back({"hole", sat.witness->description + " " + show_face(sat.witness->face)});
    se.fields.push_back({"insertable radius", show(sat.witness->radius)});
  }
  se.fields.push_back({"inconclusive holes", std::to_string(sat.inconclusive_faces.size())});
  for (const auto& f : sat.inconclusive_faces) {
    se.fields.push_back({"inconclusive hole", show_face(f)});
  }

  auto d = packing::density(p, exactnum::power_of_two(-50), s.options.max_depth);
  report.add("density", Outcome::Info).fields.push_back({"interval", show(d.density)});
}

void cmd_density(Report& report, const BuiltScene& s, const std::string& width_text) {
  const Rational width = rational_arg(width_text, "width");
  if (width <= 0) throw InputError("width must be positive");
  auto d = packing::density(s.packing, width, s.options.max_depth);
  auto& e = report.add("density", d.density.width() <= width ? Outcome::Pass : Outcome::Inconclusive);
  e.fields.push_back({"interval", show(d.density, 20)});
  e.fields.push_back({"disc area", show(d.disc_area, 20)});
  e.fields.push_back({"cell area", show(d.cell_area, 20)});
}

void cmd_certify(Report& report, const BuiltScene& s, const std::string& expr, bool use_density,
                 const std::string& above, const std::string& below) {
  if (use_density == !expr.empty()) throw InputError("give exactly one of --expr and --density");
  if (above.empty() == below.empty()) throw InputError("give exactly one of --above and --below");
  Expression target = use_density ? packing::density_expression(s.packing)
                                  : resolve_expression(s, expr);
  const Rational threshold = rational_arg(above.empty() ? below : above, "threshold");
  const Direction dir = above.empty() ? Direction::Below : Direction::Above;
  auto v = exactnum::certify_compare(target, threshold, dir, s.packing.bindings(),
                                     s.options.max_depth);
  auto& e = report.add("certify", from_status(v.status));
  e.fields.push_back({"target", use_density ? std::string("density") : expr});
  e.fields.push_back({"claim", std::string(above.empty() ? "< " : "> ") +
                                   (above.empty() ? below : above)});
  e.fields.push_back({"status", exactnum::to_string(v.status)});
  e.fields.push_back({"enclosure", show(v.enclosure, 20)});
  e.fields.push_back({"depth", std::to_string(v.depth)});
}

void cmd_compare(Report& report, const BuiltScene& a, const BuiltScene& b, int max_depth,
                 const std::string& expect) {
  if (!expect.empty() && expect != "first" && expect != "second") {
    throw InputError("unknown expectation '" + expect + "'");
  }
  auto c = verifier::compare_densities(a.packing, b.packing, max_depth);
  Outcome o = c.order == verifier::Order::Inconclusive ? Outcome::Inconclusive : Outcome::Pass;
  if (o == Outcome::Pass && !expect.empty() &&
      (c.order == verifier::Order::FirstDenser) != (expect == "first")) {
    o = Outcome::Fail;
  }
  auto& e = report.add("compare", o);
  e.fields.push_back({"order", verifier::to_string(c.order)});
  e.fields.push_back({"first density", show(c.first, 20)});
  e.fields.push_back({"second density", show(c.second, 20)});
  e.fields.push_back({"depth", std::to_string(c.depth)});
}

void cmd_render(Report& report, const BuiltScene& s, const std::string& tiles,
                const std::string& path, bool contacts) {
  SvgOptions opts;
  char x = 0;
  std::istringstream in(tiles);
  if (!(in >> opts.rows >> x >> opts.cols) || (x != 'x' && x != 'X') || !in.eof()) {
    throw InputError("tiles must look like RxC");
  }
  if (opts.rows <= 0 || opts.cols <= 0) throw InputError("tile counts must be positive");
  if (contacts) opts.contacts = verifier::contact_graph(s.packing, s.options).edges();
  const std::string svg = render_svg(s.packing, opts);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << svg;
  auto& e = report.add("render", Outcome::Pass);
  e.fields.push_back({"path", path});
  e.fields.push_back({"circles", std::to_string(s.packing.discs().size() * opts.rows * opts.cols)});
}

void cmd_margin(Report& report, const BuiltScene& s, const std::string& floor_text,
                const std::string& cls) {
  const Rational floor = rational_arg(floor_text, "floor");
  if (!s.names.count(cls)) throw InputError("unknown radius class '" + cls + "'");
  bool used = false;
  for (const auto& d : s.packing.discs()) used = used || d.radius == cls;
  if (!used) throw InputError("radius class '" + cls + "' has no discs");
  const Rational width = exactnum::power_of_two(-60);
  auto high = exactnum::eval(packing::density_expression(s.packing), s.packing.bindings(), width,
                             {s.options.max_depth});
  auto part = exactnum::eval(packing::class_density_expression(s.packing, cls),
                             s.packing.bindings(), width, {s.options.max_depth});
  try {
    auto m = packing::removal_margin(high.value, Interval(floor), part.value);
    auto& e = report.add("margin", m.conclusive ? Outcome::Pass : Outcome::Inconclusive);
    e.fields.push_back({"class", cls});
    e.fields.push_back({"density", show(high.value)});
    e.fields.push_back({"class share", show(part.value)});
    e.fields.push_back({"removable fraction", show(m.fraction)});
  } catch (const packing::MarginError& err) {
    auto& e = report.add("margin", Outcome::Fail);
    e.fields.push_back({"class", cls});
    e.fields.push_back({"density", show(high.value)});
    e.fields.push_back({"error", err.what()});
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified checks for periodic disc packings", "packcert"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--tol", g.tol, "tangency tolerance (rational)");
  app.add_option("--max-depth", g.max_depth, "maximum refinement depth")
      ->check(CLI::Range(8, 4096));
  app.add_option("--format", g.format, "text or json-lines")
      ->check(CLI::IsMember({"text", "json-lines"}));

  std::string poly, lo, hi, width = "1e-12";
  int expect_count = -1;
  auto* isolate = app.add_subcommand("isolate", "isolate the real roots of a polynomial");
  isolate->add_option("--poly", poly, "ascending integer coefficients, comma separated")->required();
  isolate->add_option("--lo", lo)->required();
  isolate->add_option("--hi", hi)->required();
  isolate->add_option("--width", width, "target width of each interval");
  isolate->add_option("--expect-count", expect_count);

  std::string scene_path, scene_b, probe;
  std::vector<std::string> expect;
  auto* verify = app.add_subcommand("verify", "overlap, contact graph, compactness, saturation");
  verify->add_option("scene", scene_path)->required();
  verify->add_option("--expect", expect, "compact|noncompact|saturated|unsaturated");
  verify->add_option("--probe", probe, "probe radius expression for saturation");

  std::string density_width = "1e-12";
  auto* density = app.add_subcommand("density", "density enclosure");
  density->add_option("scene", scene_path)->required();
  density->add_option("--width", density_width);

  std::string expr, above, below;
  bool use_density = false;
  auto* certify = app.add_subcommand("certify", "certify a strict inequality");
  certify->add_option("scene", scene_path)->required();
  certify->add_option("--expr", expr, "name or expression over the scene's names");
  certify->add_flag("--density", use_density);
  certify->add_option("--above", above);
  certify->add_option("--below", below);

  std::string expect_order;
  auto* compare = app.add_subcommand("compare", "order two packings by density");
  compare->add_option("first", scene_path)->required();
  compare->add_option("second", scene_b)->required();
  compare->add_option("--expect", expect_order, "first|second");

  std::string tiles = "1x1", out_path;
  bool contacts = false;
  auto* render = app.add_subcommand("render", "write an SVG drawing");
  render->add_option("scene", scene_path)->required();
  render->add_option("--tiles", tiles, "RxC");
  render->add_option("--out", out_path)->required();
  render->add_flag("--contacts", contacts, "overlay the contact graph");

  std::string floor, cls;
  auto* margin = app.add_subcommand("margin", "removable fraction of a radius class");
  margin->add_option("scene", scene_path)->required();
  margin->add_option("--floor", floor, "density to stay above")->required();
  margin->add_option("--class", cls)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 3;
  }

  Report report;
  try {
    if (*isolate) {
      cmd_isolate(report, poly, lo, hi, width, expect_count);
    } else if (*verify) {
      cmd_verify(report, open_scene(scene_path, g), expect, probe);
    } else if (*density) {
      cmd_density(report, open_scene(scene_path, g), density_width);
    } else if (*certify) {
      cmd_certify(report, open_scene(scene_path, g), expr, use_density, above, below);
    } else if (*compare) {
      cmd_compare(report, open_scene(scene_path, g), open_scene(scene_b, g), g.max_depth,
                  expect_order);
    } else if (*render) {
      cmd_render(report, open_scene(scene_path, g), tiles, out_path, contacts);
    } else if (*margin) {
      cmd_margin(report, open_scene(scene_path, g), floor, cls);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  out << report.render(g.format == "json-lines" ? Format::JsonLines : Format::Text);
  return report.exit_code();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run_cli(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace packcert::shell
