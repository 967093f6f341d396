#include "packcert/shell/scene.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "packcert/exactnum/roots.hpp"

namespace packcert::shell {

using exactnum::ExpressionSyntaxError;

namespace {

std::string locate(const std::string& message, int line, int column) {
  if (line <= 0) return message;
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
}

struct Token {
  std::string text;
  int column = 1;
};

std::vector<Token> tokenize(std::string_view line, int line_no) {
  std::vector<Token> out;
  int depth = 0;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && (depth > 0 || !std::isspace(static_cast<unsigned char>(line[i])))) {
      if (line[i] == '(') ++depth;
      if (line[i] == ')') --depth;
      ++i;
    }
    if (depth != 0) {
      throw SceneError("unbalanced parentheses", line_no, static_cast<int>(start) + 1);
    }
    out.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  return out;
}

struct PendingName {
  std::string name;
  int line;
  int column;
};

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, int line) : tokens_(std::move(tokens)), line_(line) {}

  bool done() const { return pos_ >= tokens_.size(); }
  const Token& peek() const { return tokens_[pos_]; }

  [[noreturn]] void fail(const std::string& message) const {
    int column = pos_ < tokens_.size() ? tokens_[pos_].column
                 : tokens_.empty()     ? 1
                                       : tokens_.back().column +
                                         static_cast<int>(tokens_.back().text.size());
    throw SceneError(message, line_, column);
  }

  const Token& next(const char* what) {
    if (done()) fail(std::string("expected ") + what);
    return tokens_[pos_++];
  }

  void expect(const char* word) {
    if (done() || tokens_[pos_].text != word) fail(std::string("expected '") + word + "'");
    ++pos_;
  }

  void finish() {
    if (!done()) fail("unexpected '" + tokens_[pos_].text + "'");
  }

  std::string identifier(const char* what) {
    const Token& t = next(what);
    bool ok = !t.text.empty() && (std::isalpha(static_cast<unsigned char>(t.text[0])) || t.text[0] == '_');
    for (char c : t.text) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    if (!ok) {
      --pos_;
      fail(std::string("expected ") + what);
    }
    return t.text;
  }

  int integer(const char* what) {
    const Token& t = next(what);
    int v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || p != t.text.data() + t.text.size()) {
      --pos_;
      fail(std::string("expected ") + what);
    }
    return v;
  }

  bool next_is_integer() const {
    if (done()) return false;
    const auto& t = tokens_[pos_].text;
    int v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    return ec == std::errc() && p == t.data() + t.size();
  }

  Rational rational(const char* what) {
    const Token& t = next(what);
    try {
      return exactnum::parse_rational(t.text);
    } catch (const std::exception&) {
      --pos_;
      fail(std::string("malformed ") + what + " '" + t.text + "'");
    }
  }

  Expression expression(std::vector<PendingName>& names) {
    const Token& t = next("expression");
    Expression e;
    try {
      e = exactnum::parse_expression(t.text);
    } catch (const ExpressionSyntaxError& err) {
      throw SceneError(std::string("malformed expression: ") + err.what(), line_,
                       t.column + static_cast<int>(err.offset()));
    }
    for (const auto& v : e.variables()) {
      auto at = t.text.find(v);
      names.push_back({v, line_, t.column + static_cast<int>(at == std::string::npos ? 0 : at)});
    }
    return e;
  }

  packing::Offset optional_offset() {
    packing::Offset o;
    if (next_is_integer()) {
      o.m = integer("offset m");
      o.n = integer("offset n");
    }
    return o;
  }

  int line() const { return line_; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int line_;
};

std::string rest_of_line(std::string_view line, std::string_view keyword) {
  auto at = line.find(keyword);
  std::string_view rest = line.substr(at + keyword.size());
  auto b = rest.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  auto e = rest.find_last_not_of(" \t\r");
  return std::string(rest.substr(b, e - b + 1));
}

}  // namespace

SceneError::SceneError(const std::string& message, int line, int column)
    : std::runtime_error(locate(message, line, column)), line_(line), column_(column),
      detail_(message) {}

Scene parse_scene(std::string_view text) {
  Scene scene;
  std::vector<PendingName> pending;
  std::map<std::string, int, std::less<>> declared;  // name -> line
  std::set<std::string> radius_names;
  std::map<int, int> disc_lines;
  struct Ref {
    int id;
    int line;
  };
  std::vector<Ref> disc_refs;
  std::vector<std::pair<std::string, Ref>> class_refs;
  int line_no = 0;
  int last_line = 0;

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    auto tokens = tokenize(raw, line_no);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    last_line = line_no;
    LineParser lp(tokens, line_no);
    const std::string keyword = lp.next("keyword").text;

    auto declare = [&](const std::string& name, int column) {
      if (auto it = declared.find(name); it != declared.end()) {
        throw SceneError("duplicate name '" + name + "' (first declared on line " +
                             std::to_string(it->second) + ")",
                         line_no, column);
      }
      declared[name] = line_no;
    };
    auto declare_disc = [&](int id, int column) {
      if (auto it = disc_lines.find(id); it != disc_lines.end()) {
        throw SceneError("duplicate disc id " + std::to_string(id) + " (first declared on line " +
                             std::to_string(it->second) + ")",
                         line_no, column);
      }
      disc_lines[id] = line_no;
    };

    if (keyword == "name") {
      scene.name = rest_of_line(raw, "name");
    } else if (keyword == "description") {
      scene.description = rest_of_line(raw, "description");
    } else if (keyword == "reference") {
      scene.reference = rest_of_line(raw, "reference");
    } else if (keyword == "tol") {
      scene.tolerance = lp.rational("tolerance");
      if (*scene.tolerance <= 0) throw SceneError("tolerance must be positive", line_no, 5);
      lp.finish();
    } else if (keyword == "radius") {
      RadiusDecl r;
      r.line = line_no;
      int column = lp.done() ? 1 : lp.peek().column;
      r.name = lp.identifier("radius name");
      declare(r.name, column);
      radius_names.insert(r.name);
      const std::string kind = lp.next("radius kind").text;
      if (kind == "root") {
        r.kind = RadiusKind::Root;
        const Token& coeffs = lp.next("coefficients");
        try {
          r.poly = IntegerPolynomial::parse(coeffs.text);
        } catch (const std::exception& err) {
          throw SceneError(std::string("malformed polynomial: ") + err.what(), line_no,
                           coeffs.column);
        }
        lp.expect("in");
        r.lo = lp.rational("lower bound");
        r.hi = lp.rational("upper bound");
        if (r.lo > r.hi) lp.fail("empty bracket");
      } else if (kind == "rational") {
        r.kind = RadiusKind::Rational;
        r.value = lp.rational("rational value");
      } else if (kind == "expr") {
        r.kind = RadiusKind::Expr;
        r.expr = lp.expression(pending);
      } else {
        throw SceneError("unknown radius kind '" + kind + "'", line_no, tokens[2].column);
      }
      lp.finish();
      scene.radii.push_back(std::move(r));
    } else if (keyword == "define") {
      DefineDecl d;
      d.line = line_no;
      int column = lp.done() ? 1 : lp.peek().column;
      d.name = lp.identifier("name");
      declare(d.name, column);
      d.expr = lp.expression(pending);
      lp.finish();
      scene.defines.push_back(std::move(d));
    } else if (keyword == "lattice") {
      if (scene.lattice) throw SceneError("lattice declared twice", line_no, 1);
      std::array<Expression, 4> l;
      l[0] = lp.expression(pending);
      l[1] = lp.expression(pending);
      lp.expect(";");
      l[2] = lp.expression(pending);
      l[3] = lp.expression(pending);
      lp.finish();
      scene.lattice = l;
    } else if (keyword == "disc") {
      DiscDecl d;
      d.line = line_no;
      int column = lp.done() ? 1 : lp.peek().column;
      d.id = lp.integer("disc id");
      declare_disc(d.id, column);
      d.x = lp.expression(pending);
      d.y = lp.expression(pending);
      d.radius = lp.identifier("radius name");
      lp.finish();
      class_refs.push_back({d.radius, {d.id, line_no}});
      scene.discs.push_back(std::move(d));
    } else if (keyword == "contact") {
      ContactDecl c;
      c.line = line_no;
      c.contact.a = lp.integer("disc id");
      c.contact.b = lp.integer("disc id");
      c.contact.offset = lp.optional_offset();
      lp.finish();
      disc_refs.push_back({c.contact.a, line_no});
      disc_refs.push_back({c.contact.b, line_no});
      scene.contacts.push_back(c);
    } else if (keyword == "solve") {
      SolveDecl s;
      s.line = line_no;
      int column = lp.done() ? 1 : lp.peek().column;
      s.rule.id = lp.integer("disc id");
      declare_disc(s.rule.id, column);
      s.rule.radius = lp.identifier("radius name");
      lp.expect("tangent");
      s.rule.first.id = lp.integer("disc id");
      s.rule.first.offset = lp.optional_offset();
      lp.expect("tangent");
      s.rule.second.id = lp.integer("disc id");
      s.rule.second.offset = lp.optional_offset();
      lp.expect("pick");
      const Token& side = lp.next("side");
      try {
        s.rule.pick = packing::parse_side(side.text);
      } catch (const std::exception&) {
        throw SceneError("unknown side '" + side.text + "'", line_no, side.column);
      }
      lp.finish();
      class_refs.push_back({s.rule.radius, {s.rule.id, line_no}});
      disc_refs.push_back({s.rule.first.id, line_no});
      disc_refs.push_back({s.rule.second.id, line_no});
      scene.solves.push_back(std::move(s));
    } else {
      throw SceneError("unknown keyword '" + keyword + "'", line_no, tokens[0].column);
    }
    if (end == text.size()) break;
  }

  for (const auto& p : pending) {
    if (!declared.count(p.name)) {
      throw SceneError("unknown identifier '" + p.name + "'", p.line, p.column);
    }
  }
  for (const auto& [name, ref] : class_refs) {
    if (!radius_names.count(name)) {
      throw SceneError("unknown radius class '" + name + "'", ref.line, 1);
    }
  }
  for (const auto& ref : disc_refs) {
    if (!disc_lines.count(ref.id)) {
      throw SceneError("unknown disc id " + std::to_string(ref.id), ref.line, 1);
    }
  }
  if (!scene.lattice) throw SceneError("missing lattice", last_line + 1, 1);

  // Definitions must not be circular.
  std::map<std::string, std::set<std::string>, std::less<>> deps;
  for (const auto& r : scene.radii)
    if (r.kind == RadiusKind::Expr) deps[r.name] = r.expr.variables();
  for (const auto& d : scene.defines) deps[d.name] = d.expr.variables();
  std::map<std::string, int, std::less<>> state;
  std::function<void(const std::string&)> visit = [&](const std::string& n) {
    if (state[n] == 2) return;
    if (state[n] == 1) throw SceneError("circular definition of '" + n + "'", declared[n], 1);
    state[n] = 1;
    for (const auto& m : deps[n]) visit(m);
    state[n] = 2;
  };
  for (const auto& [n, _] : deps) visit(n);
  return scene;
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SceneError("cannot read scene file '" + path + "'", 0, 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scene(ss.str());
}

namespace {

std::string offset_text(const packing::Offset& o, bool always) {
  if (o.is_zero() && !always) return "";
  return " " + std::to_string(o.m) + " " + std::to_string(o.n);
}

}  // namespace

std::string serialize_scene(const Scene& scene) {
  std::ostringstream out;
  if (!scene.name.empty()) out << "name " << scene.name << "\n";
  if (!scene.description.empty()) out << "description " << scene.description << "\n";
  if (!scene.reference.empty()) out << "reference " << scene.reference << "\n";
  if (scene.tolerance) out << "tol " << exactnum::to_string(*scene.tolerance) << "\n";
  for (const auto& r : scene.radii) {
    out << "radius " << r.name << " ";
    switch (r.kind) {
      case RadiusKind::Root:
        out << "root " << r.poly.to_string() << " in " << exactnum::to_string(r.lo) << " "
            << exactnum::to_string(r.hi);
        break;
      case RadiusKind::Rational: out << "rational " << exactnum::to_string(r.value); break;
      case RadiusKind::Expr: out << "expr " << r.expr.to_string(); break;
    }
    out << "\n";
  }
  for (const auto& d : scene.defines) out << "define " << d.name << " " << d.expr.to_string() << "\n";
  if (scene.lattice) {
    const auto& l = *scene.lattice;
    out << "lattice " << l[0].to_string() << " " << l[1].to_string() << " ; " << l[2].to_string()
        << " " << l[3].to_string() << "\n";
  }
  for (const auto& d : scene.discs) {
    out << "disc " << d.id << " " << d.x.to_string() << " " << d.y.to_string() << " " << d.radius
        << "\n";
  }
  for (const auto& s : scene.solves) {
    const auto& r = s.rule;
    out << "solve " << r.id << " " << r.radius << " tangent " << r.first.id
        << offset_text(r.first.offset, false) << " tangent " << r.second.id
        << offset_text(r.second.offset, false) << " pick " << packing::to_string(r.pick) << "\n";
  }
  for (const auto& c : scene.contacts) {
    out << "contact " << c.contact.a << " " << c.contact.b << offset_text(c.contact.offset, false)
        << "\n";
  }
  return out.str();
}

bool same_structure(const Scene& a, const Scene& b) {
  auto radius_eq = [](const RadiusDecl& x, const RadiusDecl& y) {
    if (x.name != y.name || x.kind != y.kind) return false;
    switch (x.kind) {
      case RadiusKind::Root: return x.poly == y.poly && x.lo == y.lo && x.hi == y.hi;
      case RadiusKind::Rational: return x.value == y.value;
      case RadiusKind::Expr: return x.expr == y.expr;
    }
    return false;
  };
  auto define_eq = [](const DefineDecl& x, const DefineDecl& y) {
    return x.name == y.name && x.expr == y.expr;
  };
  auto disc_eq = [](const DiscDecl& x, const DiscDecl& y) {
    return x.id == y.id && x.x == y.x && x.y == y.y && x.radius == y.radius;
  };
  auto contact_eq = [](const ContactDecl& x, const ContactDecl& y) { return x.contact == y.contact; };
  auto solve_eq = [](const SolveDecl& x, const SolveDecl& y) {
    return x.rule.id == y.rule.id && x.rule.radius == y.rule.radius &&
           x.rule.first.id == y.rule.first.id && x.rule.first.offset == y.rule.first.offset &&
           x.rule.second.id == y.rule.second.id && x.rule.second.offset == y.rule.second.offset &&
           x.rule.pick == y.rule.pick;
  };
  auto all = [](const auto& xs, const auto& ys, auto eq) {
    return std::equal(xs.begin(), xs.end(), ys.begin(), ys.end(), eq);
  };
  return a.name == b.name && a.description == b.description && a.reference == b.reference &&
         a.tolerance == b.tolerance && a.lattice == b.lattice && all(a.radii, b.radii, radius_eq) &&
         all(a.defines, b.defines, define_eq) && all(a.discs, b.discs, disc_eq) &&
         all(a.contacts, b.contacts, contact_eq) && all(a.solves, b.solves, solve_eq);
}

BuiltScene build_scene(const Scene& scene, int max_depth) {
  exactnum::Bindings bindings;
  std::map<std::string, Expression, std::less<>> raw;
  for (const auto& r : scene.radii) {
    switch (r.kind) {
      case RadiusKind::Root: {
        std::vector<exactnum::AlgebraicNumber> roots;
        try {
          roots = exactnum::isolate_roots(r.poly, exactnum::Interval(r.lo, r.hi), r.name);
        } catch (const std::invalid_argument& err) {
          throw SceneError("radius '" + r.name + "': " + err.what(), r.line, 1);
        }
        if (roots.size() != 1) {
          throw SceneError("radius '" + r.name + "': bracket holds " +
                               std::to_string(roots.size()) + " roots, expected exactly one",
                           r.line, 1);
        }
        bindings = bindings.with(r.name, roots.front());
        break;
      }
      case RadiusKind::Rational: raw[r.name] = Expression(r.value); break;
      case RadiusKind::Expr: raw[r.name] = r.expr; break;
    }
  }
  for (const auto& d : scene.defines) raw[d.name] = d.expr;

  std::map<std::string, Expression, std::less<>> names;
  for (const auto& r : scene.radii)
    if (r.kind == RadiusKind::Root) names[r.name] = Expression::variable(r.name);
  std::function<Expression(const std::string&)> resolve = [&](const std::string& n) {
    if (auto it = names.find(n); it != names.end()) return it->second;
    const Expression& e = raw.at(n);
    std::map<std::string, Expression, std::less<>> sub;
    for (const auto& v : e.variables()) sub[v] = resolve(v);
    return names[n] = e.substitute(sub);
  };
  for (const auto& [n, _] : raw) resolve(n);
  auto full = [&](const Expression& e) { return e.substitute(names); };

  std::set<int> solved;
  for (const auto& s : scene.solves) solved.insert(s.rule.id);

  std::vector<packing::RadiusClass> classes;
  for (const auto& r : scene.radii) classes.push_back({r.name, names.at(r.name)});
  std::vector<packing::Disc> discs;
  for (const auto& d : scene.discs) discs.push_back({d.id, full(d.x), full(d.y), d.radius});
  const auto& l = *scene.lattice;
  packing::Lattice lattice{full(l[0]), full(l[1]), full(l[2]), full(l[3])};
  std::vector<Contact> early, late;
  for (const auto& c : scene.contacts) {
    (solved.count(c.contact.a) || solved.count(c.contact.b) ? late : early).push_back(c.contact);
  }

  auto wrap = [&](auto&& build, int line) -> PeriodicPacking {
    try {
      return build();
    } catch (const packing::PackingError& err) {
      throw SceneError(err.what(), line, 1);
    } catch (const packing::TangencyError& err) {
      throw SceneError(err.what(), line, 1);
    }
  };
  PeriodicPacking p = wrap(
      [&] {
        return PeriodicPacking(lattice, classes, discs, bindings, early, max_depth);
      },
      0);
  for (const auto& s : scene.solves) {
    p = wrap([&] { return packing::complete_tangencies(p, {s.rule}, max_depth); }, s.line);
  }
  if (!late.empty()) p = wrap([&] { return p.with_additions({}, late); }, 0);

  packing::CertifyOptions options;
  options.max_depth = max_depth;
  if (scene.tolerance) options.tolerance = *scene.tolerance;
  return {std::move(p), std::move(names), options};
}

Expression resolve_expression(const BuiltScene& scene, std::string_view text) {
  Expression e;
  try {
    e = exactnum::parse_expression(text);
  } catch (const ExpressionSyntaxError& err) {
    throw SceneError(std::string("malformed expression: ") + err.what(), 0, 0);
  }
  for (const auto& v : e.variables()) {
    if (!scene.names.count(v)) throw SceneError("unknown identifier '" + v + "'", 0, 0);
  }
  return e.substitute(scene.names);
}

}  // namespace packcert::shell
