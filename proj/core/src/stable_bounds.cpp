#include "stablegenus/stable_bounds.hpp"

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "embedded_data.hpp"
#include "stablegenus/expr_parser.hpp"

namespace stablegenus {

const char* to_string(Category c) { return c == Category::smooth ? "smooth" : "topological"; }

Category parse_category(std::string_view text) {
  if (text == "smooth") return Category::smooth;
  if (text == "topological" || text == "top") return Category::topological;
  throw InputError("unknown category '" + std::string(text) + "' (expected smooth or topological)");
}

const char* to_string(FactKind k) { return k == FactKind::g4_exact ? "g4_exact" : "g4_upper"; }

KnotExpr Fact::expr() const {
  KnotExpr out;
  for (std::size_t i = 0; i < basis.size(); ++i) out = out + KnotExpr(basis[i], Rational(coefficients[i]));
  return out;
}

Fact make_fact(std::vector<BasisKnot> basis, std::vector<Integer> coefficients, FactKind kind, Rational value,
               std::string provenance) {
  if (basis.empty() || basis.size() != coefficients.size()) throw InputError("fact: basis and coefficients differ in length");
  if (value < 0) throw InputError("fact: negative 4-genus value");
  if (value == 0 && kind != FactKind::g4_exact) throw InputError("fact: a zero value must be g4_exact");
  if (provenance.empty()) throw InputError("fact: provenance is required");
  Fact f{std::move(basis), std::move(coefficients), kind, std::move(value), std::move(provenance)};
  if (f.expr().is_zero()) throw InputError("fact: combination is zero");
  return f;
}

namespace {

Rational json_rational(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError("expected a rational given as a string or integer");
}

}  // namespace

Registry parse_registry(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("facts file: ") + e.what());
  }
  if (!doc.is_object() || doc.value("schema", "") != "stablegenus/1" || !doc.contains("facts") || !doc["facts"].is_array()) {
    throw InputError("facts file: expected {\"schema\": \"stablegenus/1\", \"facts\": [...]}");
  }
  Registry out;
  std::size_t idx = 0;
  for (const auto& rec : doc["facts"]) {
    try {
      std::vector<BasisKnot> basis;
      for (const auto& name : rec.at("basis")) basis.push_back(parse_basis_knot(name.get<std::string>()));
      std::vector<Integer> coeffs;
      for (const auto& c : rec.at("coefficients")) {
        if (!c.is_number_integer()) throw InputError("coefficients must be integers");
        coeffs.emplace_back(c.get<long>());
      }
      const std::string kind = rec.at("kind").get<std::string>();
      FactKind k;
      if (kind == "g4_exact") k = FactKind::g4_exact;
      else if (kind == "g4_upper") k = FactKind::g4_upper;
      else throw InputError("unknown kind '" + kind + "'");
      out.push_back(make_fact(std::move(basis), std::move(coeffs), k, json_rational(rec.at("value")),
                              rec.at("provenance").get<std::string>()));
    } catch (const nlohmann::json::exception& e) {
      throw InputError("facts file, record " + std::to_string(idx) + ": " + e.what());
    } catch (const InputError& e) {
      throw InputError("facts file, record " + std::to_string(idx) + ": " + e.what());
    }
    ++idx;
  }
  return out;
}

Registry load_registry(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open facts file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_registry(ss.str());
}

const Registry& default_registry() {
  static const Registry reg = parse_registry(detail::embedded_facts_text());
  return reg;
}

std::vector<Functional> category_functionals(const std::vector<BasisKnot>& basis, Category category,
                                             unsigned cap_bits) {
  std::vector<Functional> fs = interval_functionals(basis, cap_bits);
  if (category == Category::smooth) {
    for (auto& f : smooth_functionals(basis)) fs.push_back(std::move(f));
    fs = dedupe_functionals(fs);
  }
  return fs;
}

LowerBound lower_bound(const KnotExpr& expr, Category category, unsigned cap_bits) {
  LowerBound out;
  out.value = 0;
  out.witness.label = "zero";
  if (expr.is_zero()) return out;
  out.basis = expr.basis();
  const RationalVector x = expr.coordinates(out.basis);
  out.witness.coefficients.assign(x.size(), Rational(0));
  for (const auto& f : category_functionals(out.basis, category, cap_bits)) {
    const Rational v = abs(f.apply(x));
    if (v > out.value) {
      out.value = v;
      out.witness = f;
    }
  }
  return out;
}

namespace {

std::vector<BasisKnot> union_basis(const KnotExpr& expr, const Registry& registry) {
  std::set<BasisKnot> all;
  for (const auto& k : expr.basis()) all.insert(k);
  for (const auto& f : registry)
    for (const auto& k : f.expr().basis()) all.insert(k);
  return {all.begin(), all.end()};
}

}  // namespace

UpperBound upper_bound(const KnotExpr& expr, const Registry& registry) {
  UpperBound out;
  if (expr.is_zero()) {
    out.value = Rational(0);
    return out;
  }
  const auto basis = union_basis(expr, registry);
  const RationalVector x = expr.coordinates(basis);
  VPolytope hull{basis.size(), {}};
  std::vector<std::pair<std::size_t, int>> owner;  // (fact, sign) per hull point
  std::vector<RationalVector> lines;
  std::vector<std::size_t> line_owner;
  for (std::size_t i = 0; i < registry.size(); ++i) {
    RationalVector v = registry[i].expr().coordinates(basis);
    if (registry[i].is_slice()) {
      lines.push_back(std::move(v));
      line_owner.push_back(i);
      continue;
    }
    for (auto& c : v) c /= registry[i].value;
    RationalVector neg = v;
    for (auto& c : neg) c = -c;
    hull.vertices.push_back(std::move(v));
    owner.emplace_back(i, 1);
    hull.vertices.push_back(std::move(neg));
    owner.emplace_back(i, -1);
  }
  const auto cert = gauge_inner_certificate(x, hull, lines);
  if (!cert) return out;
  out.value = cert->value;
  for (std::size_t k = 0; k < cert->weights.size(); ++k) {
    if (cert->weights[k] == 0) continue;
    out.certificate.points.push_back({owner[k].first, owner[k].second * cert->weights[k]});
  }
  for (std::size_t k = 0; k < cert->lineality.size(); ++k) {
    if (cert->lineality[k] == 0) continue;
    out.certificate.lines.push_back({line_owner[k], cert->lineality[k]});
  }
  return out;
}

bool verify_upper(const KnotExpr& expr, const UpperBound& ub, const Registry& registry) {
  if (!ub.value) return true;  // +infinity needs no witness
  KnotExpr rebuilt;
  Rational total = 0;
  for (const auto& p : ub.certificate.points) {
    if (p.fact >= registry.size() || registry[p.fact].is_slice()) return false;
    rebuilt = rebuilt + (p.weight / registry[p.fact].value) * registry[p.fact].expr();
    total += abs(p.weight);
  }
  for (const auto& l : ub.certificate.lines) {
    if (l.fact >= registry.size() || !registry[l.fact].is_slice()) return false;
    rebuilt = rebuilt + l.multiple * registry[l.fact].expr();
  }
  return rebuilt == expr && total == *ub.value;
}

BoundReport g_st_interval(const KnotExpr& expr, Category category, const Registry& registry, unsigned cap_bits) {
  BoundReport r;
  r.expr = expr;
  r.category = category;
  r.lower = lower_bound(expr, category, cap_bits);
  r.upper = upper_bound(expr, registry);
  return r;
}

bool verify(const BoundReport& report, const Registry& registry) {
  const auto& lb = report.lower;
  if (report.expr.is_zero()) {
    if (lb.value != 0) return false;
  } else {
    const RationalVector x = report.expr.coordinates(lb.basis);
    if (lb.witness.coefficients.size() != x.size() || abs(lb.witness.apply(x)) != lb.value) return false;
  }
  if (!verify_upper(report.expr, report.upper, registry)) return false;
  return !report.upper.value || lb.value <= *report.upper.value;
}

UnitBallReport unit_ball(const std::vector<BasisKnot>& basis_in, Category category, const Registry& registry,
                         unsigned cap_bits) {
  if (basis_in.empty()) throw InputError("unit ball needs a nonempty basis");
  UnitBallReport r;
  r.category = category;
  for (const auto& k : basis_in) {
    const auto [canon, sign] = canonical_basis(k);
    (void)sign;
    if (std::find(r.basis.begin(), r.basis.end(), canon) != r.basis.end())
      throw InputError("basis knot " + canon.name() + " listed twice");
    r.basis.push_back(canon);
  }
  const std::size_t d = r.basis.size();
  r.functionals = category_functionals(r.basis, category, cap_bits);
  r.outer = from_functionals(r.functionals, d);
  try {
    r.outer_vertices = vertices(r.outer);
  } catch (const GeometryError& e) {
    r.outer_note = e.what();
  }

  const std::set<BasisKnot> span(r.basis.begin(), r.basis.end());
  VPolytope pts{d, {}};
  for (const auto& f : registry) {
    const KnotExpr e = f.expr();
    const auto fb = e.basis();
    if (!std::all_of(fb.begin(), fb.end(), [&](const BasisKnot& k) { return span.count(k) > 0; })) continue;
    RationalVector v = e.coordinates(r.basis);
    if (f.is_slice()) {
      r.inner_lineality.push_back(std::move(v));
      continue;
    }
    for (auto& c : v) c /= f.value;
    RationalVector neg = v;
    for (auto& c : neg) c = -c;
    pts.vertices.push_back(std::move(v));
    pts.vertices.push_back(std::move(neg));
  }
  r.inner = reduce(pts);

  for (const auto& v : r.inner.vertices)
    if (contains(r.outer, v) == Position::outside) r.sandwich = false;
  for (const auto& l : r.inner_lineality)
    for (const auto& h : r.outer.halfspaces())
      if (dot(h.normal, l) != 0) r.sandwich = false;
  return r;
}

}  // namespace stablegenus
