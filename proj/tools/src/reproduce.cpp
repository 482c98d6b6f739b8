#include "reproduce.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "stablegenus/expr_parser.hpp"
#include "stablegenus/serialize.hpp"
#include "svg.hpp"

namespace sgenus {

using namespace stablegenus;

bool Reproduction::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

std::vector<std::string> reproduce_targets() { return {"figure1", "figure3", "figure4", "table-4d"}; }

namespace {

RationalVector vec(std::initializer_list<Rational> xs) { return RationalVector(xs); }

std::string show(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : " ") + x;
  return "{" + out + "}";
}

Check expect_eq(const std::string& name, const std::string& got, const std::string& want) {
  return {name, got == want, "got " + got + ", expected " + want};
}

bool equal_up_to_sign(const RationalVector& a, const RationalVector& b) {
  if (a == b) return true;
  RationalVector neg = b;
  for (auto& x : neg) x = -x;
  return a == neg;
}

std::vector<RationalVector> points_2d(const VPolytope& v) { return v.vertices; }

// --- expected data -----------------------------------------------------------

// Signature graph of 3T(2,7) - 2T(2,11): jump set and (1/2)|sigma| per piece.
const std::vector<std::string> kFig1Jumps = {"1/22", "1/14", "3/22", "3/14", "5/22", "7/22", "5/14", "9/22"};
const std::vector<std::string> kFig1Values = {"0", "2", "1", "1", "2", "0", "2", "1", "1"};

// Interval functionals on span{T(2,7), T(2,11)}, up to sign, in interval order.
const std::vector<RationalVector> kFig3Functionals = {vec({0, 1}), vec({1, 1}), vec({1, 2}), vec({2, 2}),
                                                      vec({2, 3}), vec({2, 4}), vec({3, 4}), vec({3, 5})};

// One of each antipodal pair of vertices of the ball on span{3_1, 5_1, 5_2, 6_2}.
const std::vector<RationalVector> kTable4d = {
    vec({2, -1, 0, 0}),  vec({0, 1, -2, 0}),  vec({0, 1, 0, -1}), vec({2, -1, 0, -1}),
    vec({0, 0, 1, 0}),   vec({2, 0, -1, 0}),  vec({0, 1, 0, -2}), vec({2, 1, -2, -2}),
    vec({2, 1, -2, -1}), vec({0, 1, -2, 1}),  vec({0, 0, 1, -2}), vec({2, 0, -1, -2})};

// --- targets -------------------------------------------------------------------

Reproduction figure1(const Registry& registry) {
  Reproduction r{"figure1", {}, {}};
  const KnotExpr e = parse_expr("3*T(2,7) - 2*T(2,11)");
  const auto segs = segments(e);
  std::vector<std::string> jumps, values;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (segs[i].hi) jumps.push_back(segs[i].hi->to_string());
    values.push_back(to_string(abs(segs[i].value) / 2));
  }
  r.checks.push_back(expect_eq("jump set", show(jumps), show(kFig1Jumps)));
  r.checks.push_back(expect_eq("half |sigma| per interval", show(values), show(kFig1Values)));
  r.checks.push_back(expect_eq("max half |sigma|", to_string(max_half_abs(e)), "2"));
  r.checks.push_back(expect_eq("sigma at 17/77", to_string(evaluate(e, Rational(17, 77))), "-4"));
  const BoundReport b = g_st_interval(e, Category::topological, registry);
  r.checks.push_back(expect_eq("g_st interval",
                               "[" + to_string(b.lower.value) + ", " + (b.upper.value ? to_string(*b.upper.value) : "inf") + "]",
                               "[2, 2]"));
  r.artifacts.push_back({"figure1.svg", signature_svg(e, "Signature function of " + to_text(e))});
  r.artifacts.push_back({"figure1.csv", segments_csv(e)});
  return r;
}

Reproduction figure3(const Registry& registry) {
  Reproduction r{"figure3", {}, {}};
  const std::vector<BasisKnot> basis{torus(2, 7), torus(2, 11)};
  const UnitBallReport ball = unit_ball(basis, Category::topological, registry);
  bool match = ball.functionals.size() == kFig3Functionals.size();
  for (std::size_t i = 0; match && i < kFig3Functionals.size(); ++i)
    match = equal_up_to_sign(ball.functionals[i].coefficients, kFig3Functionals[i]);
  r.checks.push_back({"eight interval functionals", match, std::to_string(ball.functionals.size()) + " functionals"});
  const RationalVector v = vec({Rational(3, 2), -1});
  const RationalVector mv = vec({Rational(-3, 2), 1});
  const bool has_v = ball.outer_vertices && std::count(ball.outer_vertices->vertices.begin(),
                                                        ball.outer_vertices->vertices.end(), v) &&
                     std::count(ball.outer_vertices->vertices.begin(), ball.outer_vertices->vertices.end(), mv);
  r.checks.push_back({"vertex +-(3/2, -1)", has_v, ""});
  const RationalVector p = vec({0, Rational(1, 5)});
  r.checks.push_back(expect_eq("(0, 1/5) position", to_string(contains(ball.outer, p)), "boundary"));
  r.checks.push_back({"(0, 1/5) is not a vertex", !is_vertex(ball.outer, p), ""});
  r.checks.push_back({"inner hull inside outer ball", ball.sandwich, ""});
  const BoundReport b = g_st_interval(parse_expr("3/2*T(2,7) - T(2,11)"), Category::topological, registry);
  r.checks.push_back({"g_st(3/2 T(2,7) - T(2,11)) = 1", b.determined() && b.lower.value == 1, ""});

  std::vector<PolygonLayer> layers;
  if (ball.outer_vertices) layers.push_back({"outer", points_2d(*ball.outer_vertices)});
  layers.push_back({"inner", points_2d(ball.inner)});
  r.artifacts.push_back({"figure3.svg", polygon_svg(layers, "T(2,7)", "T(2,11)", "Unit ball on span{T(2,7), T(2,11)}")});
  r.artifacts.push_back({"figure3.json", to_json(ball).dump(2) + "\n"});
  return r;
}

Reproduction figure4(const Registry& registry) {
  Reproduction r{"figure4", {}, {}};
  const KnotExpr t37(torus(3, 7));
  r.checks.push_back(expect_eq("max half |sigma(T(3,7))|", to_string(max_half_abs(t37)), "5"));
  r.checks.push_back(expect_eq("half |sigma_1/2(T(3,7))|", to_string(abs(evaluate(t37, Rational(1, 2))) / 2), "4"));
  r.checks.push_back(expect_eq("smooth lower bound", to_string(lower_bound(t37, Category::smooth).value), "6"));
  r.checks.push_back(expect_eq("topological lower bound", to_string(lower_bound(t37, Category::topological).value), "5"));

  const std::vector<BasisKnot> basis{torus(3, 7), torus(2, 5)};
  const UnitBallReport top = unit_ball(basis, Category::topological, registry);
  const UnitBallReport smooth = unit_ball(basis, Category::smooth, registry);
  const RationalVector p = vec({Rational(1, 5), 0});
  r.checks.push_back({"(1/5, 0) in topological ball", contains(top.outer, p) != Position::outside, ""});
  r.checks.push_back(expect_eq("(1/5, 0) position in smooth ball", to_string(contains(smooth.outer, p)), "outside"));
  bool nested = smooth.outer_vertices.has_value();
  if (nested)
    for (const auto& v : smooth.outer_vertices->vertices) nested = nested && contains(top.outer, v) != Position::outside;
  r.checks.push_back({"smooth ball inside topological ball", nested, ""});

  std::vector<PolygonLayer> layers;
  if (top.outer_vertices) layers.push_back({"outer", points_2d(*top.outer_vertices)});
  if (smooth.outer_vertices) layers.push_back({"smooth", points_2d(*smooth.outer_vertices)});
  layers.push_back({"inner", points_2d(smooth.inner)});
  r.artifacts.push_back({"figure4.svg", polygon_svg(layers, "T(3,7)", "T(2,5)", "Topological and smooth balls on span{T(3,7), T(2,5)}")});
  nlohmann::json j = {{"schema", kSchema}, {"topological", to_json(top)}, {"smooth", to_json(smooth)}};
  r.artifacts.push_back({"figure4.json", j.dump(2) + "\n"});
  return r;
}

Reproduction table_4d(const Registry& registry) {
  Reproduction r{"table-4d", {}, {}};
  const std::vector<BasisKnot> basis{catalog("3_1"), catalog("5_1"), catalog("5_2"), catalog("6_2")};
  const UnitBallReport ball = unit_ball(basis, Category::topological, registry);
  if (!ball.outer_vertices) {
    r.checks.push_back({"outer ball bounded", false, ball.outer_note});
    return r;
  }
  const auto& got = ball.outer_vertices->vertices;
  r.checks.push_back(expect_eq("vertex count", std::to_string(got.size()), "24"));
  // Compare as sets, allowing one sign flip per basis knot.
  const std::set<RationalVector> got_set(got.begin(), got.end());
  std::string matched_signs;
  for (int mask = 0; mask < 16 && matched_signs.empty(); ++mask) {
    std::set<RationalVector> want;
    for (const auto& w : kTable4d) {
      RationalVector s = w;
      for (int k = 0; k < 4; ++k)
        if (mask & (1 << k)) s[static_cast<std::size_t>(k)] = -s[static_cast<std::size_t>(k)];
      RationalVector n = s;
      for (auto& x : n) x = -x;
      want.insert(s);
      want.insert(n);
    }
    if (want == got_set) {
      for (int k = 0; k < 4; ++k) matched_signs += (mask & (1 << k)) ? '-' : '+';
    }
  }
  r.checks.push_back({"vertex set matches the 12 listed pairs", !matched_signs.empty(),
                      matched_signs.empty() ? "no sign pattern matches" : "basis signs " + matched_signs});
  for (const auto& w : {vec({2, -1, 0, 0}), vec({0, 1, 0, -2})})
    r.checks.push_back({"vertex " + to_string(w), got_set.count(w) > 0, ""});
  r.checks.push_back({"inner hull inside outer ball", ball.sandwich, ""});

  std::ostringstream csv;
  csv << "x1,x2,x3,x4\n";
  for (const auto& v : got) csv << to_string(v[0]) << ',' << to_string(v[1]) << ',' << to_string(v[2]) << ',' << to_string(v[3]) << '\n';
  r.artifacts.push_back({"table-4d.csv", csv.str()});
  r.artifacts.push_back({"table-4d.json", to_json(ball).dump(2) + "\n"});
  return r;
}

}  // namespace

Reproduction reproduce(const std::string& target, const Registry& registry) {
  if (target == "figure1") return figure1(registry);
  if (target == "figure3") return figure3(registry);
  if (target == "figure4") return figure4(registry);
  if (target == "table-4d") return table_4d(registry);
  throw InputError("unknown reproduce target '" + target + "'");
}

}  // namespace sgenus
