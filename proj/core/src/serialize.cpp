#include "stablegenus/serialize.hpp"

#include <sstream>

#include "stablegenus/expr_parser.hpp"

namespace stablegenus {

using nlohmann::json;

json rational_json(const Rational& q) { return to_string(q); }

json vector_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json basis_json(const std::vector<BasisKnot>& basis) {
  json out = json::array();
  for (const auto& k : basis) out.push_back(k.name());
  return out;
}

json to_json(const StepFunction& f) {
  json jumps = json::array();
  for (const auto& j : f.jumps()) jumps.push_back({{"location", j.location.to_string()}, {"delta", j.delta}});
  return {{"schema", kSchema}, {"jumps", jumps}};
}

json to_json(const Functional& f) { return {{"label", f.label}, {"coefficients", vector_json(f.coefficients)}}; }

json to_json(const HPolytope& p) {
  json hs = json::array();
  for (const auto& h : p.halfspaces()) hs.push_back({{"normal", vector_json(h.normal)}, {"bound", to_string(h.bound)}});
  return {{"dimension", p.dimension()}, {"halfspaces", hs}};
}

json to_json(const VPolytope& v) {
  json vs = json::array();
  for (const auto& x : v.vertices) vs.push_back(vector_json(x));
  return {{"dimension", v.dimension}, {"vertices", vs}};
}

json to_json(const Fact& f) {
  json basis = json::array();
  for (const auto& k : f.basis) basis.push_back(k.name());
  json coeffs = json::array();
  for (const auto& c : f.coefficients) coeffs.push_back(c.get_si());
  return {{"basis", basis},
          {"coefficients", coeffs},
          {"kind", to_string(f.kind)},
          {"value", to_string(f.value)},
          {"provenance", f.provenance}};
}

json to_json(const BoundReport& r, const Registry& registry) {
  json points = json::array();
  for (const auto& p : r.upper.certificate.points) {
    const Fact& f = registry.at(p.fact);
    points.push_back({{"weight", to_string(p.weight)}, {"point", to_text((1 / f.value) * f.expr())}, {"fact", to_json(f)}});
  }
  json lines = json::array();
  for (const auto& l : r.upper.certificate.lines) {
    const Fact& f = registry.at(l.fact);
    lines.push_back({{"multiple", to_string(l.multiple)}, {"direction", to_text(f.expr())}, {"fact", to_json(f)}});
  }
  json upper = r.upper.value ? json(to_string(*r.upper.value)) : json("inf");
  return {{"schema", kSchema},
          {"expr", to_text(r.expr)},
          {"category", to_string(r.category)},
          {"lower", to_string(r.lower.value)},
          {"upper", upper},
          {"determined", r.determined()},
          {"lower_witness", {{"basis", basis_json(r.lower.basis)}, {"functional", to_json(r.lower.witness)}}},
          {"upper_witness", {{"points", points}, {"lines", lines}}}};
}

json to_json(const UnitBallReport& r) {
  json fs = json::array();
  for (const auto& f : r.functionals) fs.push_back(to_json(f));
  json outer = to_json(r.outer);
  if (r.outer_vertices) {
    outer["vertices"] = to_json(*r.outer_vertices)["vertices"];
  } else {
    outer["vertices"] = nullptr;
    outer["note"] = r.outer_note;
  }
  json lin = json::array();
  for (const auto& l : r.inner_lineality) lin.push_back(vector_json(l));
  json inner = to_json(r.inner);
  inner["lineality"] = lin;
  return {{"schema", kSchema},
          {"basis", basis_json(r.basis)},
          {"category", to_string(r.category)},
          {"functionals", fs},
          {"outer", outer},
          {"inner", inner},
          {"inner_inside_outer", r.sandwich}};
}

json to_json(const CGCertificate& c) {
  return {{"schema", kSchema},
          {"eps", to_string(c.eps)},
          {"J", to_text(c.j)},
          {"sevenths", vector_json(c.sevenths)},
          {"threshold", to_string(c.threshold)},
          {"verdict", c.valid ? "valid" : "invalid"},
          {"failure", c.failure ? json(*c.failure) : json(nullptr)},
          {"lower", to_string(c.lower)},
          {"upper", to_string(c.upper)},
          {"transcript", c.transcript}};
}

CGCertificate certificate_from_json(const json& j) {
  try {
    if (j.value("schema", "") != kSchema) throw InputError("certificate: missing or wrong schema");
    CGCertificate c;
    c.eps = parse_rational(j.at("eps").get<std::string>());
    c.j = parse_expr(j.at("J").get<std::string>());
    for (const auto& s : j.at("sevenths")) c.sevenths.push_back(parse_rational(s.get<std::string>()));
    c.threshold = parse_rational(j.at("threshold").get<std::string>());
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict != "valid" && verdict != "invalid") throw InputError("certificate: bad verdict");
    c.valid = verdict == "valid";
    if (!j.at("failure").is_null()) c.failure = j.at("failure").get<std::string>();
    c.lower = parse_rational(j.at("lower").get<std::string>());
    c.upper = parse_rational(j.at("upper").get<std::string>());
    c.transcript = j.at("transcript").get<std::vector<std::string>>();
    return c;
  } catch (const json::exception& e) {
    throw InputError(std::string("certificate: ") + e.what());
  }
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find(',') == std::string::npos) return s;
  return "\"" + s + "\"";
}

}  // namespace

std::string segments_csv(const KnotExpr& expr, unsigned cap_bits) {
  std::ostringstream out;
  out << "t_lo,t_hi,value\n";
  for (const auto& s : segments(expr, cap_bits)) {
    const std::string lo = s.lo ? s.lo->to_string() : "0";
    const std::string hi = s.hi ? s.hi->to_string() : "1/2";
    out << csv_field(lo) << ',' << csv_field(hi) << ',' << to_string(abs(s.value) / 2) << '\n';
  }
  return out.str();
}

SubadditiveTable parse_table(const std::string& text) {
  SubadditiveTable table;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string n_text, v_text, extra;
    if (!(ls >> n_text)) continue;
    if (!(ls >> v_text) || (ls >> extra)) throw InputError("table line " + std::to_string(line_no) + ": expected 'n value'");
    const Rational n = parse_rational(n_text);
    if (!is_integer(n) || n < 1) throw InputError("table line " + std::to_string(line_no) + ": n must be a positive integer");
    const Rational v = parse_rational(v_text);
    if (v < 0) throw InputError("table line " + std::to_string(line_no) + ": value must be nonnegative");
    table.set(n.get_num().get_si(), v);
  }
  if (table.empty()) throw InputError("table is empty");
  return table;
}

}  // namespace stablegenus
