#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "reproduce.hpp"
#include "stablegenus/casson_gordon.hpp"
#include "stablegenus/expr_parser.hpp"
#include "stablegenus/fekete.hpp"
#include "stablegenus/finite_field.hpp"
#include "stablegenus/serialize.hpp"
#include "svg.hpp"

namespace sgenus {

using namespace stablegenus;
using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

}  // namespace

std::vector<std::string> split_basis(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

namespace {

// Signals a reproduction or verification mismatch.
class Mismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string expr;
  std::string basis;
  std::string category = "topological";
  std::string facts;
  std::string format = "json";
  std::string out;
  std::string eps;
  std::string j;
  int max_k = 15;
  int max_multiplicity = 5;
  std::string file;
  std::string target;
  long fekete_n = 0;
  std::string fekete_b;
  std::string fekete_eps;
  unsigned cap_bits = kDefaultPrecisionCapBits;
};

Registry registry_for(const Options& o) { return o.facts.empty() ? default_registry() : load_registry(o.facts); }

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InputError("cannot write '" + o.out + "'");
  f << text;
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (o.format == a) return;
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  throw CLI::ValidationError("--format", "'" + o.format + "' not supported here (use " + list + ")");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void cmd_sig(const Options& o, std::ostream& out) {
  require_format(o, {"json", "csv", "svg"});
  const KnotExpr e = parse_expr(o.expr);
  if (o.format == "csv") return emit(o, segments_csv(e, o.cap_bits), out);
  if (o.format == "svg") return emit(o, signature_svg(e, "Signature function of " + to_text(e), o.cap_bits), out);
  json terms = json::object();
  for (const auto& [k, c] : e.terms()) terms[k.name()] = to_json(step_function(k, o.cap_bits))["jumps"];
  json segs = json::array();
  for (const auto& s : segments(e, o.cap_bits)) {
    segs.push_back({{"t_lo", s.lo ? s.lo->to_string() : "0"},
                    {"t_hi", s.hi ? s.hi->to_string() : "1/2"},
                    {"sigma", to_string(s.value)}});
  }
  const json doc = {{"schema", kSchema},
                    {"expr", to_text(e)},
                    {"jumps", terms},
                    {"segments", segs},
                    {"max_half_abs", to_string(max_half_abs(e, o.cap_bits))}};
  emit(o, doc.dump(2) + "\n", out);
}

void cmd_bounds(const Options& o, std::ostream& out) {
  require_format(o, {"json"});
  const Registry reg = registry_for(o);
  const BoundReport r = g_st_interval(parse_expr(o.expr), parse_category(o.category), reg, o.cap_bits);
  if (!verify(r, reg)) throw std::logic_error("bound report failed its own verification");
  emit(o, to_json(r, reg).dump(2) + "\n", out);
}

void cmd_ball(const Options& o, std::ostream& out) {
  require_format(o, {"json", "svg"});
  std::vector<BasisKnot> basis;
  for (const auto& name : split_basis(o.basis)) basis.push_back(parse_basis_knot(name));
  const UnitBallReport r = unit_ball(basis, parse_category(o.category), registry_for(o), o.cap_bits);
  if (o.format == "json") return emit(o, to_json(r).dump(2) + "\n", out);
  if (basis.size() != 2) throw CLI::ValidationError("--format", "svg needs a two-knot basis");
  if (!r.outer_vertices) throw GeometryError(r.outer_note);
  std::vector<PolygonLayer> layers{{"outer", r.outer_vertices->vertices}, {"inner", r.inner.vertices}};
  emit(o, polygon_svg(layers, r.basis[0].name(), r.basis[1].name(), "Unit ball"), out);
}

void cmd_cg_certify(const Options& o, std::ostream& out) {
  require_format(o, {"json"});
  const Rational eps = parse_rational(o.eps);
  const KnotExpr j = o.j.empty() ? construct_J(eps, {o.max_k, o.max_multiplicity}) : parse_expr(o.j);
  emit(o, to_json(certify(eps, j)).dump(2) + "\n", out);
}

void cmd_cg_verify(const Options& o, std::ostream& out) {
  json doc;
  try {
    doc = json::parse(read_file(o.file));
  } catch (const json::parse_error& e) {
    throw InputError(std::string("certificate: ") + e.what());
  }
  const CGCertificate c = certificate_from_json(doc);
  if (!verify_certificate(c)) throw Mismatch("certificate rejected: recorded values do not match a recomputation");
  out << "certificate verified: " << (c.valid ? "valid" : "invalid") << ", g_st(K(J,-J)) in [" << to_string(c.lower)
      << ", " << to_string(c.upper) << "]\n";
}

void cmd_fekete(const Options& o, std::ostream& out) {
  require_format(o, {"json"});
  const SubadditiveTable table = parse_table(read_file(o.file));
  json violations = json::array();
  for (const auto& v : audit_subadditive(table)) violations.push_back(v.to_string());
  json doc = {{"schema", kSchema},
              {"entries", table.values().size()},
              {"upper", to_string(fekete_upper(table))},
              {"violations", violations}};
  if (o.fekete_n > 0) {
    const Rational b = parse_rational(o.fekete_b.empty() ? "0" : o.fekete_b);
    const Rational eps = parse_rational(o.fekete_eps.empty() ? "1" : o.fekete_eps);
    doc["n0"] = to_string(fekete_n0(o.fekete_n, b, eps));
  }
  emit(o, doc.dump(2) + "\n", out);
}

void cmd_reproduce(const Options& o, std::ostream& out) {
  const Registry reg = registry_for(o);
  const std::vector<std::string> targets = o.target == "all" ? reproduce_targets() : std::vector<std::string>{o.target};
  const std::filesystem::path dir = o.out.empty() ? std::filesystem::path(".") : std::filesystem::path(o.out);
  std::filesystem::create_directories(dir);
  bool ok = true;
  for (const auto& t : targets) {
    const Reproduction r = reproduce(t, reg);
    for (const auto& c : r.checks) {
      out << (c.ok ? "ok   " : "FAIL ") << t << ": " << c.name;
      if (!c.ok && !c.detail.empty()) out << " (" << c.detail << ")";
      out << '\n';
    }
    for (const auto& a : r.artifacts) {
      std::ofstream f(dir / a.filename);
      if (!f) throw InputError("cannot write '" + (dir / a.filename).string() + "'");
      f << a.content;
      out << "wrote " << (dir / a.filename).string() << '\n';
    }
    ok = ok && r.ok();
  }
  if (!ok) throw Mismatch("reproduction mismatch");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounds on the stable 4-genus of knot combinations", "sgenus"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* c, bool with_format) {
    c->add_option("--cap-bits", o.cap_bits, "Precision cap for certified comparisons")->check(CLI::Range(64u, 65536u));
    if (with_format) c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "svg"}));
    c->add_option("--out", o.out, "Write output to this path");
  };
  auto add_bounds_opts = [&](CLI::App* c) {
    c->add_option("--category", o.category, "smooth or topological")->check(CLI::IsMember({"smooth", "topological"}));
    c->add_option("--facts", o.facts, "Facts registry file (JSON)")->check(CLI::ExistingFile);
  };

  auto* sig = app.add_subcommand("sig", "Signature function of an expression");
  sig->add_option("expr", o.expr, "Knot expression, e.g. \"3*T(2,7) - 2*T(2,11)\"")->required();
  add_common(sig, true);

  auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds with witnesses");
  bounds->add_option("expr", o.expr, "Knot expression")->required();
  add_bounds_opts(bounds);
  add_common(bounds, true);

  auto* ball = app.add_subcommand("ball", "Unit ball on the span of a basis");
  ball->add_option("basis", o.basis, "Comma-separated basis, e.g. \"T(2,7),T(2,11)\"")->required();
  add_bounds_opts(ball);
  add_common(ball, true);

  auto* cg = app.add_subcommand("cg-certify", "Certificate for g_st(K(J,-J)) >= (1-eps)/2");
  cg->add_option("--eps", o.eps, "Rational in (0,1)")->required();
  cg->add_option("--J", o.j, "Companion knot expression (searched when omitted)");
  cg->add_option("--max-k", o.max_k, "Largest T(2,k) in the search")->check(CLI::Range(3, 199));
  cg->add_option("--max-multiplicity", o.max_multiplicity, "Largest multiplicity in the search")->check(CLI::Range(0, 50));
  add_common(cg, true);

  auto* cgv = app.add_subcommand("cg-verify", "Re-check a serialized certificate");
  cgv->add_option("certificate", o.file, "Certificate JSON file")->required()->check(CLI::ExistingFile);

  auto* fk = app.add_subcommand("fekete", "Subadditive table: upper bound, audit, n0");
  fk->add_option("table", o.file, "Text file of 'n value' lines")->required()->check(CLI::ExistingFile);
  fk->add_option("--N", o.fekete_n, "Index N for the n0 formula")->check(CLI::PositiveNumber);
  fk->add_option("--B", o.fekete_b, "Bound B on f(b), b < N");
  fk->add_option("--eps", o.fekete_eps, "Tolerance eps");
  add_common(fk, true);

  auto* rep = app.add_subcommand("reproduce", "Regenerate a figure or table and compare with expected data");
  std::vector<std::string> choices = reproduce_targets();
  choices.push_back("all");
  rep->add_option("target", o.target, "figure1, figure3, figure4, table-4d or all")->required()->check(CLI::IsMember(choices));
  rep->add_option("--facts", o.facts, "Facts registry file (JSON)")->check(CLI::ExistingFile);
  rep->add_option("--out", o.out, "Output directory");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*sig) cmd_sig(o, out);
    else if (*bounds) cmd_bounds(o, out);
    else if (*ball) cmd_ball(o, out);
    else if (*cg) cmd_cg_certify(o, out);
    else if (*cgv) cmd_cg_verify(o, out);
    else if (*fk) cmd_fekete(o, out);
    else if (*rep) cmd_reproduce(o, out);
  } catch (const CLI::ValidationError& e) {
    err << "sgenus: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "sgenus: " << e.what() << '\n';
    return kUsage;
  } catch (const Mismatch& e) {
    err << "sgenus: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::exception& e) {
    err << "sgenus: " << e.what() << '\n';
    return kComputation;
  }
  return kOk;
}

}  // namespace sgenus
