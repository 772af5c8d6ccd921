#include "skein_cli/cli.hpp"

#include "skein/basis.hpp"
#include "skein_cli/json_io.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <ostream>

namespace skein::cli {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end)
    throw UsageError("malformed point \"" + std::string(whole) + "\"; expected m,n");
  return v;
}

io::Json run_product(const CliConfig& cfg, const ThetaAlgebra& alg) {
  if (cfg.operands.size() != 2) throw UsageError("product needs exactly two points");
  const BPoint p1 = parse_point(cfg.operands[0]);
  const BPoint p2 = parse_point(cfg.operands[1]);
  const std::int64_t needed = f_norm(p1) + f_norm(p2);
  if (cfg.order && *cfg.order < needed)
    throw UsageError("--order " + std::to_string(*cfg.order) + " is below the required truncation " +
                     std::to_string(needed));
  AlgebraElement result(alg.ring());
  if (cfg.side == Side::Left) {
    result = alg.product(p1, p2);
  } else if (p1.is_zero() || p2.is_zero()) {
    result = alg.product(p1, p2);
  } else {
    for (const auto& p : points_up_to(needed)) result.add(p, alg.structure_constant(p1, p2, p, Side::Right));
  }
  io::Json j = io::to_json(result);
  if (cfg.trace) {
    io::Json traces = io::Json::array();
    for (const auto& [p, c] : result.terms()) {
      if (p1.is_zero() || p2.is_zero()) break;
      const std::int64_t budget = needed - f_norm(p);
      const RationalPoint Q = alg.endpoint(p1, p2, p, cfg.side);
      io::Json lines1 = io::Json::array();
      io::Json lines2 = io::Json::array();
      for (const auto& t : alg.enumerate(p1, Q, budget)) lines1.push_back(io::to_json(t));
      for (const auto& t : alg.enumerate(p2, Q, budget)) lines2.push_back(io::to_json(t));
      traces.push_back({{"p", io::to_json(p)}, {"endpoint", io::to_json(Q)}, {"lines1", lines1}, {"lines2", lines2}});
    }
    j["traces"] = std::move(traces);
  }
  return j;
}

io::Json run_expand_ray(const CliConfig& cfg, const DiagramConfig& dc) {
  if (!cfg.operands.empty()) throw UsageError("expand-ray takes no positional operands");
  if (!cfg.dir) throw UsageError("expand-ray needs --dir m,n");
  const BPoint d = parse_point(*cfg.dir);
  if (d.is_zero() || !is_primitive(d.lift())) throw UsageError("--dir must be a primitive direction");
  return io::to_json(ray_series(dc, d, cfg.order.value_or(6)));
}

io::Json run_theta_expand(const CliConfig& cfg, const ThetaAlgebra& alg) {
  if (cfg.operands.size() != 1) throw UsageError("theta-expand needs exactly one point");
  const BPoint p = parse_point(cfg.operands[0]);
  return io::to_json(MonomialBasis(alg).theta_to_monomials(p));
}

io::Json run_trace(const CliConfig& cfg, const ThetaAlgebra& alg) {
  if (cfg.operands.size() != 3) throw UsageError("trace needs three points: p1 p2 p");
  const BPoint p1 = parse_point(cfg.operands[0]);
  const BPoint p2 = parse_point(cfg.operands[1]);
  const BPoint p = parse_point(cfg.operands[2]);
  const std::int64_t budget = f_norm(p1) + f_norm(p2) - f_norm(p);
  const RationalPoint Q = alg.endpoint(p1, p2, p, cfg.side);
  io::Json j{{"endpoint", io::to_json(Q)}, {"budget", budget}};
  for (const auto& [key, charge] : {std::pair{"lines1", p1}, std::pair{"lines2", p2}}) {
    io::Json lines = io::Json::array();
    if (budget >= 0 && !charge.is_zero())
      for (const auto& t : alg.enumerate(charge, Q, budget)) lines.push_back(io::to_json(t));
    j[key] = std::move(lines);
  }
  j["structure_constant"] = io::to_json(alg.structure_constant(p1, p2, p, Q));
  return j;
}

Report run_suite(const std::string& suite, const CliConfig& cfg) {
  const bool s11 = cfg.surface == Surface::S11;
  const ThetaAlgebra alg(DiagramConfig::for_surface(cfg.surface));
  auto bound = [&](std::int64_t s04_default, std::int64_t s11_default) {
    const std::int64_t b = cfg.max_f.value_or(s11 ? s11_default : s04_default);
    if (b < 0) throw UsageError("--max-f must be nonnegative");
    return b;
  };
  if (suite == "hand-products") return verify_hand_products(alg);
  if (suite == "chebyshev-ladder") return verify_chebyshev_ladder(alg, static_cast<int>(bound(6, 6)));
  if (suite == "presentation") return verify_presentation_relations(alg);
  if (suite == "consistency") return verify_consistency(alg, bound(6, 6));
  if (suite == "associativity") return verify_associativity(alg, bound(3, 4));
  if (suite == "positivity") return verify_positivity(alg, bound(6, 8));
  if (suite == "psl2") {
    const auto pairs = pairs_with_total(bound(5, 5));
    Report rep("psl2");
    rep.param("surface", std::string(surface_name(cfg.surface)));
    rep.param("pairs", std::to_string(pairs.size()));
    rep.absorb(verify_psl2_equivariance(alg, Matrix2::S(), pairs));
    rep.absorb(verify_psl2_equivariance(alg, Matrix2::T(), pairs));
    return rep;
  }
  if (suite == "torus-limit") return verify_torus_limit(ThetaAlgebra(DiagramConfig::s11()), bound(5, 5));
  if (suite == "specialization")
    return verify_specialization(ThetaAlgebra(DiagramConfig::s04()), ThetaAlgebra(DiagramConfig::s11()),
                                 pairs_with_total(bound(6, 6)));
  if (suite == "weight-identity") return verify_weight_identity(cfg.order.value_or(10));
  if (suite == "oracle") {
    const NcAlgebra nc(s11 ? Presentation::s11() : Presentation::s04());
    return verify_oracle_equivalence(alg, nc, bound(4, 5));
  }
  if (suite == "properties") return verify_properties(alg, bound(5, 5));
  throw UsageError("unknown suite \"" + suite + "\"");
}

}  // namespace

BPoint parse_point(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw UsageError("malformed point \"" + std::string(text) + "\"; expected m,n");
  const BPoint p{parse_int(text.substr(0, comma), text), parse_int(text.substr(comma + 1), text)};
  if (!is_canonical(p)) {
    const BPoint c = canonicalize(p.lift());
    throw UsageError("point " + std::string(text) + " is not canonical; the same point of B is " +
                     std::to_string(c.m) + "," + std::to_string(c.n));
  }
  return p;
}

int exit_code(const Report& report) { return report.passed() ? kExitOk : kExitFail; }

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "hand-products", "chebyshev-ladder", "presentation", "consistency", "associativity", "positivity",
      "psl2",          "torus-limit",      "specialization", "weight-identity", "oracle", "properties"};
  return names;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Exact broken-line products for the quantum scattering diagrams of the "
               "four-punctured sphere and the one-punctured torus.",
               "skein_scatter");
  app.require_subcommand(1);
  CliConfig cfg;
  std::string surface = "s04";
  std::string side = "left";
  std::string suite;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--surface", surface, "s04 or s11")->check(CLI::IsMember({"s04", "s11"}));
    sub->add_option("--output", cfg.output, "Write the JSON result to this file");
  };
  auto* product = app.add_subcommand("product", "Expand theta_p1 * theta_p2 in theta functions");
  common(product);
  product->add_option("points", cfg.operands, "Two points m,n")->expected(0, -1);
  product->add_option("--side", side, "Endpoint side: left or right")->check(CLI::IsMember({"left", "right"}));
  product->add_flag("--trace", cfg.trace, "Include the broken lines behind every structure constant");
  product->add_option("--order", cfg.order, "Truncation order (must cover the product)");

  auto* expand = app.add_subcommand("expand-ray", "Wall function of a primitive direction as a series");
  common(expand);
  expand->add_option("--dir", cfg.dir, "Primitive direction m,n");
  expand->add_option("--order", cfg.order, "Series order (default 6)");

  auto* theta_expand = app.add_subcommand("theta-expand", "Write theta_p in the normal monomials");
  common(theta_expand);
  theta_expand->add_option("point", cfg.operands, "Point m,n")->expected(0, -1);

  auto* trace = app.add_subcommand("trace", "Broken lines ending at the default endpoint for (p1, p2, p)");
  common(trace);
  trace->add_option("points", cfg.operands, "Three points p1 p2 p")->expected(0, -1);
  trace->add_option("--side", side, "Endpoint side: left or right")->check(CLI::IsMember({"left", "right"}));

  auto* verify = app.add_subcommand("verify", "Run a verification suite; exit 1 on FAIL");
  common(verify);
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-f", cfg.max_f, "Bound on F (suite specific; defaults to the acceptance size)");
  verify->add_option("--order", cfg.order, "Series order for weight-identity");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    cfg.surface = parse_surface(surface);
    cfg.side = side == "right" ? Side::Right : Side::Left;
    const DiagramConfig dc = DiagramConfig::for_surface(cfg.surface);
    io::Json result;
    int code = kExitOk;
    if (*product) {
      cfg.command = "product";
      result = run_product(cfg, ThetaAlgebra(dc));
    } else if (*expand) {
      cfg.command = "expand-ray";
      result = run_expand_ray(cfg, dc);
    } else if (*theta_expand) {
      cfg.command = "theta-expand";
      result = run_theta_expand(cfg, ThetaAlgebra(dc));
    } else if (*trace) {
      cfg.command = "trace";
      result = run_trace(cfg, ThetaAlgebra(dc));
    } else {
      cfg.command = "verify";
      const Report rep = run_suite(suite, cfg);
      result = io::to_json(rep);
      code = exit_code(rep);
    }
    const std::string text = io::dump(result);
    if (cfg.output) {
      std::ofstream f(*cfg.output, std::ios::binary);
      if (!f) throw UsageError("cannot open " + *cfg.output + " for writing");
      f << text;
    } else {
      out << text;
    }
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace skein::cli
