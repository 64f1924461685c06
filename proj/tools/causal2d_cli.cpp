// causal2d command-line front end. Reads JSON, writes JSON.
// Exit codes: 0 pass, 1 verification failure, 2 input error.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "causal2d/cylinder.hpp"
#include "causal2d/embedding.hpp"
#include "causal2d/errors.hpp"
#include "causal2d/json_io.hpp"
#include "causal2d/oracle.hpp"
#include "causal2d/random.hpp"
#include "causal2d/smoothconf.hpp"

namespace cj = causal2d::json;
using Json = nlohmann::json;
using namespace causal2d;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct RunConfig {
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  double tol = 1e-6;
  long grid_n = 4;
  std::string output_path;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::pair<std::string, std::string> split_pair(const std::string& text, const char* flag) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
    throw InputError(std::string(flag) + ": expected x,t");
  }
  return {text.substr(0, comma), text.substr(comma + 1)};
}

Event parse_event(const std::string& text, const char* flag) {
  const auto [x, t] = split_pair(text, flag);
  try {
    return Event{parse_rational(x), parse_rational(t)};
  } catch (const Error& e) {
    throw InputError(std::string(flag) + ": " + e.detail());
  }
}

double parse_real(const std::string& text, const char* flag) {
  double value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || !std::isfinite(value)) {
    throw InputError(std::string(flag) + ": '" + text + "' is not a finite number");
  }
  return value;
}

SampleSpec sample_spec(const RunConfig& cfg) {
  SampleSpec spec;
  spec.seed = cfg.seed;
  spec.pairs = cfg.samples;
  return spec;
}

std::string verdict_name(DescentVerdict v) { return std::string(to_string(v)); }

Json witness_json(const std::optional<std::pair<std::size_t, std::size_t>>& w, const CausalGrid& grid) {
  if (!w) return nullptr;
  return Json::array({cj::to_json(grid.events()[w->first]), cj::to_json(grid.events()[w->second])});
}

// Each command fills `out` and returns an exit code.

int cmd_compose(const std::string& a, const std::string& b, Json& out) {
  const Json ja = load(a);
  const Json jb = load(b);
  if (cj::is_automorphism(ja) != cj::is_automorphism(jb)) {
    throw InputError("compose: both inputs must be automorphisms or both line maps");
  }
  if (cj::is_automorphism(ja)) {
    out = cj::to_json(auto_compose(cj::automorphism_from(ja, "A"), cj::automorphism_from(jb, "B")));
  } else {
    out = cj::to_json(compose(cj::line_map_from(ja, "A"), cj::line_map_from(jb, "B")));
  }
  return kPass;
}

int cmd_invert(const std::string& a, Json& out) {
  const Json ja = load(a);
  if (cj::is_automorphism(ja)) {
    out = cj::to_json(auto_invert(cj::automorphism_from(ja, "A")));
  } else {
    out = cj::to_json(invert(cj::line_map_from(ja, "A")));
  }
  return kPass;
}

int cmd_apply(const std::string& a, const std::string& point, Json& out) {
  const Json ja = load(a);
  if (cj::is_smooth(ja)) {
    const auto F = cj::smooth_automorphism_from(ja, "A");
    const auto [x, t] = split_pair(point, "--point");
    const auto [X, T] = F(parse_real(x, "--point"), parse_real(t, "--point"));
    out = Json{{"x", X}, {"t", T}};
  } else {
    out = cj::to_json(cj::automorphism_from(ja, "A")(parse_event(point, "--point")));
  }
  return kPass;
}

int cmd_verify_auto(const std::string& a, const RunConfig& cfg, Json& out) {
  const auto F = cj::automorphism_from(load(a), "A");
  const OrderReport pairs = verify_order_iso(F, sample_spec(cfg));
  const CausalGrid grid = build_flat_grid(cfg.grid_n);
  const OrderIsoResult on_grid = check_order_iso([&F](const Event& e) { return F(e); }, grid);
  const bool pass = pairs.passed() && on_grid.iso;
  out = Json{{"pass", pass},
             {"pairs", cj::to_json(pairs)},
             {"grid", {{"n", cfg.grid_n}, {"iso", on_grid.iso}, {"witness", witness_json(on_grid.witness, grid)}}}};
  return pass ? kPass : kFail;
}

int cmd_descend(const std::string& a, const RunConfig& cfg, Json& out) {
  const auto g = cj::automorphism_from(load(a), "A");
  const DescentVerdict analytic = descends(g);
  const BruteDescentResult brute = check_descent_brute(g, cfg.grid_n);
  const auto cphi = qp_quasi_period(g.phi());
  const auto cpsi = qp_quasi_period(g.psi());
  out = Json{{"verdict", verdict_name(analytic)},
             {"brute_verdict", verdict_name(brute.verdict)},
             {"grid_n", cfg.grid_n},
             {"literal_condition", satisfies_paper_condition(g.phi(), g.psi())},
             {"c_phi", cphi ? cj::to_json(*cphi) : Json(nullptr)},
             {"c_psi", cpsi ? cj::to_json(*cpsi) : Json(nullptr)}};
  if (brute.witness) out["witness"] = Json::array({cj::to_json(brute.witness->first), cj::to_json(brute.witness->second)});
  if (analytic == DescentVerdict::Automorphism) {
    const CylinderAutomorphism cyl(g);
    out["canonical"] = cj::to_json(canonical_rep(cyl));
    out["order_iso"] = brute.order_iso;
    Sampler s(cfg.seed);
    Json samples = Json::array();
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      const CylPoint p = CylPoint::make(s.rational(1, 12), s.rational(2, 12));
      samples.push_back(Json{{"p", cj::to_json(p)}, {"image", cj::to_json(descend_apply(cyl, p))}});
    }
    out["samples"] = samples;
  }
  const bool pass = analytic == DescentVerdict::Automorphism && brute.verdict == analytic && brute.order_iso;
  return pass ? kPass : kFail;
}

int cmd_quotient_compose(const std::string& a, const std::string& b, Json& out) {
  const CylinderAutomorphism g1(cj::automorphism_from(load(a), "G1"));
  const CylinderAutomorphism g2(cj::automorphism_from(load(b), "G2"));
  out = cj::to_json(quotient_compose(canonical_rep(g1), canonical_rep(g2)));
  return kPass;
}

int cmd_embed(const std::string& f_path, const std::string& d_path, const RunConfig& cfg, Json& out) {
  const MonotoneMap f = cj::monotone_map_from(load(f_path), "f");
  const Domain d = cj::domain_from(load(d_path), "domain");
  const EmbeddingMap i_f = extend_embedding(f, d);
  const Domain image = image_domain(f, d);
  const SampleSpec spec = sample_spec(cfg);
  const CauchyReport cauchy = verify_cauchy_axis(d, spec);
  const CauchyReport image_cauchy = verify_cauchy_axis(image, spec);

  Json samples = Json::array();
  Json mismatches = Json::array();
  std::size_t checked = 0;
  for (const auto& p : sample_domain(d, spec, cfg.samples)) {
    const Event q = i_f(p);
    ++checked;
    if (!(q == i_f.via_shadow(p)) || !image.contains(q)) mismatches.push_back(cj::to_json(p));
    samples.push_back(Json{{"p", cj::to_json(p)}, {"image", cj::to_json(q)}});
  }
  const bool pass = cauchy.passed() && image_cauchy.passed() && mismatches.empty();
  out = Json{{"pass", pass},
             {"image_domain", cj::to_json(image)},
             {"cauchy", cj::to_json(cauchy)},
             {"image_cauchy", cj::to_json(image_cauchy)},
             {"routes", {{"checked", checked}, {"failures", mismatches}}},
             {"samples", samples}};
  return pass ? kPass : kFail;
}

int cmd_grid_check(const std::string& space, const std::string& domain_path, bool do_export, const RunConfig& cfg,
                   Json& out) {
  std::optional<CausalGrid> grid;
  if (space == "flat") {
    std::optional<Domain> d;
    if (!domain_path.empty()) d = cj::domain_from(load(domain_path), "domain");
    grid.emplace(build_flat_grid(cfg.grid_n, d));
  } else {
    if (!domain_path.empty()) throw InputError("--domain only applies to --space flat");
    grid.emplace(build_cyl_grid(cfg.grid_n));
  }
  const bool pass = grid->is_partial_order();
  out = Json{{"space", space}, {"n", cfg.grid_n}, {"nodes", grid->size()}, {"edges", grid->edge_count()},
             {"partial_order", pass}};
  if (do_export) out["graph"] = cj::to_json(*grid);
  return pass ? kPass : kFail;
}

int cmd_conformal(const std::string& a, const std::string& at, double h, const RunConfig& cfg, Json& out) {
  const auto F = cj::smooth_automorphism_from(load(a), "F");
  const auto [xs, ts] = split_pair(at, "--at");
  const double x = parse_real(xs, "--at");
  const double t = parse_real(ts, "--at");
  out = Json{{"at", {x, t}}, {"h", h}, {"tol", cfg.tol}};
  try {
    const ConformalReport r = conformal_defect(F, x, t, h);
    out.update(cj::to_json(r));
    const bool pass = r.lambda > 0 && r.defect < cfg.tol && r.null_preserved;
    out["pass"] = pass;
    return pass ? kPass : kFail;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateJacobian) throw;
    out["pass"] = false;
    out["degenerate"] = true;
    out["inverse_axis_slope"] = inverse_axis_slope(F, 1e-10);
    return kFail;
  }
}

int cmd_orbit(const std::string& a, const std::string& point, long steps, Json& out) {
  if (steps < 0) throw InputError("--steps must be >= 0");
  const auto F = cj::automorphism_from(load(a), "A");
  Event p = parse_event(point, "--point");
  Json orbit = Json::array({cj::to_json(p)});
  for (long k = 0; k < steps; ++k) {
    p = F(p);
    orbit.push_back(cj::to_json(p));
  }
  out = Json{{"orbit", orbit}};
  return kPass;
}

void emit(const Json& out, const std::string& path) {
  const std::string text = out.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact causal automorphisms, cylinder descent and conformality checks in 1+1 dimensions"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "sampler seed");
  app.add_option("--samples", cfg.samples, "number of sampled points or pairs")->check(CLI::PositiveNumber);
  app.add_option("--tol", cfg.tol, "numerical tolerance")->check(CLI::PositiveNumber);
  app.add_option("-n,--grid-n", cfg.grid_n, "oracle grid size")->check(CLI::PositiveNumber);
  app.add_option("-o,--output", cfg.output_path, "write the report here instead of stdout");

  std::string a, b, point, space, domain_path;
  long steps = 10;
  double h = 1e-4;
  bool do_export = false;

  auto* compose_cmd = app.add_subcommand("compose", "A ∘ B of two automorphisms or two line maps");
  compose_cmd->add_option("A", a)->required();
  compose_cmd->add_option("B", b)->required();

  auto* invert_cmd = app.add_subcommand("invert", "inverse of an automorphism or line map");
  invert_cmd->add_option("A", a)->required();

  auto* apply_cmd = app.add_subcommand("apply", "image of a point");
  apply_cmd->add_option("A", a)->required();
  apply_cmd->add_option("--point", point, "x,t")->required();

  auto* verify_cmd = app.add_subcommand("verify-auto", "order-isomorphism suite");
  verify_cmd->add_option("A", a)->required();

  auto* descend_cmd = app.add_subcommand("descend", "descent to the cylinder: verdict and samples");
  descend_cmd->add_option("A", a)->required();

  auto* quotient_cmd = app.add_subcommand("quotient-compose", "product of two cylinder automorphisms");
  quotient_cmd->add_option("G1", a)->required();
  quotient_cmd->add_option("G2", b)->required();

  auto* embed_cmd = app.add_subcommand("embed", "extend a Cauchy-surface map to a domain");
  embed_cmd->add_option("f", a)->required();
  embed_cmd->add_option("domain", b)->required();

  auto* grid_cmd = app.add_subcommand("grid-check", "build an oracle grid and check it is a partial order");
  grid_cmd->add_option("--space", space)->required()->check(CLI::IsMember({"flat", "cyl"}));
  grid_cmd->add_option("--domain", domain_path, "clip a flat grid to this domain");
  grid_cmd->add_flag("--export", do_export, "include the node and edge lists");

  auto* conformal_cmd = app.add_subcommand("conformal-check", "finite-difference conformality of a smooth pair");
  conformal_cmd->add_option("F", a)->required();
  conformal_cmd->add_option("--at", point, "x,t")->required();
  conformal_cmd->add_option("--step", h, "difference step h")->check(CLI::PositiveNumber);

  auto* orbit_cmd = app.add_subcommand("orbit", "iterate an automorphism from a point");
  orbit_cmd->add_option("A", a)->required();
  orbit_cmd->add_option("--point", point, "x,t")->required();
  orbit_cmd->add_option("--steps", steps);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  Json out;
  int code = kPass;
  try {
    if (*compose_cmd) code = cmd_compose(a, b, out);
    else if (*invert_cmd) code = cmd_invert(a, out);
    else if (*apply_cmd) code = cmd_apply(a, point, out);
    else if (*verify_cmd) code = cmd_verify_auto(a, cfg, out);
    else if (*descend_cmd) code = cmd_descend(a, cfg, out);
    else if (*quotient_cmd) code = cmd_quotient_compose(a, b, out);
    else if (*embed_cmd) code = cmd_embed(a, b, cfg, out);
    else if (*grid_cmd) code = cmd_grid_check(space, domain_path, do_export, cfg, out);
    else if (*conformal_cmd) code = cmd_conformal(a, point, h, cfg, out);
    else if (*orbit_cmd) code = cmd_orbit(a, point, steps, out);
    emit(out, cfg.output_path);
  } catch (const Error& e) {
    std::cerr << Json{{"error", to_string(e.code())}, {"message", e.detail()}}.dump() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << Json{{"error", "InvalidInput"}, {"message", e.what()}}.dump() << "\n";
    return kInputError;
  }
  return code;
}
