#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "mplanes/errors.hpp"
#include "mplanes/g12.hpp"
#include "mplanes/io.hpp"
#include "mplanes/kinematics.hpp"
#include "mplanes/matrix_rep.hpp"
#include "mplanes/transforms.hpp"
#include "mplanes/verify.hpp"

namespace mplanes::cli {

namespace {

using nlohmann::json;

// Largest rapidity whose tanh still rounds below 1.
constexpr double kMaxRapidity = 18.0;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FrameArgs {
  std::optional<double> rapidity;
  std::optional<double> speed;
  std::string raw;
  double angle = 0.0;
};

double parse_double(std::string_view s, const std::string& what) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double x = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(x)) {
    throw UsageError("cannot read " + what + " from \"" + std::string(s) + "\"");
  }
  return x;
}

std::pair<double, double> parse_pair(const std::string& text, char sep, const std::string& what) {
  const auto pos = text.find(sep);
  if (pos == std::string::npos) throw UsageError(what + " must look like a" + sep + "b, got \"" + text + "\"");
  return {parse_double(std::string_view(text).substr(0, pos), what),
          parse_double(std::string_view(text).substr(pos + 1), what)};
}

double tolerance_from_env() {
  const char* env = std::getenv("GA_TOLERANCE");
  if (env == nullptr || *env == '\0') return kDefaultTolerance;
  const double tol = parse_double(env, "GA_TOLERANCE");
  if (!(tol > 0.0)) throw UsageError("GA_TOLERANCE must be positive");
  return tol;
}

OrientedFrame resolve_frame(const FrameArgs& f) {
  if (!f.raw.empty()) {
    const auto [x, y] = parse_pair(f.raw, ',', "velocity vector");
    const Velocity v{Vector2{x, y}};
    if (v.speed() == 0.0) return OrientedFrame{};
    return OrientedFrame{1, UnitVector2::normalize(v.vec()), rapidity(v.speed())};
  }
  if (f.speed) {
    (void)Velocity::from_speed_angle(*f.speed, f.angle);
    return OrientedFrame{1, UnitVector2::from_angle(f.angle), rapidity(*f.speed)};
  }
  const double phi = f.rapidity.value_or(0.0);
  if (std::abs(phi) > kMaxRapidity) {
    throw DomainError(ErrorCode::Superluminal, "rapidity " + format_number(phi) + " rounds to light speed");
  }
  return OrientedFrame{1, UnitVector2::from_angle(f.angle), phi};
}

void add_frame_options(CLI::App* cmd, FrameArgs& f, const std::string& rap, const std::string& speed,
                       const std::string& raw, const std::string& angle) {
  auto* o_rap = cmd->add_option("--" + rap, f.rapidity, "rapidity (hyperbolic angle)");
  auto* o_speed = cmd->add_option("--" + speed, f.speed, "speed in units of c, below 1");
  auto* o_raw = cmd->add_option("--" + raw, f.raw, "velocity vector \"x,y\"");
  auto* o_angle = cmd->add_option("--" + angle, f.angle, "direction angle in radians");
  o_rap->excludes(o_speed)->excludes(o_raw);
  o_speed->excludes(o_raw);
  o_raw->excludes(o_angle);
}

std::string frame_text(const OrientedFrame& f) {
  return "a = " + format_g2(f.a.mv()) + ", phi = " + format_number(f.phi) +
         ", velocity = " + format_g2(frame_velocity(f).mv());
}

json frame_json(const OrientedFrame& f) {
  return json{{"orientation", f.orientation},
              {"a", f.a.vec()},
              {"phi", f.phi},
              {"velocity", frame_velocity(f)}};
}

void check_format(const std::string& format, std::initializer_list<std::string_view> allowed) {
  for (auto a : allowed)
    if (format == a) return;
  throw UsageError("unsupported --format \"" + format + "\"");
}

// --- compose ---------------------------------------------------------------

int run_compose(const FrameArgs& ja, const FrameArgs& ka, const std::string& format, std::ostream& out) {
  check_format(format, {"text", "json", "csv"});
  const OrientedFrame j = resolve_frame(ja);
  const OrientedFrame k = resolve_frame(ka);

  const CompositionResult g2 = compose_frames(j, k);
  const MinkowskiVector u = psi(G2Multivector::i());
  const Recomposition g12 = recompute_composition(u, psi(j), psi(k));
  const double discrepancy =
      std::max(std::abs(g2.cosh_omega - g12.v_dot_w), max_abs(embed_even(g2.vw) - g12.vw));
  const double speed = std::tanh(g2.omega);

  if (format == "json") {
    json doc{{"j", frame_json(j)},
             {"k", frame_json(k)},
             {"g2", {{"omega", g2.omega}, {"cosh_omega", g2.cosh_omega}, {"c", g2.c_direction}, {"vw", g2.vw},
                     {"speed", speed}}},
             {"g12", {{"v_dot_w", g12.v_dot_w}, {"vw", g12.vw}}},
             {"discrepancy", discrepancy}};
    out << doc.dump(2) << "\n";
  } else if (format == "csv") {
    out << "omega,cosh_omega,speed,vw_e1,vw_e2,vw_e12,v_dot_w,discrepancy\n";
    out << format_number(g2.omega) << ',' << format_number(g2.cosh_omega) << ',' << format_number(speed) << ','
        << format_number(g2.vw.v1) << ',' << format_number(g2.vw.v2) << ',' << format_number(g2.vw.b) << ','
        << format_number(g12.v_dot_w) << ',' << format_number(discrepancy) << "\n";
  } else {
    out << "frame j: " << frame_text(j) << "\n"
        << "frame k: " << frame_text(k) << "\n"
        << "G2 route\n"
        << "  omega       " << format_number(g2.omega) << "\n"
        << "  cosh omega  " << format_number(g2.cosh_omega) << "\n"
        << "  c           " << format_g2(g2.c_direction) << "\n"
        << "  v_w         " << format_g2(g2.vw) << "\n"
        << "  |v_w|       " << format_number(speed) << "\n"
        << "G12 route\n"
        << "  v.w         " << format_number(g12.v_dot_w) << "\n"
        << "  v_w         " << format_g12(g12.vw) << "\n"
        << "discrepancy   " << format_number(discrepancy) << "\n";
  }
  return kOk;
}

// --- passive ---------------------------------------------------------------

int run_passive(const FrameArgs& ja, const FrameArgs& ka, const std::string& format, std::ostream& out) {
  check_format(format, {"text", "json"});
  const OrientedFrame j = resolve_frame(ja);
  const OrientedFrame k = resolve_frame(ka);
  const PassiveBoost p = passive_boost_factor(j, k);
  const Velocity uw = velocity_add(Velocity::of(j), p.uvw, p.d, p.omega);
  const G2Multivector half = exp_vector(p.d.vec(), p.omega / 2.0);
  const double residual =
      max_abs(gp(gp(half, exp_vector(j.a.vec(), j.phi)), half) - exp_vector(k.a.vec(), k.phi));
  if (format == "json") {
    json doc{{"d", p.d.vec()},
             {"Omega", p.omega},
             {"cosh_Omega", p.cosh_omega},
             {"u_vw", p.uvw.vec()},
             {"u_w_recovered", uw.vec()},
             {"sandwich_residual", residual}};
    out << doc.dump(2) << "\n";
  } else {
    out << "d              " << format_g2(p.d.mv()) << "\n"
        << "Omega          " << format_number(p.omega) << "\n"
        << "cosh Omega     " << format_number(p.cosh_omega) << "\n"
        << "u_vw           " << format_g2(p.uvw.mv()) << "\n"
        << "u_w recovered  " << format_g2(uw.mv()) << "\n"
        << "sandwich residual " << format_number(residual) << "\n";
  }
  return kOk;
}

// --- boost -----------------------------------------------------------------

int run_boost(const std::string& target, double dir_angle, double phi, bool passive, const std::string& format,
              std::ostream& out) {
  check_format(format, {"text", "json"});
  const G2Multivector x = parse_g2(target);
  const UnitVector2 d = UnitVector2::from_angle(dir_angle);
  const G2Multivector y = passive ? apply_passive_boost(x, d, phi) : active_boost(x, d, phi);
  if (format == "json") {
    out << json{{"kind", passive ? "passive" : "active"}, {"input", x}, {"result", y}}.dump(2) << "\n";
  } else {
    out << format_g2(y) << "\n";
  }
  return kOk;
}

// --- classify --------------------------------------------------------------

int run_classify(const std::string& text, double tol, const std::string& format, std::ostream& out) {
  check_format(format, {"text", "json"});
  const G2Multivector a = parse_g2(text);
  const ZeroScalarClass cls = classify_zero_scalar(a, tol);
  const double square = gp(a, a).s;
  std::optional<OrientedFrame> frame;
  if (cls == ZeroScalarClass::RelativeBivector && std::abs(square + 1.0) <= tol * classification_scale(a)) {
    frame = classify_unit_minus_one(a, tol);
  }
  if (format == "json") {
    json doc{{"input", a}, {"class", to_string(cls)}, {"square", square}};
    if (frame) doc["frame"] = frame_json(*frame);
    out << doc.dump(2) << "\n";
  } else {
    out << "class   " << to_string(cls) << "\n"
        << "square  " << format_number(square) << "\n";
    if (frame) {
      out << "frame   orientation " << (frame->orientation > 0 ? "+i" : "-i") << ", " << frame_text(*frame) << "\n";
    }
  }
  return kOk;
}

// --- matrix ----------------------------------------------------------------

std::string mat_text(const Mat2& m) {
  return "[[" + format_number(m(0, 0)) + ", " + format_number(m(0, 1)) + "], [" + format_number(m(1, 0)) + ", " +
         format_number(m(1, 1)) + "]]";
}

int run_matrix(const std::string& text, const std::string& format, std::ostream& out) {
  check_format(format, {"text", "json"});
  if (looks_like_g12(text)) {
    const Mat2Complexified m = matrix_of_f(parse_g12(text));
    if (format == "json") {
      out << json(m).dump(2) << "\n";
    } else {
      out << "re  " << mat_text(m.re) << "\n"
          << "im  " << mat_text(m.im) << "\n";
    }
  } else {
    const Mat2 m = matrix_of(parse_g2(text));
    if (format == "json") {
      out << json(m).dump(2) << "\n";
    } else {
      out << mat_text(m) << "\n";
    }
  }
  return kOk;
}

// --- dual ------------------------------------------------------------------

int run_dual(const std::string& text, double tol, const std::string& format, std::ostream& out) {
  check_format(format, {"text", "json"});
  if (looks_like_g12(text)) {
    const G12Multivector f = parse_g12(text);
    if (max_abs(f - grade(f, 1)) > tol * std::max(1.0, max_abs(f))) {
      throw DomainError(ErrorCode::NotUnitTimelike, "dual of a G12 element expects a vector");
    }
    const MinkowskiVector r = MinkowskiVector::of(f);
    require_future_unit_timelike(r, tol);
    const G2Multivector h = psi_inverse(r);
    if (format == "json") {
      out << json{{"input", f}, {"h", h}}.dump(2) << "\n";
    } else {
      out << format_g2(h) << "\n";
    }
    return kOk;
  }
  const G2Multivector h = parse_g2(text);
  const MinkowskiVector r = psi(h, tol);
  const CausalClass cls = causal_class(r, tol);
  if (format == "json") {
    out << json{{"input", h}, {"r", r.mv()}, {"class", to_string(cls)}}.dump(2) << "\n";
  } else {
    out << format_g12(r.mv()) << "\n"
        << "class  " << to_string(cls) << "\n";
  }
  return kOk;
}

// --- verify ----------------------------------------------------------------

int run_verify_cmd(const std::string& suite, std::uint64_t seed, std::size_t count, const std::string& format,
                   std::ostream& out) {
  check_format(format, {"text", "json"});
  if (!is_verify_suite(suite)) throw UsageError("unknown suite \"" + suite + "\"");
  const VerifyReport report = run_verify(suite, seed, count);
  if (format == "json") {
    json rows = json::array();
    for (const auto& r : report.results) {
      json row{{"suite", r.suite},         {"invariant", r.name}, {"max_error", r.max_error},
               {"tolerance", r.tolerance}, {"samples", r.samples}, {"passed", r.passed()}};
      if (!r.passed()) row["counterexample"] = r.counterexample;
      rows.push_back(row);
    }
    out << json{{"suite", suite}, {"seed", seed}, {"count", count}, {"passed", report.passed()}, {"results", rows}}
               .dump(2)
        << "\n";
  } else {
    std::size_t failed = 0;
    for (const auto& r : report.results) {
      out << (r.passed() ? "PASS  " : "FAIL  ") << r.suite << ": " << r.name << "  max_error=" << format_number(r.max_error)
          << "  tol=" << format_number(r.tolerance) << "\n";
      if (!r.passed()) {
        ++failed;
        out << "      counterexample: " << r.counterexample << "\n";
      }
    }
    out << (failed == 0 ? "all " : "") << report.results.size() - failed << "/" << report.results.size()
        << " invariants passed (suite " << suite << ", seed " << seed << ", count " << count << ")\n";
  }
  return report.passed() ? kOk : kVerificationFailed;
}

// --- sweep -----------------------------------------------------------------

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

Range parse_range(const std::string& text, const std::string& what) {
  const auto [lo, hi] = parse_pair(text, ':', what);
  if (lo > hi) throw UsageError(what + " is empty: " + text);
  return {lo, hi};
}

double grid_point(const Range& r, std::size_t i, std::size_t steps) {
  if (steps == 1) return r.lo;
  return r.lo + (r.hi - r.lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

int run_sweep(const std::string& phi_text, const std::string& rho_text, const std::string& theta_text,
              std::size_t steps, const std::string& output, std::ostream& out) {
  if (steps == 0) throw UsageError("--steps must be at least 1");
  const Range phi_r = parse_range(phi_text, "--phi-range");
  const Range rho_r = parse_range(rho_text, "--rho-range");
  const Range theta_r = parse_range(theta_text, "--theta-range");
  for (const Range& r : {phi_r, rho_r}) {
    if (std::max(std::abs(r.lo), std::abs(r.hi)) > kMaxRapidity) {
      throw UsageError("rapidities beyond " + format_number(kMaxRapidity) + " round to light speed");
    }
  }

  std::ostringstream csv;
  csv << "phi,rho,theta_ab,omega,Omega,vw_norm,uvw_norm,active_passive_gap\n";
  for (std::size_t a = 0; a < steps; ++a) {
    for (std::size_t b = 0; b < steps; ++b) {
      for (std::size_t c = 0; c < steps; ++c) {
        const double phi = grid_point(phi_r, a, steps);
        const double rho = grid_point(rho_r, b, steps);
        const double theta = grid_point(theta_r, c, steps);
        const OrientedFrame j{1, UnitVector2::e1(), phi};
        const OrientedFrame k{1, UnitVector2::from_angle(theta), rho};
        const CompositionResult active = compose_frames(j, k);
        double omega_p = 0.0;
        G2Multivector uvw;
        try {
          const PassiveBoost p = passive_boost_factor(j, k);
          omega_p = p.omega;
          uvw = p.uvw.mv();
        } catch (const DomainError& e) {
          // Identical frames: no relative motion in either picture.
          if (e.code() != ErrorCode::DegenerateDirection) throw;
        }
        const double gap = max_abs(active.vw - uvw);
        csv << format_number(phi) << ',' << format_number(rho) << ',' << format_number(theta) << ','
            << format_number(active.omega) << ',' << format_number(omega_p) << ','
            << format_number(std::tanh(active.omega)) << ',' << format_number(std::hypot(uvw.v1, uvw.v2)) << ','
            << format_number(gap) << "\n";
      }
    }
  }
  if (output.empty()) {
    out << csv.str();
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!file) throw UsageError("cannot open " + output + " for writing");
    file << csv.str();
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"G2 and G_{1,2} geometric algebra with hyperbolic numbers and boosts", "mplanes"};
  app.require_subcommand(1, 1);

  std::string format = "text";

  FrameArgs cj, ck;
  auto* compose = app.add_subcommand("compose", "relative velocity of frame k seen from frame j, G2 and G12 routes");
  add_frame_options(compose, cj, "phi", "v-speed", "v", "a-angle");
  add_frame_options(compose, ck, "rho", "w-speed", "w", "b-angle");
  compose->add_option("--format", format, "text, json or csv");

  FrameArgs pj, pk;
  auto* passive = app.add_subcommand("passive", "passive boost (d, Omega, u_vw) relating frames j and k");
  add_frame_options(passive, pj, "phi", "v-speed", "v", "a-angle");
  add_frame_options(passive, pk, "rho", "w-speed", "w", "b-angle");
  passive->add_option("--format", format, "text or json");

  std::string target;
  double dir_angle = 0.0, boost_phi = 0.0;
  bool active_flag = false, passive_flag = false;
  auto* boost = app.add_subcommand("boost", "apply an active or passive boost to a G2 element");
  boost->add_option("--target", target, "G2 element, e.g. \"1 + 2 e1\"")->required();
  boost->add_option("--dir-angle", dir_angle, "boost direction angle in radians");
  boost->add_option("--phi", boost_phi, "rapidity");
  auto* o_active = boost->add_flag("--active", active_flag, "e^{-phi a/2} x e^{phi a/2} (default)");
  auto* o_passive = boost->add_flag("--passive", passive_flag, "e^{phi d/2} x e^{phi d/2}");
  o_active->excludes(o_passive);
  boost->add_option("--format", format, "text or json");

  std::string mv_text;
  auto* classify = app.add_subcommand("classify", "classify a zero-scalar G2 element by the sign of its square");
  classify->add_option("mv", mv_text, "G2 element")->required();
  classify->add_option("--format", format, "text or json");

  auto* matrix = app.add_subcommand("matrix", "spectral-basis matrix of a G2 or G12 element");
  matrix->add_option("mv", mv_text, "G2 or G12 element")->required();
  matrix->add_option("--format", format, "text or json");

  auto* dual = app.add_subcommand("dual", "psi(h) = s h for h in H+, or the inverse for a unit timelike vector");
  dual->add_option("mv", mv_text, "G2 relative bivector or G12 vector")->required();
  dual->add_option("--format", format, "text or json");

  std::string suite = "all";
  std::uint64_t seed = 42;
  std::size_t count = 1000;
  auto* verify = app.add_subcommand("verify", "run the randomized invariant suites");
  verify->add_option("--suite", suite, "core, hyperbolic, transforms, kinematics, spacetime, matrix or all");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--count", count, "samples per invariant");
  verify->add_option("--format", format, "text or json");

  std::string phi_range = "0:2", rho_range = "0:2", theta_range = "0:1.5707963267948966", output;
  std::size_t steps = 5;
  auto* sweep = app.add_subcommand("sweep", "CSV table of active vs passive relative velocities");
  sweep->add_option("--phi-range", phi_range, "lo:hi rapidity of frame j along e1");
  sweep->add_option("--rho-range", rho_range, "lo:hi rapidity of frame k");
  sweep->add_option("--theta-range", theta_range, "lo:hi angle between a and b in radians");
  sweep->add_option("--steps", steps, "grid points per range");
  sweep->add_option("--output", output, "write CSV to this file instead of stdout");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    const double tol = tolerance_from_env();
    if (compose->parsed()) return run_compose(cj, ck, format, out);
    if (passive->parsed()) return run_passive(pj, pk, format, out);
    if (boost->parsed()) return run_boost(target, dir_angle, boost_phi, passive_flag, format, out);
    if (classify->parsed()) return run_classify(mv_text, tol, format, out);
    if (matrix->parsed()) return run_matrix(mv_text, format, out);
    if (dual->parsed()) return run_dual(mv_text, tol, format, out);
    if (verify->parsed()) return run_verify_cmd(suite, seed, count, format, out);
    if (sweep->parsed()) return run_sweep(phi_range, rho_range, theta_range, steps, output, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const mplanes::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomain;
  }
  return kUsage;
}

}  // namespace mplanes::cli
