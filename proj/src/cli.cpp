// Copyright 2026 The qprob Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qprob/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "qprob/errors.hpp"
#include "qprob/evolution.hpp"
#include "qprob/json_io.hpp"
#include "qprob/observable.hpp"
#include "qprob/suprematism.hpp"
#include "qprob/svg.hpp"
#include "qprob/tomography.hpp"

namespace qprob::cli {
namespace {

using nlohmann::json;

constexpr double kInputHermitianTol = 1e-10;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string in = "-";
  std::string out = "-";
  std::optional<double> a;
  std::optional<double> b;
  std::optional<double> x;
  double theta = 0;
  double phi = 0;
  double psi = 0;
  double t_end = 1.0;
  int steps = 100;
  std::string format = "csv";
  bool allow_unphysical = false;
  double tol = kPhysicalTol;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

double physical_tolerance() {
  const char* raw = std::getenv("QPROB_TOL");
  if (raw == nullptr || *raw == '\0') return kPhysicalTol;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !std::isfinite(v) || v < 0.0) {
    throw io::ParseError(fmt::format("QPROB_TOL: invalid tolerance \"{}\"", raw));
  }
  return v;
}

json read_input(const Options& opt, Streams& s) {
  std::string text;
  if (opt.in == "-") {
    std::ostringstream buf;
    buf << s.in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream f(opt.in, std::ios::binary);
    if (!f) throw IoError(fmt::format("cannot open input file {}", opt.in));
    std::ostringstream buf;
    buf << f.rdbuf();
    text = buf.str();
  }
  return io::parse_document(text);
}

void write_output(const Options& opt, Streams& s, const std::string& text) {
  if (opt.out == "-") {
    s.out << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw IoError(fmt::format("cannot open output file {}", opt.out));
  f << text;
  if (!f) throw IoError(fmt::format("failed writing {}", opt.out));
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Matrix2 load_observable(const json& j) {
  const Matrix2 h = io::matrix_from_json(j);
  if (!is_hermitian(h, kInputHermitianTol)) {
    throw DomainError("input matrix is not Hermitian to 1e-10");
  }
  return hermitian_part(h);
}

ProbTriple load_triple(const json& j, const Options& opt) {
  const ProbTriple p = io::triple_from_json(j);
  if (!opt.allow_unphysical && !is_physical(p, opt.tol)) {
    throw DomainError(fmt::format(
        "triple ({}, {}, {}) violates the ball inequality "
        "(p1-1/2)^2+(p2-1/2)^2+(p3-1/2)^2 <= 1/4 (residual {:.3e}); pass "
        "--allow-unphysical for diagnostics",
        p.p1, p.p2, p.p3, check_ball(p)));
  }
  return p;
}

ShiftPair shifts_for(const Matrix2& h, const Options& opt) {
  if (opt.a.has_value() != opt.b.has_value()) {
    throw io::ParseError("--a and --b must be given together");
  }
  if (opt.a) return {*opt.a, *opt.b};
  return default_shifts(h);
}

const char* route_name(DecodeRoute r) {
  switch (r) {
    case DecodeRoute::kDiagonal:
      return "diagonal";
    case DecodeRoute::kOffDiagonal:
      return "off_diagonal";
    case DecodeRoute::kNonInvertible:
      return "non_invertible";
  }
  return "unknown";
}

bool is_center(const ProbTriple& p) {
  return std::fabs(p.p1 - 0.5) <= 1e-12 && std::fabs(p.p2 - 0.5) <= 1e-12 &&
         std::fabs(p.p3 - 0.5) <= 1e-12;
}

json failed_checks(const std::vector<FormulaCheck>& checks) {
  json notes = json::array();
  for (const auto& c : checks) {
    if (c.matches) continue;
    notes.push_back(fmt::format(
        "{}: closed form {:.17g} disagrees with oracle {:.17g}", c.component,
        c.closed_form, c.oracle));
  }
  return notes;
}

int cmd_encode(const Options& opt, Streams& s) {
  const Matrix2 h = load_observable(read_input(opt, s));
  const ShiftPair ab = shifts_for(h, opt);
  const ObservableProbRep rep = encode_observable(h, ab.a, ab.b);
  json doc = io::to_json(rep);
  doc["admissible_bound"] = admissible_lower_bound(h);
  doc["conservative_bound"] = conservative_shift_bound(h);
  doc["errata_notes"] = json::array(
      {"P3(b) uses the denominator H11 + H22 + 2b, consistent with rho(b)"});
  json warnings = json::array();
  if (is_center(rep.p_a) && is_center(rep.p_b)) {
    warnings.push_back(
        "non-invertible: H is proportional to the identity, both triples are "
        "maximally mixed and Tr H cannot be recovered");
  }
  doc["warnings"] = warnings;
  write_output(opt, s, dump(doc));
  return kOk;
}

int cmd_decode(const Options& opt, Streams& s) {
  const ObservableProbRep rep = io::rep_from_json(read_input(opt, s));
  const DecodeResult res = decode_observable_checked(rep);
  json doc = io::to_json(res.h);
  doc["route"] = route_name(res.route);
  doc["warnings"] = res.warnings;
  write_output(opt, s, dump(doc));
  return kOk;
}

int cmd_tomogram(const Options& opt, Streams& s) {
  const json in = read_input(opt, s);
  const Direction d{opt.theta, opt.phi, opt.psi};
  json doc;
  if (io::looks_like_matrix(in)) {
    const Matrix2 h = load_observable(in);
    const double x = opt.x ? *opt.x : default_shifts(h).a;
    const TomogramValue w = observable_tomogram(h, d, x);
    doc = {{"kind", "observable"}, {"x", x},
           {"w_plus", w.w_plus},   {"w_minus", w.w_minus}};
  } else if (io::looks_like_triple(in)) {
    Options strict = opt;
    strict.allow_unphysical = false;
    const ProbTriple p = load_triple(in, strict);
    const TomogramValue w = state_tomogram(p, d, opt.tol);
    doc = {{"kind", "state"}, {"w_plus", w.w_plus}, {"w_minus", w.w_minus}};
  } else {
    throw io::ParseError("tomogram input must be a matrix or a triple");
  }
  const Vec3 n = d.axis();
  doc["axis"] = json::array({n[0], n[1], n[2]});
  write_output(opt, s, dump(doc));
  return kOk;
}

int cmd_evolve(const Options& opt, Streams& s) {
  const json in = read_input(opt, s);
  if (!in.is_object() || !in.contains("H")) {
    throw io::ParseError("evolve input needs \"H\"");
  }
  const Matrix2 h = load_observable(in.at("H"));
  std::optional<Matrix2> a0;
  ProbTriple p0;
  double x = 0;
  if (in.contains("A0")) {
    a0 = load_observable(in.at("A0"));
    x = opt.x ? *opt.x : default_shifts(*a0).a;
    p0 = probs_from_density_unchecked(rho_of_x(*a0, x));
  } else if (in.contains("p0")) {
    Options strict = opt;
    strict.allow_unphysical = false;
    p0 = load_triple(in.at("p0"), strict);
    x = opt.x.value_or(0.0);
  } else {
    throw io::ParseError("evolve input needs \"A0\" or \"p0\"");
  }
  const KineticSystem sys = build_kinetic(h, x);
  const Trajectory traj = sample_trajectory(sys, p0, opt.t_end, opt.steps);

  if (opt.format == "csv") {
    std::string text = "t,p1,p2,p3\n";
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
      const ProbTriple& p = traj.probs[k];
      text += fmt::format("{:.17g},{:.17g},{:.17g},{:.17g}\n", traj.times[k],
                          p.p1, p.p2, p.p3);
    }
    write_output(opt, s, text);
    return kOk;
  }

  json doc;
  doc["x"] = traj.x;
  doc["times"] = traj.times;
  json probs = json::array();
  for (const auto& p : traj.probs) probs.push_back({p.p1, p.p2, p.p3});
  doc["probs"] = probs;
  doc["errata_notes"] = failed_checks(sys.checks);
  if (a0) {
    const Eigenvalues e0 = eigenvalues_hermitian(*a0);
    const double scale = a0->trace().real() + 2.0 * x;
    double eig_drift = 0;
    double trace_drift = 0;
    for (const auto& p : traj.probs) {
      const Matrix2 at =
          scale * density_from_probs(p) - x * Matrix2::identity();
      const Eigenvalues et = eigenvalues_hermitian(at);
      eig_drift = std::max({eig_drift, std::fabs(et.min - e0.min),
                            std::fabs(et.max - e0.max)});
      trace_drift = std::max(
          trace_drift, std::fabs(at.trace().real() - a0->trace().real()));
    }
    doc["eigenvalue_report"] = {{"initial", {e0.min, e0.max}},
                                {"max_eigenvalue_drift", eig_drift},
                                {"max_trace_drift", trace_drift}};
  }
  write_output(opt, s, dump(doc));
  return kOk;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError(fmt::format("cannot write {}", path.string()));
  f << text;
  if (!f) throw IoError(fmt::format("failed writing {}", path.string()));
}

int cmd_figures(const Options& opt, Streams& s) {
  if (opt.out == "-") {
    throw io::ParseError("figures needs --out DIRECTORY");
  }
  const json in = read_input(opt, s);
  const std::filesystem::path dir(opt.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw IoError(fmt::format("cannot create directory {}", opt.out));
  }

  json report;
  json files = json::array();
  if (io::looks_like_triple(in)) {
    const ProbTriple p = load_triple(in, opt);
    write_file(dir / "fig1.svg",
               svg::triangle_figure(p, "", "Triangle A1 A2 A3 of the triple"));
    write_file(dir / "fig3.svg",
               svg::malevich_squares_figure(p, "",
                                            "Triada of Malevich squares"));
    files = {"fig1.svg", "fig3.svg"};
    report["S"] = area_sum(p);
  } else {
    ObservableProbRep rep;
    if (io::looks_like_rep(in)) {
      rep = io::rep_from_json(in);
    } else if (io::looks_like_matrix(in)) {
      const Matrix2 h = load_observable(in);
      const ShiftPair ab = shifts_for(h, opt);
      rep = encode_observable(h, ab.a, ab.b);
    } else {
      throw io::ParseError("figures input must be a triple, matrix or rep");
    }
    write_file(dir / "fig1.svg",
               svg::triangle_figure(rep.p_a, "(a)",
                                    "Triangle A1(a) A2(a) A3(a) of rho(a)"));
    write_file(dir / "fig2.svg",
               svg::triangle_figure(rep.p_b, "(b)",
                                    "Triangle A1(b) A2(b) A3(b) of rho(b)"));
    write_file(dir / "fig3.svg",
               svg::malevich_squares_figure(
                   rep.p_a, "(a)", "Triada of Malevich squares of rho(a)"));
    write_file(dir / "fig4.svg",
               svg::malevich_squares_figure(
                   rep.p_b, "(b)", "Triada of Malevich squares of rho(b)"));
    write_file(dir / "fig5.svg",
               svg::triangle_pair_figure(
                   rep.p_a, "(a)", rep.p_b, "(b)",
                   "Triangles of the observable for x = a (left) and x = b "
                   "(right)"));
    files = {"fig1.svg", "fig2.svg", "fig3.svg", "fig4.svg", "fig5.svg"};
    const AreaPair areas = observable_areas(rep);
    report["S_a"] = areas.s_a;
    report["S_b"] = areas.s_b;
  }
  report["files"] = files;
  s.out << dump(report);
  return kOk;
}

json triple_report(const ProbTriple& p, const Options& opt) {
  json r;
  r["kind"] = "triple";
  r["tolerance"] = opt.tol;
  r["check_ball"] = check_ball(p);
  r["physical"] = is_physical(p, opt.tol);
  const Complex off = Complex(p.p1, p.p2) - kGamma;
  const Matrix2 rho{p.p3, std::conj(off), off, 1.0 - p.p3};
  const Eigenvalues ev = eigenvalues_hermitian(rho);
  r["lambda_min"] = ev.min;
  r["determinant"] = rho.det().real();
  const bool in_cube = p.p1 >= 0 && p.p1 <= 1 && p.p2 >= 0 && p.p2 <= 1 &&
                       p.p3 >= 0 && p.p3 <= 1;
  if (in_cube) {
    const TrianglePicture pic = triangle_picture(p);
    r["area_sum"] = area_sum(p);
    r["square_areas"] = pic.square_areas;
    r["side_lengths"] = pic.side_lengths;
  }
  return r;
}

int cmd_check(const Options& opt, Streams& s) {
  const json in = read_input(opt, s);
  json doc;
  if (io::looks_like_rep(in)) {
    const ObservableProbRep rep = io::rep_from_json(in);
    doc["kind"] = "representation";
    doc["P_a"] = triple_report(load_triple(io::to_json(rep.p_a), opt), opt);
    doc["P_b"] = triple_report(load_triple(io::to_json(rep.p_b), opt), opt);
    const DecodeResult res = decode_observable_checked(rep);
    doc["decoded"] = io::to_json(res.h);
    doc["route"] = route_name(res.route);
    doc["warnings"] = res.warnings;
  } else if (io::looks_like_triple(in)) {
    doc = triple_report(load_triple(in, opt), opt);
  } else if (io::looks_like_matrix(in)) {
    const Matrix2 raw = io::matrix_from_json(in);
    doc["kind"] = "matrix";
    doc["hermitian"] = is_hermitian(raw, kInputHermitianTol);
    if (!doc["hermitian"].get<bool>()) {
      throw DomainError("input matrix is not Hermitian to 1e-10");
    }
    const Matrix2 h = hermitian_part(raw);
    const Eigenvalues ev = eigenvalues_hermitian(h);
    doc["eigenvalues"] = {ev.min, ev.max};
    doc["trace"] = h.trace().real();
    doc["admissible_bound"] = admissible_lower_bound(h);
    doc["conservative_bound"] = conservative_shift_bound(h);
    const ShiftPair ab = default_shifts(h);
    doc["default_a"] = ab.a;
    doc["default_b"] = ab.b;
    const bool is_state = std::fabs(h.trace().real() - 1.0) <= opt.tol &&
                          ev.min >= -opt.tol;
    doc["density_matrix"] = is_state;
    if (is_state) {
      doc["triple"] = io::to_json(probs_from_density(h, opt.tol));
    }
  } else {
    throw io::ParseError("check input must be a triple, matrix or rep");
  }
  write_output(opt, s, dump(doc));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Streams streams{in, out, err};
  Options opt;
  CLI::App app{"Probability representation of qubit states and observables",
               "qprob"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--in", opt.in, "Input JSON file, - for stdin");
  app.add_option("--out", opt.out, "Output file (directory for figures)");
  app.add_option("--a", opt.a, "First shift parameter");
  app.add_option("--b", opt.b, "Second shift parameter");
  app.add_option("--x", opt.x, "Shift parameter for rho(x)");
  app.add_option("--theta", opt.theta, "Polar angle, radians");
  app.add_option("--phi", opt.phi, "Azimuthal angle, radians");
  app.add_option("--psi", opt.psi, "Third Euler angle, radians");
  app.add_option("--t-end", opt.t_end, "Final time");
  app.add_option("--steps", opt.steps, "Number of time steps");
  app.add_option("--format", opt.format, "Trajectory format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--allow-unphysical", opt.allow_unphysical,
               "Report on triples outside the ball instead of rejecting them");

  using Handler = int (*)(const Options&, Streams&);
  const std::vector<std::tuple<const char*, const char*, Handler>> commands{
      {"encode", "Hermitian matrix to two probability triples", cmd_encode},
      {"decode", "Two probability triples back to the matrix", cmd_decode},
      {"tomogram", "Spin tomogram of a state or observable", cmd_tomogram},
      {"evolve", "Heisenberg evolution of the probability triple", cmd_evolve},
      {"figures", "SVG triangle and Malevich-square figures", cmd_figures},
      {"check", "Physicality and invariant report", cmd_check},
  };
  for (const auto& [name, help, fn] : commands) app.add_subcommand(name, help);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "qprob: " << e.what() << "\n";
    return kParse;
  }

  try {
    opt.tol = physical_tolerance();
    for (const auto& [name, help, fn] : commands) {
      if (app.got_subcommand(name)) return fn(opt, streams);
    }
    err << "qprob: no subcommand\n";
    return kParse;
  } catch (const io::ParseError& e) {
    err << "qprob: parse error: " << e.what() << "\n";
    return kParse;
  } catch (const nlohmann::json::exception& e) {
    err << "qprob: parse error: " << e.what() << "\n";
    return kParse;
  } catch (const DomainError& e) {
    err << "qprob: " << e.what() << "\n";
    return kDomain;
  } catch (const IoError& e) {
    err << "qprob: I/O error: " << e.what() << "\n";
    return kIo;
  }
}

}  // namespace qprob::cli
