// cubegeo: sup-norm geodesics on the surface of the n-cube.
//
//   cubegeo dist -a 1,0.05,0 -b -1,0.05,0 [--json]
//   cubegeo path -a ... -b ... --format json|csv|obj [-o FILE]
//   cubegeo audit --n 3 --class opposite --samples 10000 --seed 42 --oracle exact
//   cubegeo candidates --n 5 --mode adjacent [--count-only]
//
// Exit status: 0 success, 1 input error, 2 verification mismatch.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cubegeo/audit.hpp"
#include "cubegeo/candidates.hpp"
#include "cubegeo/export.hpp"
#include "cubegeo/geodesic.hpp"

namespace {

using namespace cubegeo;
using nlohmann::json;

constexpr int kInputError = 1;
constexpr int kMismatch = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string shortest(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

SurfacePoint parse_point(const std::string& text, const char* name) {
  std::vector<double> coords;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const char* first = text.data() + pos;
    const char* last = text.data() + comma;
    while (first < last && *first == ' ') ++first;
    if (first < last && *first == '+') ++first;
    double v = 0.0;
    auto [end, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || end != last || first == last) {
      throw InputError(std::string("point ") + name + ": cannot parse '" + std::string(text, pos, comma - pos) +
                       "' as a number");
    }
    coords.push_back(v);
    pos = comma + 1;
  }
  try {
    return SurfacePoint::make(coords);
  } catch (const std::exception& e) {
    throw InputError(std::string("point ") + name + ": " + e.what());
  }
}

json provenance_json(const GeodesicResult& r) {
  const auto& p = r.provenance;
  json out{{"kind", to_string(p.assignment.kind)},
           {"faces", {to_string(p.assignment.face_a), to_string(p.assignment.face_b)}},
           {"label", p.label}};
  if (p.assignment.kind != PairKind::SameFace) out["candidate"] = p.candidate.label();
  return out;
}

GeodesicResult solve(const SurfacePoint& a, const SurfacePoint& b) {
  try {
    require_same_dim(a, b);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  return geodesic_distance(a, b);
}

// Emitted paths must sit on the surface and reproduce the distance.
void revalidate(const GeodesicResult& r, const SurfacePoint& a, const SurfacePoint& b) {
  const auto& w = r.witness;
  if (!(w.front() == a) || !(w.back() == b)) throw Mismatch("witness endpoints differ from the input");
  for (const auto& v : w.vertices()) {
    if (v.faces().empty()) throw Mismatch("witness vertex off the surface");
  }
  if (std::abs(w.total_length() - r.distance) > kExactOracleTolerance) {
    throw Mismatch("witness length " + format_number(w.total_length()) + " differs from distance " +
                   format_number(r.distance));
  }
}

int cmd_dist(const std::string& pa, const std::string& pb, bool as_json) {
  auto a = parse_point(pa, "a"), b = parse_point(pb, "b");
  auto r = solve(a, b);
  const auto& p = r.provenance;
  if (as_json) {
    json out{{"n", a.dim()},
             {"a", a.coords()},
             {"b", b.coords()},
             {"distance", r.distance},
             {"provenance", provenance_json(r)},
             {"minimizers", p.minimizers},
             {"conditions", p.conditions}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
    return s.empty() ? std::string("-") : s;
  };
  std::cout << "distance    " << shortest(r.distance) << "\n"
            << "provenance  " << p.label << " (" << to_string(p.assignment.kind) << ", "
            << to_string(p.assignment.face_a) << " -> " << to_string(p.assignment.face_b) << ")\n"
            << "minimizers  " << join(p.minimizers) << "\n"
            << "conditions  " << join(p.conditions) << "\n";
  return 0;
}

int cmd_path(const std::string& pa, const std::string& pb, const std::string& format,
             const std::string& out_file) {
  PathFormat fmt;
  try {
    fmt = parse_path_format(format);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  auto a = parse_point(pa, "a"), b = parse_point(pb, "b");
  if (fmt == PathFormat::Obj && a.dim() != 3) {
    throw InputError("obj export is only defined for n = 3 (got n = " + std::to_string(a.dim()) + ")");
  }
  auto r = solve(a, b);
  revalidate(r, a, b);
  const std::string text = export_path(r.witness, fmt);
  if (out_file.empty() || out_file == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out_file, std::ios::binary);
    if (!(f << text)) throw InputError("cannot write " + out_file);
  }
  return 0;
}

int cmd_audit(const AuditOptions& opt, const std::string& report_file, bool as_json) {
  AuditReport rep;
  try {
    rep = run_audit(opt);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  } catch (const std::length_error& e) {
    throw InputError(e.what());
  }
  const std::string dump = rep.to_json().dump(2) + "\n";
  if (!report_file.empty()) {
    std::ofstream f(report_file, std::ios::binary);
    if (!(f << dump)) throw InputError("cannot write " + report_file);
  }
  if (as_json) {
    std::cout << dump;
  } else {
    std::cout << "n " << opt.n << "  class " << to_string(opt.cls) << "  samples " << opt.samples
              << "  seed " << opt.seed << "  oracle " << to_string(opt.oracle) << "\n";
    if (opt.oracle != AuditOracle::Grid) {
      std::cout << "max |closed - exact|  " << format_number(rep.max_delta_exact) << "  (tol "
                << shortest(opt.exact_tolerance()) << ")\n";
    }
    if (opt.oracle != AuditOracle::Exact) {
      std::cout << "max |closed - grid|   " << format_number(rep.max_delta_grid) << "  (tol "
                << shortest(opt.grid_tolerance()) << ", h " << shortest(opt.grid_spacing()) << ")\n";
    }
    std::cout << "condition checks " << rep.iff_checks << " (resampled " << rep.iff_resampled
              << "), two-leg checks " << rep.two_leg_checks << "\n"
              << "violations " << rep.violations.size() << "\n";
  }
  for (std::size_t k = 0; k < rep.violations.size() && k < 20; ++k) std::cerr << rep.violations[k] << "\n";
  return rep.ok() ? 0 : kMismatch;
}

int cmd_candidates(std::size_t n, const std::string& mode, bool count_only, std::size_t max_n) {
  Family family;
  if (mode == "adjacent") {
    family = Family::Adjacent;
  } else if (mode == "opposite") {
    family = Family::Opposite;
  } else {
    throw InputError("unknown mode '" + mode + "' (adjacent|opposite)");
  }
  std::unique_ptr<CandidateStream> stream;
  try {
    stream = std::make_unique<CandidateStream>(family, n, max_n);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  Candidate cand;
  std::uint64_t streamed = 0;
  while (stream->next(cand)) {
    ++streamed;
    if (count_only) continue;
    std::string line = cand.label();
    if (n == 3) line += "  " + closed_form_name(cand);
    line += "  max{";
    auto terms = candidate_terms(cand, n);
    for (std::size_t k = 0; k < terms.size(); ++k) line += (k ? ", " : "") + terms[k].schema();
    std::cout << line << "}\n";
  }
  const std::uint64_t formula =
      family == Family::Adjacent ? floor_sqrt_e_product(n - 2) : floor_sqrt_e_product(n - 1) - 1;
  if (count_only) std::cout << streamed << " = " << formula << "\n";
  if (streamed != formula) throw Mismatch("streamed count differs from the closed-form count");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sup-norm geodesic distances on the surface of the n-cube"};
  app.require_subcommand(1);

  std::string pa, pb, format = "json", out_file, report_file, cls = "mixed", oracle = "exact", mode = "adjacent";
  bool as_json = false, count_only = false;
  AuditOptions audit_opt;
  double h = 0.0, tol = 0.0;
  std::size_t n = 3;

  auto add_points = [&](CLI::App* sub) {
    sub->add_option("-a,--point-a", pa, "first point, comma-separated coordinates")->required();
    sub->add_option("-b,--point-b", pb, "second point")->required();
  };

  auto* dist = app.add_subcommand("dist", "geodesic distance with provenance");
  add_points(dist);
  dist->add_flag("--json", as_json, "machine-readable output");

  auto* path = app.add_subcommand("path", "export a shortest path");
  add_points(path);
  path->add_option("--format", format, "json|csv|obj");
  path->add_option("-o,--output", out_file, "output file (default stdout)");

  auto* audit = app.add_subcommand("audit", "check closed forms against the oracles on random pairs");
  audit->set_help_flag("--help", "Print this help message and exit");
  audit->add_option("--n", audit_opt.n, "dimension");
  audit->add_option("--class", cls, "adjacent|opposite|same-face|mixed");
  audit->add_option("--samples", audit_opt.samples, "number of random pairs");
  audit->add_option("--seed", audit_opt.seed, "random seed");
  audit->add_option("--oracle", oracle, "exact|grid|both");
  auto* h_opt = audit->add_option("--h", h, "grid spacing 2/K");
  auto* tol_opt = audit->add_option("--tol", tol, "tolerance for every oracle comparison");
  audit->add_option("--report", report_file, "write the json report to this file");
  audit->add_flag("--json", as_json, "print the json report");

  auto* cands = app.add_subcommand("candidates", "enumerate or count candidate families");
  cands->add_option("--n", n, "dimension")->required();
  cands->add_option("--mode", mode, "adjacent|opposite");
  cands->add_flag("--count-only", count_only, "print the streamed count and the closed form");
  std::size_t max_n = kDefaultMaxDimension;
  cands->add_option("--max-n", max_n, "dimension cap");
  audit->add_option("--max-n", audit_opt.max_n, "dimension cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (dist->parsed()) return cmd_dist(pa, pb, as_json);
    if (path->parsed()) return cmd_path(pa, pb, format, out_file);
    if (cands->parsed()) return cmd_candidates(n, mode, count_only, max_n);
    if (*h_opt) audit_opt.h = h;
    if (*tol_opt) audit_opt.tol = tol;
    try {
      audit_opt.cls = parse_sample_class(cls);
      audit_opt.oracle = parse_audit_oracle(oracle);
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
    return cmd_audit(audit_opt, report_file, as_json);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Mismatch& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::exception& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kMismatch;
  }
}
