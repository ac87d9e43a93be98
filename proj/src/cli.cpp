#include "okbody/cli.hpp"

#include <cerrno>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "okbody/cones.hpp"
#include "okbody/reference_data.hpp"
#include "okbody/serialize.hpp"
#include "okbody/zariski.hpp"

namespace okb {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::string join_ivec(const IVec& v, const char* sep = ",") {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i].str();
  }
  return out;
}

std::string join_qvec(const QVec& v, const char* sep = ",") {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += rat_to_string(v[i]);
  }
  return out;
}

}  // namespace

Command parse_command(const std::string& s) {
  if (s == "info") return Command::Info;
  if (s == "zariski") return Command::Zariski;
  if (s == "body") return Command::Body;
  if (s == "defect") return Command::Defect;
  if (s == "optimize") return Command::Optimize;
  if (s == "global" || s == "global-body") return Command::Global;
  if (s == "hilbert") return Command::Hilbert;
  if (s == "ehrhart") return Command::Ehrhart;
  throw std::invalid_argument("unknown command: " + s);
}

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "text") return OutputFormat::Text;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "svg") return OutputFormat::Svg;
  throw std::invalid_argument("unknown format: " + s);
}

QVec parse_divisor(const std::string& s) {
  QVec out;
  for (const auto& tok : split(s, ',')) out.push_back(rat_from_string(tok));
  if (out.empty()) throw std::invalid_argument("empty divisor");
  return out;
}

IVec parse_curve(const std::string& s) {
  IVec out;
  for (const auto& tok : split(s, ',')) out.push_back(Int(tok));
  if (out.empty()) throw std::invalid_argument("empty curve");
  return out;
}

namespace {

QDivisor need_divisor(const JobSpec& job, const SurfaceModel& s) {
  if (!job.divisor) throw std::invalid_argument("command requires --divisor");
  if (job.divisor->size() != static_cast<size_t>(s.rank))
    throw std::invalid_argument("divisor length does not match surface rank");
  return QDivisor(*job.divisor);
}

DivisorClass need_curve(const JobSpec& job, const SurfaceModel& s) {
  if (!job.curve) throw std::invalid_argument("command requires --curve");
  if (job.curve->size() != static_cast<size_t>(s.rank))
    throw std::invalid_argument("curve length does not match surface rank");
  return DivisorClass(*job.curve);
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int dispatch(const JobSpec& job, std::ostream& out) {
  SurfaceModel s;
  try {
    s = make_surface(job.surface);
  } catch (const DomainError& e) {
    throw std::invalid_argument(e.what());
  }
  const OutputFormat fmt = job.output;
  auto unsupported = [&]() -> int {
    throw std::invalid_argument("format not supported for this command");
  };

  switch (job.command) {
    case Command::Info: {
      // the X7/X8 nef cones are too large to enumerate here
      std::vector<DivisorClass> nef;
      if (s.kind != SurfaceKind::XR || s.r <= 6) nef = nef_extremal_rays(s);
      if (fmt == OutputFormat::Json) {
        json j = {{"surface", s.name()},
                  {"rank", s.rank},
                  {"negative_curves", s.negative_curves},
                  {"eff_generators", s.eff_generators},
                  {"nef_extremal_rays", nef},
                  {"integrality_bound", integrality_bound(s).str()}};
        emit_json(out, j);
      } else if (fmt == OutputFormat::Text) {
        out << "surface " << s.name() << "\nrank " << s.rank << "\n";
        out << "negative curves (" << s.negative_curves.size() << "):\n";
        for (const auto& c : s.negative_curves)
          out << "  " << class_string(c) << "  (" << join_ivec(c.coords) << ")\n";
        out << "nef extremal rays (" << nef.size() << "):\n";
        for (const auto& c : nef)
          out << "  " << class_string(c) << "  (" << join_ivec(c.coords) << ")\n";
        out << "integrality bound " << integrality_bound(s) << "\n";
      } else if (fmt == OutputFormat::Csv) {
        for (const auto& c : s.negative_curves) out << "negative," << join_ivec(c.coords) << "\n";
        for (const auto& c : nef) out << "nef," << join_ivec(c.coords) << "\n";
      } else {
        return unsupported();
      }
      return 0;
    }
    case Command::Zariski: {
      auto z = zariski_decompose(s, need_divisor(job, s));
      if (fmt == OutputFormat::Json) {
        emit_json(out, json(z));
      } else if (fmt == OutputFormat::Text) {
        out << "positive (" << join_qvec(z.positive.coords) << ")\n";
        if (z.negative.empty()) out << "negative 0\n";
        for (const auto& [c, a] : z.negative)
          out << "negative " << rat_to_string(a) << " * " << class_string(c) << "\n";
      } else if (fmt == OutputFormat::Csv) {
        out << "positive,1," << join_qvec(z.positive.coords) << "\n";
        for (const auto& [c, a] : z.negative)
          out << "negative," << rat_to_string(a) << "," << join_ivec(c.coords) << "\n";
      } else {
        return unsupported();
      }
      return 0;
    }
    case Command::Body: {
      auto op = okounkov_polygon(s, need_divisor(job, s), FlagSpec{need_curve(job, s)});
      if (fmt == OutputFormat::Json) {
        emit_json(out, json(op));
      } else if (fmt == OutputFormat::Text) {
        out << "nu " << rat_to_string(op.nu) << "\nmu " << rat_to_string(op.mu) << "\n";
        out << "vertices:";
        for (const auto& v : op.polygon.vertices)
          out << " (" << rat_to_string(v[0]) << "," << rat_to_string(v[1]) << ")";
        out << "\nbreakpoints:\n";
        for (const auto& bp : op.breakpoints) {
          out << "  t=" << rat_to_string(bp.t) << " beta=" << rat_to_string(bp.beta)
              << " support:";
          for (const auto& c : bp.support) out << " " << class_string(c);
          out << "\n";
        }
      } else if (fmt == OutputFormat::Csv) {
        for (const auto& v : op.polygon.vertices)
          out << rat_to_string(v[0]) << "," << rat_to_string(v[1]) << "\n";
      } else {
        out << svg_polygon(op.polygon);
      }
      return 0;
    }
    case Command::Defect: {
      auto r = normal_defect_report(s, need_divisor(job, s), need_curve(job, s));
      if (fmt == OutputFormat::Json) {
        emit_json(out, json(r));
      } else if (fmt == OutputFormat::Text) {
        out << "ehrhart " << r.ehrhart.str() << "\nhilbert " << r.hilbert.str() << "\nk0 "
            << r.k0 << "\nnormal " << (r.is_normal ? "yes" : "no") << "\n";
      } else if (fmt == OutputFormat::Csv) {
        out << rat_to_string(r.ehrhart.a2) << "," << rat_to_string(r.ehrhart.a1) << ","
            << rat_to_string(r.ehrhart.a0) << "," << rat_to_string(r.hilbert.a2) << ","
            << rat_to_string(r.hilbert.a1) << "," << rat_to_string(r.hilbert.a0) << ","
            << r.k0 << "," << (r.is_normal ? 1 : 0) << "\n";
      } else {
        return unsupported();
      }
      return 0;
    }
    case Command::Optimize: {
      auto r = optimize(s, need_divisor(job, s));
      if (fmt == OutputFormat::Json) {
        emit_json(out, json(r));
      } else if (fmt == OutputFormat::Text) {
        out << "min S " << rat_to_string(r.optimum) << "\n";
        out << "hilbert second coefficient " << rat_to_string(r.hilbert_second) << "\n";
        out << "normal " << (r.induces_normal ? "yes" : "no") << "\n";
        out << "optimal curves (" << r.optimal_curves.size() << "):\n";
        for (const auto& c : r.optimal_curves)
          out << "  " << (c.kind == CurveKind::Negative ? "negative " : "nef      ")
              << class_string(c.cls) << "  (" << join_ivec(c.cls.coords) << ")\n";
      } else if (fmt == OutputFormat::Csv) {
        out << "optimum," << rat_to_string(r.optimum) << ",hilbert_second,"
            << rat_to_string(r.hilbert_second) << ",normal," << (r.induces_normal ? 1 : 0)
            << "\n";
        for (const auto& c : r.optimal_curves)
          out << (c.kind == CurveKind::Negative ? "negative," : "nef,")
              << join_ivec(c.cls.coords) << "\n";
      } else {
        return unsupported();
      }
      return 0;
    }
    case Command::Global: {
      GlobalBody body = global_body(s, FlagSpec{need_curve(job, s)});
      auto gens = global_semigroup_generators(body, job.degree_bound);
      auto cox = cox_generators_report(s, body);
      if (fmt == OutputFormat::Json) {
        json jg = json::array();
        for (const auto& g : gens.generators) {
          json row = json::array();
          for (const auto& x : g) row.push_back(x.str());
          jg.push_back(row);
        }
        json j = {{"body", body},
                  {"semigroup_generators", jg},
                  {"rays_form_hilbert_basis", gens.verified},
                  {"verified_to", gens.verified_to.str()},
                  {"cox_generators", cox}};
        emit_json(out, j);
      } else if (fmt == OutputFormat::Text) {
        out << "rays (" << body.cone.rays.size() << "):\n";
        for (const auto& r : body.cone.rays) out << "  " << join_ivec(r, " ") << "\n";
        out << "facets (" << body.cone.facets.size() << "):\n";
        for (const auto& f : body.cone.facets) out << "  " << join_ivec(f, " ") << "\n";
        out << "hilbert basis verified to degree " << gens.verified_to
            << (gens.verified ? " (rays suffice)" : " (extra generators required)") << "\n";
        out << "cox generators:\n";
        for (const auto& g : cox)
          out << "  " << class_string(g.cls) << "  " << g.description << "\n";
      } else if (fmt == OutputFormat::Csv) {
        for (const auto& r : body.cone.rays) out << "ray," << join_ivec(r) << "\n";
        for (const auto& f : body.cone.facets) out << "facet," << join_ivec(f) << "\n";
        for (const auto& g : cox)
          out << "cox," << join_ivec(g.cls.coords) << "," << g.description << "\n";
      } else {
        return unsupported();
      }
      return 0;
    }
    case Command::Hilbert: {
      Poly2 p = hilbert_polynomial(s, need_divisor(job, s));
      if (fmt == OutputFormat::Json)
        emit_json(out, json(p));
      else if (fmt == OutputFormat::Text)
        out << p.str() << "\n";
      else if (fmt == OutputFormat::Csv)
        out << rat_to_string(p.a2) << "," << rat_to_string(p.a1) << "," << rat_to_string(p.a0)
            << "\n";
      else
        return unsupported();
      return 0;
    }
    case Command::Ehrhart: {
      auto op = okounkov_polygon(s, need_divisor(job, s), FlagSpec{need_curve(job, s)});
      auto [k0, scaled] = scale_to_integral(op.polygon);
      Poly2 p = ehrhart_polynomial(scaled);
      if (fmt == OutputFormat::Json)
        emit_json(out, json({{"k0", k0.str()}, {"ehrhart", p}}));
      else if (fmt == OutputFormat::Text)
        out << "k0 " << k0 << "\n" << p.str() << "\n";
      else if (fmt == OutputFormat::Csv)
        out << k0 << "," << rat_to_string(p.a2) << "," << rat_to_string(p.a1) << ","
            << rat_to_string(p.a0) << "\n";
      else if (fmt == OutputFormat::Svg)
        out << svg_polygon(scaled);
      return 0;
    }
  }
  return 1;
}

}  // namespace

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(job, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

namespace {

struct Checker {
  ReproduceReport report;

  void check(const std::string& name, bool ok) {
    report.lines.push_back((ok ? "PASS: " : "FAIL: ") + name);
    if (!ok) report.passed = false;
  }
};

std::vector<IVec> curve_set(const std::vector<DivisorClass>& cs) {
  std::vector<IVec> out;
  for (const auto& c : cs) out.push_back(c.coords);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ReproduceReport reproduce_paper(const std::string& outdir) {
  namespace fs = std::filesystem;
  if (outdir.empty()) throw fs::filesystem_error("empty output directory", std::error_code(ENOENT, std::generic_category()));
  fs::create_directories(outdir);
  const fs::path dir(outdir);

  Checker ck;
  ck.report.passed = true;

  // optimizer table
  {
    SurfaceModel x5 = make_surface("X5");
    std::ofstream csv(dir / "x5_table.csv");
    csv << "divisor,min_area,hilbert_second,normal,n_negative,n_nef\n";
    int row_idx = 0;
    for (const auto& row : refdata::x5_table()) {
      ++row_idx;
      auto r = optimize(x5, QDivisor(to_qvec(row.divisor)));
      std::vector<IVec> neg, nef;
      for (const auto& c : r.optimal_curves)
        (c.kind == CurveKind::Negative ? neg : nef).push_back(c.cls.coords);
      std::sort(neg.begin(), neg.end());
      std::sort(nef.begin(), nef.end());
      bool ok = r.optimum == Rat(row.min_area) && r.hilbert_second == Rat(row.min_area) &&
                r.induces_normal && neg == curve_set(x5.negative_curves) && nef == row.nef;
      ck.check("X5 table row " + std::to_string(row_idx), ok);
      csv << "\"" << join_ivec(row.divisor) << "\"," << rat_to_string(r.optimum) << ","
          << rat_to_string(r.hilbert_second) << "," << (r.induces_normal ? 1 : 0) << ","
          << neg.size() << "," << nef.size() << "\n";
    }
  }

  // Hilbert polynomials and normality on the two degenerate surfaces
  {
    SurfaceModel s6 = make_surface("S6"), l3 = make_surface("L3");
    QDivisor d6(QVec{4, -1, -1, -1, -1, -1, -1});
    QDivisor d3(QVec{4, -1, -1, -1, -1});
    Poly2 h6 = hilbert_polynomial(s6, d6);
    Poly2 h3 = hilbert_polynomial(l3, d3);
    ck.check("S6 hilbert polynomial 5t^2+3t+1",
             h6 == Poly2{5, 3, 1});
    ck.check("L3 hilbert polynomial 6t^2+4t+1",
             h3 == Poly2{6, 4, 1});
    std::ofstream f(dir / "hilbert_polynomials.json");
    f << json({{"S6", h6}, {"L3", h3}}).dump(2) << "\n";

    DivisorClass conic{2, -1, -1, -1, -1, -1, -1};
    DivisorClass minus2{1, -1, -1, -1, 0};
    auto r6 = normal_defect_report(s6, d6, conic);
    auto r3 = normal_defect_report(l3, d3, minus2);
    ck.check("S6 normality", r6.is_normal);
    ck.check("L3 normality", r3.is_normal);
    std::ofstream g(dir / "normality.json");
    g << json({{"S6", r6}, {"L3", r3}}).dump(2) << "\n";

    auto op = okounkov_polygon(s6, d6, FlagSpec{conic});
    std::ofstream svg(dir / "s6_polygon.svg");
    svg << svg_polygon(op.polygon);
  }

  // global bodies
  {
    SurfaceModel x5 = make_surface("X5");
    GlobalBody b5 = global_body(x5, FlagSpec{DivisorClass{1, -1, -1, 0, 0, 0}});
    ck.check("X5 global body 22 rays", b5.cone.rays.size() == 22);
    ck.check("X5 global body 39 facets", b5.cone.facets.size() == 39);
    ck.check("X5 global facet matrix",
             refdata::same_rows_up_to_sign(b5.cone.facets, refdata::x5_global_facets()));
    std::ofstream f5(dir / "x5_global.json");
    f5 << json(b5).dump(2) << "\n";

    SurfaceModel l3 = make_surface("L3");
    GlobalBody b3 = global_body(l3, FlagSpec{DivisorClass{1, -1, -1, -1, 0}});
    std::vector<IVec> rays = b3.cone.rays, expect = refdata::l3_global_rays();
    std::sort(rays.begin(), rays.end());
    std::sort(expect.begin(), expect.end());
    ck.check("L3 global body rays", rays == expect);
    ck.check("L3 global facet matrix",
             refdata::same_rows_up_to_sign(b3.cone.facets, refdata::l3_global_facets()));
    auto gens = global_semigroup_generators(b3, 6);
    ck.check("L3 rays form a Hilbert basis to degree 6", gens.verified);
    auto cox = cox_generators_report(l3, b3);
    std::vector<IVec> got;
    for (const auto& c : cox) got.push_back(c.cls.coords);
    std::sort(got.begin(), got.end());
    std::vector<IVec> want = curve_set(l3.negative_curves);
    want.push_back(IVec{1, 0, 0, 0, -1});
    std::sort(want.begin(), want.end());
    ck.check("L3 Cox generators", got == want);
    std::ofstream f3(dir / "l3_global.json");
    f3 << json(b3).dump(2) << "\n";
    std::ofstream fc(dir / "l3_cox.csv");
    for (const auto& c : cox)
      fc << "\"" << join_ivec(c.cls.coords) << "\"," << c.description << "\n";
  }

  std::ofstream rep(dir / "report.json");
  rep << json({{"passed", ck.report.passed}, {"checks", ck.report.lines}}).dump(2) << "\n";
  return ck.report;
}

}  // namespace okb
