#include "edm/cli.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "edm/elliptic.hpp"
#include "edm/spin.hpp"

namespace edm::cli {

int CheckReport::exit_code() const {
  if (!on_variety) return kExitOffVariety;
  if (error) return kExitDomain;
  return flat ? kExitOk : kExitDomain;
}

CheckReport make_check_report(const ModuliParams& p, double tol) {
  CheckReport r;
  r.params = p;
  r.ricci = ricci_from_params(p);
  const ModuliPoint pt = ModuliPoint::at(p);
  r.q_residual = pt.q_residual;
  r.on_variety = pt.on_variety(tol);
  try {
    const WKNumber wk = wk_number(p);
    r.lambda = wk.lambda;
    r.lambda_sign = wk.sign;
    const Theorem1Residuals res = theorem1_residuals(p, wk);
    r.r1 = std::abs(res.r1);
    r.r2 = res.r2_max();
    r.r3 = res.r3_max();
    const CurvatureReport curv = curvature_omega(p, wk.lambda, tol);
    r.flat = curv.flat;
    r.curvature_max_norm = curv.max_norm;
    const EinsteinCheck ein = verify_einstein_from_wk(p, wk.lambda, Spinor{1.0, 0.0});
    r.einstein_residual = ein.residual;
    r.einstein_sign = ein.sign;
  } catch (const Error& e) {
    r.error = e.code();
  }
  if (r.lambda) {
    try {
      r.invariant = homothety_invariant(p, *r.lambda).value();
    } catch (const Error& e) {
      r.invariant_error = e.code();
    }
  }
  return r;
}

nlohmann::json to_json(const CheckReport& r) {
  using nlohmann::json;
  auto opt_code = [](const std::optional<ErrorCode>& c) { return c ? json(std::string(to_string(*c))) : json(nullptr); };
  json j;
  j["schema"] = 1;
  j["params"] = {{"K", r.params.K}, {"L", r.params.L}, {"M", r.params.M}};
  j["ricci"] = {{"A", r.ricci.A}, {"B", r.ricci.B}, {"C", r.ricci.C}, {"S", r.ricci.S}, {"ric_norm_sq", r.ricci.ric_norm_sq}};
  j["q_residual"] = r.q_residual;
  j["on_variety"] = r.on_variety;
  j["lambda"] = r.lambda ? json(*r.lambda) : json(nullptr);
  j["lambda_sign"] = r.lambda_sign;
  j["error"] = opt_code(r.error);
  j["residuals"] = {{"r1", r.r1}, {"r2", r.r2}, {"r3", r.r3}};
  j["flat"] = r.flat;
  j["curvature_max_norm"] = r.curvature_max_norm;
  j["einstein_residual"] = r.einstein_residual;
  j["einstein_sign"] = r.einstein_sign;
  j["invariant"] = r.invariant ? json(*r.invariant) : json(nullptr);
  j["invariant_error"] = opt_code(r.invariant_error);
  return j;
}

std::string format_number(double x) {
  std::array<char, 40> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", x);
  return buf.data();
}

void write_trace_csv(std::ostream& os, const CurveBranch& branch) {
  os << kTraceHeader << '\n';
  for (const BranchSample& s : branch.samples) {
    for (double v : {s.M, s.L, s.A, s.B, s.C, s.S, s.lambda, s.vol, s.invariant}) os << format_number(v) << ',';
    if (s.error) os << to_string(*s.error);
    os << '\n';
  }
  if (!os) throw IoError("failed writing CSV");
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  return f;
}

struct Series {
  std::string name;
  std::vector<double> y;
};

void write_columns(const std::filesystem::path& path, const std::vector<double>& x, const std::vector<Series>& cols) {
  std::ofstream f = open_out(path);
  f << "M";
  for (const Series& c : cols) f << ',' << c.name;
  f << '\n';
  for (std::size_t i = 0; i < x.size(); ++i) {
    f << format_number(x[i]);
    for (const Series& c : cols) f << ',' << format_number(c.y[i]);
    f << '\n';
  }
  if (!f) throw IoError("failed writing " + path.string());
}

// Minimal line plot: axes box, min/max labels, one polyline per series.
void write_svg(const std::filesystem::path& path, const std::string& title, const std::vector<double>& x,
               const std::vector<Series>& cols) {
  constexpr double W = 640, H = 420, pad = 50;
  double ymin = std::numeric_limits<double>::infinity(), ymax = -ymin;
  for (const Series& c : cols)
    for (double v : c.y)
      if (std::isfinite(v)) {
        ymin = std::min(ymin, v);
        ymax = std::max(ymax, v);
      }
  if (!(ymax > ymin)) ymax = ymin + 1.0;
  const double xmin = x.front(), xmax = x.back();
  auto px = [&](double v) { return pad + (v - xmin) / (xmax - xmin) * (W - 2 * pad); };
  auto py = [&](double v) { return H - pad - (v - ymin) / (ymax - ymin) * (H - 2 * pad); };
  static const std::array<const char*, 4> colors{"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

  std::ofstream f = open_out(path);
  f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
  f << "<rect x=\"" << pad << "\" y=\"" << pad << "\" width=\"" << W - 2 * pad << "\" height=\"" << H - 2 * pad
    << "\" fill=\"none\" stroke=\"black\"/>\n";
  f << "<text x=\"" << W / 2 << "\" y=\"25\" text-anchor=\"middle\">" << title << "</text>\n";
  f << "<text x=\"5\" y=\"" << pad << "\">" << format_number(ymax).substr(0, 8) << "</text>\n";
  f << "<text x=\"5\" y=\"" << H - pad << "\">" << format_number(ymin).substr(0, 8) << "</text>\n";
  f << "<text x=\"" << W - pad << "\" y=\"" << H - 20 << "\" text-anchor=\"end\">M = "
    << format_number(xmax).substr(0, 8) << "</text>\n";
  for (std::size_t k = 0; k < cols.size(); ++k) {
    f << "<polyline fill=\"none\" stroke=\"" << colors[k % colors.size()] << "\" points=\"";
    for (std::size_t i = 0; i < x.size(); ++i)
      if (std::isfinite(cols[k].y[i])) f << px(x[i]) << ',' << py(cols[k].y[i]) << ' ';
    f << "\"/>\n";
    f << "<text x=\"" << W - pad - 5 << "\" y=\"" << pad + 18 * (k + 1) << "\" text-anchor=\"end\" fill=\""
      << colors[k % colors.size()] << "\">" << cols[k].name << "</text>\n";
  }
  f << "</svg>\n";
  if (!f) throw IoError("failed writing " + path.string());
}

}  // namespace

std::vector<std::filesystem::path> write_figures(const std::filesystem::path& dir, bool svg, const FigureGrid& grid) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) throw IoError("cannot create directory " + dir.string());

  const CurveBranch plus = trace_branch(grid.m_min, grid.m_max, grid.samples, Branch::plus);
  const CurveBranch minus = trace_branch(grid.m_min, grid.m_max, grid.samples, Branch::minus);
  std::vector<double> m;
  for (const BranchSample& s : plus.samples) m.push_back(s.M);
  auto column = [](const CurveBranch& b, double BranchSample::*field) {
    std::vector<double> out;
    for (const BranchSample& s : b.samples) out.push_back(s.*field);
    return out;
  };

  struct Figure {
    std::string stem;
    std::string title;
    std::vector<Series> cols;
  };
  const std::vector<Figure> figures{
      {"fig1_L", "L(M) on both branches",
       {{"L_plus", column(plus, &BranchSample::L)}, {"L_minus", column(minus, &BranchSample::L)}}},
      {"fig2_S", "scalar curvature",
       {{"S_plus", column(plus, &BranchSample::S)}, {"S_minus", column(minus, &BranchSample::S)}}},
      {"fig3_ricci_plus", "Ricci eigenvalues, plus branch",
       {{"A", column(plus, &BranchSample::A)}, {"B", column(plus, &BranchSample::B)}, {"C", column(plus, &BranchSample::C)}}},
      {"fig4_ricci_minus", "Ricci eigenvalues, minus branch",
       {{"A", column(minus, &BranchSample::A)}, {"B", column(minus, &BranchSample::B)}, {"C", column(minus, &BranchSample::C)}}},
      {"fig5_inv_plus", "lambda^2 vol^(2/3), plus branch", {{"invariant", column(plus, &BranchSample::invariant)}}},
      {"fig6_inv_minus", "lambda^2 vol^(2/3), minus branch", {{"invariant", column(minus, &BranchSample::invariant)}}},
  };

  std::vector<std::filesystem::path> written;
  for (const Figure& fig : figures) {
    const auto csv = dir / (fig.stem + ".csv");
    write_columns(csv, m, fig.cols);
    written.push_back(csv);
    if (svg) {
      const auto path = dir / (fig.stem + ".svg");
      write_svg(path, fig.title, m, fig.cols);
      written.push_back(path);
    }
  }
  return written;
}

namespace {

void print_check_text(std::ostream& out, const CheckReport& r) {
  out << "params      K=" << format_number(r.params.K) << " L=" << format_number(r.params.L)
      << " M=" << format_number(r.params.M) << '\n';
  out << "ricci       A=" << format_number(r.ricci.A) << " B=" << format_number(r.ricci.B)
      << " C=" << format_number(r.ricci.C) << " S=" << format_number(r.ricci.S) << '\n';
  out << "Q           " << format_number(r.q_residual) << (r.on_variety ? "  (on variety)" : "  (off variety)") << '\n';
  if (r.lambda) out << "lambda      " << format_number(*r.lambda) << '\n';
  if (r.error) {
    out << "error       " << to_string(*r.error) << '\n';
    return;
  }
  out << "residuals   r1=" << format_number(r.r1) << " r2=" << format_number(r.r2) << " r3=" << format_number(r.r3)
      << '\n';
  out << "curvature   " << format_number(r.curvature_max_norm) << (r.flat ? "  (flat)" : "  (not flat)") << '\n';
  out << "einstein    " << format_number(r.einstein_residual) << " sign=" << r.einstein_sign << '\n';
  if (r.invariant) out << "invariant   " << format_number(*r.invariant) << '\n';
  if (r.invariant_error) out << "invariant   " << to_string(*r.invariant_error) << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Einstein-Dirac moduli of left-invariant metrics on S^3", "edmoduli"};
  app.require_subcommand(1);
  double tol = kVarietyTolerance;
  app.add_option("--tol", tol, "tolerance for variety membership and flatness")->check(CLI::PositiveNumber);

  // check
  auto* check = app.add_subcommand("check", "full report for one parameter triple");
  std::array<double, 3> klm{};
  bool json_out = false;
  check->add_option("K", klm[0])->required();
  check->add_option("L", klm[1])->required();
  check->add_option("M", klm[2])->required();
  check->add_flag("--json", json_out, "emit the report as JSON");

  // trace
  auto* trace = app.add_subcommand("trace", "sample one branch of the real moduli curve as CSV");
  std::string branch_name = "plus";
  double m_min = 0.1, m_max = 10.0;
  int samples = 200;
  std::string out_path = "-";
  trace->add_option("branch,--branch", branch_name, "plus | minus");
  trace->add_option("m_min,--m-min", m_min);
  trace->add_option("m_max,--m-max", m_max);
  trace->add_option("samples,--samples", samples)->check(CLI::Range(2, 10000000));
  trace->add_option("--out", out_path, "output CSV path, - for stdout");

  // figures
  auto* figures = app.add_subcommand("figures", "write the CSV data behind the six curve plots");
  std::string out_dir = "figures";
  bool svg = false;
  figures->add_option("out_dir,--out", out_dir);
  figures->add_flag("--svg", svg, "also write SVG line plots");

  // elliptic
  auto* elliptic = app.add_subcommand("elliptic", "evaluate the z-parametrization of the curve");
  double z_re = 0.0, z_im = 0.0;
  int sheet = 1;
  elliptic->add_option("re", z_re)->required();
  elliptic->add_option("im", z_im);
  elliptic->add_option("--sheet", sheet)->check(CLI::IsMember({1, -1}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (*check) {
      const CheckReport r = make_check_report({klm[0], klm[1], klm[2]}, tol);
      if (json_out)
        out << to_json(r).dump(2) << '\n';
      else
        print_check_text(out, r);
      return r.exit_code();
    }
    if (*trace) {
      const auto branch = parse_branch(branch_name);
      if (!branch) {
        err << "unknown branch '" << branch_name << "' (expected plus or minus)\n";
        return kExitUsage;
      }
      const CurveBranch curve = trace_branch(m_min, m_max, samples, *branch);
      if (out_path == "-") {
        write_trace_csv(out, curve);
      } else {
        std::ofstream f = open_out(out_path);
        write_trace_csv(f, curve);
      }
      return kExitOk;
    }
    if (*figures) {
      for (const auto& p : write_figures(out_dir, svg)) out << p.string() << '\n';
      return kExitOk;
    }
    if (*elliptic) {
      const EllipticPoint pt{{z_re, z_im}, sheet};
      const ParamPair lm = lm_from_z(pt);
      const IdentityResiduals id = identity_residuals(pt);
      nlohmann::json j;
      j["schema"] = 1;
      j["z"] = {z_re, z_im};
      j["sheet"] = sheet;
      j["L"] = {lm.L.real(), lm.L.imag()};
      j["M"] = {lm.M.real(), lm.M.imag()};
      j["q_abs"] = std::abs(q_complex(1.0, lm.L, lm.M));
      j["difference_residual"] = id.difference;
      j["product_residual"] = id.product;
      out << j.dump(2) << '\n';
      return kExitOk;
    }
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (*check) return kExitDomain;
    return e.code() == ErrorCode::InvalidArgument ? kExitUsage : kExitDomain;
  }
  return kExitUsage;
}

}  // namespace edm::cli
