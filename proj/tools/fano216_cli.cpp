// Command-line entry point: exact Zariski decompositions, volumes, delta
// bounds, discriminants and automorphism checks for the shipped models.
//
// Exit codes: 0 success, 1 mathematical error, 2 input error.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "fano216/autgroup.hpp"
#include "fano216/certificate.hpp"
#include "fano216/coxcone.hpp"
#include "fano216/flagdelta.hpp"
#include "fano216/models.hpp"
#include "fano216/quartic.hpp"
#include "fano216/surface.hpp"

using namespace fano216;

namespace {

std::vector<Rational> parse_rational_list(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(Rational::parse(tok));
  return out;
}

Certificate base_certificate(const std::string& command, const std::string& data_dir,
                             const std::vector<std::string>& model_files) {
  Certificate cert;
  cert.command = command;
  for (const auto& f : model_files)
    cert.models.emplace_back(f, content_hash(read_file(data_dir + "/models/" + f)));
  return cert;
}

int run_zariski(const std::string& data_dir, const std::string& model,
                const std::string& divisor_csv, bool unchecked) {
  SurfaceLattice lat = load_surface(data_dir, model, unchecked);
  DivisorClass d = parse_rational_list(divisor_csv);
  ZariskiResult z = zariski_surface(lat, d);
  Certificate cert = base_certificate("zariski", data_dir, {model + ".surface"});
  for (std::size_t i = 0; i < lat.rank(); ++i)
    cert.add_result("P[" + lat.basis_names[i] + "]", z.positive[i]);
  for (const auto& [idx, coef] : z.negative)
    cert.add_result("N[" + lat.tracked_names[idx] + "]", coef);
  cert.verdicts.push_back("decomposition certified: reconstruction, orthogonality, "
                          "negative definiteness");
  std::cout << cert.to_json() << "\n";
  return 0;
}

int run_volume(const std::string& data_dir, const std::string& model,
               const std::string& divisor_csv, bool unchecked) {
  SurfaceLattice lat = load_surface(data_dir, model, unchecked);
  DivisorClass d = parse_rational_list(divisor_csv);
  Rational vol = volume(lat, d);
  Certificate cert = base_certificate("volume", data_dir, {model + ".surface"});
  cert.add_result("volume", vol, "volume chamber table");
  std::cout << cert.to_json() << "\n";
  return 0;
}

int run_cox(const std::string& w_csv, const std::string& wd_csv) {
  std::vector<Rational> flat = parse_rational_list(w_csv);
  if (flat.size() % 2 != 0)
    throw std::invalid_argument("cox-zariski: -w expects an even list of rationals");
  std::vector<Vec2> w;
  for (std::size_t i = 0; i + 1 < flat.size(); i += 2) w.push_back({flat[i], flat[i + 1]});
  std::vector<Rational> wd = parse_rational_list(wd_csv);
  if (wd.size() != 2) throw std::invalid_argument("cox-zariski: -d expects two rationals");
  CoxZariski cz = zariski_cox(Vec2{wd[0], wd[1]}, w);
  Certificate cert;
  cert.command = "cox-zariski";
  for (std::size_t i = 0; i < cz.mu.size(); ++i)
    cert.add_result("mu[" + std::to_string(i) + "]", cz.mu[i], "cone decomposition");
  cert.results.emplace_back("wP", cz.wP.str());
  cert.results.emplace_back("wN", cz.wN.str());
  std::cout << cert.to_json() << "\n";
  return 0;
}

int run_delta(const std::string& data_dir, const std::string& case_name) {
  DeltaReport rep = delta_bound(case_name, data_dir);
  Certificate cert = base_certificate("delta --case " + case_name, data_dir, {});
  for (const auto& e : rep.values) {
    cert.results.emplace_back(e.name, e.value.str());
    if (!e.anchor.empty()) cert.anchors.emplace_back(e.name, e.anchor);
  }
  cert.add_result("bound", rep.bound);
  cert.verdicts.push_back(rep.theorem_shape);
  for (const auto& n : rep.notes) cert.discrepancies.push_back(n);
  std::cout << cert.to_json() << "\n";
  {
    std::cout << "\ncase " << rep.case_label << "\n";
    for (const auto& e : rep.values)
      std::cout << "  " << e.name << " = " << e.value.str()
                << (e.anchor.empty() ? "" : "   [" + e.anchor + "]") << "\n";
    std::cout << "  delta_P(X) >= " << rep.bound.str() << "\n";
    for (const auto& n : rep.notes) std::cout << "  note: " << n << "\n";
  }
  return 0;
}

int run_discriminant(const std::string& data_dir, const std::string& pencil_file,
                     const std::string& point_csv, const std::string& audit_file,
                     bool unchecked) {
  PencilData p = parse_pencil(load_checked(data_dir, pencil_file, unchecked));
  DiscriminantCurve d = discriminant(p);
  Certificate cert = base_certificate("discriminant", data_dir, {pencil_file});
  cert.add_result("det_constant", d.det_constant, "discriminant identity");
  cert.results.emplace_back(
      "delta", d.degenerate() ? "0" : d.delta.str({"x1", "x2", "x3"}));
  cert.results.emplace_back("surface_type",
                            exceptional_surface_type(p) == ExceptionalSurface::P1xP1
                                ? "P1xP1"
                                : "F2");
  if (!point_csv.empty()) {
    auto pt = parse_rational_list(point_csv);
    if (pt.size() != 3) throw std::invalid_argument("--point expects three rationals");
    FiberType ft = fiber_type(p, {pt[0], pt[1], pt[2]});
    cert.results.emplace_back("fiber_type", ft == FiberType::Smooth      ? "smooth"
                                            : ft == FiberType::TwoLines ? "two_lines"
                                                                        : "double_line");
  }
  if (!audit_file.empty()) {
    std::vector<SingularPointAudit> audit;
    std::istringstream in(read_file(audit_file));
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string a, b, c;
      int overk = 0, fixed = 0;
      if (!(ls >> a >> b >> c >> overk >> fixed)) continue;
      audit.push_back({{Rational::parse(a), Rational::parse(b), Rational::parse(c)},
                       overk != 0, fixed != 0});
    }
    KStabilityCertificate ks = kstability_certificate(d, audit);
    cert.verdicts.push_back(ks.verdict);
    cert.verdicts.push_back(ks.route);
  } else {
    cert.verdicts.push_back("no singular-point audit supplied");
  }
  std::cout << cert.to_json() << "\n";
  return 0;
}

int run_aut_verify(const std::string& data_dir, const std::string& row_name, bool unchecked) {
  TableRow row = load_table_row(data_dir, row_name, unchecked);
  RowReport rep = verify_table_row(row);
  Certificate cert = base_certificate("aut verify --row " + row_name, data_dir,
                                      {"rows/" + row_name + ".row"});
  cert.results.emplace_back("pencil_invariant", rep.pencil_ok ? "true" : "false");
  cert.results.emplace_back("plane_invariant", rep.plane_ok ? "true" : "false");
  cert.results.emplace_back("identified", rep.identified);
  cert.results.emplace_back("claimed", row.claimed_type);
  cert.verdicts.push_back(rep.passed() ? "row verified" : "row FAILED");
  if (!row.note.empty()) cert.discrepancies.push_back(row.note);
  std::cout << cert.to_json() << "\n";
  return rep.passed() ? 0 : 1;
}

int run_aut_classify(const std::string& b_csv) {
  std::vector<Rational> b = parse_rational_list(b_csv);
  if (b.size() != 5) throw std::invalid_argument("aut classify: -b expects five rationals");
  std::vector<Cyclo> bc;
  for (const auto& r : b) bc.push_back(Cyclo(r));
  auto sols = skew_classify(bc);
  Certificate cert;
  cert.command = "aut classify";
  for (std::size_t i = 0; i < sols.size(); ++i) {
    std::ostringstream os;
    os << "(";
    for (int k = 0; k < 5; ++k) os << sols[i].perm[k] << (k + 1 < 5 ? " " : ")");
    cert.results.emplace_back("nu[" + std::to_string(i) + "]", os.str());
    cert.results.emplace_back("c[" + std::to_string(i) + "]", sols[i].c.json_str());
  }
  cert.verdicts.push_back(std::to_string(sols.size()) + " skew-symmetry solutions");
  std::cout << cert.to_json() << "\n";
  return 0;
}

int run_golden_cmd(const std::string& data_dir, bool serial) {
  auto outcomes = run_golden(data_dir, !serial);
  bool all_ok = true;
  for (const auto& o : outcomes) {
    std::cout << (o.ok ? "ok   " : "FAIL ") << o.name << " = " << o.actual;
    if (!o.ok) std::cout << " (expected " << o.expected << ")";
    std::cout << "\n";
    all_ok = all_ok && o.ok;
  }
  std::cout << (all_ok ? "golden: all values reproduce\n" : "golden: FAILURES\n");
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact K-stability computations for Fano threefolds of family 2.16"};
  app.require_subcommand(1);

  std::string data_dir = default_data_dir();
  app.add_option("--data", data_dir, "data directory (default: bundled models)");
  bool unchecked = false;
  app.add_flag("--unchecked", unchecked, "skip manifest hash verification");

  auto* zar = app.add_subcommand("zariski", "Zariski decomposition on a surface model");
  std::string model, divisor;
  zar->add_option("--model", model, "surface model name")->required();
  zar->add_option("--divisor", divisor, "comma-separated coefficients")->required();

  auto* vol = app.add_subcommand("volume", "volume of a divisor on a surface model");
  vol->add_option("--model", model, "surface model name")->required();
  vol->add_option("--divisor", divisor, "comma-separated coefficients")->required();

  auto* cox = app.add_subcommand("cox-zariski", "decomposition from Cox generator degrees");
  std::string w_list, wd;
  cox->add_option("-w,--degrees", w_list, "flat list x1,y1,x2,y2,...")->required();
  cox->add_option("-d,--divisor", wd, "class wD as x,y")->required();

  auto* del = app.add_subcommand("delta", "delta-invariant bound for a shipped case");
  std::string case_name;
  del->add_option("--case", case_name, "case label")->required();

  auto* disc = app.add_subcommand("discriminant", "conic-bundle discriminant of a pencil");
  std::string pencil_file, point_csv, audit_file;
  disc->add_option("--pencil", pencil_file, "pencil file under data/models/")->required();
  disc->add_option("--point", point_csv, "evaluate the fiber type at x1,x2,x3");
  disc->add_option("--audit", audit_file, "singular-point audit file");

  auto* aut = app.add_subcommand("aut", "automorphism table checks");
  auto* autv = aut->add_subcommand("verify", "verify a transcribed table row");
  std::string row_name;
  autv->add_option("--row", row_name, "row label")->required();
  auto* autc = aut->add_subcommand("classify", "skew brute force for a 5-tuple");
  std::string b_csv;
  autc->add_option("-b", b_csv, "five comma-separated rationals")->required();

  auto* gold = app.add_subcommand("golden", "run the full golden-value suite");
  bool serial = false;
  gold->add_flag("--serial", serial, "run the reference serial path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*zar) return run_zariski(data_dir, model, divisor, unchecked);
    if (*vol) return run_volume(data_dir, model, divisor, unchecked);
    if (*cox) return run_cox(w_list, wd);
    if (*del) return run_delta(data_dir, case_name);
    if (*disc) return run_discriminant(data_dir, pencil_file, point_csv, audit_file, unchecked);
    if (*aut) {
      if (*autv) return run_aut_verify(data_dir, row_name, unchecked);
      if (*autc) return run_aut_classify(b_csv);
      std::cerr << "aut: need a subcommand (verify | classify)\n";
      return 2;
    }
    if (*gold) return run_golden_cmd(data_dir, serial);
  } catch (const std::invalid_argument& e) {
    std::cerr << "{\"error\": \"input\", \"detail\": \"" << e.what() << "\"}\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "{\"error\": \"input\", \"detail\": \"" << e.what() << "\"}\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "{\"error\": \"mathematical\", \"detail\": \"" << e.what() << "\"}\n";
    return 1;
  }
  return 2;
}
