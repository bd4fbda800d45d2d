// Command-line front end: loads group and weight descriptors, runs fusion,
// weight checks, norms, and the diagnostic scans, and emits human tables or
// JSON reports.
//
// Exit codes: 0 clean, 1 violations found or scan verdict not met, 2 input
// errors.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bfa/diagnostics.hpp"
#include "bfa/dual.hpp"
#include "bfa/fourier.hpp"
#include "bfa/io.hpp"
#include "bfa/line_weight.hpp"
#include "bfa/weight.hpp"

namespace {

using bfa::Json;

struct Output {
  std::string format = "human";
  std::string out_path;

  bool json() const { return format == "json"; }
  void emit(const Json& payload, const std::string& human) const {
    if (json()) {
      std::string text = payload.dump(2) + "\n";
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream f(out_path);
        if (!f) throw bfa::InputError("cannot write to '" + out_path + "'");
        f << text;
      }
    } else {
      std::cout << human;
    }
  }
};

bool color_enabled() {
  const char* v = std::getenv("BFA_COLOR");
  return v && std::string(v) == "1";
}

std::string paint(const std::string& text, bool good) {
  if (!color_enabled()) return text;
  return (good ? "\033[32m" : "\033[31m") + text + "\033[0m";
}

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", out.out_path, "Write JSON report to this file");
}

bfa::DualPtr load_group(const std::string& spec) {
  if (spec.find(".json") != std::string::npos) {
    bfa::CharacterTable table = bfa::table_from_json(bfa::load_json_file(spec));
    // Content-named so a report never depends on the file path.
    return bfa::DualTable::finite(std::move(table), "custom");
  }
  return bfa::make_dual(spec);
}

// Reports name the group; custom tables also embed the full descriptor so a
// report can be reproduced from its own output.
void attach_group(Json& j, const bfa::DualPtr& dual) {
  j["group"] = dual->name();
  if (dual->kind() == bfa::DualTable::Kind::Finite && dual->name() == "custom")
    j["group_table"] = bfa::table_to_json(dual->table());
}

struct WeightArgs {
  std::string name = "trivial";
  double a = 1.0;
  double b = 1.0;

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--weight", name,
                    "Weight: trivial|omega_a|sigma_a|rho_b|exp_dim_b or a descriptor .json")
        ->capture_default_str();
    cmd->add_option("--a", a, "Weight parameter a")->capture_default_str();
    cmd->add_option("--b", b, "Weight parameter b")->capture_default_str();
  }

  bfa::Weight build(const bfa::DualPtr& dual) const {
    if (name.find(".json") != std::string::npos)
      return bfa::weight_from_json(dual, bfa::load_json_file(name));
    if (name == "trivial") return bfa::Weight::trivial(dual);
    if (name == "omega_a") return bfa::Weight::omega_a(dual, a);
    if (name == "sigma_a") return bfa::Weight::sigma_a(dual, a);
    if (name == "rho_b") return bfa::Weight::rho_b(dual, b);
    if (name == "exp_dim_b") return bfa::Weight::exp_dim_b(dual, b);
    throw bfa::InputError("unknown weight '" + name + "'");
  }
};

int run_fuse(const bfa::DualPtr& dual, const std::string& a, const std::string& b,
             const Output& out) {
  bfa::IrrepLabel la = dual->parse_label(a);
  bfa::IrrepLabel lb = dual->parse_label(b);
  bfa::FusionVector f = dual->fuse(la, lb);
  Json j;
  j["command"] = "fuse";
  attach_group(j, dual);
  j["a"] = dual->label_name(la);
  j["b"] = dual->label_name(lb);
  j["decomposition"] = bfa::fusion_to_json(*dual, f);
  std::string human = dual->label_name(la) + " (x) " + dual->label_name(lb) + " =";
  for (const auto& [sigma, m] : f.entries)
    human += " " + dual->label_name(sigma) + ":" + std::to_string(m);
  human += "\n";
  out.emit(j, human);
  return 0;
}

int run_check_weight(const bfa::DualPtr& dual, const bfa::Weight& w, int trunc,
                     const Output& out) {
  auto labels = dual->enumerate_first(static_cast<std::size_t>(trunc));
  auto report = bfa::verify_weight(w, labels);
  Json j;
  j["command"] = "check-weight";
  attach_group(j, dual);
  j["weight"] = bfa::weight_to_json(w);
  j["report"] = bfa::violations_to_json(*dual, report);
  std::string human = "checked " + std::to_string(report.checked_pairs) + " pairs on " +
                      report.truncation + ": ";
  human += report.ok() ? paint("no violations", true)
                       : paint(std::to_string(report.violations.size()) + " violations", false);
  human += "\n";
  for (const auto& v : report.violations)
    human += "  w(" + dual->label_name(v.sigma) + ") > w(" + dual->label_name(v.pi) + ") w(" +
             dual->label_name(v.rho) + "), ratio " + std::to_string(v.ratio) + "\n";
  out.emit(j, human);
  return report.ok() ? 0 : 1;
}

int run_symmetrize(const bfa::DualPtr& dual, const bfa::Weight& w, const Output& out) {
  bfa::Weight omega = w.symmetrized();
  Json j;
  j["command"] = "symmetrize";
  attach_group(j, dual);
  j["weight"] = bfa::weight_to_json(omega);
  Json samples = Json::object();
  for (const auto& pi : dual->enumerate_first(8))
    samples[dual->label_name(pi)] = bfa::num(omega.eval(pi));
  j["samples"] = samples;
  std::string human = "Omega = w * (w o conj); first values:\n";
  for (const auto& [k, v] : samples.items())
    human += "  " + k + " -> " + std::to_string(v.get<double>()) + "\n";
  out.emit(j, human);
  return 0;
}

int run_norm(const bfa::DualPtr& dual, const bfa::Weight& w, const std::string& kind, int n,
             const std::string& function_path, const std::string& coeffs_path, bool use_delta_e,
             const Output& out) {
  bfa::MatrixModel model = bfa::MatrixModel::make(dual);
  bfa::FourierCoefficients coeffs;
  if (!coeffs_path.empty()) {
    coeffs = bfa::coefficients_from_json(bfa::load_json_file(coeffs_path));
    if (coeffs.mats.size() != model.labels().size())
      throw bfa::InputError("coefficient count does not match the dual");
  } else {
    bfa::GroupFunction f;
    if (use_delta_e) {
      f = model.delta_e();
    } else if (!function_path.empty()) {
      f = bfa::function_from_json(bfa::load_json_file(function_path));
      if (f.values.size() != model.order())
        throw bfa::InputError("function length does not match the group order");
    } else {
      throw bfa::InputError("norm needs --function FILE, --coeffs FILE, or --delta-e");
    }
    coeffs = bfa::transform(model, f);
  }
  double value = 0.0;
  if (kind == "A") {
    value = bfa::norm_A(model, coeffs, w);
  } else if (kind == "ADelta") {
    value = bfa::norm_ADelta(model, coeffs, w.symmetrized());
  } else if (kind == "Agamma") {
    value = bfa::norm_Agamma(model, coeffs, n);
  } else {
    throw bfa::InputError("unknown norm kind '" + kind + "'");
  }
  Json j;
  j["command"] = "norm";
  attach_group(j, dual);
  j["kind"] = kind;
  if (kind == "Agamma") j["n"] = n;
  j["weight"] = bfa::weight_to_json(w);
  j["value"] = bfa::num(value);
  out.emit(j, "norm_" + kind + " = " + std::to_string(value) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Beurling-Fourier algebra calculator: fusion rings, central "
               "weights, weighted Fourier norms, amenability diagnostics"};
  app.require_subcommand(1);

  std::string group = "su2";

  // fuse
  auto* fuse_cmd = app.add_subcommand("fuse", "Decompose a tensor product of irreps");
  std::string fuse_a, fuse_b;
  Output fuse_out;
  fuse_cmd->add_option("--group", group, "Group spec or character table .json")->required();
  fuse_cmd->add_option("--a", fuse_a, "First irrep label")->required();
  fuse_cmd->add_option("--b", fuse_b, "Second irrep label")->required();
  add_output_flags(fuse_cmd, fuse_out);

  // check-weight
  auto* check_cmd = app.add_subcommand("check-weight", "Verify the central weight inequality");
  WeightArgs check_w;
  int check_trunc = 20;
  Output check_out;
  check_cmd->add_option("--group", group)->required();
  check_w.add_flags(check_cmd);
  check_cmd->add_option("--trunc", check_trunc, "Truncation size")->capture_default_str();
  add_output_flags(check_cmd, check_out);

  // symmetrize
  auto* sym_cmd = app.add_subcommand("symmetrize", "Emit the symmetrized weight");
  WeightArgs sym_w;
  Output sym_out;
  sym_cmd->add_option("--group", group)->required();
  sym_w.add_flags(sym_cmd);
  add_output_flags(sym_cmd, sym_out);

  // restrict
  auto* restr_cmd = app.add_subcommand(
      "restrict", "Restrict a weight to a subgroup (su2 -> torus, or finite with --subgroup)");
  WeightArgs restr_w;
  std::string subgroup, embedding_csv;
  int restr_trunc = 0, restr_max_n = 100;
  Output restr_out;
  restr_cmd->add_option("--group", group)->required();
  restr_w.add_flags(restr_cmd);
  restr_cmd->add_option("--subgroup", subgroup, "Finite subgroup spec (z2 or z3 under s3)");
  restr_cmd->add_option("--embedding", embedding_csv,
                        "Comma-separated G-class index per H-class (overrides built-ins)");
  restr_cmd->add_option("--trunc", restr_trunc, "Largest t scanned for table weights");
  restr_cmd->add_option("--max-n", restr_max_n, "Largest |n| tabulated for table weights")
      ->capture_default_str();
  add_output_flags(restr_cmd, restr_out);

  // norm
  auto* norm_cmd = app.add_subcommand("norm", "Weighted Fourier norm of a function");
  WeightArgs norm_w;
  std::string norm_kind = "A", norm_function, norm_coeffs;
  bool norm_delta_e = false;
  int norm_n = 0;
  Output norm_out;
  norm_cmd->add_option("--group", group)->required();
  norm_w.add_flags(norm_cmd);
  norm_cmd->add_option("--kind", norm_kind, "A | ADelta | Agamma")->capture_default_str();
  norm_cmd->add_option("--n", norm_n, "Exponent index for Agamma")->capture_default_str();
  norm_cmd->add_option("--function", norm_function, "Group function .json");
  norm_cmd->add_option("--coeffs", norm_coeffs, "Fourier coefficients .json");
  norm_cmd->add_flag("--delta-e", norm_delta_e, "Use the point mass at the identity");
  add_output_flags(norm_cmd, norm_out);

  // amen-constant
  auto* amen_cmd = app.add_subcommand("amen-constant", "Operator amenability constant");
  WeightArgs amen_w;
  Output amen_out;
  amen_cmd->add_option("--group", group)->required();
  amen_w.add_flags(amen_cmd);
  add_output_flags(amen_cmd, amen_out);

  // product-amen
  auto* pa_cmd = app.add_subcommand("product-amen",
                                    "Partial products of amenability constants over factors");
  std::string pa_group = "s3", pa_seq = "const", pa_list;
  double pa_a = 0.0, pa_tol = 1e-10;
  int pa_max_terms = 200;
  Output pa_out;
  pa_cmd->add_option("--group", pa_group, "Factor group (finite built-in)")
      ->capture_default_str();
  pa_cmd->add_option("--a-seq", pa_seq, "Exponent sequence: const | 2^-i")
      ->check(CLI::IsMember({"const", "2^-i"}))
      ->capture_default_str();
  pa_cmd->add_option("--a", pa_a, "Exponent for --a-seq const")->capture_default_str();
  pa_cmd->add_option("--a-list", pa_list, "Comma-separated exponents (overrides --a-seq)");
  pa_cmd->add_option("--max-terms", pa_max_terms)->capture_default_str();
  pa_cmd->add_option("--tol", pa_tol)->capture_default_str();
  add_output_flags(pa_cmd, pa_out);

  // arens-scan
  auto* scan_cmd = app.add_subcommand("arens-scan", "Theta-norm truncation scan");
  WeightArgs scan_w;
  int scan_trunc = 20, scan_tail = 10;
  double scan_threshold = 0.05;
  Output scan_out;
  scan_cmd->add_option("--group", group)->required();
  scan_w.add_flags(scan_cmd);
  scan_cmd->add_option("--trunc", scan_trunc)->capture_default_str();
  scan_cmd->add_option("--tail-start", scan_tail)->capture_default_str();
  scan_cmd->add_option("--threshold", scan_threshold)->capture_default_str();
  add_output_flags(scan_cmd, scan_out);

  // point-deriv
  auto* pd_cmd = app.add_subcommand("point-deriv", "Point-derivation obstruction sequence");
  WeightArgs pd_w;
  std::string pd_pi;
  int pd_n = 1000;
  Output pd_out;
  pd_cmd->add_option("--group", group)->required();
  pd_w.add_flags(pd_cmd);
  pd_cmd->add_option("--pi", pd_pi, "Irrep label to take powers of")->required();
  pd_cmd->add_option("--N", pd_n, "Number of tensor powers")->capture_default_str();
  add_output_flags(pd_cmd, pd_out);

  // line-check
  auto* line_cmd = app.add_subcommand("line-check", "Submultiplicativity of a line weight");
  std::string line_weight = "tau_a", line_grid = "-10:0.5:10";
  double line_a = 1.0;
  Output line_out;
  line_cmd->add_option("--weight", line_weight, "tau_a or a line-weight .json")
      ->capture_default_str();
  line_cmd->add_option("--a", line_a, "Exponent for tau_a")->capture_default_str();
  line_cmd->add_option("--grid", line_grid, "lo:step:hi")->capture_default_str();
  add_output_flags(line_cmd, line_out);

  // catalog
  auto* cat_cmd = app.add_subcommand("catalog", "List built-in groups and weight families");
  Output cat_out;
  add_output_flags(cat_cmd, cat_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (fuse_cmd->parsed()) return run_fuse(load_group(group), fuse_a, fuse_b, fuse_out);

    if (check_cmd->parsed()) {
      auto dual = load_group(group);
      return run_check_weight(dual, check_w.build(dual), check_trunc, check_out);
    }

    if (sym_cmd->parsed()) {
      auto dual = load_group(group);
      return run_symmetrize(dual, sym_w.build(dual), sym_out);
    }

    if (restr_cmd->parsed()) {
      auto dual = load_group(group);
      bfa::Weight w = restr_w.build(dual);
      Json j;
      j["command"] = "restrict";
      attach_group(j, dual);
      std::string human;
      if (dual->kind() == bfa::DualTable::Kind::Su2) {
        auto r = bfa::restrict_su2_to_torus(
            w, restr_trunc > 0 ? std::optional<int>(restr_trunc) : std::nullopt, restr_max_n);
        j["subgroup"] = "torus";
        j["exact"] = r.exact;
        if (!r.exact) j["truncation_t"] = r.truncation_t;
        j["weight"] = bfa::weight_to_json(r.weight);
        human = std::string("restriction to the circle (") +
                (r.exact ? "closed form" : "upper bound, truncation t <= " +
                                               std::to_string(r.truncation_t)) +
                ")\n";
        for (int n = 0; n <= 6; ++n)
          human += "  n=" + std::to_string(n) + " -> " +
                   std::to_string(r.weight.eval(bfa::IrrepLabel::torus(n))) + "\n";
      } else {
        if (subgroup.empty())
          throw bfa::InputError("finite restriction needs --subgroup");
        auto h_dual = load_group(subgroup);
        std::vector<int> embedding;
        if (!embedding_csv.empty()) {
          std::stringstream ss(embedding_csv);
          std::string tok;
          while (std::getline(ss, tok, ',')) embedding.push_back(std::stoi(tok));
        } else if (dual->name() == "s3" && subgroup == "z3") {
          embedding = {0, 2, 2};
        } else if (dual->name() == "s3" && subgroup == "z2") {
          embedding = {0, 1};
        } else {
          throw bfa::InputError("no built-in embedding for " + subgroup + " in " +
                                dual->name() + "; pass --embedding");
        }
        bfa::Weight r = bfa::restrict_finite(w, dual->table(), h_dual->table(), embedding,
                                             h_dual);
        j["subgroup"] = h_dual->name();
        j["exact"] = true;
        j["weight"] = bfa::weight_to_json(r);
        human = "restriction to " + h_dual->name() + "\n";
        for (const auto& tau : h_dual->enumerate_first(8))
          human += "  " + h_dual->label_name(tau) + " -> " + std::to_string(r.eval(tau)) + "\n";
      }
      restr_out.emit(j, human);
      return 0;
    }

    if (norm_cmd->parsed()) {
      auto dual = load_group(group);
      return run_norm(dual, norm_w.build(dual), norm_kind, norm_n, norm_function, norm_coeffs,
                      norm_delta_e, norm_out);
    }

    if (amen_cmd->parsed()) {
      auto dual = load_group(group);
      bfa::Weight w = amen_w.build(dual);
      double c = bfa::amen_constant(dual, w);
      Json j;
      j["command"] = "amen-constant";
      attach_group(j, dual);
      j["weight"] = bfa::weight_to_json(w);
      j["constant"] = bfa::num(c);
      amen_out.emit(j, "operator amenability constant = " + std::to_string(c) + "\n");
      return 0;
    }

    if (pa_cmd->parsed()) {
      auto factor_dual = load_group(pa_group);
      std::vector<double> exponents;
      if (!pa_list.empty()) {
        std::stringstream ss(pa_list);
        std::string tok;
        while (std::getline(ss, tok, ',')) exponents.push_back(std::stod(tok));
      } else if (pa_seq == "2^-i") {
        for (int i = 1; i <= pa_max_terms; ++i) exponents.push_back(std::pow(2.0, -i));
      } else {
        exponents.assign(pa_max_terms, pa_a);
      }
      std::vector<std::pair<bfa::DualPtr, bfa::Weight>> factors;
      for (double a : exponents)
        factors.emplace_back(factor_dual, bfa::Weight::omega_a(factor_dual, a));
      auto r = bfa::product_amen(factors, pa_tol, static_cast<std::size_t>(pa_max_terms));
      Json j;
      j["command"] = "product-amen";
      j["factor_group"] = factor_dual->name();
      j["terms_used"] = r.terms_used;
      j["verdict"] =
          r.verdict == bfa::ProductAmenVerdict::Convergent ? "convergent" : "divergent-or-slow";
      j["constant_estimate"] = bfa::num(r.constant_estimate);
      j["partial_products"] = Json::array();
      for (double p : r.partial_products) j["partial_products"].push_back(bfa::num(p));
      std::string human = "M = " + std::to_string(r.constant_estimate) + " after " +
                          std::to_string(r.terms_used) + " terms (" +
                          j["verdict"].get<std::string>() + ")\n";
      pa_out.emit(j, human);
      return 0;
    }

    if (scan_cmd->parsed()) {
      auto dual = load_group(group);
      bfa::Weight w = scan_w.build(dual);
      auto r = bfa::arens_scan(w, static_cast<std::size_t>(scan_trunc),
                               static_cast<std::size_t>(scan_tail), scan_threshold);
      Json j;
      j["command"] = "arens-scan";
      attach_group(j, dual);
      j["weight"] = bfa::weight_to_json(w);
      j["report"] = bfa::scan_to_json(*dual, r);
      std::string human = std::string("verdict: ") +
                          paint(bfa::verdict_name(r.verdict),
                                r.verdict == bfa::ScanVerdict::SufficientConditionMet) +
                          "\n";
      human += "row tail sup (last): " + std::to_string(r.row_tail_sup.back()) + "\n";
      if (r.has_closed_form)
        human += "closed-form row limit (last): " + std::to_string(r.closed_form_row.back()) +
                 "\n";
      scan_out.emit(j, human);
      return r.verdict == bfa::ScanVerdict::NotMetOnTruncation ? 1 : 0;
    }

    if (pd_cmd->parsed()) {
      auto dual = load_group(group);
      bfa::Weight w = pd_w.build(dual);
      auto seq = bfa::point_deriv_obstruction(w, dual->parse_label(pd_pi),
                                              static_cast<std::size_t>(pd_n));
      Json j;
      j["command"] = "point-deriv";
      attach_group(j, dual);
      j["weight"] = bfa::weight_to_json(w);
      j["pi"] = dual->label_name(seq.pi);
      j["N"] = pd_n;
      j["running_min"] = bfa::num(seq.running_min.back());
      j["final_value"] = bfa::num(seq.values.back());
      Json head = Json::array();
      for (std::size_t i = 0; i < seq.values.size() && i < 16; ++i)
        head.push_back(bfa::num(seq.values[i]));
      j["first_values"] = head;
      pd_out.emit(j, "running min of n(w, pi^n)/n after N=" + std::to_string(pd_n) + ": " +
                         std::to_string(seq.running_min.back()) + "\n");
      return 0;
    }

    if (line_cmd->parsed()) {
      bfa::LineWeight w = line_weight.find(".json") != std::string::npos
                              ? bfa::line_weight_from_json(bfa::load_json_file(line_weight))
                              : bfa::LineWeight::tau_a(line_a);
      if (line_weight.find(".json") == std::string::npos && line_weight != "tau_a")
        throw bfa::InputError("unknown line weight '" + line_weight + "'");
      double lo, step, hi;
      if (std::sscanf(line_grid.c_str(), "%lf:%lf:%lf", &lo, &step, &hi) != 3)
        throw bfa::InputError("grid must be lo:step:hi");
      auto grid = bfa::uniform_grid(lo, step, hi);
      auto report = bfa::verify_line_weight(w, grid);
      Json j;
      j["command"] = "line-check";
      j["weight"] = bfa::line_weight_to_json(w);
      j["report"] = bfa::line_report_to_json(report);
      std::string human = "checked " + std::to_string(report.checked_pairs) + " pairs: ";
      human += report.ok()
                   ? paint("no violations", true)
                   : paint(std::to_string(report.violations.size()) + " violations", false);
      human += "\n";
      if (report.extrapolated_sums > 0)
        human += "warning: " + std::to_string(report.extrapolated_sums) +
                 " sums fell past the sample range and used the boundary value\n";
      line_out.emit(j, human);
      return report.ok() ? 0 : 1;
    }

    if (cat_cmd->parsed()) {
      Json j;
      j["command"] = "catalog";
      j["groups"] = Json::array({"su2", "torus", "s3", "zN (any N >= 1)",
                                 "products joined with x, e.g. s3xz2, s3xs3, su2xsu2",
                                 "character table .json files (finite groups)"});
      j["matrix_models"] = Json::array({"s3", "zN", "finite products of these"});
      j["weights"] = Json::array({"trivial", "omega_a (d^a)", "sigma_a ((1+ln d)^a)",
                                  "rho_b (e^{d^b}, su2/torus)", "exp_dim_b (e^{d^b}, checked)",
                                  "table (.json descriptor)", "product", "cross",
                                  "symmetrized"});
      std::string human;
      human += "groups:  su2, torus, s3, zN, products with x (s3xz2, su2xsu2, ...),\n";
      human += "         or a character-table .json\n";
      human += "weights: trivial | omega_a | sigma_a | rho_b | exp_dim_b (--a/--b),\n";
      human += "         or a descriptor .json (table/product/cross/symmetrized)\n";
      cat_out.emit(j, human);
      return 0;
    }
  } catch (const bfa::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bfa::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bfa::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
