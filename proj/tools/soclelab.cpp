// Command-line front end: spec validation, single-value computations on any
// of the three models, theorem-suite execution with JSON/markdown reports,
// and deterministic spec generation for the stock families.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "soclelab/barnes.hpp"
#include "soclelab/error.hpp"
#include "soclelab/fredholm.hpp"
#include "soclelab/ideal.hpp"
#include "soclelab/module.hpp"
#include "soclelab/polymodel.hpp"
#include "soclelab/specfile.hpp"
#include "soclelab/suites.hpp"

namespace {

using namespace soclelab;

std::string len_str(const LengthValue& v) {
  return v.is_finite() ? std::to_string(v.value()) : "inf";
}

std::string zeta_str(const std::optional<long long>& z) {
  return z ? std::to_string(*z) : "undefined";
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

int inapplicable(const std::string& op, const std::string& model) {
  std::cerr << "op '" << op << "' is not applicable to the " << model << " model\n";
  return 2;
}

int cmd_validate(const std::string& path) {
  try {
    SpecFile s = load_spec(path);
    switch (s.model) {
      case SpecFile::Model::FinDim:
        std::cout << "valid: algebra " << s.algebra->name() << ", dim " << s.algebra->dim()
                  << ", over " << s.field.to_string()
                  << (s.algebra->has_involution() ? ", with involution" : "") << "\n";
        break;
      case SpecFile::Model::Barnes:
        std::cout << "valid: scalar-plus-block model over " << s.field.to_string() << "\n";
        break;
      case SpecFile::Model::Poly:
        std::cout << "valid: polynomial model over " << s.field.to_string() << "\n";
        break;
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    const auto& w = e.witness();
    if (w[0] >= 0 || w[1] >= 0 || w[2] >= 0) {
      std::cerr << "witness indices: (" << w[0] << ", " << w[1] << ", " << w[2] << ")\n";
    }
    return 2;
  }
}

int compute_findim(const SpecFile& s, const std::string& op, const std::string& ref) {
  Element a(s.algebra, resolve_findim_element(s, ref));
  if (op == "xi_l") std::cout << len_str(xi_l(a)) << "\n";
  else if (op == "xi_r") std::cout << len_str(xi_r(a)) << "\n";
  else if (op == "rho_l") std::cout << len_str(rho_l(a)) << "\n";
  else if (op == "rho_r") std::cout << len_str(rho_r(a)) << "\n";
  else if (op == "zeta_l") std::cout << zeta_str(zeta_l(a)) << "\n";
  else if (op == "zeta_r") std::cout << zeta_str(zeta_r(a)) << "\n";
  else if (op == "is_fredholm") std::cout << bool_str(is_fredholm(a)) << "\n";
  else if (op == "is_semi_plus") std::cout << bool_str(is_semi_plus(a)) << "\n";
  else if (op == "is_semi_minus") std::cout << bool_str(is_semi_minus(a)) << "\n";
  else if (op == "delta") std::cout << delta(principal_left(a)) << "\n";
  else if (op == "order") std::cout << len_str(order(principal_left(a))) << "\n";
  else if (op == "length")
    std::cout << len_str(composition_length(FDModule::ideal_as_module(principal_left(a))))
              << "\n";
  else if (op == "witness") {
    FredholmIdealResult r = is_fredholm_ideal(principal_left(a));
    if (r.fredholm) std::cout << "p = " << vec_to_string(r.witness->p.coords()) << "\n";
    else std::cout << "not-fredholm: " << r.violated << "\n";
  } else {
    return inapplicable(op, "findim");
  }
  return 0;
}

int compute_barnes(const SpecFile& s, const std::string& op, const std::string& ref) {
  BarnesElement a = resolve_barnes_element(s, ref);
  if (op == "xi_l") std::cout << len_str(b_xi_l(a)) << "\n";
  else if (op == "xi_r") std::cout << len_str(b_xi_r(a)) << "\n";
  else if (op == "rho_l") std::cout << len_str(b_rho_l(a)) << "\n";
  else if (op == "rho_r") std::cout << len_str(b_rho_r(a)) << "\n";
  else if (op == "zeta_l") std::cout << zeta_str(b_zeta_l(a)) << "\n";
  else if (op == "zeta_r") std::cout << zeta_str(b_zeta_r(a)) << "\n";
  else if (op == "is_fredholm") std::cout << bool_str(b_is_fredholm(a)) << "\n";
  else if (op == "is_semi_plus" || op == "is_semi_minus")
    std::cout << bool_str(b_is_fredholm(a)) << "\n";  // quotient is a field: all agree
  else if (op == "witness") std::cout << "p = " << b_fredholm_witness(a).to_string() << "\n";
  else return inapplicable(op, "barnes");
  return 0;
}

int compute_poly(const SpecFile& s, const std::string& op, const std::string& ref) {
  Poly f = resolve_poly_element(s, ref);
  if (op == "xi_l" || op == "xi_r") std::cout << len_str(p_xi(f)) << "\n";
  else if (op == "rho_l" || op == "rho_r") std::cout << len_str(p_rho(f)) << "\n";
  else if (op == "zeta_l" || op == "zeta_r") std::cout << zeta_str(p_zeta(f)) << "\n";
  else if (op == "is_fredholm" || op == "is_semi_plus" || op == "is_semi_minus")
    std::cout << bool_str(p_is_fredholm(f)) << "\n";  // commutative: all three agree
  else return inapplicable(op, "poly");
  return 0;
}

int cmd_compute(const std::string& path, const std::string& op, const std::string& ref) {
  try {
    SpecFile s = load_spec(path);
    switch (s.model) {
      case SpecFile::Model::FinDim: return compute_findim(s, op, ref);
      case SpecFile::Model::Barnes: return compute_barnes(s, op, ref);
      case SpecFile::Model::Poly: return compute_poly(s, op, ref);
    }
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  return static_cast<bool>(out);
}

std::string markdown_path_for(const std::string& json_path) {
  const std::string suffix = ".json";
  if (json_path.size() > suffix.size() &&
      json_path.compare(json_path.size() - suffix.size(), suffix.size(), suffix) == 0) {
    return json_path.substr(0, json_path.size() - suffix.size()) + ".md";
  }
  return json_path + ".md";
}

int cmd_suite(const std::string& name, std::uint64_t seed, const std::string& out) {
  std::vector<SuiteReport> reports;
  try {
    if (name == "all") {
      reports = run_all_suites(seed);
    } else if (is_suite_id(name)) {
      reports.push_back(run_suite(name, seed));
    } else {
      std::cerr << "unknown suite '" << name << "'; known: all";
      for (const std::string& id : suite_ids()) std::cerr << ", " << id;
      std::cerr << "\n";
      return 2;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  const std::string json = reports_to_json(reports);
  if (out.empty()) {
    std::cout << json;
  } else {
    const std::string md_path = markdown_path_for(out);
    if (!write_file(out, json) || !write_file(md_path, reports_to_markdown(reports))) {
      std::cerr << "cannot write report to " << out << "\n";
      return 2;
    }
    // Human-facing summary on stdout; the canonical JSON lives in the file.
    for (const SuiteReport& r : reports) {
      std::cout << r.suite << ": " << r.verdict << " (" << r.cases << " cases, " << r.skipped
                << " skipped, " << r.violations.size() << " violations)\n";
    }
    std::cout << "report: " << out << " and " << md_path << "\n";
  }
  return all_passed(reports) ? 0 : 1;
}

int cmd_gen(const std::string& family, std::size_t n, std::size_t m, const std::string& group,
            const std::string& field_text, const std::string& out) {
  try {
    FieldCtx f = parse_field(field_text);
    std::string text;
    if (family == "matrix") text = spec_for_matrix(n, f);
    else if (family == "product") text = spec_for_product(n, m, f);
    else if (family == "group") text = spec_for_group(group, f);
    else if (family == "triangular") text = spec_for_triangular(n, f);
    else {
      std::cerr << "unknown family '" << family << "'; known: matrix, product, group, triangular\n";
      return 2;
    }
    if (out.empty()) {
      std::cout << text;
      return 0;
    }
    if (!write_file(out, text)) {
      std::cerr << "cannot write spec to " << out << "\n";
      return 2;
    }
    std::cout << "wrote " << out << "\n";
    return 0;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("SOCLELAB_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) {
#ifdef _OPENMP
      omp_set_num_threads(n);
#endif
    }
  }

  CLI::App app{"exact socle/Fredholm calculus over finite-dimensional algebras, "
               "with scalar-plus-block and polynomial models"};
  app.require_subcommand(1);

  std::string v_path;
  CLI::App* validate = app.add_subcommand("validate", "parse and validate a spec file");
  validate->add_option("file", v_path, "spec file")->required();

  std::string c_path, c_op, c_ref;
  CLI::App* compute = app.add_subcommand("compute", "evaluate one quantity on one element");
  compute->add_option("file", c_path, "spec file")->required();
  compute->add_option("--op", c_op,
                      "xi_l|xi_r|rho_l|rho_r|zeta_l|zeta_r|delta|order|length|"
                      "is_fredholm|is_semi_plus|is_semi_minus|witness "
                      "(ideal-valued ops act on the principal left ideal of the element)")
      ->required();
  compute->add_option("--element", c_ref, "element name from the spec, or an inline literal")
      ->required();

  std::string s_name = "all";
  std::uint64_t s_seed = 42;
  std::string s_out;
  CLI::App* suite = app.add_subcommand("suite", "run theorem suites and write reports");
  suite->add_option("--name", s_name, "suite id or 'all'")->capture_default_str();
  suite->add_option("--seed", s_seed, "base seed; every case derives its own")
      ->capture_default_str();
  suite->add_option("--out", s_out, "JSON report path (markdown written alongside); "
                                    "stdout when omitted");

  std::string g_family, g_group = "s3", g_field = "GF(17)", g_out;
  std::size_t g_n = 2, g_m = 1;
  CLI::App* gen = app.add_subcommand("gen", "emit a deterministic spec for a stock family");
  gen->add_option("--family", g_family, "matrix|product|group|triangular")->required();
  gen->add_option("--n", g_n, "size of the (first) factor")->capture_default_str();
  gen->add_option("--m", g_m, "size of the second factor (product family)")
      ->capture_default_str();
  gen->add_option("--group", g_group, "c2..c8, klein, s3, d4, q8")->capture_default_str();
  gen->add_option("--field", g_field, "QQ or GF(p)")->capture_default_str();
  gen->add_option("--out", g_out, "output path; stdout when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems are exit 2 by contract
  }

  if (validate->parsed()) return cmd_validate(v_path);
  if (compute->parsed()) return cmd_compute(c_path, c_op, c_ref);
  if (suite->parsed()) return cmd_suite(s_name, s_seed, s_out);
  if (gen->parsed()) return cmd_gen(g_family, g_n, g_m, g_group, g_field, g_out);
  return 2;
}
