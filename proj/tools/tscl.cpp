// Command-line front end: exact rotation numbers, quasimorphism values, and
// stable commutator length in central extensions of Thompson's group T.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "tscl/central_extension.hpp"
#include "tscl/io.hpp"
#include "tscl/realize.hpp"
#include "tscl/rotation.hpp"
#include "tscl/tree_pair.hpp"
#include "tscl/verify.hpp"
#include "tscl/word.hpp"

namespace {

struct RunConfig {
  long long budget = 64;
  long long denom_cap = 1048576;  // 2^20
  bool json_out = false;
  std::uint64_t seed = 1;

  tscl::SearchLimits limits() const {
    return tscl::SearchLimits{budget, tscl::Int(denom_cap)};
  }
};

struct ElementArgs {
  std::string file;
  std::string tree;
  std::string expr;
  CLI::Option* file_opt = nullptr;
  CLI::Option* tree_opt = nullptr;
  CLI::Option* expr_opt = nullptr;

  void attach(CLI::App* cmd) {
    file_opt = cmd->add_option("--element", file, "element JSON file (breakpoints format)");
    tree_opt = cmd->add_option("--tree", tree, "tree-pair string 'domainBits | rangeBits | r'");
    expr_opt = cmd->add_option("--expr", expr, "word in the builtin generators id, A, B, R");
  }

  tscl::CanonicalLift resolve() const {
    int given = (file_opt->count() > 0) + (tree_opt->count() > 0) + (expr_opt->count() > 0);
    if (given != 1)
      throw tscl::ParseError("provide exactly one of --element, --tree, --expr");
    if (file_opt->count() > 0) return tscl::element_from_file(file);
    if (tree_opt->count() > 0) return tscl::to_plmap(tscl::parse_tree_pair(tree));
    return tscl::element_from_text(expr);
  }
};

tscl::Int parse_int_arg(const std::string& text, const char* what) {
  std::string_view s = text;
  bool neg = !s.empty() && s[0] == '-';
  std::string_view digits = neg ? s.substr(1) : s;
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
    throw tscl::ParseError(std::string("invalid integer for ") + what + ": '" + text + "'");
  tscl::Int v(text);
  return v;
}

tscl::GeneratorTable resolve_table(const std::string& group, const std::string& table_path,
                                   bool table_given) {
  tscl::GeneratorTable table;
  if (group.rfind("tn:", 0) == 0) {
    tscl::Int n = parse_int_arg(group.substr(3), "--group tn:<n>");
    table = tscl::builtin_table_for_level(n);
  } else {
    table = tscl::builtin_table(group);
  }
  if (table_given) {
    tscl::GeneratorTable custom = tscl::table_from_file(table_path);
    if (custom.n != table.n)
      throw tscl::LevelMismatchError("table file is at n=" + custom.n.str() +
                                     " but the group is at n=" + table.n.str());
    for (auto& [name, img] : custom.images) table.images.insert_or_assign(name, img);
    for (auto& r : custom.relators) table.relators.push_back(r);
  }
  return table;
}

void print_value(const RunConfig& cfg, const tscl::Rational& v) {
  if (cfg.json_out) {
    nlohmann::json out{{"value", tscl::to_string(v)}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << tscl::to_string(v) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact rotation numbers, quasimorphisms, and stable commutator length in "
      "central extensions of Thompson's group T"};
  app.fallthrough();
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--budget", cfg.budget, "mediant steps allowed in the rotation-number search")
      ->capture_default_str();
  app.add_option("--denom-cap", cfg.denom_cap,
                 "largest denominator tried by the rotation-number search")
      ->capture_default_str();
  app.add_flag("--json", cfg.json_out, "emit JSON instead of plain text");
  app.add_option("--seed", cfg.seed, "seed for the verify sample stream")->capture_default_str();

  // rot
  auto* rot = app.add_subcommand("rot", "exact rotation (translation) number of an element");
  ElementArgs rot_elem;
  rot_elem.attach(rot);
  bool rot_cert = false;
  rot->add_flag("--certificate", rot_cert, "also print the periodic-point witness");

  // phi
  auto* phi_cmd = app.add_subcommand("phi", "quasimorphism value phi_n(t, j) = j + n tau(t)");
  ElementArgs phi_elem;
  phi_elem.attach(phi_cmd);
  std::string phi_n, phi_j = "0";
  phi_cmd->add_option("--n", phi_n, "extension level (non-zero integer)")->required();
  phi_cmd->add_option("--j", phi_j, "central coordinate (use --j=-6 for negatives)")
      ->capture_default_str();

  // scl
  auto* scl_cmd = app.add_subcommand("scl", "stable commutator length of a word");
  std::string scl_group, scl_word, scl_table;
  scl_cmd->add_option("--group", scl_group, "t-star, t-sharp, or tn:<n>")->required();
  scl_cmd->add_option("--word", scl_word, "word over the table's generators")->required();
  auto* scl_table_opt = scl_cmd->add_option("--table", scl_table, "generator table JSON file");

  // realize
  auto* rlz = app.add_subcommand("realize", "construct an element of T_n with a prescribed scl");
  std::string rlz_q, rlz_emit;
  long long rlz_n = 0;
  rlz->add_option("--q", rlz_q, "target scl, a non-negative rational a/b")->required();
  rlz->add_option("--n", rlz_n, "extension level (non-zero integer)")->required();
  auto* rlz_emit_opt = rlz->add_option("--emit", rlz_emit, "write the element JSON to a file");

  // verify
  auto* ver = app.add_subcommand("verify", "run the property-verification suites");
  std::string ver_suite = "all";
  long long ver_samples = 50;
  ver->add_option("--suite", ver_suite, "arith|plmap|dynamics|extension|word|realizer|all")
      ->capture_default_str();
  ver->add_option("--samples", ver_samples, "samples per property")->capture_default_str();

  // compose
  auto* cmp = app.add_subcommand("compose", "evaluate an element expression and print its JSON");
  ElementArgs cmp_elem;
  cmp_elem.attach(cmp);

  // eval
  auto* evl = app.add_subcommand("eval", "evaluate an element at a rational point");
  ElementArgs evl_elem;
  evl_elem.attach(evl);
  std::string evl_at;
  evl->add_option("--at", evl_at, "evaluation point, a rational")->required();

  // check-table
  auto* chk = app.add_subcommand("check-table", "evaluate a table's relators");
  std::string chk_table;
  chk->add_option("--table", chk_table, "generator table JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: parse: " << e.what() << "\n";
    return 2;
  }

  try {
    const tscl::SearchLimits limits = cfg.limits();

    if (rot->parsed()) {
      tscl::CanonicalLift f = rot_elem.resolve();
      tscl::RotationCertificate cert = tscl::translation_number(f.lift(), limits);
      if (cfg.json_out) {
        nlohmann::json out{{"value", tscl::to_string(cert.value)}};
        if (rot_cert)
          out["certificate"] = {{"witness", tscl::to_string(cert.witness)},
                                {"p", cert.value.numerator().str()},
                                {"q", cert.value.denominator().str()},
                                {"iterations", cert.iterations}};
        std::cout << out.dump() << "\n";
      } else {
        std::cout << tscl::to_string(cert.value) << "\n";
        if (rot_cert)
          std::cout << "witness: x=" << tscl::to_string(cert.witness)
                    << " q=" << cert.value.denominator().str()
                    << " p=" << cert.value.numerator().str()
                    << " iterations=" << cert.iterations << "\n";
      }
      return 0;
    }

    if (phi_cmd->parsed()) {
      tscl::Int n = parse_int_arg(phi_n, "--n");
      if (n == 0) throw tscl::ParseError("--n must be non-zero");
      tscl::Int j = parse_int_arg(phi_j, "--j");
      print_value(cfg, tscl::phi(n, phi_elem.resolve(), j, limits));
      return 0;
    }

    if (scl_cmd->parsed()) {
      tscl::GeneratorTable table =
          resolve_table(scl_group, scl_table, scl_table_opt->count() > 0);
      print_value(cfg, tscl::scl_of_word(tscl::parse_word(scl_word), table, limits));
      return 0;
    }

    if (rlz->parsed()) {
      if (rlz_n == 0) throw tscl::ParseError("--n must be non-zero");
      tscl::RealizationCertificate cert =
          tscl::realize_scl(tscl::parse_rational(rlz_q), tscl::Int(rlz_n), limits);
      nlohmann::json elem = tscl::tn_to_json(cert.element);
      if (rlz_emit_opt->count() > 0) {
        std::ofstream out(rlz_emit);
        if (!out) throw tscl::ParseError("cannot write file '" + rlz_emit + "'");
        out << elem.dump(2) << "\n";
      }
      if (cfg.json_out) {
        nlohmann::json out{{"target", tscl::to_string(cert.target)},
                           {"phi", tscl::to_string(cert.verified_phi)},
                           {"scl", tscl::to_string(cert.verified_scl)},
                           {"element", elem}};
        std::cout << out.dump() << "\n";
      } else {
        std::cout << "target: " << tscl::to_string(cert.target) << "\n"
                  << "element: " << elem.dump() << "\n"
                  << "phi: " << tscl::to_string(cert.verified_phi) << "\n"
                  << "scl: " << tscl::to_string(cert.verified_scl) << "\n";
      }
      return 0;
    }

    if (ver->parsed()) {
      if (ver_samples < 0) throw tscl::ParseError("--samples must be >= 0");
      if (ver_samples == 0)
        std::cerr << "warning: samples=0, property checks are vacuous\n";
      std::vector<tscl::PropertyResult> results =
          tscl::run_suite(ver_suite, ver_samples, cfg.seed, limits);
      bool all_pass = true;
      for (const auto& r : results) all_pass = all_pass && r.pass;
      if (cfg.json_out) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : results)
          arr.push_back({{"suite", r.suite}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        std::cout << nlohmann::json{{"results", arr}, {"pass", all_pass}}.dump() << "\n";
      } else {
        long long passed = 0;
        for (const auto& r : results) {
          if (r.pass) {
            std::cout << "PASS " << r.suite << "." << r.name << "\n";
            ++passed;
          } else {
            std::cout << "FAIL " << r.suite << "." << r.name << ": " << r.detail << "\n";
          }
        }
        std::cout << passed << "/" << results.size() << " properties passed (suite="
                  << ver_suite << ", samples=" << ver_samples << ", seed=" << cfg.seed
                  << ")\n";
      }
      return all_pass ? 0 : 1;
    }

    if (cmp->parsed()) {
      std::cout << tscl::lift_to_json(cmp_elem.resolve()).dump() << "\n";
      return 0;
    }

    if (evl->parsed()) {
      print_value(cfg, evl_elem.resolve()(tscl::parse_rational(evl_at)));
      return 0;
    }

    if (chk->parsed()) {
      tscl::GeneratorTable table = tscl::table_from_file(chk_table);
      std::vector<std::string> failed = tscl::verify_relations(table);
      if (cfg.json_out) {
        std::cout << nlohmann::json{{"failed", failed}}.dump() << "\n";
      } else if (failed.empty()) {
        std::cout << "ok: all " << table.relators.size() << " relators hold\n";
      } else {
        for (const auto& r : failed) std::cout << "failed: " << r << "\n";
      }
      return failed.empty() ? 0 : 1;
    }
  } catch (const tscl::ParseError& e) {
    std::cerr << "error: parse: " << e.what() << "\n";
    return 2;
  } catch (const tscl::BudgetError& e) {
    std::cerr << "error: budget: " << e.what() << "\n";
    return 3;
  } catch (const tscl::LevelMismatchError& e) {
    std::cerr << "error: level-mismatch: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
