// Command-line front end: JSON on stdout, diagnostics on stderr.
// Exit status: 0 ok, 1 internal or verification failure, 2 bad input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "klk/curvature.hpp"
#include "klk/errors.hpp"
#include "klk/expr.hpp"
#include "klk/gray.hpp"
#include "klk/serialize.hpp"
#include "klk/space_forms.hpp"
#include "klk/valuations.hpp"
#include "klk/verify.hpp"

namespace {

using json = nlohmann::ordered_json;

struct InputError : klk::Error {
  using klk::Error::Error;
};

// "@path" reads a file, anything else is the literal text.
std::string read_arg(const std::string& s) {
  if (s.empty() || s[0] != '@') return s;
  std::ifstream in(s.substr(1));
  if (!in) throw InputError("cannot read '" + s.substr(1) + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

klk::GradedPoly rational_poly(const klk::ScalarPoly& p) {
  klk::GradedPoly out;
  for (const auto& [key, c] : p.terms()) {
    if (!c.is_rational()) throw InputError("coefficients must be rational here, got " + c.str());
    out.add(key.first, key.second, c.rational_value());
  }
  return out;
}

void emit(const std::string& json_text) { std::cout << json::parse(json_text).dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact hermitian integral geometry toolkit"};
  app.require_subcommand(1);

  int n = 2;
  std::string expr, basis = "monomial", input, to, what, suite = "all", nf, pair_x, pair_y;
  int k = 0, p = 0, a = 0, b = 0, samples = 5, degree = 0;
  std::uint64_t seed = 0;

  auto positive = CLI::PositiveNumber;

  auto* compute = app.add_subcommand("compute", "normal form of an expression in Val^{U(n)}");
  compute->add_option("--n", n, "complex dimension")->check(positive);
  compute->add_option("--expr", expr, "polynomial in s, t, pi, lambda")->required();
  compute->add_option("--basis", basis, "output basis")->check(CLI::IsMember({"monomial", "mu", "tau"}));

  auto* convert = app.add_subcommand("convert", "change coordinates of a valuation given as JSON");
  convert->add_option("--input", input, "JSON text or @file")->required();
  convert->add_option("--to", to, "target basis")->required()->check(CLI::IsMember({"monomial", "mu", "tau", "mu_lambda", "tau_lambda"}));

  auto* gray = app.add_subcommand("gray", "Gray algebra computations");
  gray->add_option("--n", n, "complex dimension")->check(positive);
  auto* gray_nf = gray->add_option("--nf", nf, "normal form of a rational polynomial in s, t");
  auto* gray_x = gray->add_option("--pair", pair_x, "left factor of the top-degree pairing");
  gray->add_option("--with", pair_y, "right factor of the top-degree pairing")->needs(gray_x);
  gray_nf->excludes(gray_x);

  auto* transfer = app.add_subcommand("transfer", "space-form transfer maps");
  transfer->add_option("--n", n, "complex dimension")->check(positive);
  transfer->add_option("--what", what, "quantity")
      ->required()
      ->check(CLI::IsMember({"r_mu", "r_tau", "r", "r_inverse", "J", "k_lambda", "sigma", "curved_monomial", "tau_lambda_monomials"}));
  transfer->add_option("--k", k, "degree index");
  transfer->add_option("--p", p, "second index");
  transfer->add_option("--a", a, "power of s (curved_monomial)");
  transfer->add_option("--b", b, "power of t (curved_monomial)");
  transfer->add_option("--input", input, "valuation JSON or @file (r, r_inverse, J, k_lambda)");

  auto* curv = app.add_subcommand("curv", "curvature measures");
  curv->add_option("--n", n, "complex dimension")->check(positive);
  curv->add_option("--what", what, "quantity")
      ->required()
      ->check(CLI::IsMember({"basis", "R_delta", "R_N", "glob", "glob_flat", "lk", "multiply", "kbar"}));
  curv->add_option("--k", k, "degree index");
  curv->add_option("--q", p, "second index");
  curv->add_option("--input", input, "CurvElement JSON or @file");
  curv->add_option("--expr", expr, "valuation factor for multiply");

  auto* table = app.add_subcommand("table", "CSV exports");
  table->add_option("--n", n, "complex dimension")->check(positive);
  table->add_option("--what", what, "table")->required()->check(CLI::IsMember({"gray_pairing", "module_fixture"}));
  table->add_option("--degree", degree, "degree for gray_pairing");

  auto* verify = app.add_subcommand("verify", "run an invariant battery");
  verify->add_option("--suite", suite, "suite")->check(CLI::IsMember(klk::suite_names()));
  verify->add_option("--n", n, "largest dimension")->check(positive);
  verify->add_option("--seed", seed, "seed for random draws");
  verify->add_option("--samples", samples, "random draws per check")->check(positive);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*compute) {
      auto v = klk::val_normal_form(n, klk::parse_expression(expr));
      emit(klk::to_json(klk::basis_convert(v, klk::parse_flat_basis(basis))));
    } else if (*convert) {
      std::string text = read_arg(input);
      std::string tag = json::parse(text).at("basis").get<std::string>();
      if (tag == "mu_lambda" || tag == "tau_lambda") {
        if (to != "mu_lambda" && to != "tau_lambda") throw InputError("curved valuations convert only to mu_lambda/tau_lambda");
        emit(klk::to_json(klk::curved_convert(klk::curved_valuation_from_json(text), klk::parse_curved_basis(to))));
      } else {
        if (to == "mu_lambda" || to == "tau_lambda") throw InputError("use 'transfer --what r' to map into V^n_lambda");
        emit(klk::to_json(klk::basis_convert(klk::flat_valuation_from_json(text), klk::parse_flat_basis(to))));
      }
    } else if (*gray) {
      if (!nf.empty()) {
        emit(klk::to_json(klk::gray_normal_form(n, rational_poly(klk::parse_expression(nf))).poly));
      } else if (!pair_x.empty()) {
        auto x = rational_poly(klk::parse_expression(pair_x));
        auto y = rational_poly(klk::parse_expression(pair_y.empty() ? "1" : pair_y));
        std::cout << json{{"n", n}, {"pairing", klk::to_string(klk::gray_pairing(n, x, y))}}.dump(2) << "\n";
      } else {
        throw InputError("gray needs --nf or --pair");
      }
    } else if (*transfer) {
      if (what == "r_mu") emit(klk::to_json(klk::expand_r_mu(n, k, p)));
      else if (what == "r_tau") emit(klk::to_json(klk::expand_r_tau(n, k, p)));
      else if (what == "sigma") {
        json terms = json::array();
        const klk::ScalarPoly sigma = klk::sigma_lambda(n);
        for (const auto& [key, c] : sigma.terms())
          terms.push_back(json{{"s", key.first}, {"t", key.second}, {"value", json::parse(klk::to_json(c))}});
        std::cout << json{{"n", n}, {"curved_terms", terms}}.dump(2) << "\n";
      } else if (what == "curved_monomial") {
        emit(klk::to_json(klk::curved_monomial_to_muLambda(n, a, b)));
      } else if (what == "tau_lambda_monomials") {
        json terms = json::array();
        const klk::ScalarPoly poly = klk::tauLambda_in_curved_monomials(n, k, p);
        for (const auto& [key, c] : poly.terms())
          terms.push_back(json{{"s", key.first}, {"t", key.second}, {"value", json::parse(klk::to_json(c))}});
        std::cout << json{{"n", n}, {"curved_terms", terms}}.dump(2) << "\n";
      } else {
        if (input.empty()) throw InputError("--input is required for --what " + what);
        std::string text = read_arg(input);
        if (what == "r") emit(klk::to_json(klk::r_apply(klk::flat_valuation_from_json(text))));
        else if (what == "J") emit(klk::to_json(klk::J_lambda(klk::flat_valuation_from_json(text))));
        else if (what == "r_inverse") emit(klk::to_json(klk::r_inverse(klk::curved_valuation_from_json(text))));
        else emit(klk::to_json(klk::k_lambda(klk::curved_valuation_from_json(text))));
      }
    } else if (*curv) {
      if (what == "basis") {
        auto s = klk::curv_basis(n);
        json d = json::array(), nn = json::array();
        for (const auto& [kk, qq] : s.delta) d.push_back({kk, qq});
        for (const auto& [kk, qq] : s.N) nn.push_back({kk, qq});
        std::cout << json{{"n", n}, {"Delta", d}, {"N", nn}}.dump(2) << "\n";
      } else if (what == "R_delta") {
        emit(klk::to_json(klk::R_lambda_delta(n, k, p)));
      } else if (what == "R_N") {
        emit(klk::to_json(klk::R_lambda_N(n, k, p)));
      } else if (what == "lk") {
        emit(klk::to_json(klk::lk_measure(n, k)));
      } else {
        if (input.empty()) throw InputError("--input is required for --what " + what);
        auto x = klk::curv_element_from_json(read_arg(input));
        if (what == "glob") emit(klk::to_json(klk::glob_curved(x)));
        else if (what == "glob_flat") emit(klk::to_json(klk::glob_flat(x)));
        else {
          std::string warning;
          auto t = klk::module_table_from_env(&warning);
          if (!t) throw klk::ModuleUnavailableError(warning);
          if (what == "multiply") {
            auto phi = klk::val_normal_form(x.n, klk::parse_expression(expr.empty() ? "1" : expr));
            emit(klk::to_json(klk::module_multiply(phi, x, *t)));
          } else {
            emit(klk::to_json(klk::semi_local_kbar(x, *t)));
          }
        }
      }
    } else if (*table) {
      if (what == "gray_pairing") std::cout << klk::gray_pairing_csv(n, degree);
      else std::cout << klk::synthetic_module_table(n).to_csv();
    } else if (*verify) {
      klk::VerifyBounds bounds{n, seed, samples};
      if (!verify->count("--n")) bounds.n = 3;
      klk::Report r = klk::run_suite(suite, bounds);
      for (const auto& c : r.checks)
        if (c.status == klk::CheckStatus::Skip) std::cerr << "warning: " << c.id << " skipped: " << c.witness << "\n";
      std::cout << r.to_json() << "\n";
      return r.ok() ? 0 : 1;
    }
  } catch (const klk::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const klk::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const klk::DegreeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const klk::ModuleUnavailableError& e) {
    std::cerr << "module unavailable: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
