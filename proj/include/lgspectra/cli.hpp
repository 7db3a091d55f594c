#pragma once

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "lgspectra/verify.hpp"

namespace lgs {

// Exit codes: 0 all verdicts pass, 1 a verdict failed, 2 bad input.
inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
  CLI::App app{"symbolic-numeric verification engine for Landau-Ginzburg pairs (W, <J>)"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  bool as_json = false;
  long precision = 128;
  double tol = 1e-9;
  long threads = static_cast<long>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  std::string out_path;
  app.add_flag("--json", as_json, "emit the report as JSON on stdout");
  app.add_option("--precision", precision, "working precision in bits")->capture_default_str();
  app.add_option("--tol", tol, "relative tolerance for spectrum verdicts")
      ->capture_default_str();
  app.add_option("--threads", threads, "worker threads for grid evaluations");
  app.add_option("--out", out_path, "also write the report to this path");

  std::string input;
  long ell = 0;
  std::string x_grid_text = "25,50,100,200";

  auto* info = app.add_subcommand("info", "Nar, Mir, nu, c_hat, tau, T");
  info->add_option("input", input, "weight system d;w1,...,wN or family tag")->required();

  auto* hyper = app.add_subcommand("hypergeom", "p, q, alpha, rho, theta and identities");
  hyper->add_option("input", input)->required();

  auto* gram = app.add_subcommand("gram", "a(n), Gram matrix, inverse, Stokes data");
  gram->add_option("input", input)->required();

  auto* gamma = app.add_subcommand("gamma", "Chern vector, Gamma class, asymptotic class");
  gamma->add_option("input", input)->required();
  gamma->add_option("--ell", ell, "twist index")->capture_default_str();

  auto* spectrum = app.add_subcommand("spectrum", "quantum algebra eigenvalues and verdicts");
  spectrum->add_option("family", input, "family tag (A:n, DT:n, E6, E7, E8, Fermat:d,N)")
      ->required();

  auto* asym = app.add_subcommand("asymptotics", "Barnes combination ratios on an x-grid");
  asym->add_option("input", input)->required();
  asym->add_option("--ell", ell, "ray index, 1 - nu <= ell <= 0")->capture_default_str();
  asym->add_option("--x-grid", x_grid_text, "comma-separated x values")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run every applicable check");
  verify->add_option("input", input)->required();

  std::vector<const char*> argv;
  argv.push_back("lgspectra");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  if (precision < 64) precision = 64;

  try {
    Report rep(input);
    if (info->parsed()) {
      auto ws = parse_input(input);
      add_info_sections(rep, ws, precision);
    } else if (hyper->parsed()) {
      auto ws = parse_input(input);
      if (ws.nu <= 0) throw NotGeneralType("hypergeom needs nu > 0");
      add_hypergeom_sections(rep, ws);
    } else if (gram->parsed()) {
      auto ws = parse_input(input);
      if (ws.nu <= 0) throw NotGeneralType("gram needs nu > 0");
      add_gram_sections(rep, ws);
    } else if (gamma->parsed()) {
      auto ws = parse_input(input);
      add_gamma_sections(rep, ws, ell, precision);
    } else if (spectrum->parsed()) {
      auto fam = report_detail::try_family(input);
      if (!fam)
        throw InvalidParameter("spectrum needs a named family; quantum fixtures exist "
                               "for A:n, DT:n, E6, E7, E8, Fermat:d,N");
      add_spectrum_sections(rep, *fam, precision, tol);
    } else if (asym->parsed()) {
      auto ws = parse_input(input);
      if (ws.nu <= 0) throw NotGeneralType("asymptotics needs nu > 0");
      std::vector<long> grid;
      std::string tok;
      std::istringstream is(x_grid_text);
      while (std::getline(is, tok, ',')) grid.push_back(std::stol(tok));
      add_asymptotics_sections(rep, ws, ell, grid, precision, threads);
    } else if (verify->parsed()) {
      VerifyOptions opt;
      opt.precision = precision;
      opt.tol = tol;
      opt.threads = threads;
      rep = verify_report(input, opt);
    }

    std::string rendered = as_json ? rep.to_json_string() : rep.to_text();
    out << rendered;
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      f << rendered;
    }
    return rep.all_pass() ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const NotGeneralType& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace lgs
