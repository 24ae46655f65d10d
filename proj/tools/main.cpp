#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "truncata/campaign.hpp"

using namespace truncata;

int main(int argc, char** argv) {
  CLI::App app{"truncata: exact verification of GKLO truncation and coproduct "
               "identities for sl2 Yangians and quantum affine algebras"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run a verification campaign");
  std::string algebra;
  verify->add_option("algebra", algebra, "yangian or qaffine")
      ->required()
      ->check(CLI::IsMember({"yangian", "qaffine"}));
  std::vector<std::string> checks, alphas, betas, alphas2, betas2, as, bs;
  std::vector<long> ns, ms;
  long order = 0;
  std::string convention, emit, out_path, config_path;
  bool run_all = false, timings = false;
  verify->add_option("--check", checks, "check names (repeatable)");
  verify->add_flag("--all", run_all, "run the full verification suite");
  verify->add_option("--alpha", alphas, "highest weights of the first factors");
  verify->add_option("--beta", betas, "shifts of the first factors");
  verify->add_option("--alpha2", alphas2, "highest weights of the second factors");
  verify->add_option("--beta2", betas2, "shifts of the second factors");
  verify->add_option("--n", ns, "dimensions minus one of the first factors");
  verify->add_option("--a", as, "spectral parameters of the first factors, e.g. 2*q^3");
  verify->add_option("--m", ms, "dimensions minus one of the second factors");
  verify->add_option("--b", bs, "spectral parameters of the second factors");
  verify->add_option("--order", order, "series window order N");
  verify->add_option("--convention", convention, "auto|paper|twisted")
      ->check(CLI::IsMember({"auto", "paper", "twisted"}));
  verify->add_option("--emit", emit, "json|text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", out_path, "write the report to this path");
  verify->add_option("--config", config_path, "flat key = value config file");
  verify->add_flag("--timings", timings, "include wall-clock times in json output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    CampaignConfig config;
    if (verify->count("--config")) config = load_config_file(config_path);
    config.algebra = algebra;
    if (verify->count("--check"))
      for (const auto& c : checks) config.checks.push_back(c);
    if (run_all) config.run_all = true;
    if (verify->count("--alpha")) {
      config.alphas.clear();
      for (const auto& s : alphas) config.alphas.push_back(Rational::from_string(s));
    }
    if (verify->count("--beta")) {
      config.betas.clear();
      for (const auto& s : betas) config.betas.push_back(Rational::from_string(s));
    }
    if (verify->count("--alpha2")) {
      config.alphas2.clear();
      for (const auto& s : alphas2) config.alphas2.push_back(Rational::from_string(s));
    }
    if (verify->count("--beta2")) {
      config.betas2.clear();
      for (const auto& s : betas2) config.betas2.push_back(Rational::from_string(s));
    }
    if (verify->count("--n")) config.ns = ns;
    if (verify->count("--m")) config.ms = ms;
    if (verify->count("--a")) {
      config.as.clear();
      for (const auto& s : as) config.as.push_back(RatFuncQ::parse(s));
    }
    if (verify->count("--b")) {
      config.bs.clear();
      for (const auto& s : bs) config.bs.push_back(RatFuncQ::parse(s));
    }
    // Order precedence: flag > config file > TRUNCATA_ORDER > default.
    if (verify->count("--order")) {
      config.order = order;
      config.order_explicit = true;
    } else if (!config.order_explicit) {
      if (const char* env = std::getenv("TRUNCATA_ORDER")) config.order = std::atol(env);
    }
    if (verify->count("--convention")) config.convention = convention;
    if (verify->count("--emit")) config.emit = emit;
    if (verify->count("--out")) config.out_path = out_path;
    if (timings) config.include_timings = true;

    const CampaignReport report = run_campaign(config);
    const std::string rendered =
        config.emit == "json" ? emit_json(report) : emit_text(report);
    if (!config.out_path.empty()) {
      std::ofstream out(config.out_path);
      if (!out) {
        std::cerr << "error: cannot write to '" << config.out_path << "'\n";
        return 2;
      }
      out << rendered;
    } else {
      std::cout << rendered;
    }
    return campaign_exit_code(report);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
