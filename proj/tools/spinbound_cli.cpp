// spinbound command line: `report` and `verify`.
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinbound/spinbound.h"

namespace {

int exit_for(sb_status s) {
  switch (s) {
    case SB_OK: return 0;
    case SB_ERR_NUMERIC:
    case SB_ERR_INTERNAL: return 1;
    default: return 2;
  }
}

int fail(sb_status s) {
  std::cerr << "spinbound: " << sb_last_error() << "\n";
  return exit_for(s);
}

int print(char* json, const std::string& format) {
  if (format == "json") {
    std::fputs(json, stdout);
    sb_string_free(json);
    return 0;
  }
  char* text = nullptr;
  const sb_status s = sb_format_text(json, &text);
  sb_string_free(json);
  if (s != SB_OK) return fail(s);
  std::fputs(text, stdout);
  sb_string_free(text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spinor curvature endomorphisms and Dirac eigenvalue lower bounds"};
  app.require_subcommand(1);

  std::string manifold, params, input, format = "json";
  bool chiral = false;
  sb_report_options ropt;
  sb_report_options_init(&ropt);

  CLI::App* report = app.add_subcommand("report", "bounds for a catalog manifold or curvature file");
  auto* m_opt = report->add_option("--manifold", manifold, "catalog id: sphere, flat, s2xs2, cp");
  report->add_option("--params", params, "catalog parameters, e.g. r1=1,r2=1")->needs(m_opt);
  auto* i_opt = report->add_option("--input", input, "curvature JSON file")->check(CLI::ExistingFile);
  m_opt->excludes(i_opt);
  report->add_flag("--chiral", chiral, "split nu0 and the Weyl bound by chirality (even n)");
  report->add_option("--restarts", ropt.restarts, "mu0 optimizer restarts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  report->add_option("--seed", ropt.seed, "random seed")->capture_default_str();
  report->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string suite = "all";
  std::vector<int> dims{4, 5, 6, 7};
  int trials = 200;
  uint64_t vseed = 1;
  std::string vformat = "json";
  CLI::App* verify = app.add_subcommand("verify", "randomized identity and consistency suites");
  verify->add_option("--suite", suite, "identities, grading, bounds-consistency or all")
      ->capture_default_str();
  verify->add_option("--dims", dims, "comma-separated dimensions")->delimiter(',');
  verify->add_option("--trials", trials, "random trials per dimension")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--seed", vseed, "random seed")->capture_default_str();
  verify->add_option("--format", vformat, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

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

  if (report->parsed()) {
    if (manifold.empty() == input.empty()) {
      std::cerr << "spinbound: report needs exactly one of --manifold or --input\n";
      return 2;
    }
    sb_curvature* c = nullptr;
    sb_status s = manifold.empty() ? sb_curvature_from_file(input.c_str(), &c)
                                   : sb_curvature_from_catalog(manifold.c_str(), params.c_str(), &c);
    if (s != SB_OK) return fail(s);
    ropt.chiral = chiral ? 1 : 0;
    char* json = nullptr;
    s = sb_report_run(c, &ropt, &json);
    sb_curvature_free(c);
    if (s != SB_OK) return fail(s);
    return print(json, format);
  }

  sb_verify_options vopt;
  sb_verify_options_init(&vopt);
  vopt.suite = suite.c_str();
  vopt.dims = dims.data();
  vopt.dim_count = dims.size();
  vopt.trials = trials;
  vopt.seed = vseed;
  char* json = nullptr;
  int passed = 0;
  const sb_status s = sb_verify_run(&vopt, &json, &passed);
  if (s != SB_OK) return fail(s);
  const int rc = print(json, vformat);
  if (rc != 0) return rc;
  if (!passed) std::cerr << "spinbound: some residuals exceed their tolerance\n";
  return passed ? 0 : 1;
}
