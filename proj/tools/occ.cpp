// occ: command line front end over the C interface.
//
// Exit status: 0 when every check passes, 1 when a check fails, 2 for
// usage or task file errors, 3 for computation errors.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "occ/occ.h"

namespace {

int error_exit(occ_status s) {
  std::cerr << "occ: " << occ_last_error() << "\n";
  return s == OCC_ERR_PARSE || s == OCC_ERR_INVALID_ARGUMENT ? 2 : 3;
}

int emit(occ_status s, occ_report *rep, bool json) {
  if (s != OCC_OK) return error_exit(s);
  char *text = nullptr;
  s = occ_report_render(rep, json ? 1 : 0, &text);
  int pass = occ_report_pass(rep);
  occ_report_free(rep);
  if (s != OCC_OK) return error_exit(s);
  std::fputs(text, stdout);
  occ_string_free(text);
  return pass ? 0 : 1;
}

int emit_series(occ_series *series, bool json) {
  char *text = nullptr;
  occ_status s = json ? occ_series_to_json(series, &text) : occ_series_to_string(series, &text);
  occ_series_free(series);
  if (s != OCC_OK) return error_exit(s);
  std::fputs(text, stdout);
  std::fputs("\n", stdout);
  occ_string_free(text);
  return 0;
}

std::vector<const char *> c_strings(const std::vector<std::string> &v) {
  std::vector<const char *> out;
  for (const auto &s : v) out.push_back(s.c_str());
  return out;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Oriented cobordism calculator"};
  app.set_version_flag("--version", std::string(occ_version()));
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit JSON instead of text");

  std::string task_file;
  auto *run = app.add_subcommand("run", "Run a task file");
  run->add_option("task-file", task_file, "Task file")->required()->check(CLI::ExistingFile);

  std::string suite;
  int trunc = 0;
  auto *check = app.add_subcommand("check", "Run a named identity suite");
  check->add_option("suite", suite, "fgl-axioms, whitney, pbf, cf, grr, fgl-theorem")
      ->required()
      ->check(CLI::IsMember({"fgl-axioms", "whitney", "pbf", "cf", "grr", "fgl-theorem"}));
  check->add_option("--trunc", trunc, "Truncation override")->check(CLI::PositiveNumber);

  int rank = 0, k = 0;
  auto *grr = app.add_subcommand("grr", "Riemann-Roch check on a trivial projective bundle");
  grr->add_option("r", rank, "Rank")->required();
  grr->add_option("k", k, "Twist")->required();
  auto *chi = app.add_subcommand("chi", "Euler characteristic of O(k) on P^(r-1)");
  chi->add_option("r", rank, "Rank")->required();
  chi->add_option("k", k, "Twist")->required();

  std::string law = "universal", element, action = "pushforward";
  std::vector<std::string> vars{"u", "v", "w"}, roots;
  auto *pbf = app.add_subcommand("pbf", "Reduce or push forward in a projective bundle ring");
  pbf->add_option("--law", law, "Formal group law")->capture_default_str();
  pbf->add_option("--trunc", trunc, "Truncation")->required()->check(CLI::PositiveNumber);
  pbf->add_option("--vars", vars, "Class variables")->capture_default_str();
  pbf->add_option("--roots", roots, "Chern roots")->required();
  pbf->add_option("--element", element, "Polynomial in t")->required();
  pbf->add_option("--action", action, "reduce or pushforward")
      ->check(CLI::IsMember({"reduce", "pushforward"}))
      ->capture_default_str();

  int depth = 0;
  auto *tower = app.add_subcommand("tower", "Classes of the projective tower");
  tower->add_option("law", law, "Formal group law")->required();
  tower->add_option("depth", depth, "Depth")->required()->check(CLI::NonNegativeNumber);

  auto *fgl = app.add_subcommand("fglcheck", "Geometric formal group law check");
  fgl->add_option("law", law, "Formal group law")->required();
  fgl->add_option("--trunc", trunc, "Truncation")->check(CLI::PositiveNumber);

  auto *cf = app.add_subcommand("cf", "Universal computations specialized to the multiplicative law");
  cf->add_option("--trunc", trunc, "Truncation")->check(CLI::PositiveNumber);

  for (auto *sub : app.get_subcommands({})) sub->add_flag("--json", json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  occ_report *rep = nullptr;
  if (*run) {
    std::ifstream in(task_file, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    occ_status s = occ_run_task(buf.str().c_str(), task_file.c_str(), &rep);
    if (s != OCC_OK) return error_exit(s);
    return emit(s, rep, json || occ_report_wants_json(rep));
  }
  occ_status s = OCC_OK;
  if (*check) s = occ_run_suite(suite.c_str(), trunc, &rep);
  if (*grr) s = occ_grr(rank, k, &rep);
  if (*chi) s = occ_chi(rank, k, &rep);
  if (*tower) s = occ_tower(law.c_str(), depth, &rep);
  if (*fgl) s = occ_fglcheck(law.c_str(), trunc, &rep);
  if (*cf) s = occ_cf(trunc, &rep);
  if (!*pbf) return emit(s, rep, json);

  occ_law *f = nullptr;
  occ_context *ctx = nullptr;
  occ_series *out = nullptr;
  s = occ_law_new(law.c_str(), trunc, &f);
  if (s != OCC_OK) return error_exit(s);
  auto cv = c_strings(vars);
  s = occ_context_new(f, cv.data(), cv.size(), trunc, &ctx);
  if (s == OCC_OK) {
    auto cr = c_strings(roots);
    s = occ_pbf(f, ctx, cr.data(), cr.size(), element.c_str(),
                action == "reduce" ? OCC_PBF_REDUCE : OCC_PBF_PUSHFORWARD, &out);
  }
  occ_context_free(ctx);
  occ_law_free(f);
  if (s != OCC_OK) return error_exit(s);
  return emit_series(out, json);
}
