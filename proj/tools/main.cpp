#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "commands.hpp"

namespace {

using namespace lenslab::cli;

void add_scale_options(CLI::App* command, int& max_s, int& max_v) {
  command->add_option("--max-s", max_s, "largest source carrier size")
      ->envname("LENSLAB_MAX_S")
      ->check(CLI::PositiveNumber);
  command->add_option("--max-v", max_v, "largest view carrier size")
      ->envname("LENSLAB_MAX_V")
      ->check(CLI::PositiveNumber);
}

void add_budget_options(CLI::App* command, std::uint64_t& budget, int& threads) {
  command->add_option("--budget", budget, "largest number of lenses to enumerate")
      ->envname("LENSLAB_BUDGET")
      ->check(CLI::PositiveNumber);
  command->add_option("--threads", threads, "worker threads for space scans")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite lens law laboratory"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  std::string out_path;
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--out", out_path, "write output to this file instead of stdout");

  app.add_subcommand("laws", "list the eleven lens laws");

  CheckOptions check_options;
  CLI::App* check = app.add_subcommand("check", "check a lens table against the laws");
  check->add_option("path", check_options.path, "lens document file")->required();
  check->add_option("--laws", check_options.laws, "laws to check (default: all decidable)")
      ->delimiter(',');

  ClosureOptions closure_options;
  CLI::App* closure = app.add_subcommand("closure", "laws derivable from a starting set");
  closure->add_option("laws", closure_options.laws, "starting law names")
      ->required()
      ->expected(-1);

  ImpliesOptions implies_options;
  CLI::App* implies =
      app.add_subcommand("implies", "decide premises -> goal by derivation or search");
  implies->add_option("terms", implies_options.terms, "premises then the goal law")
      ->required()
      ->expected(-1);
  add_scale_options(implies, implies_options.max_s, implies_options.max_v);
  add_budget_options(implies, implies_options.budget, implies_options.threads);
  implies->add_option("--seed", implies_options.seed,
                      "enable a seeded sampling fallback for open verdicts");
  implies->add_option("--samples", implies_options.samples,
                      "samples for the seeded fallback");
  implies->add_option("--rand-s", implies_options.rand_s,
                      "source size for the seeded fallback (default max-s + 1)");
  implies->add_option("--rand-v", implies_options.rand_v,
                      "view size for the seeded fallback (default max-v + 1)");

  SweepOptions sweep_options;
  CLI::App* sweep = app.add_subcommand("sweep", "assert every rule over whole lens spaces");
  add_scale_options(sweep, sweep_options.max_s, sweep_options.max_v);
  add_budget_options(sweep, sweep_options.budget, sweep_options.threads);

  CensusOptions census_options;
  CLI::App* census = app.add_subcommand("census", "count law profiles over one lens space");
  census->add_option("s_size", census_options.s_size, "source carrier size")->required();
  census->add_option("v_size", census_options.v_size, "view carrier size")->required();
  add_budget_options(census, census_options.budget, census_options.threads);

  SurveyOptions survey_options;
  CLI::App* survey =
      app.add_subcommand("survey", "classify candidate implications up to a premise size");
  survey->add_option("premise_size", survey_options.max_premise_size,
                     "largest premise set size");
  add_scale_options(survey, survey_options.max_s, survey_options.max_v);
  add_budget_options(survey, survey_options.budget, survey_options.threads);

  app.add_subcommand("dot", "export the implication graph in DOT form");

  GalleryOptions gallery_options;
  CLI::App* gallery =
      app.add_subcommand("gallery", "list or window-check the example lenses");
  gallery->add_option("name", gallery_options.name, "entry to check (default: list all)");
  gallery->add_option("--window", gallery_options.window, "half-width of the integer window")
      ->envname("LENSLAB_WINDOW")
      ->check(CLI::PositiveNumber);

  // A literal "->" before the goal reads naturally when quoted; drop it so
  // it is not mistaken for an option.
  std::vector<std::string> cleaned;
  cleaned.reserve(static_cast<std::size_t>(argc));
  cleaned.emplace_back(argv[0]);
  for (int i = 1; i < argc; ++i) {
    std::string argument(argv[i]);
    if (argument == "->" || argument == "=>") continue;
    cleaned.push_back(std::move(argument));
  }
  std::vector<const char*> cleaned_argv;
  cleaned_argv.reserve(cleaned.size());
  for (const std::string& argument : cleaned) cleaned_argv.push_back(argument.c_str());

  try {
    app.parse(static_cast<int>(cleaned_argv.size()), cleaned_argv.data());
  } catch (const CLI::ParseError& error) {
    if (error.get_exit_code() == 0) return app.exit(error);
    app.exit(error);
    return kExitUsage;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "cannot open output file: " << out_path << "\n";
      return kExitUsage;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : file;
  OutputFormat format = parse_format(format_name);

  try {
    if (app.got_subcommand("laws")) return cmd_laws(format, out);
    if (app.got_subcommand(check)) {
      check_options.format = format;
      return cmd_check(check_options, out);
    }
    if (app.got_subcommand(closure)) {
      closure_options.format = format;
      return cmd_closure(closure_options, out);
    }
    if (app.got_subcommand(implies)) {
      implies_options.format = format;
      return cmd_implies(implies_options, out);
    }
    if (app.got_subcommand(sweep)) {
      sweep_options.format = format;
      return cmd_sweep(sweep_options, out);
    }
    if (app.got_subcommand(census)) {
      census_options.format = format;
      return cmd_census(census_options, out);
    }
    if (app.got_subcommand(survey)) {
      survey_options.format = format;
      return cmd_survey(survey_options, out);
    }
    if (app.got_subcommand("dot")) return cmd_dot(out);
    if (app.got_subcommand(gallery)) {
      gallery_options.format = format;
      return cmd_gallery(gallery_options, out);
    }
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
