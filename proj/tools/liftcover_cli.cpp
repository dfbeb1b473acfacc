#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "liftcover/commands.hpp"

int main(int argc, char** argv) {
  using namespace liftcover;

  CLI::App app{"Liftability, quotient series and Penner checks for cyclic covers of surfaces"};
  app.require_subcommand(1);

  RunConfig cfg;
  long long mod_k = 0;
  std::string word, tuple, entries, mode = "class";
  bool json_out = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--genus", cfg.genus, "surface genus")->check(CLI::PositiveNumber);
    sub->add_option("--mod-k", mod_k, "cover degree k");
    sub->add_option("--seed", cfg.seed, "sampling seed");
    sub->add_option("--samples", cfg.samples, "number of sampled trials");
    sub->add_option("--tol", cfg.tolerance, "power-iteration tolerance");
    sub->add_option("--cap", cfg.state_cap, "orbit state cap");
    sub->add_option("--workers", cfg.workers, "orbit worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--gen-file", cfg.generator_files, "word list, one word per line");
    auto* plain = sub->add_flag("--plain", cfg.plain, "aligned text instead of JSON");
    sub->add_flag("--json", json_out, "JSON output (default)")->excludes(plain);
  };

  auto* matrix = app.add_subcommand("matrix", "integer or mod-k symplectic image of a word");
  common(matrix);
  matrix->add_option("--word,word", word, "word such as \"a1 b2^-3 c1\"");

  auto* lift = app.add_subcommand("lift", "liftability report for a word");
  common(lift);
  lift->add_option("--word,word", word, "word")->required();

  auto* series = app.add_subcommand("series", "coset, index and normality checks");
  common(series);

  auto* orbit = app.add_subcommand("orbit", "orbit of e_1 on primitive vectors or classes");
  common(orbit);
  orbit->add_option("--mode", mode, "class or vector")->check(CLI::IsMember({"class", "vector"}));

  auto* reduce = app.add_subcommand("reduce", "genus-2 reduction of an e_1 stabilizer member");
  common(reduce);
  reduce->add_option("matrix", entries, "16 comma-separated residues, row-major")->required();

  auto* penner = app.add_subcommand("penner", "Penner map data for an admissible tuple");
  common(penner);
  penner->add_option("--tuple,tuple", tuple, "\"p1,..;k1:l1,..\"")->required();

  auto* recover = app.add_subcommand("recover", "recover the twists from the Penner maps");
  common(recover);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (mod_k != 0) cfg.mod_k = static_cast<Residue>(mod_k);
  for (auto* sub : {penner, recover}) {
    if (sub->parsed() && sub->get_option("--genus")->count() == 0) cfg.genus = 2;
  }

  CommandResult r;
  if (matrix->parsed()) {
    r = cmd_matrix(word, cfg);
  } else if (lift->parsed()) {
    r = cmd_lift(word, cfg);
  } else if (series->parsed()) {
    r = cmd_series(cfg);
  } else if (orbit->parsed()) {
    r = cmd_orbit(mode == "vector" ? OrbitMode::Vector : OrbitMode::Class, cfg);
  } else if (reduce->parsed()) {
    cfg.genus = 2;
    r = cmd_reduce(entries, cfg);
  } else if (penner->parsed()) {
    r = cmd_penner(tuple, cfg);
  } else {
    r = cmd_recover(cfg);
  }
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
