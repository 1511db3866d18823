#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "placeone/commands.hpp"

using namespace placeone;

namespace {

void print(const Json& envelope, const std::string& format, bool pretty) {
  if (format == "text")
    std::cout << render_text(envelope) << std::flush;
  else
    std::cout << (pretty ? envelope.dump(2) : envelope.dump()) << "\n" << std::flush;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plane curves with one place at infinity: pencils, critical fibers and rational members."};
  app.require_subcommand(1);

  CommandOptions opt;
  long max_ext_degree = opt.engine.limits.max_degree;
  long max_tower_depth = static_cast<long>(opt.engine.limits.max_depth);
  std::string format = "json";
  app.add_option("--seed", opt.engine.seed, "seed for sampled checks and the corpus")->capture_default_str();
  app.add_option("--max-ext-degree", max_ext_degree, "largest degree of an algebraic extension")->capture_default_str();
  app.add_option("--max-tower-depth", max_tower_depth, "largest number of extension levels")->capture_default_str();
  app.add_option("--trunc-start", opt.engine.trunc_start, "initial Puiseux truncation order")->capture_default_str();
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--jobs", opt.jobs, "corpus members analyzed concurrently")->capture_default_str();
  app.add_flag("--timing", opt.timing, "include wall-clock timing in the output");

  std::string f, g, xt, yt;
  auto* analyze = app.add_subcommand("analyze", "local and global invariants of a curve");
  analyze->add_option("f", f, "polynomial in x, y")->required();
  auto* pencil = app.add_subcommand("pencil", "the pencil f - lambda and its critical members");
  pencil->add_option("f", f, "polynomial in x, y")->required();
  auto* census = app.add_subcommand("census", "rational members of the pencil");
  census->add_option("f", f, "polynomial in x, y")->required();
  auto* implicit = app.add_subcommand("implicitize", "implicit equation of t -> (x(t), y(t))");
  implicit->add_option("x", xt, "x(t)")->required();
  implicit->add_option("y", yt, "y(t)")->required();
  auto* pair = app.add_subcommand("pair", "classify two rational one-place curves");
  pair->add_option("f", f, "first curve")->required();
  pair->add_option("g", g, "second curve")->required();
  auto* lemma = app.add_subcommand("lemma", "local bounds for a germ at the origin");
  lemma->add_option("H", f, "polynomial vanishing at the origin")->required();

  std::vector<std::string> at;
  auto* verify = app.add_subcommand("verify", "check intersection numbers against the brute-force oracles");
  verify->add_option("f", f, "first curve")->required();
  verify->add_option("g", g, "second curve")->required();
  verify->add_option("--at", at, "a rational point a b (default: every rational common zero)")->expected(2);

  CorpusSpec spec;
  auto* corpus = app.add_subcommand("corpus", "generated one-place curves, one JSON line per member");
  corpus->add_option("--count", spec.count, "accepted members")->capture_default_str();
  corpus->add_option("--a-min", spec.a_min, "smallest deg x(t)")->capture_default_str();
  corpus->add_option("--a-max", spec.a_max, "largest deg x(t), the curve degree n")->capture_default_str();
  corpus->add_option("--coeff-bound", spec.coeff_bound, "bound on |lower coefficients|")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_input;
  }
  if (max_ext_degree < 1 || max_tower_depth < 1 || opt.engine.trunc_start < 1 || opt.jobs < 1) {
    std::cerr << "placeone: limits must be positive\n";
    return exit_input;
  }
  opt.engine.limits.max_degree = max_ext_degree;
  opt.engine.limits.max_depth = static_cast<std::size_t>(max_tower_depth);

  CommandResult res;
  if (*analyze) res = cmd_analyze(f, opt);
  if (*pencil) res = cmd_pencil(f, opt);
  if (*census) res = cmd_census(f, opt);
  if (*implicit) res = cmd_implicitize(xt, yt, opt);
  if (*pair) res = cmd_pair(f, g, opt);
  if (*lemma) res = cmd_lemma(f, opt);
  if (*verify) {
    std::optional<std::pair<std::string, std::string>> point;
    if (at.size() == 2) point = std::pair{at[0], at[1]};
    res = cmd_verify(f, g, point, opt);
  }
  if (*corpus) {
    spec.seed = opt.engine.seed;
    try {
      const CorpusResult cr = cmd_corpus(spec, opt, [&](const Json& e) { print(e, format, false); });
      std::cerr << corpus_table(cr.summary);
      return cr.exit_code;
    } catch (const InputError& e) {
      std::cerr << "placeone: " << e.what() << "\n";
      return exit_input;
    }
  }
  print(res.envelope, format, true);
  const Json& result = res.envelope["result"];
  if (result.is_object() && result.contains("error"))
    std::cerr << "placeone: " << result["error"]["message"].get<std::string>() << "\n";
  return res.exit_code;
}
