#include "cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>

#include "lorder/ball.hpp"
#include "lorder/order.hpp"
#include "lorder/pl_action.hpp"
#include "lorder/verify.hpp"
#include "lorder/words.hpp"

namespace lorder::cli {
namespace {

struct Options {
  int k = 0;
  int radius = 0;
  std::string word;
  std::string other;
  bool f2_variant = false;
  bool serial = false;
};

CLI::App* add_rank(CLI::App* sub, Options& opt) {
  sub->add_option("-k,--rank", opt.k, "number of free generators (>= 2)")
      ->required()
      ->check(CLI::Range(2, 1 << 20));
  return sub;
}

int run_weight(const Options& opt, std::ostream& out) {
  const Rank k(opt.k);
  const ReducedWord u = parse_word(opt.word, k);
  const HalfInt w = opt.f2_variant ? weight_f2_variant(u, k) : weight(u);
  out << w.to_string() << '\n';
  return kExitOk;
}

int run_pingpong(const Options& opt, std::ostream& out) {
  const Rank k(opt.k);
  const PingPongReport report = verify_pingpong(k);
  std::size_t passed = 0;
  for (const PingPongCheck& c : report.checks) {
    const ReducedWord g{c.generator};
    const Arc& repel = c.generator.is_positive() ? repelling_arc(k, c.generator.index())
                                                 : attracting_arc(k, c.generator.index());
    out << format_word(g, k) << "(S^1 \\ " << repel.label(k) << ") = "
        << format_interval(c.image) << " within " << c.target.label(k) << " = "
        << format_interval(c.target.span) << ": " << (c.holds ? "pass" : "FAIL")
        << '\n';
    passed += c.holds ? 1 : 0;
  }
  out << "pingpong k=" << k.value() << " inclusions=" << report.checks.size()
      << " passed=" << passed << '\n';
  return report.all_pass() ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explicit left order on free groups F_k", "lorder"};
  app.require_subcommand(1);
  Options opt;

  auto* weight_cmd = add_rank(app.add_subcommand("weight", "print the weight of WORD"), opt);
  weight_cmd->add_option("word", opt.word, "group word")->required();
  weight_cmd->add_flag("--f2-variant", opt.f2_variant,
                       "use the alternative F_2 weight (k = 2 only)");

  auto* sign_cmd = add_rank(app.add_subcommand("sign", "print +, 0 or - for WORD"), opt);
  sign_cmd->add_option("word", opt.word, "group word")->required();

  auto* compare_cmd = add_rank(app.add_subcommand("compare", "print <, = or > for U V"), opt);
  compare_cmd->add_option("u", opt.word, "left word")->required();
  compare_cmd->add_option("v", opt.other, "right word")->required();

  auto* orbit_cmd =
      add_rank(app.add_subcommand("orbit", "print the exact orbit point WORD(0)"), opt);
  orbit_cmd->add_option("word", opt.word, "group word")->required();

  auto* sort_cmd =
      add_rank(app.add_subcommand("sort", "print the ball of radius R in increasing order"), opt);
  sort_cmd->add_option("-r,--radius", opt.radius, "ball radius")
      ->required()
      ->check(CLI::NonNegativeNumber);

  auto* verify_cmd = add_rank(
      app.add_subcommand("verify", "check weight against the exact action on a ball"), opt);
  verify_cmd->add_option("-r,--radius", opt.radius, "ball radius")
      ->required()
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_flag("--serial", opt.serial, "use the single-threaded reference kernel");

  auto* pingpong_cmd = add_rank(
      app.add_subcommand("pingpong", "check the ping-pong inclusions exactly"), opt);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Rank k(opt.k);
    if (weight_cmd->parsed()) return run_weight(opt, out);
    if (sign_cmd->parsed()) {
      out << sign_symbol(sign_of(parse_word(opt.word, k))) << '\n';
      return kExitOk;
    }
    if (compare_cmd->parsed()) {
      out << ordering_symbol(compare(parse_word(opt.word, k), parse_word(opt.other, k)))
          << '\n';
      return kExitOk;
    }
    if (orbit_cmd->parsed()) {
      out << format_rational(orbit_zero(parse_word(opt.word, k), k)) << '\n';
      return kExitOk;
    }
    if (sort_cmd->parsed()) {
      for (const ReducedWord& u : sort_ball(enumerate_ball(k, opt.radius))) {
        out << format_word(u, k) << '\n';
      }
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      const VerifyReport report =
          verify(k, opt.radius, opt.serial ? Execution::serial : Execution::parallel);
      out << format_report(report);
      return report.ok() ? kExitOk : kExitFailure;
    }
    if (pingpong_cmd->parsed()) return run_pingpong(opt, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lorder::cli
