#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <sstream>

#include "lpdo/char_poly.hpp"
#include "lpdo/factorization.hpp"
#include "lpdo/parser.hpp"
#include "lpdo/printer.hpp"

namespace lpdo::cli {

namespace {

struct Common {
  std::string params;
  std::string format = "plain";
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--params", c.params, "Comma separated parameter names");
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"plain", "latex", "structured"}));
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

int exit_code(Status s) {
  switch (s) {
    case Status::Factored:
      return Factored;
    case Status::ConditionsFail:
      return ConditionsFail;
    case Status::Degenerate:
      return Degenerate;
    case Status::UnsupportedRoot:
      return UnsupportedRoot;
  }
  return Usage;
}

RootChoice parse_root(const std::string& text, const ParseOptions& opts) {
  if (text.empty()) return RootChoice::automatic();
  if (text == "inf" || text == "infinity") return RootChoice::infinity();
  if (text.find_first_not_of("0123456789") == std::string::npos) return RootChoice::at_index(std::stoul(text));
  return RootChoice::with_value(parse_function(text, opts));
}

bool complete(const FactorChain& c) {
  if (c.factors.size() < 2) return false;
  for (const auto& f : c.factors) {
    if (f.order() > 1) return false;
  }
  return true;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Factorization of linear partial differential operators in two variables", "lpdo"};
  app.require_subcommand(1);

  Common factor_common;
  std::string factor_text;
  std::string side = "left";
  std::string root;
  std::string p3;
  bool recursive = false;
  std::string normalize = "none";
  int max_shear = 0;
  auto* factor = app.add_subcommand("factor", "Split off a first-order factor");
  factor->add_option("operator", factor_text, "Operator (read from standard input when omitted)");
  factor->add_option("--side", side, "Side of the first-order factor")->check(CLI::IsMember({"left", "right"}));
  factor->add_option("--root", root, "Root index, value, or inf");
  factor->add_option("--p3", p3, "Candidate zero-order term for a multiple root");
  factor->add_flag("--recursive", recursive, "Split repeatedly, over every root and side");
  factor->add_option("--normalize", normalize, "Coordinate normalization")->check(CLI::IsMember({"none", "shear"}));
  factor->add_option("--max-shear", max_shear, "Largest shear tried (default order + 1)")
      ->check(CLI::NonNegativeNumber);
  add_common(factor, factor_common);

  Common compose_common;
  std::vector<std::string> compose_ops;
  auto* compose_cmd = app.add_subcommand("compose", "Compose operators left to right");
  compose_cmd->add_option("operators", compose_ops, "Operators")->required();
  add_common(compose_cmd, compose_common);

  Common transpose_common;
  std::string transpose_text;
  auto* transpose_cmd = app.add_subcommand("transpose", "Formal transpose");
  transpose_cmd->add_option("operator", transpose_text, "Operator (read from standard input when omitted)");
  add_common(transpose_cmd, transpose_common);

  Common verify_common;
  std::string verify_text;
  std::vector<std::string> verify_factors;
  auto* verify_cmd = app.add_subcommand("verify", "Check that a product of factors equals an operator");
  verify_cmd->add_option("operator", verify_text, "Operator")->required();
  verify_cmd->add_option("factors", verify_factors, "Factors, leftmost first")->required();
  add_common(verify_cmd, verify_common);

  Common charpoly_common;
  std::string charpoly_text;
  auto* charpoly_cmd = app.add_subcommand("charpoly", "Characteristic polynomial and its roots");
  charpoly_cmd->add_option("operator", charpoly_text, "Operator (read from standard input when omitted)");
  add_common(charpoly_cmd, charpoly_common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : Usage;
  }

  auto read_operator = [&](std::string text) {
    if (text.empty()) text = std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    text = trim(text);
    if (text.empty()) throw std::invalid_argument("no operator given");
    return text;
  };
  auto options_of = [](const Common& c) {
    ParseOptions o;
    o.parameters = split_parameters(c.params);
    return o;
  };

  try {
    if (*factor) {
      const ParseOptions opts = options_of(factor_common);
      const OutputFormat fmt = parse_output_format(factor_common.format);
      const LPDO a = parse_operator(read_operator(factor_text), opts);
      if (a.order() < 2) throw std::invalid_argument("the operator must have order at least 2");
      FactorOptions fo;
      fo.root = parse_root(root, opts);
      fo.normalize = normalize == "shear" ? FactorOptions::Normalize::Shear : FactorOptions::Normalize::None;
      fo.max_shear = max_shear;
      if (!p3.empty()) fo.p3 = parse_function(p3, opts);
      const bool right = side == "right";
      auto run_side = [&] { return right ? factor_right_all(a, fo) : factor_left_all(a, fo); };
      if (recursive) {
        const auto chains = factor_fully(a);
        out << render_chains(a, chains, fmt);
        for (const auto& c : chains) {
          if (complete(c)) return Factored;
        }
        const auto attempts = run_side();
        return exit_code(select_outcome(attempts).status);
      }
      const auto attempts = run_side();
      const auto selected = select_outcome(attempts);
      out << render_outcome(a, selected, attempts, fmt);
      return exit_code(selected.status);
    }
    if (*compose_cmd) {
      const ParseOptions opts = options_of(compose_common);
      std::vector<LPDO> ops;
      for (const auto& s : compose_ops) ops.push_back(parse_operator(s, opts));
      out << render_operator(compose(ops), parse_output_format(compose_common.format));
      return 0;
    }
    if (*transpose_cmd) {
      const LPDO a = parse_operator(read_operator(transpose_text), options_of(transpose_common));
      out << render_operator(transpose(a), parse_output_format(transpose_common.format));
      return 0;
    }
    if (*verify_cmd) {
      const ParseOptions opts = options_of(verify_common);
      const LPDO a = parse_operator(verify_text, opts);
      std::vector<LPDO> fs;
      for (const auto& s : verify_factors) fs.push_back(parse_operator(s, opts));
      const LPDO diff = compose(fs) - a;
      out << render_verification(a, fs, diff, parse_output_format(verify_common.format));
      return diff.is_zero() ? 0 : ConditionsFail;
    }
    if (*charpoly_cmd) {
      const LPDO a = parse_operator(read_operator(charpoly_text), options_of(charpoly_common));
      const CharPoly p = char_poly(a);
      out << render_char_poly(p, find_roots(p), parse_output_format(charpoly_common.format));
      return 0;
    }
  } catch (const ParseError& e) {
    err << "parse error at " << e.what() << "\n";
    return Usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  }
  return Usage;
}

}  // namespace lpdo::cli
