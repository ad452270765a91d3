#include "lpdo/printer.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

#include "lpdo/errors.hpp"
#include "lpdo/parser.hpp"

namespace lpdo {

using Json = nlohmann::ordered_json;

namespace {

// True when s has a '+' or '-' outside brackets past its first character,
// i.e. it must be wrapped before being multiplied or subtracted.
bool is_sum(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (depth == 0 && i > 0 && (c == '+' || c == '-')) return true;
  }
  return false;
}

std::string wrap(const std::string& s) { return "(" + s + ")"; }

std::string derivative_text(int j, int k, TextStyle style) {
  std::string out;
  auto one = [&](const char* var, int e) {
    if (e == 0) return;
    if (style == TextStyle::Latex) {
      out += std::string("\\partial_") + var;
      if (e > 1) out += "^{" + std::to_string(e) + "}";
    } else {
      if (!out.empty()) out += "*";
      out += std::string("D") + var;
      if (e > 1) out += "^" + std::to_string(e);
    }
  };
  one("x", j);
  one("y", k);
  return out;
}

bool starts_negative(const std::string& s) { return s.rfind("-", 0) == 0 || s.rfind("(-", 0) == 0; }

std::string radical_text(ConstScalar::Radicand g) { return format(ConstScalar::radical(g), TextStyle::Plain); }

Json rat_json(const RatExpr& r) { return Json{{"num", r.num().to_string()}, {"den", r.den().to_string()}}; }

Json operator_json(const LPDO& a) {
  Json coeffs = Json::array();
  for (const auto& [idx, c] : a.coeffs()) {
    coeffs.push_back({{"j", idx.j}, {"k", idx.k}, {"num", c.num().to_string()}, {"den", c.den().to_string()}});
  }
  return Json{{"order", a.order()}, {"coeffs", coeffs}};
}

Json matrix_json(const ConstMatrix& m) {
  return Json::array({Json::array({format(m(0, 0), TextStyle::Plain), format(m(0, 1), TextStyle::Plain)}),
                      Json::array({format(m(1, 0), TextStyle::Plain), format(m(1, 1), TextStyle::Plain)})});
}

std::string matrix_text(const ConstMatrix& m) {
  auto f = [](const ConstScalar& c) { return format(c, TextStyle::Plain); };
  return "[[" + f(m(0, 0)) + ", " + f(m(0, 1)) + "], [" + f(m(1, 0)) + ", " + f(m(1, 1)) + "]]";
}

const char* normalization_name(Normalization::Kind k) {
  switch (k) {
    case Normalization::Kind::None:
      return "none";
    case Normalization::Kind::Swap:
      return "swap";
    case Normalization::Kind::Shear:
      return "shear";
  }
  return "none";
}

Json root_json(const std::optional<Root>& root) {
  if (!root) return nullptr;
  Json ext = Json::array();
  for (auto g : root->extension_used) ext.push_back(radical_text(g));
  return Json{{"value", root->at_infinity ? Json(nullptr) : Json(format(root->value, TextStyle::Plain))},
              {"at_infinity", root->at_infinity},
              {"multiplicity", root->multiplicity},
              {"extensions", ext}};
}

Json outcome_json(const FactorizationOutcome& o) {
  Json j;
  j["status"] = to_string(o.status);
  j["side"] = to_string(o.side);
  j["root"] = root_json(o.root);
  j["normalization"] = {{"kind", normalization_name(o.normalization.kind)},
                        {"matrix", matrix_json(o.normalization.matrix)}};
  if (o.status == Status::Factored || o.status == Status::ConditionsFail) {
    j["factor"] = {{"p1", rat_json(o.factor.p1)}, {"p2", rat_json(o.factor.p2)}, {"p3", rat_json(o.factor.p3)}};
    j["cofactor"] = operator_json(o.cofactor);
  }
  Json res = Json::array();
  for (const auto& r : o.residuals) res.push_back(rat_json(r));
  j["residuals"] = res;
  if (o.riccati) {
    Json cs = Json::array();
    for (const auto& c : o.riccati->constraints) cs.push_back(rat_json(c));
    j["riccati"] = {{"unknown", Symbol::name(o.riccati->unknown)},
                    {"constraints", cs},
                    {"necessary_precondition", rat_json(o.riccati->necessary_precondition)}};
  }
  j["notices"] = o.notices;
  return j;
}

std::string root_label(const std::optional<Root>& root) {
  if (!root) return "none";
  return root->to_string();
}

void plain_attempt_line(std::ostringstream& os, const FactorizationOutcome& o, TextStyle style) {
  os << "  root " << root_label(o.root) << ": " << to_string(o.status);
  if (o.status == Status::ConditionsFail) {
    os << ", residuals:";
    bool first = true;
    for (const auto& r : o.residuals) {
      os << (first ? " " : "; ") << format(r, style);
      first = false;
    }
  }
  os << "\n";
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "plain") return OutputFormat::Plain;
  if (name == "latex") return OutputFormat::Latex;
  if (name == "structured" || name == "json") return OutputFormat::Structured;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string format(const LPDO& a, TextStyle style) {
  if (a.is_zero()) return "0";
  const bool latex = style == TextStyle::Latex;
  std::string out;
  for (const auto& [idx, c] : a.coeffs()) {
    std::string cs = format(c, style);
    const std::string flipped = format(-c, style);
    const bool minus = starts_negative(cs) && !starts_negative(flipped);
    if (minus) cs = flipped;
    const std::string d = derivative_text(idx.j, idx.k, style);
    std::string term;
    if (d.empty()) {
      term = minus && is_sum(cs) ? wrap(cs) : cs;
    } else if (c.is_one() || (-c).is_one()) {
      term = d;
    } else {
      term = is_sum(cs) ? wrap(cs) : cs;
      term += latex ? d : "*" + d;
    }
    if (out.empty()) {
      out = minus ? "-" + term : term;
    } else {
      out += latex ? (minus ? "-" : "+") : (minus ? " - " : " + ");
      out += term;
    }
  }
  return out;
}

std::string format(const FirstOrderFactor& f, TextStyle style) { return format(f.to_operator(), style); }

std::string format_product(const std::vector<LPDO>& factors, TextStyle style) {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += style == TextStyle::Latex ? "\\circ" : "*";
    out += wrap(format(f, style));
  }
  return out;
}

std::string to_structured(const LPDO& a) { return operator_json(a).dump(); }

LPDO from_structured(std::string_view document) {
  Json j;
  try {
    j = Json::parse(document);
  } catch (const Json::parse_error& e) {
    throw ParseError(1, e.byte, "malformed document");
  }
  ParseOptions opts;
  opts.implicit_parameters = true;
  LPDO::Coeffs coeffs;
  try {
    for (const auto& c : j.at("coeffs")) {
      const RatExpr num = parse_function(c.at("num").get<std::string>(), opts);
      const RatExpr den = parse_function(c.at("den").get<std::string>(), opts);
      if (den.is_zero()) throw ParseError(1, 1, "zero denominator");
      coeffs[{c.at("j").get<int>(), c.at("k").get<int>()}] = num * den.inverse();
    }
  } catch (const Json::exception& e) {
    throw ParseError(1, 1, std::string("malformed document: ") + e.what());
  }
  return LPDO::from_coeffs(coeffs);
}

std::string render_outcome(const LPDO& input, const FactorizationOutcome& selected,
                           const std::vector<FactorizationOutcome>& attempts, OutputFormat fmt) {
  if (fmt == OutputFormat::Structured) {
    Json j = outcome_json(selected);
    j["operator"] = operator_json(input);
    Json all = Json::array();
    for (const auto& o : attempts) all.push_back(outcome_json(o));
    j["attempts"] = all;
    return j.dump(2) + "\n";
  }
  const TextStyle style = fmt == OutputFormat::Latex ? TextStyle::Latex : TextStyle::Plain;
  std::ostringstream os;
  os << "operator: " << format(input, style) << "\n";
  os << "status: " << to_string(selected.status) << "\n";
  os << "side: " << to_string(selected.side) << "\n";
  if (selected.root) {
    os << "root: " << (selected.root->at_infinity ? "inf" : format(selected.root->value, style))
       << " (multiplicity " << selected.root->multiplicity << ")\n";
    if (!selected.root->extension_used.empty()) {
      os << "extensions:";
      for (auto g : selected.root->extension_used) os << " " << radical_text(g);
      os << "\n";
    }
  }
  if (selected.normalization.applied()) {
    os << "normalization: " << normalization_name(selected.normalization.kind) << " "
       << matrix_text(selected.normalization.matrix) << "\n";
  }
  if (selected.status == Status::Factored || selected.status == Status::ConditionsFail) {
    os << "factor: " << format(selected.factor, style) << "\n";
    os << "cofactor: " << format(selected.cofactor, style) << "\n";
  }
  if (selected.factored()) os << "product: " << format_product(selected.product(), style) << "\n";
  if (selected.status == Status::ConditionsFail) {
    os << "residuals:\n";
    for (const auto& r : selected.residuals) os << "  " << format(r, style) << "\n";
  }
  if (selected.riccati) {
    os << "riccati:\n";
    for (const auto& c : selected.riccati->constraints) os << "  " << format(c, style) << " = 0\n";
    os << "precondition: " << format(selected.riccati->necessary_precondition, style) << "\n";
  }
  for (const auto& n : selected.notices) os << "notice: " << n << "\n";
  if (attempts.size() > 1) {
    os << "attempts:\n";
    for (const auto& o : attempts) plain_attempt_line(os, o, style);
  }
  return os.str();
}

std::string render_chains(const LPDO& input, const std::vector<FactorChain>& chains, OutputFormat fmt) {
  if (fmt == OutputFormat::Structured) {
    Json all = Json::array();
    for (const auto& c : chains) {
      Json fs = Json::array();
      for (const auto& f : c.factors) fs.push_back(operator_json(f));
      all.push_back({{"text", format_product(c.factors, TextStyle::Plain)}, {"factors", fs}});
    }
    return Json{{"operator", operator_json(input)}, {"chains", all}}.dump(2) + "\n";
  }
  const TextStyle style = fmt == OutputFormat::Latex ? TextStyle::Latex : TextStyle::Plain;
  std::ostringstream os;
  os << "operator: " << format(input, style) << "\n";
  os << "chains:\n";
  for (const auto& c : chains) os << "  " << format_product(c.factors, style) << "\n";
  return os.str();
}

std::string render_operator(const LPDO& a, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Structured:
      return Json{{"operator", operator_json(a)}, {"text", format(a, TextStyle::Plain)}}.dump(2) + "\n";
    case OutputFormat::Latex:
      return format(a, TextStyle::Latex) + "\n";
    case OutputFormat::Plain:
      break;
  }
  return format(a, TextStyle::Plain) + "\n";
}

std::string render_char_poly(const CharPoly& p, const RootSet& roots, OutputFormat fmt) {
  if (fmt == OutputFormat::Structured) {
    Json cs = Json::array();
    for (const auto& c : p.coeffs) cs.push_back(rat_json(c));
    Json rs = Json::array();
    for (const auto& r : roots.roots) rs.push_back(root_json(r));
    Json un = Json::array();
    for (const auto& c : roots.unresolved) un.push_back(rat_json(c));
    return Json{{"order", p.n}, {"coeffs", cs}, {"text", p.to_string()}, {"roots", rs}, {"unresolved", un}}.dump(2) +
           "\n";
  }
  const TextStyle style = fmt == OutputFormat::Latex ? TextStyle::Latex : TextStyle::Plain;
  std::ostringstream os;
  os << "P(w) = " << p.to_string() << "\n";
  os << "roots:\n";
  for (const auto& r : roots.roots) {
    os << "  " << (r.at_infinity ? "inf" : format(r.value, style)) << " (multiplicity " << r.multiplicity << ")";
    if (!r.extension_used.empty()) {
      os << ", adjoined";
      for (auto g : r.extension_used) os << " " << radical_text(g);
    }
    os << "\n";
  }
  if (!roots.unresolved.empty()) {
    os << "unresolved factor (ascending coefficients):";
    for (const auto& c : roots.unresolved) os << " [" << format(c, style) << "]";
    os << "\n";
  }
  return os.str();
}

std::string render_verification(const LPDO& target, const std::vector<LPDO>& factors, const LPDO& difference,
                                OutputFormat fmt) {
  if (fmt == OutputFormat::Structured) {
    return Json{{"holds", difference.is_zero()},
                {"operator", operator_json(target)},
                {"product", format_product(factors, TextStyle::Plain)},
                {"difference", operator_json(difference)}}
               .dump(2) +
           "\n";
  }
  const TextStyle style = fmt == OutputFormat::Latex ? TextStyle::Latex : TextStyle::Plain;
  std::ostringstream os;
  os << "product: " << format_product(factors, style) << "\n";
  os << (difference.is_zero() ? "holds" : "differs") << "\n";
  if (!difference.is_zero()) os << "difference: " << format(difference, style) << "\n";
  return os.str();
}

}  // namespace lpdo
