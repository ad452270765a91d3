#include "lpdo/format.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string_view>
#include <vector>

namespace lpdo {

namespace {

constexpr std::array<std::string_view, 24> kGreek = {
    "alpha", "beta",    "gamma", "delta", "epsilon", "zeta", "eta", "theta",
    "iota",  "kappa",   "lambda", "mu",   "nu",      "xi",   "pi",  "rho",
    "sigma", "tau",     "upsilon", "phi", "chi",     "psi",  "omega", "varphi"};

bool latex_word_end(const std::string& s) {
  // True when s ends with a control word such as \alpha, which must be
  // separated from a following letter.
  std::size_t i = s.size();
  while (i > 0 && std::isalpha(static_cast<unsigned char>(s[i - 1]))) --i;
  return i < s.size() && i > 0 && s[i - 1] == '\\';
}

std::string join(const std::vector<std::string>& parts, TextStyle style) {
  std::string out;
  for (const auto& p : parts) {
    if (out.empty()) {
      out = p;
    } else if (style == TextStyle::Plain) {
      out += "*" + p;
    } else {
      if (latex_word_end(out) && std::isalpha(static_cast<unsigned char>(p.front()))) out += ' ';
      out += p;
    }
  }
  return out;
}

std::string rational_text(const mpq_class& q, TextStyle style) {
  if (style == TextStyle::Plain || q.get_den() == 1) return q.get_str();
  const mpz_class n = q.get_num();
  const std::string sign = n < 0 ? "-" : "";
  return sign + "\\tfrac{" + mpz_class(abs(n)).get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string radical_text(ConstScalar::Radicand basis, TextStyle style) {
  if (basis == -1) return "i";
  const bool imaginary = basis < 0;
  const std::string m = std::to_string(imaginary ? -basis : basis);
  std::string r = style == TextStyle::Plain ? "sqrt(" + m + ")" : "\\sqrt{" + m + "}";
  if (imaginary) r = style == TextStyle::Plain ? "i*" + r : "i" + r;
  return r;
}

std::string monomial_text(const Monomial& m, TextStyle style) {
  std::vector<std::string> parts;
  for (const auto& [id, e] : m.factors()) {
    std::string s = format_symbol(id, style);
    if (e > 1) {
      s += style == TextStyle::Plain ? "^" + std::to_string(e) : "^{" + std::to_string(e) + "}";
    }
    parts.push_back(std::move(s));
  }
  return join(parts, style);
}

struct Piece {
  bool negative;
  std::string body;
};

std::string scalar_body(const ConstScalar& c, TextStyle style);

// A term as sign plus unsigned body.
Piece term_piece(const ConstScalar& c, const Monomial& m, TextStyle style) {
  if (c.coords().size() == 1) {
    const auto& coord = c.coords().front();
    const bool negative = coord.value < 0;
    const mpq_class a = negative ? mpq_class(-coord.value) : coord.value;
    std::vector<std::string> parts;
    if (a != 1 || (coord.basis == 1 && m.is_one())) parts.push_back(rational_text(a, style));
    if (coord.basis != 1) parts.push_back(radical_text(coord.basis, style));
    if (!m.is_one()) parts.push_back(monomial_text(m, style));
    return {negative, join(parts, style)};
  }
  const bool negative = c.leading_sign() < 0;
  const std::string inner = scalar_body(negative ? -c : c, style);
  std::string body = "(" + inner + ")";
  if (!m.is_one()) body = join({body, monomial_text(m, style)}, style);
  return {negative, body};
}

std::string join_pieces(std::vector<Piece> pieces, TextStyle style) {
  if (pieces.empty()) return "0";
  if (pieces.front().negative) {
    auto pos = std::find_if(pieces.begin(), pieces.end(), [](const Piece& p) { return !p.negative; });
    if (pos != pieces.end()) std::rotate(pieces.begin(), pos, pos + 1);
  }
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& p = pieces[i];
    if (i == 0) {
      out = (p.negative ? "-" : "") + p.body;
    } else if (style == TextStyle::Plain) {
      out += (p.negative ? " - " : " + ") + p.body;
    } else {
      out += (p.negative ? "-" : "+") + p.body;
    }
  }
  return out;
}

std::string scalar_body(const ConstScalar& c, TextStyle style) {
  std::vector<Piece> pieces;
  for (const auto& coord : c.coords()) {
    ConstScalar single = ConstScalar(coord.value) * ConstScalar::radical(coord.basis);
    pieces.push_back(term_piece(single, Monomial(), style));
  }
  return join_pieces(std::move(pieces), style);
}

std::string poly_text(const Poly& p, TextStyle style) {
  std::vector<Piece> pieces;
  pieces.reserve(p.size());
  for (const auto& t : p.terms()) pieces.push_back(term_piece(t.coeff, t.mono, style));
  return join_pieces(std::move(pieces), style);
}

// Least common multiple of the denominators of every coordinate.
mpz_class denominator_lcm(const Poly& p) {
  mpz_class l = 1;
  for (const auto& t : p.terms()) {
    for (const auto& c : t.coeff.coords()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.value.get_den_mpz_t());
  }
  return l;
}

bool is_single_negative(const Poly& p) {
  if (p.size() != 1) return false;
  const auto& c = p.lead_coeff();
  return c.coords().size() == 1 ? c.coords().front().value < 0 : c.leading_sign() < 0;
}

bool needs_parens_as_divisor(const Poly& p, const std::string& text) {
  if (p.size() > 1) return true;
  return text.find('*') != std::string::npos || text.find('/') != std::string::npos;
}

std::string plain(const RatExpr& a) {
  Poly num = a.num();
  Poly den = a.den();
  const mpz_class dd = denominator_lcm(den);
  if (dd != 1) {
    num = num.scaled(ConstScalar(mpq_class(dd)));
    den = den.scaled(ConstScalar(mpq_class(dd)));
  }
  const mpz_class dn = denominator_lcm(num);
  if (dn != 1) num = num.scaled(ConstScalar(mpq_class(dn)));

  if (den.is_constant() && dn == 1) return poly_text(num, TextStyle::Plain);
  std::string n = poly_text(num, TextStyle::Plain);
  if (num.size() > 1) n = "(" + n + ")";
  if (den.is_constant()) {
    // Constant denominator: den was 1, dn > 1.
    return n + "/" + dn.get_str();
  }
  std::string d = poly_text(den, TextStyle::Plain);
  if (dn != 1) {
    d = dn.get_str() + "*" + (den.size() > 1 ? "(" + d + ")" : d);
    return n + "/(" + d + ")";
  }
  if (needs_parens_as_divisor(den, d)) d = "(" + d + ")";
  return n + "/" + d;
}

std::string latex(const RatExpr& a) {
  Poly num = a.num();
  Poly den = a.den();
  const mpz_class dd = denominator_lcm(den);
  if (dd != 1) {
    num = num.scaled(ConstScalar(mpq_class(dd)));
    den = den.scaled(ConstScalar(mpq_class(dd)));
  }
  if (den.is_constant()) {
    if (num.is_constant()) return format(num.constant_value(), TextStyle::Latex);
    const mpz_class dn = denominator_lcm(num);
    if (dn == 1) return poly_text(num, TextStyle::Latex);
    num = num.scaled(ConstScalar(mpq_class(dn)));
    if (num.size() > 1) {
      return "\\tfrac{1}{" + dn.get_str() + "}(" + poly_text(num, TextStyle::Latex) + ")";
    }
    const bool negative = is_single_negative(num);
    return std::string(negative ? "-" : "") + "\\tfrac{" +
           poly_text(negative ? -num : num, TextStyle::Latex) + "}{" + dn.get_str() + "}";
  }
  const mpz_class dn = denominator_lcm(num);
  if (dn != 1) {
    num = num.scaled(ConstScalar(mpq_class(dn)));
    den = den.scaled(ConstScalar(mpq_class(dn)));
  }
  const bool negative = is_single_negative(num);
  return std::string(negative ? "-" : "") + "\\frac{" +
         poly_text(negative ? -num : num, TextStyle::Latex) + "}{" +
         poly_text(den, TextStyle::Latex) + "}";
}

}  // namespace

std::string format_symbol(Symbol::Id id, TextStyle style) {
  std::string name = Symbol::name(id);
  if (style == TextStyle::Plain) return name;
  if (Symbol::is_jet(id)) {
    const auto [dx, dy] = Symbol::jet_order(id);
    if (dx + dy == 0) return "p_3";
    return "p_{3," + std::string(static_cast<std::size_t>(dx), 'x') +
           std::string(static_cast<std::size_t>(dy), 'y') + "}";
  }
  // Split a trailing digit run into a subscript: t1 -> t_{1}.
  std::size_t cut = name.size();
  while (cut > 0 && std::isdigit(static_cast<unsigned char>(name[cut - 1]))) --cut;
  std::string base = name.substr(0, cut);
  const std::string sub = name.substr(cut);
  if (std::find(kGreek.begin(), kGreek.end(), base) != kGreek.end()) base = "\\" + base;
  if (base.empty()) return name;
  if (!sub.empty()) return base + "_{" + sub + "}";
  if (base.size() > 1 && base.front() != '\\') return "\\mathit{" + base + "}";
  return base;
}

std::string format(const ConstScalar& c, TextStyle style) {
  if (c.is_zero()) return "0";
  if (style == TextStyle::Plain) return c.to_string();
  return scalar_body(c, style);
}

std::string format(const Poly& p, TextStyle style) { return poly_text(p, style); }

std::string format(const RatExpr& a, TextStyle style) {
  return style == TextStyle::Plain ? plain(a) : latex(a);
}

std::string Poly::to_string() const { return poly_text(*this, TextStyle::Plain); }

std::string RatExpr::to_string() const { return plain(*this); }

}  // namespace lpdo
