#include "lpdo/const_scalar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "lpdo/errors.hpp"

namespace lpdo {

namespace {

using Radicand = ConstScalar::Radicand;

constexpr unsigned long kTrialDivisionBound = 1'000'000;

Radicand abs_radicand(Radicand m) { return m < 0 ? -m : m; }

// Basis order: 1, -1, 2, -2, 3, ...
struct BasisLess {
  bool operator()(Radicand a, Radicand b) const {
    const Radicand aa = abs_radicand(a);
    const Radicand bb = abs_radicand(b);
    if (aa != bb) return aa < bb;
    return a > b;
  }
};

// sqrt(a) * sqrt(b) = factor * sqrt(basis)
std::pair<Radicand, Radicand> basis_product(Radicand a, Radicand b) {
  const bool neg_a = a < 0;
  const bool neg_b = b < 0;
  const Radicand ua = abs_radicand(a);
  const Radicand ub = abs_radicand(b);
  const Radicand g = std::gcd(ua, ub);
  const Radicand ra = ua / g;
  const Radicand rb = ub / g;
  if (rb != 0 && ra > INT64_MAX / rb) throw std::overflow_error("radicand overflow");
  Radicand factor = g;
  Radicand basis = ra * rb;
  if (neg_a && neg_b) {
    factor = -factor;
  } else if (neg_a || neg_b) {
    basis = -basis;
  }
  return {factor, basis};
}

// Prime factors (with exponent) of n > 0 by trial division; nullopt when a
// cofactor above the bound cannot be classified.
std::optional<std::vector<std::pair<mpz_class, unsigned>>> factor_integer(mpz_class n) {
  std::vector<std::pair<mpz_class, unsigned>> out;
  if (n < 0) n = -n;
  if (n == 0) return std::nullopt;
  unsigned long p = 2;
  for (; p <= kTrialDivisionBound; p = (p == 2 ? 3 : p + 2)) {
    const mpz_class pp(p);
    if (pp * pp > n) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      n /= pp;
      ++e;
    }
    if (e > 0) out.emplace_back(pp, e);
  }
  if (n == 1) return out;
  const mpz_class pp(p);
  if (pp * pp > n) {
    out.emplace_back(n, 1);
    return out;
  }
  if (mpz_perfect_square_p(n.get_mpz_t()) != 0) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    if (mpz_probab_prime_p(root.get_mpz_t(), 30) != 0) {
      out.emplace_back(root, 2);
      return out;
    }
  }
  return std::nullopt;
}

std::vector<Radicand> prime_factors(Radicand m) {
  std::vector<Radicand> out;
  m = abs_radicand(m);
  for (Radicand p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      out.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

}  // namespace

std::optional<std::pair<mpz_class, mpz_class>> square_free_split(const mpz_class& n) {
  auto factors = factor_integer(n);
  if (!factors) return std::nullopt;
  mpz_class square = 1;
  mpz_class free = 1;
  for (const auto& [p, e] : *factors) {
    for (unsigned i = 0; i < e / 2; ++i) square *= p;
    if (e % 2 == 1) free *= p;
  }
  return std::make_pair(square, free);
}

std::optional<std::vector<mpz_class>> positive_divisors(const mpz_class& n) {
  auto factors = factor_integer(n);
  if (!factors) return std::nullopt;
  std::vector<mpz_class> divisors{1};
  for (const auto& [p, e] : *factors) {
    const std::size_t count = divisors.size();
    mpz_class power = 1;
    for (unsigned i = 1; i <= e; ++i) {
      power *= p;
      for (std::size_t k = 0; k < count; ++k) divisors.push_back(divisors[k] * power);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

ConstScalar::ConstScalar(long value) {
  if (value != 0) coords_.push_back({1, mpq_class(value)});
}

ConstScalar::ConstScalar(const mpq_class& value) {
  if (value != 0) coords_.push_back({1, value});
}

ConstScalar ConstScalar::radical(Radicand m) {
  if (m == 0) return {};
  ConstScalar out;
  out.coords_.push_back({m, mpq_class(1)});
  return out;
}

bool ConstScalar::is_one() const {
  return coords_.size() == 1 && coords_[0].basis == 1 && coords_[0].value == 1;
}

bool ConstScalar::is_rational() const {
  return coords_.empty() || (coords_.size() == 1 && coords_[0].basis == 1);
}

std::optional<mpq_class> ConstScalar::as_rational() const {
  if (coords_.empty()) return mpq_class(0);
  if (coords_.size() == 1 && coords_[0].basis == 1) return coords_[0].value;
  return std::nullopt;
}

std::vector<Radicand> ConstScalar::generators() const {
  std::set<Radicand> gens;
  for (const auto& c : coords_) {
    if (c.basis == 1) continue;
    if (c.basis < 0) gens.insert(-1);
    for (Radicand p : prime_factors(c.basis)) gens.insert(p);
  }
  return {gens.begin(), gens.end()};
}

ConstScalar ConstScalar::conjugate(Radicand generator) const {
  ConstScalar out = *this;
  for (auto& c : out.coords_) {
    const bool flips = generator == -1 ? c.basis < 0
                                       : (c.basis != 1 && abs_radicand(c.basis) % generator == 0);
    if (flips) c.value = -c.value;
  }
  return out;
}

ConstScalar ConstScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return ConstScalar(mpq_class(1) / coords_[0].value);
  // Multiplying by the conjugate w.r.t. one generator eliminates it; recurse
  // on the (smaller) norm.
  const Radicand g = generators().front();
  const ConstScalar conj = conjugate(g);
  const ConstScalar norm = *this * conj;
  return conj * norm.inverse();
}

int ConstScalar::leading_sign() const {
  if (coords_.empty()) return 0;
  return sgn(coords_.front().value);
}

std::optional<ConstScalar> ConstScalar::sqrt() const {
  const auto q = as_rational();
  if (!q) return std::nullopt;
  if (*q == 0) return ConstScalar();
  // sqrt(a/b) = sqrt(a*b)/b
  const mpz_class a = q->get_num();
  const mpz_class b = q->get_den();
  const auto split = square_free_split(a * b);
  if (!split) return std::nullopt;
  const auto& [square, free] = *split;
  const mpq_class scale(square, b);
  if (!free.fits_slong_p()) return std::nullopt;
  Radicand m = free.get_si();
  if (a < 0) m = -m;
  ConstScalar out;
  out.coords_.push_back({m, scale});
  out.coords_.front().value.canonicalize();
  return out;
}

ConstScalar ConstScalar::operator-() const {
  ConstScalar out = *this;
  for (auto& c : out.coords_) c.value = -c.value;
  return out;
}

ConstScalar& ConstScalar::operator+=(const ConstScalar& other) {
  if (other.coords_.empty()) return *this;
  std::vector<Coord> merged;
  merged.reserve(coords_.size() + other.coords_.size());
  BasisLess less;
  auto i = coords_.begin();
  auto j = other.coords_.begin();
  while (i != coords_.end() || j != other.coords_.end()) {
    if (j == other.coords_.end() || (i != coords_.end() && less(i->basis, j->basis))) {
      merged.push_back(std::move(*i++));
    } else if (i == coords_.end() || less(j->basis, i->basis)) {
      merged.push_back(*j++);
    } else {
      mpq_class sum = i->value + j->value;
      if (sum != 0) merged.push_back({i->basis, std::move(sum)});
      ++i;
      ++j;
    }
  }
  coords_ = std::move(merged);
  return *this;
}

ConstScalar& ConstScalar::operator-=(const ConstScalar& other) { return *this += -other; }

ConstScalar& ConstScalar::operator*=(const ConstScalar& other) {
  *this = *this * other;
  return *this;
}

ConstScalar& ConstScalar::operator/=(const ConstScalar& other) {
  *this = *this * other.inverse();
  return *this;
}

ConstScalar operator*(const ConstScalar& a, const ConstScalar& b) {
  if (a.coords_.empty() || b.coords_.empty()) return {};
  if (a.is_rational()) {
    ConstScalar out = b;
    for (auto& c : out.coords_) c.value *= a.coords_[0].value;
    return out;
  }
  if (b.is_rational()) return b * a;
  std::map<Radicand, mpq_class, BasisLess> acc;
  for (const auto& ca : a.coords_) {
    for (const auto& cb : b.coords_) {
      const auto [factor, basis] = basis_product(ca.basis, cb.basis);
      acc[basis] += ca.value * cb.value * factor;
    }
  }
  ConstScalar out;
  for (auto& [basis, value] : acc) {
    if (value != 0) out.coords_.push_back({basis, std::move(value)});
  }
  return out;
}

bool operator==(const ConstScalar& a, const ConstScalar& b) {
  if (a.coords_.size() != b.coords_.size()) return false;
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    if (a.coords_[i].basis != b.coords_[i].basis || a.coords_[i].value != b.coords_[i].value) {
      return false;
    }
  }
  return true;
}

std::string ConstScalar::to_string() const {
  if (coords_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& c : coords_) {
    std::string body;
    mpq_class v = c.value;
    const bool negative = v < 0;
    if (negative) v = -v;
    if (c.basis == 1) {
      body = v.get_str();
    } else {
      const std::string rad = c.basis == -1 ? "i" : "sqrt(" + std::to_string(c.basis) + ")";
      body = v == 1 ? rad : v.get_str() + "*" + rad;
    }
    if (first) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
    first = false;
  }
  return out;
}

}  // namespace lpdo
