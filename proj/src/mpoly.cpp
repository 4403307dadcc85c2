#include "phaseless/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "phaseless/error.hpp"

namespace phaseless {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t nvars, std::size_t index,
                            std::uint32_t power) {
  Monomial m(nvars);
  m.exps_.at(index) = power;
  return m;
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= o.exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  }
  return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  for (std::size_t i = a.exps_.size(); i-- > 0;) {
    if (a.exps_[i] != b.exps_[i]) return a.exps_[i] <=> b.exps_[i];
  }
  return std::strong_ordering::equal;
}

// ------------------------------------------------------------------- MPoly

namespace {

void check_same_space(const MPoly& a, const MPoly& b) {
  if (a.nvars() != b.nvars()) {
    throw Error(ErrorCode::VariableCountMismatch,
                "polynomials live in " + std::to_string(a.nvars()) + " and " +
                    std::to_string(b.nvars()) + " variables");
  }
}

struct DescendingMono {
  bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
};

std::vector<Term> collect(std::map<Monomial, Rat, DescendingMono>&& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) out.push_back({m, std::move(c)});
  }
  return out;
}

// Merge of two descending term lists; sign = +1 for a + b, -1 for a - b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b,
                        int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const auto ord = a[i].mono <=> b[j].mono;
    if (ord > 0) {
      out.push_back(a[i++]);
    } else if (ord < 0) {
      out.push_back({b[j].mono, sign > 0 ? b[j].coeff : -b[j].coeff});
      ++j;
    } else {
      Rat c = sign > 0 ? a[i].coeff + b[j].coeff : a[i].coeff - b[j].coeff;
      if (!c.is_zero()) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back({b[j].mono, sign > 0 ? b[j].coeff : -b[j].coeff});
  }
  return out;
}

Integer lcm_of_denominators(const std::vector<Term>& terms) {
  Integer l = 1;
  for (const Term& t : terms) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.den().get_mpz_t());
  }
  return l;
}

}  // namespace

MPoly::MPoly(std::size_t nvars, std::vector<Term> terms) : nvars_(nvars) {
  std::map<Monomial, Rat, DescendingMono> acc;
  for (Term& t : terms) {
    if (t.mono.nvars() != nvars) {
      throw Error(ErrorCode::VariableCountMismatch,
                  "term exponent vector has wrong length");
    }
    acc[t.mono] += t.coeff;
  }
  terms_ = collect(std::move(acc));
}

MPoly MPoly::constant(std::size_t nvars, const Rat& c) {
  MPoly p(nvars);
  if (!c.is_zero()) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) {
    throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
  }
  return monomial(Monomial::variable(nvars, index), Rat(1));
}

MPoly MPoly::monomial(const Monomial& m, const Rat& c) {
  MPoly p(m.nvars());
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

MPoly MPoly::from_upoly(std::size_t nvars, std::size_t index, const UPoly& u) {
  if (index >= nvars) {
    throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
  }
  MPoly p(nvars);
  for (int i = u.degree(); i >= 0; --i) {
    const Rat& c = u.coeffs()[i];
    if (c.is_zero()) continue;
    p.terms_.push_back(
        {Monomial::variable(nvars, index, static_cast<std::uint32_t>(i)), c});
  }
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rat MPoly::constant_value() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Rat(0);
}

std::uint32_t MPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

std::uint32_t MPoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

std::vector<std::size_t> MPoly::support() const {
  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < nvars_; ++v) {
    if (involves(v)) vars.push_back(v);
  }
  return vars;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MPoly& MPoly::operator*=(const Rat& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.coeff *= s;
  return *this;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  check_same_space(a, b);
  MPoly r(a.nvars_);
  r.terms_ = merge(a.terms_, b.terms_, +1);
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
  check_same_space(a, b);
  MPoly r(a.nvars_);
  r.terms_ = merge(a.terms_, b.terms_, -1);
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  check_same_space(a, b);
  std::map<Monomial, Rat, DescendingMono> acc;
  for (const Term& s : a.terms_) {
    for (const Term& t : b.terms_) acc[s.mono * t.mono] += s.coeff * t.coeff;
  }
  MPoly r(a.nvars_);
  r.terms_ = collect(std::move(acc));
  return r;
}

MPoly MPoly::mul_term(const Monomial& m, const Rat& c) const {
  MPoly r(nvars_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the lex order of the terms.
  for (const Term& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

MPoly MPoly::substitute(std::size_t var, const Rat& value) const {
  if (var >= nvars_) {
    throw Error(ErrorCode::IndexOutOfRange,
                "substitution index " + std::to_string(var) + " out of range");
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    Term s{t.mono, t.coeff * pow(value, t.mono[var])};
    s.mono[var] = 0;
    out.push_back(std::move(s));
  }
  return MPoly(nvars_, std::move(out));
}

Rat MPoly::eval(const std::vector<Rat>& point) const {
  if (point.size() != nvars_) {
    throw Error(ErrorCode::VariableCountMismatch,
                "evaluation point has wrong dimension");
  }
  Rat acc;
  for (const Term& t : terms_) {
    Rat v = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.mono[i] != 0) v *= pow(point[i], t.mono[i]);
    }
    acc += v;
  }
  return acc;
}

MPoly MPoly::normalized() const {
  if (is_zero()) {
    throw Error(ErrorCode::ZeroPolynomial, "cannot normalize zero polynomial");
  }
  const Integer l = lcm_of_denominators(terms_);
  Integer g = 0;
  for (const Term& t : terms_) {
    const Integer scaled = t.coeff.num() * (l / t.coeff.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
  }
  Rat factor(l, g);
  if (leading_coeff().sign() < 0) factor = -factor;
  return *this * factor;
}

MPoly MPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rat(1) / leading_coeff());
}

std::optional<UPoly> MPoly::to_upoly(std::size_t var) const {
  if (var >= nvars_) {
    throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
  }
  std::vector<Rat> coeffs(degree_in(var) + 1);
  for (const Term& t : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (i != var && t.mono[i] != 0) return std::nullopt;
    }
    coeffs[t.mono[var]] += t.coeff;
  }
  return UPoly(std::move(coeffs));
}

std::string MPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    const Rat mag = abs(t.coeff);
    if (first) {
      if (t.coeff.sign() < 0) os << "-";
    } else {
      os << (t.coeff.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (mag != Rat(1) || t.mono.is_one()) {
      os << mag;
      need_star = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.mono[i] == 0) continue;
      if (need_star) os << "*";
      os << "c" << i;
      if (t.mono[i] > 1) os << "^" << t.mono[i];
      need_star = true;
    }
  }
  return os.str();
}

MPoly MPoly::parse(std::string_view text, std::size_t nvars) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorCode::ParseError,
                 "cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  auto read_digits = [&](std::size_t& pos) {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    }
    if (pos == start) throw fail("expected digits");
    return s.substr(start, pos - start);
  };

  if (s.empty()) throw fail("empty input");
  std::vector<Term> terms;
  std::size_t pos = 0;
  while (pos < s.size()) {
    Rat sign(1);
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = Rat(-1);
      ++pos;
    } else if (!terms.empty()) {
      throw fail("expected '+' or '-'");
    }
    Term term{Monomial(nvars), sign};
    while (true) {
      if (pos >= s.size()) throw fail("dangling operator");
      if (s[pos] == 'c') {
        ++pos;
        const std::size_t var = std::stoul(read_digits(pos));
        if (var >= nvars) throw fail("variable c" + std::to_string(var));
        std::uint32_t power = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          power = static_cast<std::uint32_t>(std::stoul(read_digits(pos)));
        }
        term.mono[var] += power;
      } else {
        std::string lit = read_digits(pos);
        if (pos < s.size() && s[pos] == '/') {
          ++pos;
          lit += "/" + read_digits(pos);
        }
        term.coeff *= Rat::parse(lit);
      }
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    terms.push_back(std::move(term));
  }
  return MPoly(nvars, std::move(terms));
}

MPoly mpoly_arith(const MPoly& a, const MPoly& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
  }
  return MPoly(a.nvars());
}

MPoly mpoly_substitute(const MPoly& p, std::size_t var_index, const Rat& value) {
  return p.substitute(var_index, value);
}

MPoly mpoly_normalize(const MPoly& p) { return p.normalized(); }

}  // namespace phaseless
