#include "pcoh/poly.hpp"

#include <cctype>
#include <sstream>

#include "pcoh/errors.hpp"

namespace pcoh {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw InputError("invalid rational '" + std::string(text) + "'");
  mpz_class n{std::string(num)}, m{std::string(den)};
  if (m == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, m);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational ratio(long n, long m) {
  if (m == 0) throw InputError("zero denominator");
  Rational q(n, m);
  q.canonicalize();
  return q;
}

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{0, 0}, c);
}

Poly Poly::monomial(Monomial m, const Rational& c) {
  Poly p;
  p.add_term(m, c);
  return p;
}

Rational Poly::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(Monomial m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.a + m.b);
  return d;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& p, const Poly& q) {
  Poly r;
  for (const auto& [m1, c1] : p.terms_)
    for (const auto& [m2, c2] : q.terms_) r.add_term({m1.a + m2.a, m1.b + m2.b}, c1 * c2);
  return r;
}

Poly Poly::pow(int n) const {
  if (n < 0) throw InputError("negative power");
  Poly r(1), base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

Poly add(const Poly& p, const Poly& q) { return p + q; }
Poly sub(const Poly& p, const Poly& q) { return p - q; }
Poly mul(const Poly& p, const Poly& q) { return p * q; }
Poly scale(const Poly& p, const Rational& c) { return p * c; }

Poly partial_x(const Poly& p) {
  Poly r;
  for (const auto& [m, c] : p.terms())
    if (m.a > 0) r.add_term({m.a - 1, m.b}, c * m.a);
  return r;
}

Poly partial_y(const Poly& p) {
  Poly r;
  for (const auto& [m, c] : p.terms())
    if (m.b > 0) r.add_term({m.a, m.b - 1}, c * m.b);
  return r;
}

Homogeneity weighted_degree(const Poly& p, const WeightSystem& w) {
  if (p.is_zero()) return {};
  int d = w.degree(p.terms().begin()->first);
  for (const auto& [m, c] : p.terms())
    if (w.degree(m) != d) return {Homogeneity::Kind::Mixed, 0};
  return {Homogeneity::Kind::Homogeneous, d};
}

std::map<int, Poly> homogeneous_components(const Poly& p, const WeightSystem& w) {
  std::map<int, Poly> out;
  for (const auto& [m, c] : p.terms()) out[w.degree(m)].add_term(m, c);
  return out;
}

GradedBasis monomials_of_degree(const WeightSystem& w, int D) {
  GradedBasis g{D, {}};
  if (D < 0) return g;
  for (int a = 0; a * w.w1 <= D; ++a) {
    int rest = D - a * w.w1;
    if (rest % w.w2 == 0) g.monomials.push_back({a, rest / w.w2});
  }
  return g;
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("cannot parse polynomial '" + std::string(s_) + "': " + what + " at position " +
                     std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  mpz_class uint() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  int exponent() {
    mpz_class n = uint();
    if (!n.fits_sint_p() || n > 100000) fail("exponent too large");
    return static_cast<int>(n.get_si());
  }

  Poly expr() {
    Poly acc;
    bool first = true;
    for (;;) {
      char c = peek();
      Rational sign = 1;
      if (c == '+' || c == '-') {
        ++pos_;
        if (c == '-') sign = -1;
      } else if (!first) {
        break;
      }
      acc += term() * sign;
      first = false;
    }
    return acc;
  }

  Poly term() {
    Poly p = atom();
    while (peek() == '*') {
      ++pos_;
      p = p * atom();
    }
    return p;
  }

  Poly atom() {
    char c = peek();
    Poly base;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class n = uint(), m = 1;
      if (peek() == '/') {
        ++pos_;
        m = uint();
        if (m == 0) fail("zero denominator");
      }
      Rational q(n, m);
      q.canonicalize();
      return Poly(q);
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      base = c == 'x' ? Poly::x() : Poly::y();
    } else if (c == '(') {
      ++pos_;
      base = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    } else {
      fail(c == '\0' ? "unexpected end of input" : "unexpected character");
    }
    if (peek() == '^') {
      ++pos_;
      base = base.pow(exponent());
    }
    return base;
  }
};

}  // namespace

Poly parse_poly(std::string_view text) { return Parser(text).parse(); }

std::string render(Monomial m) {
  std::string out;
  auto factor = [&](char v, int e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += v;
    if (e > 1) out += '^' + std::to_string(e);
  };
  factor('x', m.a);
  factor('y', m.b);
  return out.empty() ? "1" : out;
}

std::string render(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool constant = m.a == 0 && m.b == 0;
    if (constant) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << render(m);
    }
    first = false;
  }
  return os.str();
}

}  // namespace pcoh
