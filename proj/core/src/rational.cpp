#include "permlab/rational.hpp"

#include <cctype>
#include <string>

#include "permlab/errors.hpp"

namespace permlab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw PreconditionError("expected an integer or a fraction a/b, got '" + std::string(text) + "'");
  BigInt a(std::string(num).c_str());
  BigInt b(std::string(den).c_str());
  if (b == 0) throw PreconditionError("zero denominator in '" + std::string(text) + "'");
  Rational r(a, b);
  return neg ? Rational(-r) : r;
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Rational rpow(const Rational& base, int exponent) {
  if (exponent < 0) throw PreconditionError("rpow: negative exponent");
  Rational out = 1;
  Rational b = base;
  while (exponent) {
    if (exponent & 1) out *= b;
    b *= b;
    exponent >>= 1;
  }
  return out;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

void write_csv(std::ostream& os, const ExactDist& d) {
  os << "perm,numerator,denominator\n";
  for (const auto& [pi, pr] : d.prob)
    os << pi.to_string() << ',' << numerator(pr).str() << ',' << denominator(pr).str() << '\n';
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::pow(int e) const {
  Polynomial out(Rational(1));
  for (int i = 0; i < e; ++i) out *= *this;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational c = c_[i];
    if (!out.empty()) {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    std::string mono = i == 0 ? "" : (i == 1 ? "p" : "p^" + std::to_string(i));
    if (mono.empty())
      out += permlab::to_string(c);
    else if (c == 1)
      out += mono;
    else if (c == -1)
      out += "-" + mono;
    else
      out += permlab::to_string(c) + "*" + mono;
  }
  return out;
}

}  // namespace permlab
