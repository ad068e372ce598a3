#include "bolalg/rational.hpp"

#include <cctype>

#include "bolalg/error.hpp"

namespace bolalg {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

bool try_parse_rational(std::string_view text, Scalar& out) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
    if (!all_digits(den)) return false;
  }
  if (!all_digits(num)) return false;

  mpz_class n(std::string(num), 10);
  mpz_class d(1);
  if (!den.empty()) {
    d = mpz_class(std::string(den), 10);
    if (d == 0) return false;
  }
  if (negative) n = -n;
  out = Scalar(n, d);
  out.canonicalize();
  return true;
}

Scalar parse_rational(std::string_view text) {
  Scalar q;
  if (!try_parse_rational(text, q))
    throw ParseError("invalid rational literal '" + std::string(text) + "'", 0, 0);
  return q;
}

std::string to_string(const Scalar& q) { return q.get_str(10); }

}  // namespace bolalg
