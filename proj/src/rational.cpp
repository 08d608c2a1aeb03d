#include "mps/rational.hpp"

#include <cctype>

#include "mps/errors.hpp"

namespace mps {

namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) throw ParseError("bad rational '" + std::string(whole) + "'");
  std::size_t start = text[0] == '-' ? 1 : 0;
  if (start == text.size()) throw ParseError("bad rational '" + std::string(whole) + "'");
  for (std::size_t k = start; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw ParseError("bad rational '" + std::string(whole) + "'");
  }
  return mpz_class(std::string(text), 10);
}

}  // namespace

Rat rat(long num, long den) {
  if (den == 0) throw ParseError("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  mpz_class num, den;
  if (slash == std::string_view::npos) {
    num = parse_integer(text, text);
    den = 1;
  } else {
    num = parse_integer(text.substr(0, slash), text);
    den = parse_integer(text.substr(slash + 1), text);
    if (den <= 0) throw ParseError("denominator must be positive in '" + std::string(text) + "'");
  }
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string format_rat(const Rat& value) { return value.get_str(); }

long rat_floor(const Rat& value) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q.get_si();
}

long rat_ceil(const Rat& value) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q.get_si();
}

bool is_integral(const Rat& value) { return value.get_den() == 1; }

}  // namespace mps
