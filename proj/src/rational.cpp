#include "youngschur/rational.hpp"

#include <cctype>

#include "youngschur/error.hpp"

namespace youngschur {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_diagram: return "InvalidDiagram";
    case Errc::not_symmetric: return "NotSymmetric";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::not_cover: return "NotCover";
    case Errc::no_completion: return "NoCompletion";
    case Errc::bad_interlacing: return "BadInterlacing";
    case Errc::non_simple_pole: return "NonSimplePole";
    case Errc::irrational_pole: return "IrrationalPole";
    case Errc::inadmissible_params: return "InadmissibleParams";
    case Errc::irrational_nu: return "IrrationalNu";
    case Errc::level_mismatch: return "LevelMismatch";
    case Errc::completion_failure: return "CompletionFailure";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw Error(Errc::parse_error, "not a rational: '" + std::string(whole) + "'");
  BigInt v(std::string(s), 10);
  return negative ? BigInt(-v) : v;
}

}  // namespace

ExactRational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw Error(Errc::parse_error, "bad denominator in '" + std::string(text) + "'");
    BigInt den(std::string(den_text), 10);
    if (den == 0) throw Error(Errc::parse_error, "zero denominator in '" + std::string(text) + "'");
    ExactRational q(num, den);
    q.canonicalize();
    return q;
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)))
      throw Error(Errc::parse_error, "not a rational: '" + std::string(text) + "'");
    std::string digits = std::string(int_part) + std::string(frac_part);
    BigInt num(digits.empty() ? std::string("0") : digits, 10);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    ExactRational q(negative ? BigInt(-num) : num, den);
    q.canonicalize();
    return q;
  }

  return ExactRational(parse_integer(text, text));
}

std::string to_string(const ExactRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_fraction_string(const ExactRational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal(const ExactRational& q, int digits) {
  if (digits < 0) digits = 0;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));

  BigInt num = abs(q.get_num()) * scale;
  const BigInt& den = q.get_den();
  BigInt quotient, remainder;
  mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  BigInt twice = 2 * remainder;
  if (twice > den || (twice == den && mpz_odd_p(quotient.get_mpz_t()))) quotient += 1;

  std::string body = quotient.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits))
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  bool negative = q < 0 && quotient != 0;
  return negative ? "-" + body : body;
}

double to_double(const ExactRational& q) { return q.get_d(); }

std::optional<ExactRational> rational_sqrt(const ExactRational& q) {
  if (q < 0) return std::nullopt;
  const BigInt& num = q.get_num();
  const BigInt& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  ExactRational root(sqrt(num), sqrt(den));
  root.canonicalize();
  return root;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt pow2(unsigned n) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, n);
  return r;
}

}  // namespace youngschur
