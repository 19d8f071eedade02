#include "youngschur/polynomial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "youngschur/error.hpp"

namespace youngschur {

PolynomialQ::PolynomialQ(std::vector<ExactRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolynomialQ::PolynomialQ(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

PolynomialQ PolynomialQ::constant(const ExactRational& c) { return PolynomialQ(std::vector<ExactRational>{c}); }

PolynomialQ PolynomialQ::linear_root(const ExactRational& root) {
  return PolynomialQ(std::vector<ExactRational>{-root, ExactRational(1)});
}

PolynomialQ PolynomialQ::from_roots(const std::vector<ExactRational>& roots) {
  PolynomialQ out = constant(1);
  for (const auto& r : roots) out = out * linear_root(r);
  return out;
}

void PolynomialQ::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const ExactRational& PolynomialQ::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

ExactRational PolynomialQ::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

ExactRational PolynomialQ::operator()(const ExactRational& u) const {
  ExactRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + *it;
  return acc;
}

PolynomialQ PolynomialQ::compose(const PolynomialQ& inner) const {
  PolynomialQ acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

PolynomialQ PolynomialQ::derivative() const {
  std::vector<ExactRational> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * static_cast<long>(k));
  return PolynomialQ(std::move(out));
}

PolynomialQ PolynomialQ::monic() const {
  if (is_zero()) return *this;
  const ExactRational lead = leading();
  std::vector<ExactRational> out;
  for (const auto& c : coeffs_) out.push_back(c / lead);
  return PolynomialQ(std::move(out));
}

PolynomialQ operator+(const PolynomialQ& a, const PolynomialQ& b) {
  std::vector<ExactRational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (k < a.coeffs_.size()) out[k] += a.coeffs_[k];
    if (k < b.coeffs_.size()) out[k] += b.coeffs_[k];
  }
  return PolynomialQ(std::move(out));
}

PolynomialQ operator-(const PolynomialQ& a, const PolynomialQ& b) { return a + ExactRational(-1) * b; }

PolynomialQ operator*(const PolynomialQ& a, const PolynomialQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<ExactRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return PolynomialQ(std::move(out));
}

PolynomialQ operator*(const ExactRational& c, const PolynomialQ& a) {
  std::vector<ExactRational> out;
  for (const auto& x : a.coeffs_) out.push_back(c * x);
  return PolynomialQ(std::move(out));
}

std::pair<PolynomialQ, PolynomialQ> PolynomialQ::divmod(const PolynomialQ& a, const PolynomialQ& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<ExactRational> rem = a.coeffs_;
  const int db = b.degree();
  if (a.degree() < db) return {PolynomialQ{}, a};
  std::vector<ExactRational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  for (int k = a.degree(); k >= db; --k) {
    const ExactRational factor = rem[static_cast<std::size_t>(k)] / b.leading();
    quot[static_cast<std::size_t>(k - db)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= factor * b.coeffs_[static_cast<std::size_t>(j)];
  }
  return {PolynomialQ(std::move(quot)), PolynomialQ(std::move(rem))};
}

PolynomialQ PolynomialQ::gcd(PolynomialQ a, PolynomialQ b) {
  while (!b.is_zero()) {
    PolynomialQ r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

BigInt common_denominator(const std::vector<ExactRational>& coeffs) {
  BigInt l = 1;
  for (const auto& c : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  return l;
}

std::string render_integer_poly(const std::vector<BigInt>& coeffs, const std::string& var) {
  std::string out;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    const BigInt& c = coeffs[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = abs(c);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const bool show_coeff = k == 0 || mag != 1;
    if (show_coeff) out += mag.get_str();
    if (k > 0) {
      if (show_coeff) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

std::vector<BigInt> scaled_integer_coeffs(const std::vector<ExactRational>& coeffs, const ExactRational& scale) {
  std::vector<BigInt> out;
  for (const auto& c : coeffs) {
    ExactRational v = c * scale;
    if (v.get_den() != 1) throw std::logic_error("scaled coefficient is not an integer");
    out.push_back(v.get_num());
  }
  return out;
}

}  // namespace

std::string PolynomialQ::to_string(const std::string& var, const ExactRational& scale) const {
  return render_integer_poly(scaled_integer_coeffs(coeffs_, scale), var);
}

RationalFunction::RationalFunction(PolynomialQ numerator, PolynomialQ denominator) {
  if (denominator.is_zero()) throw std::domain_error("rational function with zero denominator");
  const PolynomialQ g = PolynomialQ::gcd(numerator, denominator);
  num_ = PolynomialQ::divmod(numerator, g).first;
  den_ = PolynomialQ::divmod(denominator, g).first;
  const ExactRational lead = den_.leading();
  num_ = ExactRational(1 / lead) * num_;
  den_ = den_.monic();
}

ExactRational RationalFunction::operator()(const ExactRational& u) const {
  const ExactRational d = den_(u);
  if (d == 0) throw std::domain_error("evaluation at a pole");
  return num_(u) / d;
}

RationalFunction RationalFunction::compose(const PolynomialQ& inner) const {
  return RationalFunction(num_.compose(inner), den_.compose(inner));
}

RationalFunction RationalFunction::operator*(const PolynomialQ& factor) const {
  return RationalFunction(num_ * factor, den_);
}

bool RationalFunction::equals_by_cross_multiplication(const RationalFunction& other) const {
  return num_ * other.den_ == other.num_ * den_;
}

std::string RationalFunction::to_string(const std::string& var) const {
  std::vector<ExactRational> all = num_.coeffs();
  all.insert(all.end(), den_.coeffs().begin(), den_.coeffs().end());
  const ExactRational scale(common_denominator(all));
  return "(" + num_.to_string(var, scale) + ") / (" + den_.to_string(var, scale) + ")";
}

namespace {

std::vector<BigInt> divisors(BigInt n) {
  n = abs(n);
  std::vector<std::pair<BigInt, unsigned>> factors;
  for (BigInt p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e) factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<BigInt> out{1};
  for (const auto& [p, e] : factors) {
    const std::size_t current = out.size();
    BigInt power = 1;
    for (unsigned k = 1; k <= e; ++k) {
      power *= p;
      for (std::size_t i = 0; i < current; ++i) out.push_back(out[i] * power);
    }
  }
  return out;
}

}  // namespace

std::vector<ExactRational> rational_roots(const PolynomialQ& p) {
  if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
  std::set<ExactRational> roots;
  PolynomialQ rest = p;
  while (rest.degree() > 0 && rest.coeff(0) == 0) {
    roots.insert(ExactRational(0));
    rest = PolynomialQ::divmod(rest, PolynomialQ{0, 1}).first;
  }
  if (rest.degree() > 0) {
    const ExactRational scale(common_denominator(rest.coeffs()));
    const std::vector<BigInt> ints = scaled_integer_coeffs(rest.coeffs(), scale);
    const std::vector<BigInt> tops = divisors(ints.front());
    const std::vector<BigInt> bottoms = divisors(ints.back());
    for (const BigInt& q : bottoms) {
      for (const BigInt& t : tops) {
        for (int sign : {1, -1}) {
          ExactRational candidate(sign * t, q);
          candidate.canonicalize();
          if (rest(candidate) == 0) roots.insert(candidate);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

std::vector<PoleResidue> partial_fractions(const RationalFunction& f) {
  const PolynomialQ& den = f.denominator();
  if (f.numerator().degree() >= den.degree())
    throw std::domain_error("partial fractions need a proper rational function");
  const PolynomialQ slope = den.derivative();
  if (PolynomialQ::gcd(den, slope).degree() > 0)
    throw Error(Errc::non_simple_pole, "repeated factor in " + den.to_string());
  const std::vector<ExactRational> poles = rational_roots(den);
  if (static_cast<int>(poles.size()) != den.degree())
    throw Error(Errc::irrational_pole, "denominator " + den.to_string() + " does not split over Q");
  std::vector<PoleResidue> out;
  for (const auto& x : poles) out.push_back({x, f.numerator()(x) / slope(x)});
  return out;
}

}  // namespace youngschur
