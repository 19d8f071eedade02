#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "youngschur/rational.hpp"

namespace youngschur {

/// Univariate polynomial over the rationals, coefficients lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading coefficient is nonzero.
class PolynomialQ {
 public:
  PolynomialQ() = default;
  explicit PolynomialQ(std::vector<ExactRational> coeffs);
  PolynomialQ(std::initializer_list<long> coeffs);

  static PolynomialQ constant(const ExactRational& c);
  /// u - root
  static PolynomialQ linear_root(const ExactRational& root);
  /// prod (u - r)
  static PolynomialQ from_roots(const std::vector<ExactRational>& roots);

  const std::vector<ExactRational>& coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const ExactRational& leading() const;
  ExactRational coeff(int k) const;

  ExactRational operator()(const ExactRational& u) const;
  PolynomialQ compose(const PolynomialQ& inner) const;
  PolynomialQ derivative() const;
  PolynomialQ monic() const;

  friend PolynomialQ operator+(const PolynomialQ& a, const PolynomialQ& b);
  friend PolynomialQ operator-(const PolynomialQ& a, const PolynomialQ& b);
  friend PolynomialQ operator*(const PolynomialQ& a, const PolynomialQ& b);
  friend PolynomialQ operator*(const ExactRational& c, const PolynomialQ& a);

  /// Euclidean division; divisor must be nonzero.
  static std::pair<PolynomialQ, PolynomialQ> divmod(const PolynomialQ& a, const PolynomialQ& b);
  /// Monic gcd (zero when both inputs are zero).
  static PolynomialQ gcd(PolynomialQ a, PolynomialQ b);

  /// Integer-coefficient rendering after multiplying by `scale`, e.g. "u^2 - 4".
  std::string to_string(const std::string& var = "u", const ExactRational& scale = 1) const;

  bool operator==(const PolynomialQ&) const = default;

 private:
  void trim();
  std::vector<ExactRational> coeffs_;
};

/// numerator / denominator in lowest terms with a monic denominator.
class RationalFunction {
 public:
  RationalFunction(PolynomialQ numerator, PolynomialQ denominator);

  const PolynomialQ& numerator() const noexcept { return num_; }
  const PolynomialQ& denominator() const noexcept { return den_; }

  ExactRational operator()(const ExactRational& u) const;
  /// f(inner(u)).
  RationalFunction compose(const PolynomialQ& inner) const;
  RationalFunction operator*(const PolynomialQ& factor) const;

  /// Cross-multiplied polynomial identity num*other.den == other.num*den.
  bool equals_by_cross_multiplication(const RationalFunction& other) const;

  /// "(num) / (den)", both scaled to integer coefficients by a common factor.
  std::string to_string(const std::string& var = "u") const;

  bool operator==(const RationalFunction&) const = default;

 private:
  PolynomialQ num_;
  PolynomialQ den_;
};

struct PoleResidue {
  ExactRational pole;
  ExactRational residue;

  bool operator==(const PoleResidue&) const = default;
};

/// Expansion f = sum residue / (u - pole), poles ascending. Requires a proper
/// fraction whose poles are simple and rational: Error(non_simple_pole) or
/// Error(irrational_pole) otherwise.
std::vector<PoleResidue> partial_fractions(const RationalFunction& f);

/// Distinct rational roots of a nonzero polynomial, ascending.
std::vector<ExactRational> rational_roots(const PolynomialQ& p);

}  // namespace youngschur
