#pragma once

#include <map>
#include <string>
#include <vector>

#include "youngschur/measures.hpp"

namespace youngschur {

struct Witness {
  std::string input;
  std::string lhs;
  std::string rhs;
};

/// Outcome of one identity sweep. Passing means no witnesses.
struct VerificationReport {
  std::string prop;
  std::map<std::string, std::string> params;
  int max_n = 0;
  std::size_t checked = 0;
  std::vector<Witness> witnesses;
  /// Free-form remarks, such as parameter values a sweep could not cover.
  std::vector<std::string> notes;

  bool pass() const noexcept { return witnesses.empty(); }
  std::string status() const { return pass() ? "pass" : "fail"; }
};

/// Parameters shared by the sweeps; the defaults are the standard test set.
struct SweepParams {
  std::vector<ZParams> z_params{
      {ExactRational(-1), ExactRational(3, 16)}, {ExactRational(0), ExactRational(1)}, {ExactRational(-1), ExactRational(5)}};
  std::vector<AlphaParam> alphas{{ExactRational(3, 16)}, {ExactRational(1, 4)}, {ExactRational(5)}};
};

/// M_n o p_down = M_{n-1} for n = 1..max_n, all four families.
VerificationReport verify_coherence(int max_n, const SweepParams& params = {});
/// Down-kernel identity over every strict cover with |lambda| <= max_n.
VerificationReport verify_down_equality(int max_n);
/// Rational-function identity for |lambda| <= max_n, plus residues against the Plancherel up kernels.
VerificationReport verify_planch_up(int max_n);
/// Alpha up kernel against the z(alpha) up kernel over every strict cover with |lambda| <= max_n.
VerificationReport verify_z_up(int max_n, const SweepParams& params = {});
/// Intermediate counts for covers with |lambda| <= max_n; brute-force D-path counts up to the walker cap.
VerificationReport verify_lemma_dpaths(int max_n, int brute_force_max_n = kBruteForceDPathCap);
/// alpha-measure^2 / z(alpha)-measure(D lambda) constant on each layer n <= max_n.
VerificationReport verify_proportionality(int max_n, const SweepParams& params = {});
/// Closed-form tables against kernel-iterated tables for n <= max_n.
VerificationReport verify_closed_forms(int max_n, const SweepParams& params = {});

/// Dispatch by CLI name: coherence, down-equality, planch-up, z-up, lemma-dpaths,
/// proportionality, closed-forms. Throws Error(parse_error) for other names.
VerificationReport run_verification(const std::string& prop, int max_n, const SweepParams& params = {});

const std::vector<std::string>& verification_names();

}  // namespace youngschur
