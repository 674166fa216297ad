#ifndef ZOLAB_ETA_HPP
#define ZOLAB_ETA_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "zolab/error.hpp"

namespace zolab {

/// Sequence over {1,2} with its running weighted balance
///   gamma_n = |{i<n : eta(i)=2}| * alpha2 - |{i<n : eta(i)=1}| * alpha1.
/// gammas has length size()+1 with gammas[0] = 0.
struct EtaSequence {
  std::vector<std::uint8_t> entries;
  double alpha1 = 0;
  double alpha2 = 0;
  std::vector<double> gammas;

  std::size_t size() const { return entries.size(); }
  int at(std::size_t i) const { return entries.at(i); }

  /// Exact check of the Goldilocks band gamma_n in [alpha2-alpha1, 2*alpha2]
  /// for all n in [1, size()].
  bool in_band() const {
    for (std::size_t i = 1; i < gammas.size(); ++i)
      if (gammas[i] < alpha2 - alpha1 || gammas[i] > alpha2 + alpha2) return false;
    return true;
  }
};

/// Greedy balance-keeping sequence: eta(n) = 2 iff gamma_n <= alpha2, else 1.
/// The first step is always 2 because gamma_0 = 0.
inline EtaSequence goldilocks_eta(double alpha1, double alpha2, std::size_t length) {
  if (!(alpha1 > 0 && alpha1 < alpha2))
    throw error("goldilocks_eta requires 0 < alpha1 < alpha2");
  EtaSequence eta;
  eta.alpha1 = alpha1;
  eta.alpha2 = alpha2;
  eta.entries.reserve(length);
  eta.gammas.reserve(length + 1);
  double gamma = 0;
  eta.gammas.push_back(gamma);
  for (std::size_t i = 0; i < length; ++i) {
    if (gamma <= alpha2) {
      eta.entries.push_back(2);
      gamma += alpha2;
    } else {
      eta.entries.push_back(1);
      gamma -= alpha1;
    }
    eta.gammas.push_back(gamma);
  }
  return eta;
}

/// Explicitly given sequence; gammas computed from the alphas.
inline EtaSequence explicit_eta(std::vector<std::uint8_t> entries, double alpha1, double alpha2) {
  EtaSequence eta;
  eta.alpha1 = alpha1;
  eta.alpha2 = alpha2;
  eta.gammas.push_back(0);
  double gamma = 0;
  for (std::uint8_t e : entries) {
    if (e != 1 && e != 2) throw error("eta entries must be 1 or 2");
    gamma += e == 2 ? alpha2 : -alpha1;
    eta.gammas.push_back(gamma);
  }
  eta.entries = std::move(entries);
  return eta;
}

/// Iterated binary logarithm: 0 for x < 2, else log_star(log2(x)) + 1.
inline int log_star(double x) {
  if (x < 0) throw error("log_star requires a nonnegative argument");
  int r = 0;
  while (x >= 2.0) {
    x = std::log2(x);
    ++r;
  }
  return r;
}

/// Default parameter values: named algebraic numbers in double precision.
namespace defaults {
inline constexpr double alpha1 = 0.1414213562373095;   // sqrt(2)/10
inline constexpr double alpha2 = 0.21650635094610965;  // sqrt(3)/8
inline constexpr double alpha_case_a = 0.7071067811865476;  // sqrt(2)/2
}  // namespace defaults

}  // namespace zolab

#endif
