#ifndef ZOLAB_PSI_HPP
#define ZOLAB_PSI_HPP

#include <memory>
#include <string>

#include "zolab/eta.hpp"
#include "zolab/formula.hpp"
#include "zolab/paths.hpp"

namespace zolab {

/// Supplies the atom-level formulas phi_ell(x,y) that the psi builders chain
/// together: plain relation atoms for the two-relation digraph model, or the
/// anchored witness-template formulas for the graph model.
class PhiFormulaSource {
 public:
  virtual ~PhiFormulaSource() = default;
  /// `fresh` is a counter used for any bound variables the source invents.
  virtual FormulaPtr phi(int ell, const std::string& x, const std::string& y, int& fresh) const = 0;
};

/// phi_1 = R1(x,y), phi_2 = R2(x,y).
class CaseBPhiFormulas : public PhiFormulaSource {
 public:
  FormulaPtr phi(int ell, const std::string& x, const std::string& y, int& fresh) const override;
};

/// Reachability skeleton psi_{m1,m2}(x,y): x = y when m1 = m2, otherwise
/// exists x1 (phi_{eta(m1)}(x,x1) & psi_{m1+1,m2}(x1,y)).  Satisfied exactly
/// by pre-(eta,m1,m2)-path endpoint pairs.
FormulaPtr build_psi(const PhiFormulaSource& src, const EtaSequence& eta, int m1, int m2,
                     const std::string& x = "x", const std::string& y = "y");

/// psi'_{m2}(x,y): psi_{0,m2}(x,y) together with, for every l1 < l2 <= m2,
/// a clause forbidding two distinct level-l1 nodes that merge at level l2 on
/// the way to y, and a clause forbidding one node from occupying both level
/// l1 and level l2.  Satisfied exactly by (eta,m2)-path endpoint pairs.
/// Materialization is capped at m2 <= 32 (the clause count is quadratic);
/// use the path search beyond.
FormulaPtr build_psi_prime(const PhiFormulaSource& src, const EtaSequence& eta, int m2,
                           const std::string& x = "x", const std::string& y = "y");

/// Truth value of the oscillating sentence: with m = length_eta(G), true iff
/// m >= 10 and log_star(m) is even.  Equals the infinitary disjunction over
/// psi_m & !psi_{m+1} disjunct by disjunct, so it is computed as a decision
/// procedure rather than materialized.
bool eval_parity_sentence(const PhiSystem& phi, const EtaSequence& eta);

/// The per-length decision underlying the sentence.
inline bool parity_sentence_value(int length) { return length >= 10 && log_star(length) % 2 == 0; }

}  // namespace zolab

#endif
