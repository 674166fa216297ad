#include "zolab/psi.hpp"

#include "zolab/error.hpp"

namespace zolab {

FormulaPtr CaseBPhiFormulas::phi(int ell, const std::string& x, const std::string& y,
                                 int& fresh) const {
  (void)fresh;
  if (ell == 1 || ell == 0) return f_atom("R1", {x, y});
  if (ell == 2) return f_atom("R2", {x, y});
  throw error("phi index must be 0, 1 or 2");
}

namespace {

std::string fresh_var(int& fresh) { return "v" + std::to_string(++fresh); }

FormulaPtr psi_rec(const PhiFormulaSource& src, const EtaSequence& eta, int m1, int m2,
                   const std::string& x, const std::string& y, int& fresh) {
  if (m1 == m2) return f_eq(x, y);
  std::string mid = fresh_var(fresh);
  FormulaPtr step = src.phi(eta.at(static_cast<std::size_t>(m1)), x, mid, fresh);
  FormulaPtr rest = psi_rec(src, eta, m1 + 1, m2, mid, y, fresh);
  return f_exists(mid, f_and({std::move(step), std::move(rest)}));
}

void check_bounds(const EtaSequence& eta, int m1, int m2) {
  if (m1 < 0 || m1 > m2 || static_cast<std::size_t>(m2) > eta.size())
    throw error("psi indices out of range");
}

}  // namespace

FormulaPtr build_psi(const PhiFormulaSource& src, const EtaSequence& eta, int m1, int m2,
                     const std::string& x, const std::string& y) {
  check_bounds(eta, m1, m2);
  int fresh = 0;
  return psi_rec(src, eta, m1, m2, x, y, fresh);
}

FormulaPtr build_psi_prime(const PhiFormulaSource& src, const EtaSequence& eta, int m2,
                           const std::string& x, const std::string& y) {
  check_bounds(eta, 0, m2);
  if (m2 > 32)
    throw error("psi' materialization capped at m2 <= 32; use the path search instead");
  int fresh = 0;
  std::vector<FormulaPtr> conj;
  conj.push_back(psi_rec(src, eta, 0, m2, x, y, fresh));
  for (int l1 = 0; l1 < m2; ++l1) {
    for (int l2 = l1 + 1; l2 <= m2; ++l2) {
      // No fork: distinct z1, z2 at level l1 reaching a common z3 at level
      // l2 that still reaches y.
      std::string z1 = fresh_var(fresh), z2 = fresh_var(fresh), z3 = fresh_var(fresh);
      FormulaPtr fork = f_exists(
          z1, f_and({psi_rec(src, eta, 0, l1, x, z1, fresh),
                     f_exists(z2, f_and({psi_rec(src, eta, 0, l1, x, z2, fresh), f_not(f_eq(z1, z2)),
                                         f_exists(z3, f_and({psi_rec(src, eta, l1, l2, z1, z3, fresh),
                                                             psi_rec(src, eta, l1, l2, z2, z3, fresh),
                                                             psi_rec(src, eta, l2, m2, z3, y, fresh)}))}))}));
      conj.push_back(f_not(std::move(fork)));
      // No revisit: one node occupying both level l1 and level l2 on a
      // pre-path from x to y.
      std::string w = fresh_var(fresh);
      FormulaPtr revisit = f_exists(
          w, f_and({psi_rec(src, eta, 0, l1, x, w, fresh), psi_rec(src, eta, l1, m2, w, y, fresh),
                    psi_rec(src, eta, 0, l2, x, w, fresh), psi_rec(src, eta, l2, m2, w, y, fresh)}));
      conj.push_back(f_not(std::move(revisit)));
    }
  }
  return f_and(std::move(conj));
}

bool eval_parity_sentence(const PhiSystem& phi, const EtaSequence& eta) {
  return parity_sentence_value(length_eta(phi, eta).length);
}

}  // namespace zolab
