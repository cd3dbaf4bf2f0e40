#pragma once

#include <map>
#include <string>

#include "ebie/fields.hpp"
#include "ebie/solver.hpp"

namespace ebie {

struct EmtKey {
  int a1, a2, b1, b2, j, k;  // multi-indices and 0-based component indices

  bool operator<(const EmtKey& o) const {
    if (a1 != o.a1) return a1 < o.a1;
    if (a2 != o.a2) return a2 < o.a2;
    if (b1 != o.b1) return b1 < o.b1;
    if (b2 != o.b2) return b2 < o.b2;
    if (j != o.j) return j < o.j;
    return k < o.k;
  }
};

struct EmtTable {
  int max_order = 2;
  std::map<EmtKey, double> entries;

  // Deterministic CSV: header alpha1,alpha2,beta1,beta2,j,k,value with the
  // component indices written 1-based and fixed scientific formatting.
  std::string to_csv() const;
};

// Densities driven by the monomial data x^alpha e_j (which need not solve the
// background system; the transmission conditions still make sense).
BaseSolution emt_densities(const Curve& curve, const LamePair& bg, const LamePair& inc,
                           int a1, int a2, int j, int nodes);

// Moment of the exterior density against y^beta e_k, in physical units.
double emt_entry(const BaseSolution& densities, int b1, int b2, int k);

EmtTable build_emt_table(const Curve& curve, const LamePair& bg, const LamePair& inc,
                         int max_order, int nodes);

// Bilinear moment sum int F . phi_H dsigma for polynomial data pairs; the
// perturbed variant solves on the eps-perturbed interface.
double emt_sum(const TransmissionProblem& problem, const PolynomialField& F);
double emt_sum_perturbed(const TransmissionProblem& problem, const PolynomialField& F,
                         const PerturbationField& h, double eps);

// First-order interface integral for the moment-sum perturbation (printed-form
// sign), and the equivalent exterior-trace form.
double emt_first_order(const TransmissionProblem& problem, const PolynomialField& F,
                       const PerturbationField& h);
double emt_first_order_exterior_form(const TransmissionProblem& problem,
                                     const PolynomialField& F, const PerturbationField& h);

}  // namespace ebie
