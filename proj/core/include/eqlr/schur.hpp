#pragma once

#include <cstddef>
#include <vector>

#include "eqlr/polyring.hpp"
#include "eqlr/tableaux.hpp"
#include "eqlr/weights.hpp"

namespace eqlr::schur {

using core::Composition;
using core::Partition;
using polyring::MPoly;
using tableaux::BarredTableau;
using weights::CoefficientTable;

// (x_j - y_1)...(x_j - y_k)
MPoly falling_product(int j, int k);
// prod_j (x_j | y)^{xi_j}
MPoly falling_power(const Composition& xi);

// (x|y)^R = prod over filled boxes a of (x_{|a|} - y_{|a|' + c - r}); bars are ignored.
MPoly tableau_monomial(const BarredTableau& R);

// Sum of (x|y)^R over reverse tableaux of shape mu (or mu/kappa) with entries in 1..d. Cached.
const MPoly& factorial_schur(const Partition& mu, int d);
MPoly factorial_schur(const Partition& mu, const Partition& kappa, int d);

// det[(x_j|y)^{xi_i}]
MPoly alternant(const Composition& xi);

// a_rho * s_mu == a_{mu+rho}
bool verify_bialternant(const Partition& mu, int d);

// Greedy leading-term elimination of s_lambda * s_{mu/kappa} in the factorial Schur basis.
// Works on partition exponents only; throws InvariantError if the product is not symmetric in x.
CoefficientTable expand_product_oracle(const Partition& lambda, const Partition& mu, int d);
CoefficientTable expand_product_oracle(const Partition& lambda, const Partition& mu, const Partition& kappa, int d);
// sum_nu c_nu s_nu
MPoly rebuild_from_table(const CoefficientTable& table, int d);

// a_{lambda+rho} s_{mu/kappa} == sum_{B} c_{lambda*B} a_{lambda+rho+omega(B^u)}
bool verify_lemma_product_alternant(const Partition& lambda, const Partition& mu, int d);
bool verify_lemma_product_alternant(const Partition& lambda, const Partition& mu, const Partition& kappa, int d);

// (x|y)^xi (x|y)^R == sum over bar patterns B of R of c_{xi+1,B} (x|y)^{xi+omega(B^u)}
bool verify_lemma_induction(const BarredTableau& R, const Composition& xi);

struct BadGuyReport {
    std::size_t hatted = 0;
    std::size_t bad_guys = 0;
    std::size_t fixed_points = 0;
    bool sum_is_zero = false;
    bool pairing_ok = false;
    bool ok() const { return sum_is_zero && pairing_ok; }
};

// Sum of d_{lambda+rho+1,H} a_{lambda+rho+omega(H^u)} over Bad Guys H, plus checks of H -> H*.
BadGuyReport verify_bad_guys_vanish(const Partition& lambda, const Partition& mu, int d);

}  // namespace eqlr::schur
