#pragma once

#include <map>
#include <string>
#include <vector>

#include "eqlr/polyring.hpp"
#include "eqlr/tableaux.hpp"

namespace eqlr::weights {

using core::Composition;
using core::Partition;
using polyring::Family;
using polyring::MPoly;
using tableaux::BarredTableau;
using tableaux::SkewBarredTableau;

// fam_e - fam_f
struct WeightFactor {
    Family family = Family::y;
    int e = 0;
    int f = 0;

    MPoly poly() const { return MPoly::binomial(family, e, f); }
    std::string str() const;  // "(y6-y5)"
    friend bool operator==(const WeightFactor&, const WeightFactor&) = default;
    friend auto operator<=>(const WeightFactor&, const WeightFactor&) = default;
};

// A product of binomials, kept in factored form next to its expansion.
struct Weight {
    std::vector<WeightFactor> factors;
    MPoly poly{1};

    std::string factored() const;  // "1" for the empty product
    // Sorted copy of the factors, for comparisons that ignore order.
    std::vector<WeightFactor> sorted_factors() const;
};

Weight make_weight(std::vector<WeightFactor> factors);

// Sum of the nonzero weights, each with sorted factors: "(y4-y3)(y2-y1)+(y3-y1)(y2-y1)".
// Factors and terms descend for y and ascend for Y; "0" if nothing is left.
std::string render_sum(const std::vector<Weight>& ws, Family family);

// One factor per barred entry, in reading order.
Weight weight_c_L(const SkewBarredTableau& L);
// Y_{(n-d)+|a|-(c-r)} - Y_{(n-d)+|a|-omega_{|a|}}; requires lambda, mu, nu in P_{d,n}.
Weight weight_C_L(const SkewBarredTableau& L, int n);

// omega(L^u_{<=a})_{|a|} - c(a) + r(a), where a is counted when unbarred.
int delta(const SkewBarredTableau& L, int idx);

enum class Criterion { C1, C2, C3, C4, C5, Molev };
inline constexpr Criterion all_criteria[] = {Criterion::C1, Criterion::C2, Criterion::C3,
                                             Criterion::C4, Criterion::C5, Criterion::Molev};
std::string criterion_name(Criterion c);

// Throws DomainError if the unbarred column word of L is not Yamanouchi.
bool is_positive(const SkewBarredTableau& L, Criterion c);

// e = (xi + omega(B^u_{<a}))_{|a|}, f = |a|' + c - r; empty boxes are skipped.
Weight weight_c_xi_B(const Composition& xi, const BarredTableau& B);

// lambda + rho + 1
Composition star_shift(const Partition& lambda);

using CoefficientTable = std::map<Partition, MPoly>;

MPoly coefficient_by_tableaux(const Partition& lambda, const Partition& mu, const Partition& kappa,
                              const Partition& nu, bool positive_only = false);
MPoly coefficient_by_tableaux(const Partition& lambda, const Partition& mu, const Partition& nu,
                              bool positive_only = false);
// Every nu with a nonzero coefficient.
CoefficientTable coefficient_table_by_tableaux(const Partition& lambda, const Partition& mu,
                                               const Partition& kappa, bool positive_only = false);
CoefficientTable coefficient_table_by_tableaux(const Partition& lambda, const Partition& mu,
                                               bool positive_only = false);

MPoly coefficient_by_tableaux_Y(const Partition& lambda, const Partition& mu, const Partition& nu, int n,
                                bool positive_only = false);

// Throws DomainError unless p lies in P_{d,n}.
void require_in_box(const Partition& p, int n, const char* name);

}  // namespace eqlr::weights
