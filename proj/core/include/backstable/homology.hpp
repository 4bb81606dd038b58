#pragma once

#include "backstable/doublesym.hpp"
#include "backstable/symfunc.hpp"

namespace backstable {

// element of the completed dual ring, expanded in the Schur basis s_la(y)
// with coefficients in Q[a] (or Q[delta]), truncated by total degree
struct DualSeries {
    int cap = 0;
    std::map<Partition, Poly> coeffs;
    void add_term(const Partition& la, const Poly& c);
    Poly coeff(const Partition& la) const;
    bool operator==(const DualSeries&) const = default;
};

DualSeries dual_schur(const Partition& mu, int cap);
// Cauchy kernel factor Omega[(a_j - a_i) y] up to degree cap
DualSeries omega_kernel(int j, int i, int cap);
DualSeries multiply_dual(const DualSeries& f, const DualSeries& g);
// homology divided difference; i = 0 conjugates by the Cauchy kernel
DualSeries homology_dd(int i, const DualSeries& f);
// applies the operators along a reduced word of the Grassmannian element
DualSeries create_dual_schur(const Partition& la, int cap);

// pairing that makes the dual Schur basis dual to the double Schur basis
Poly cauchy_pairing(const DoubleSymFunc& f, const DualSeries& g);

struct LambdaDecomposition {
    Partition outer, middle, inner;  // outer/middle vertical, middle/inner horizontal
    bool operator==(const LambdaDecomposition&) const = default;
    auto operator<=>(const LambdaDecomposition&) const = default;
};

// all decompositions into a vertical strip over a horizontal strip;
// empty unless inner fits in outer and the skew shape is thin
std::vector<LambdaDecomposition> lambda_decompositions(const Partition& outer,
                                                       const Partition& inner);

// coefficients of hs_la in hs_(q+1,1^p) * hs_mu for |la| <= cap;
// cap < 0 selects |mu| + p + q + 4
std::map<Partition, Poly> hook_pieri(const Partition& mu, int p, int q, int cap = -1);
std::map<Partition, Poly> monk_rule(const Partition& mu, int cap = -1);

// specialization a_i -> delta for i > 0 and a_i -> 0 for i <= 0
DualSeries delta_dual_schur(const Partition& mu, int cap);
// product of two delta-specialized dual Schurs restricted to a rectangle,
// re-expanded in the restricted delta-dual-Schur basis
std::map<Partition, Poly> kl_product(const Partition& la, const Partition& mu, int rows,
                                     int cols, int cap);

}  // namespace backstable
