#pragma once

#include "backstable/schubert.hpp"
#include "backstable/symfunc.hpp"

namespace backstable {

// element of the ring of double symmetric functions, expanded in the basis
// {s_la(x||a)} with coefficients in Q[a]
struct DoubleSymFunc {
    std::map<Partition, Poly> coeffs;
    void add_term(const Partition& la, const Poly& c);
    Poly coeff(const Partition& la) const;
    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const DoubleSymFunc&) const = default;
};

struct TensorDoubleSymFunc {
    std::map<std::pair<Partition, Partition>, Poly> coeffs;
    void add_term(const Partition& la, const Partition& mu, const Poly& c);
    bool operator==(const TensorDoubleSymFunc&) const = default;
};

DoubleSymFunc double_schur(const Partition& la);

// change of basis against the classical super Schur functions, carried as a
// Schur-basis SymFunc whose partition stands for the Schur polynomial in the
// power sum generators
SymFunc double_to_super(const DoubleSymFunc& f);
DoubleSymFunc super_to_double(const SymFunc& f);

// free polynomial algebra on the power sum generators; p_k is encoded as the
// variable y_k
Poly to_power(const DoubleSymFunc& f);
DoubleSymFunc from_power(const Poly& f);
Poly super_to_power(const SymFunc& f);
SymFunc power_to_super(const Poly& f);

// shift of the coefficient alphabet acting on a power representation;
// positive switches to the positive-alphabet generators
Poly gamma_a_power(const Poly& f, int t, bool positive = false);

// algebra map p_k -> x_{1-n}^k + ... + x_0^k - a_{1-n}^k - ... - a_0^k;
// rejects support not fitting in an n x n box
Poly eps_truncate(const DoubleSymFunc& f, int n);
Poly jacobi_trudi(const Partition& la, int n);
// sum over column strict tableaux with entries in {1-n,...,0}
Poly ssyt_formula(const Partition& la, int n);

DoubleSymFunc double_stanley(const Perm& w);
std::map<Partition, Poly> double_eg(const Perm& w);  // j_la^w(a)

// evaluates every coefficient of double_stanley(w) at random assignments
// weakly decreasing along the order 1 < 2 < ... < -2 < -1 < 0
bool positivity_spot_check(const Perm& w, int samples, unsigned seed = 0);

Poly coproduct_structure_constant(const Partition& la, const Partition& mu, const Partition& nu);

Poly triple_eg(const Perm& w, const Partition& mu);  // j_mu^w(a,b)
Poly hook_triple_eg(const Perm& w, int p, int q);    // shape (q+1, 1^p)

// p_k -> sum over i in I+(w) of a_i^k minus the same over I-(w)
Poly localize_sym(const DoubleSymFunc& f, const Perm& w);

// positive-alphabet double Schur basis element in the power representation
Poly positive_double_schur_power(const Partition& la);
// localization of a positive-convention power representation at w
Poly localize_positive_power(const Poly& f, const Perm& w);
// dictionary p_k -> -p_k between the positive and nonpositive conventions;
// input coefficients are read against the positive double Schur basis
DoubleSymFunc phi_dictionary(const SymFunc& f);

DoubleSymFunc multiply_double(const DoubleSymFunc& f, const DoubleSymFunc& g);
TensorDoubleSymFunc coproduct_double(const DoubleSymFunc& f);
DoubleSymFunc omega_double(const DoubleSymFunc& f);

}  // namespace backstable
