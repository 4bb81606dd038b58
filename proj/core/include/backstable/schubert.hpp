#pragma once

#include "backstable/perm.hpp"
#include "backstable/poly.hpp"
#include "backstable/symfunc.hpp"

namespace backstable {

// canonical finite form of a back stable Schubert polynomial:
// sum of coeff * s_la (stable part) * Schubert_v (finite part), v avoiding s_0
struct BackStableRep {
    std::map<std::pair<Partition, Perm>, Rat> terms;
    void add_term(const Partition& la, const Perm& v, const Rat& c);
    bool operator==(const BackStableRep&) const = default;
};

// double version; coefficients are polynomials in the a alphabet
struct DoubleBackStableRep {
    std::map<std::pair<Partition, Perm>, Poly> terms;
    void add_term(const Partition& la, const Perm& v, const Poly& c);
    bool operator==(const DoubleBackStableRep&) const = default;
};

Poly schubert_single(const Perm& w);  // w fixing all i <= 0
Poly schubert_bjs(const Perm& w);     // monomial formula, same domain
Poly schubert_double(const Perm& w);
Poly double_via_single(const Perm& w);  // alternating sum over factorizations

Poly schubert_negative(const Perm& w, bool doubled = false);  // w fixing all i > 0
Poly schubert_nonzero(const Perm& w, bool doubled = false);   // product over the split

// Schubert polynomial of w in variables x_p..x_q (and a_p..a_q when doubled);
// requires all non-fixed points of w inside [p, q]
Poly backstable_window(const Perm& w, int p, int q, bool doubled);

BackStableRep backstable_canonical(const Perm& w);
DoubleBackStableRep backstable_double_canonical(const Perm& w);
DoubleBackStableRep delta_schubert(const Perm& w);

// evaluate a canonical form on a window: stable part in x_p..x_0, finite part as is
Poly rep_window(const BackStableRep& rep, int p, int q);
Poly rep_window(const DoubleBackStableRep& rep, int p, int q);

SymFunc stanley(const Perm& w);  // Schur basis

// expansion of the product of two back stable Schubert polynomials
std::map<Perm, Rat> structure_constants(const Perm& u, const Perm& v);

// expand a polynomial in finite Schubert polynomials by reverse-lex leading terms;
// non-x variables ride along in the coefficients
std::map<Perm, Poly> schubert_expand(const Poly& f, bool doubled = false);

bool cancellation_check(const Perm& w);

}  // namespace backstable
