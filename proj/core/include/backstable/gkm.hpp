#pragma once

#include "backstable/schubert.hpp"

namespace backstable {

Poly simple_root(int i);  // a_i - a_{i+1}

// localization table of an equivariant Schubert class on a finite support
struct LocalizedClass {
    Perm label;
    std::map<Perm, Poly> entries;
    bool operator==(const LocalizedClass&) const = default;
};

// element of the nilHecke algebra as left Q[a]-combination of the A_w
struct NilHeckeElement {
    std::map<Perm, Poly> terms;
    void add_term(const Perm& w, const Poly& c);
    bool operator==(const NilHeckeElement&) const = default;
};

struct NilHeckeTensor {
    std::map<std::pair<Perm, Perm>, Poly> terms;
    void add_term(const Perm& u, const Perm& v, const Poly& c);
    bool operator==(const NilHeckeTensor&) const = default;
};

Poly billey_localization(const Perm& v, const Perm& w);
Poly localization_recurrence(const Perm& v, const Perm& w);       // right descents
Poly localization_recurrence_left(const Perm& v, const Perm& w);  // left descents
// windowed double Schubert polynomial evaluated at x_i = a_{w(i)}
Poly localize_schubert(const Perm& v, const Perm& w);

LocalizedClass schubert_class(const Perm& v, const std::vector<Perm>& support);
// divisibility of entry differences by the root a_i - a_j at w; both w and
// t_{ij} w must lie in the stored support
bool gkm_check(const LocalizedClass& c, int i, int j, const Perm& w);

NilHeckeElement nilhecke_one();
NilHeckeElement nilhecke_a(const Perm& w, const Poly& c = Poly(Rat(1)));
NilHeckeElement nilhecke_mul(const NilHeckeElement& x, const NilHeckeElement& y);
// product of 1 - alpha_i A_i over a reduced word; drops lengths above cap
NilHeckeElement expand_group_element(const Perm& w, long cap = -1);
NilHeckeTensor nilhecke_coproduct(const NilHeckeElement& x);

// group-basis expansion at a numeric assignment of the a alphabet
std::map<Perm, Rat> nilhecke_group_expansion(const NilHeckeElement& x,
                                             const std::map<int, Rat>& avals);
// <psi, x> at a numeric assignment; entries of psi must cover the support
Rat nilhecke_pairing(const LocalizedClass& psi, const NilHeckeElement& x,
                     const std::map<int, Rat>& avals);

}  // namespace backstable
