#pragma once

#include <map>
#include <vector>

#include "backstable/perm.hpp"
#include "backstable/poly.hpp"

namespace backstable {

enum class Basis { Schur, H, E, P, Monomial };

// symmetric function with Q[a] coefficients in a chosen basis
class SymFunc {
public:
    explicit SymFunc(Basis b = Basis::Schur) : basis_(b) {}
    static SymFunc one(Basis b = Basis::Schur);
    static SymFunc basis_elem(Basis b, const Partition& la, const Poly& c = Poly(Rat(1)));

    Basis basis() const { return basis_; }
    const std::map<Partition, Poly>& coeffs() const { return coeffs_; }
    Poly coeff(const Partition& la) const;
    void add_term(const Partition& la, const Poly& c);
    bool is_zero() const { return coeffs_.empty(); }

    SymFunc& operator+=(const SymFunc& o);  // same basis
    friend SymFunc operator+(SymFunc f, const SymFunc& g) { return f += g; }
    friend SymFunc operator*(const Poly& c, const SymFunc& f);
    SymFunc operator-() const;
    friend SymFunc operator-(SymFunc f, const SymFunc& g) { return f += -g; }

    bool operator==(const SymFunc&) const = default;

private:
    Basis basis_;
    std::map<Partition, Poly> coeffs_;
};

struct TensorSymFunc {
    Basis basis = Basis::Schur;
    std::map<std::pair<Partition, Partition>, Poly> coeffs;
    void add_term(const Partition& la, const Partition& mu, const Poly& c);
    bool operator==(const TensorSymFunc&) const = default;
};

SymFunc convert(const SymFunc& f, Basis target);
SymFunc multiply(const SymFunc& f, const SymFunc& g);
TensorSymFunc coproduct(const SymFunc& f);
SymFunc antipode(const SymFunc& f);
SymFunc omega_sym(const SymFunc& f);

// image of p_k -> sum of first-alphabet k-th powers minus second-alphabet ones,
// over the given inclusive index ranges
Poly superize(const SymFunc& f, Alpha a1, int lo1, int hi1, Alpha a2, int lo2, int hi2);
// p_k -> x_{1-n}^k + ... + x_0^k
Poly truncate(const SymFunc& f, int n);
// inverse of truncate for <= n rows; rejects non-symmetric input
SymFunc schur_expand_finite(const Poly& p, int n);

// rational conversion tables (memoized)
std::map<Partition, Rat> schur_in_p(const Partition& la);
std::map<Partition, Rat> p_in_schur(const Partition& nu);
// multiply a Schur-basis map by p_r (Murnaghan-Nakayama)
std::map<Partition, Rat> schur_mult_p(const std::map<Partition, Rat>& f, int r);

long syt_count(const Partition& la);
using Tableau = std::vector<std::vector<int>>;  // rows of entries
std::vector<Tableau> enumerate_syt(const Partition& la);
std::set<int> des_set(const Tableau& t);

}  // namespace backstable
