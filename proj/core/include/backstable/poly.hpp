#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "backstable/perm.hpp"

namespace backstable {

using Rat = boost::multiprecision::cpp_rational;

enum class Alpha : std::uint8_t { X = 0, A = 1, B = 2, Y = 3 };

// reserved index in alphabet A standing for the delta parameter
inline constexpr int kDeltaIndex = 1 << 20;

struct VarRef {
    Alpha alpha;
    int idx;
    bool operator==(const VarRef&) const = default;
    auto operator<=>(const VarRef&) const = default;
};

struct Monomial {
    // sorted by VarRef, exponents > 0
    std::vector<std::pair<VarRef, int>> e;
    int degree() const;
    bool operator==(const Monomial&) const = default;
    auto operator<=>(const Monomial&) const = default;
};

Monomial mono_mul(const Monomial& m1, const Monomial& m2);

class Poly {
public:
    Poly() = default;
    explicit Poly(Rat c);
    static Poly var(Alpha alpha, int idx, int exp = 1);
    static Poly x(int i) { return var(Alpha::X, i); }
    static Poly a(int i) { return var(Alpha::A, i); }
    static Poly b(int i) { return var(Alpha::B, i); }
    static Poly y(int i) { return var(Alpha::Y, i); }
    static Poly delta() { return var(Alpha::A, kDeltaIndex); }

    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // total degree, -1 for zero
    const std::map<Monomial, Rat>& terms() const { return terms_; }
    Rat coeff(const Monomial& m) const;
    Rat constant_term() const { return coeff(Monomial{}); }
    std::set<VarRef> vars() const;

    void add_term(const Monomial& m, const Rat& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly f, const Poly& g) { return f += g; }
    friend Poly operator-(Poly f, const Poly& g) { return f -= g; }
    friend Poly operator*(const Poly& f, const Poly& g);
    friend Poly operator*(const Rat& c, const Poly& f);
    Poly operator-() const;
    Poly pow(int n) const;

    bool operator==(const Poly&) const = default;

private:
    std::map<Monomial, Rat> terms_;
};

Poly act_permutation(Alpha alpha, const Perm& w, const Poly& f);
Poly divided_difference(Alpha alpha, int i, const Poly& f);
Poly shift_vars(const std::set<Alpha>& alphabets, int n, const Poly& f);
Poly omega_vars(const Poly& f);  // x_i -> -x_{1-i}, a_i -> -a_{1-i}
// every variable of f must be assigned; throws otherwise
Poly substitute(const Poly& f, const std::function<std::optional<Poly>(const VarRef&)>& assign);
Poly rename_alphabet(const Poly& f, Alpha from, Alpha to);
// a_i -> delta (i > 0), 0 (i <= 0); f must use only alphabet A
Poly eta_delta(const Poly& f);
Poly exact_divide(const Poly& f, const Poly& g);  // throws if not exact

std::string to_string(const Poly& f);
std::string to_string(const Rat& c);

}  // namespace backstable
