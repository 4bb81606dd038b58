#pragma once

#include <compare>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace backstable {

// Permutation of Z with finite support, stored as a minimal window of
// one-line values starting at base. Indices outside the window are fixed.
class Perm {
public:
    Perm() = default;
    Perm(int base, std::vector<int> window);

    static Perm identity() { return Perm(); }
    static Perm s(int i);
    static Perm transposition(int i, int j);  // t_{ij}, i < j
    static Perm from_word(const std::vector<int>& letters);

    int operator()(int i) const;
    Perm inverse() const;
    friend Perm operator*(const Perm& u, const Perm& v);  // (uv)(i) = u(v(i))

    bool operator==(const Perm&) const = default;
    auto operator<=>(const Perm&) const = default;

    bool is_identity() const { return window_.empty(); }
    int base() const { return base_; }
    const std::vector<int>& window() const { return window_; }
    // smallest and largest non-fixed index; [0,-1] style empty for identity
    int lo() const { return base_; }
    int hi() const { return base_ + static_cast<int>(window_.size()) - 1; }

private:
    void normalize();
    int base_ = 0;
    std::vector<int> window_;
};

struct Partition {
    std::vector<int> parts;  // weakly decreasing, strictly positive

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int size() const;  // |lambda|
    int rows() const { return static_cast<int>(parts.size()); }
    int part(int i) const;  // 1-based, 0 past the end

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;
};

using Word = std::vector<int>;

Partition conjugate(const Partition& la);
bool contains(const Partition& la, const Partition& mu);  // mu subset of la
int durfee(const Partition& la);
Partition add_part(const Partition& la, int row, int amount = 1);
std::vector<Partition> all_partitions(int n);                 // of n
std::vector<Partition> partitions_up_to(int n);               // of 0..n
std::vector<std::pair<int, int>> cells(const Partition& la);  // (row, col), 1-based

long length(const Perm& w);
std::vector<Word> reduced_words(const Perm& w);
bool is_reduced(const Word& word);
std::map<int, int> code(const Perm& w);
Perm perm_from_code(const std::map<int, int>& c);
Perm grassmannian_from_partition(const Partition& la);  // w_lambda
Partition partition_from_grassmannian(const Perm& w);
Perm skew_perm(const Partition& la, const Partition& mu);  // w_{la/mu}
bool is_321_avoiding(const Perm& w);
// (I+, I-) = (Z>0 cap w(Z<=0), Z<=0 cap w(Z>0))
std::pair<std::vector<int>, std::vector<int>> grassmannian_descent_sets(const Perm& w);

using PermPredicate = std::function<bool(const Perm&)>;
std::vector<std::vector<Perm>> length_additive_factorizations(
    const Perm& w, int k, const std::vector<PermPredicate>& constraints = {});

Perm shift(const Perm& w, int n);  // gamma^n
Perm omega(const Perm& w);         // s_i -> s_{-i}

// pairs (J, K) with w = u_J d_K, lengths adding; empty iff w is not a Lambda
std::vector<std::pair<std::set<int>, std::set<int>>> lambda_factorizations(const Perm& w);
Perm increasing_perm(const std::set<int>& J);  // u_J
Perm decreasing_perm(const std::set<int>& K);  // d_K

std::set<int> support(const Perm& w);  // letters of any reduced word
int max_support(const Perm& w);        // 0 for identity
bool bruhat_leq(const Perm& v, const Perm& w);
bool has_right_descent(const Perm& w, int i);  // w(i) > w(i+1)
bool has_left_descent(const Perm& w, int i);   // l(s_i w) < l(w)
std::set<int> right_descents(const Perm& w);
bool is_k_grassmannian(const Perm& w, int k);  // descents only at k
bool is_zero_grassmannian(const Perm& w);

bool in_s_plus(const Perm& w);   // fixes all i <= 0
bool in_s_minus(const Perm& w);  // fixes all i >= 1
bool in_s_nonzero(const Perm& w);
// split w in S!=0 as u * v with u in S-, v in S+
std::pair<Perm, Perm> split_nonzero(const Perm& w);

std::string to_string(const Perm& w);
std::string to_string(const Partition& la);

}  // namespace backstable
