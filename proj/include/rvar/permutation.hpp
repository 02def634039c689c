#pragma once

// Permutations of [n], Bruhat order through the projections pi_j, and the
// positroids pi_k[u, v] obtained from Bruhat intervals.

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "rvar/subset.hpp"

namespace rvar {

/// w in S_n, stored as its one-line notation w(1), ..., w(n).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// w_0(i) = n + 1 - i.
  static Permutation longest(int n);
  /// c = (1 2 ... n): i -> i + 1, n -> 1.
  static Permutation long_cycle(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  /// w(i) for 1-based i.
  int operator()(int i) const noexcept { return images_[i - 1]; }
  std::span<const int> images() const noexcept { return images_; }

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// (u o v)(i) = u(v(i)). Right multiplication by s_t swaps positions t and t+1.
Permutation compose(const Permutation& u, const Permutation& v);

Permutation simple_transposition(int t, int n);

/// {w(1), ..., w(k)}.
KSubset pi_k(const Permutation& w, int k);

/// u <= v iff pi_j(u) <= pi_j(v) componentwise for every j.
bool bruhat_leq(const Permutation& u, const Permutation& v);

/// All of S_n in lexicographic order of one-line notation, cached. n <= kMaxGroupN.
const std::vector<Permutation>& all_permutations(int n);
inline constexpr int kMaxGroupN = 8;

/// {w | u <= w <= v}, by filtering the whole group. Empty when u is not below v.
std::vector<Permutation> bruhat_interval(const Permutation& u, const Permutation& v);

/// The Grassmannian permutation w_alpha: alpha ascending, then the complement ascending.
Permutation grassmannian_perm(const KSubset& alpha);

/// pi_k[u, v], deduplicated.
SubsetFamily positroid_from_interval(const Permutation& u, const Permutation& v, int k);

/// Checks p_set(beta, gamma, t) == pi_k[w_beta s_t, w_gamma].
bool verify_positroidset(const KSubset& beta, const KSubset& gamma, int t);

inline constexpr int kMaxPositroidSearchN = 6;

/// Searches every Bruhat interval for one projecting onto `family`. Test oracle only.
bool is_positroid_bruteforce(const SubsetFamily& family);

}  // namespace rvar
