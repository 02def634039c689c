#pragma once

// k-element subsets of [n] = {1..n}, the componentwise (Gale) order on them,
// and the distinguished subset families attached to a pair beta <= gamma.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rvar {

/// A sorted k-subset of {1..n}. Elements are 1-based column indices; positions
/// are 0-based, so `alpha[0]` is the smallest element alpha(1).
class KSubset {
 public:
  static constexpr int kMaxN = 32;

  KSubset() = default;
  KSubset(std::span<const int> elements, int n);
  KSubset(std::initializer_list<int> elements, int n);

  static KSubset from_mask(std::uint64_t mask, int n);
  /// The minimal subset {1..k}.
  static KSubset initial(int k, int n);
  /// The maximal subset {n-k+1..n}.
  static KSubset terminal(int k, int n);
  /// Parses `{a,b,c}`; whitespace is ignored.
  static KSubset parse(std::string_view text, int n);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  int operator[](int pos) const noexcept { return elems_[pos]; }
  std::uint64_t mask() const noexcept { return mask_; }
  bool contains(int x) const noexcept { return x >= 1 && x <= n_ && ((mask_ >> (x - 1)) & 1u); }
  std::vector<int> elements() const;

  /// alpha \ {remove} u {add}. Requires remove in alpha and add not in alpha.
  KSubset exchange(int remove, int add) const;

  std::string to_string() const;

  friend bool operator==(const KSubset& a, const KSubset& b) noexcept {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.mask_ == b.mask_;
  }
  /// Lexicographic on the sorted elements, after (k, n).
  friend std::strong_ordering operator<=>(const KSubset& a, const KSubset& b) noexcept;

 private:
  std::array<std::uint8_t, kMaxN> elems_{};
  std::uint64_t mask_ = 0;
  int k_ = 0;
  int n_ = 0;
};

struct KSubsetHash {
  std::size_t operator()(const KSubset& a) const noexcept {
    return std::hash<std::uint64_t>{}(a.mask() * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint64_t>(a.n()));
  }
};

/// A duplicate-free family of k-subsets of [n], iterated in lexicographic order.
class SubsetFamily {
 public:
  using const_iterator = std::set<KSubset>::const_iterator;

  SubsetFamily(int k, int n);
  SubsetFamily(int k, int n, std::span<const KSubset> members);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }

  bool insert(const KSubset& a);
  bool contains(const KSubset& a) const { return members_.count(a) != 0; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }

  SubsetFamily intersect(const SubsetFamily& other) const;
  SubsetFamily unite(const SubsetFamily& other) const;
  /// Members of S(k,n) not in this family.
  SubsetFamily complement() const;
  bool is_subfamily_of(const SubsetFamily& other) const;

  std::string to_string() const;

  friend bool operator==(const SubsetFamily&, const SubsetFamily&) = default;
  friend std::strong_ordering operator<=>(const SubsetFamily& a, const SubsetFamily& b);

 private:
  void check(const KSubset& a) const;

  int k_;
  int n_;
  std::set<KSubset> members_;
};

std::uint64_t binomial(int n, int k);

/// All C(n,k) subsets in lexicographic order. The result is cached per (k,n).
const std::vector<KSubset>& enumerate_subsets(int k, int n);

/// Position of `a` in enumerate_subsets(a.k(), a.n()).
std::size_t lex_index(const KSubset& a);

/// Componentwise order: a(i) <= b(i) for all i.
bool subset_leq(const KSubset& a, const KSubset& b);

/// [beta, gamma]. Throws EmptyInterval when beta is not below gamma.
SubsetFamily interval(const KSubset& beta, const KSubset& gamma);
bool in_interval(const KSubset& a, const KSubset& beta, const KSubset& gamma);

/// b covers a: b arises from a by raising exactly one element by one.
bool covers(const KSubset& a, const KSubset& b);

/// delta_t = {beta(1..t), gamma(t+1..k)}, 0 <= t <= k.
KSubset delta(const KSubset& beta, const KSubset& gamma, int t);

/// Subsets of [beta, gamma] meeting the integer interval [beta(t+1), gamma(t)], 1 <= t <= k-1.
SubsetFamily p_set(const KSubset& beta, const KSubset& gamma, int t);
/// [beta, gamma] minus p_set.
SubsetFamily p_bar_set(const KSubset& beta, const KSubset& gamma, int t);
/// All of S(k,n) meeting [beta(t+1), gamma(t)].
SubsetFamily i_set(const KSubset& beta, const KSubset& gamma, int t);

/// Applies c^j elementwise, where c = (1 2 ... n) sends i to i+1 and n to 1.
KSubset cyclic_shift(const KSubset& a, int j);

/// {1, ..., k-1, n - gamma(t) + beta(t+1)}. Requires p_set(beta, gamma, t) nonempty.
KSubset epsilon(const KSubset& beta, const KSubset& gamma, int t);

struct SigmaSets {
  std::vector<SubsetFamily> sigma0;  ///< the nonempty p_set(beta, gamma, t), 1 <= t <= k-1
  std::vector<SubsetFamily> sigma1;  ///< [beta', gamma] for beta covered by beta' <= gamma
  std::vector<SubsetFamily> sigma2;  ///< [beta, gamma'] for beta <= gamma' covered by gamma

  std::vector<SubsetFamily> all() const;
};

/// Whether the boundary families keep covers equal to the opposite endpoint.
/// `strict` drops [gamma, gamma] and [beta, beta], which loses the boundary
/// components of X_beta^gamma whenever beta is covered by gamma.
enum class CoverBound { inclusive, strict };

SigmaSets sigma_sets(const KSubset& beta, const KSubset& gamma,
                     CoverBound bound = CoverBound::inclusive);

/// sum_i (a(i) - i); the dimension of the Schubert cell of a.
int subset_rank(const KSubset& a);

}  // namespace rvar

template <>
struct std::hash<rvar::KSubset> : rvar::KSubsetHash {};
