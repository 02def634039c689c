#include "rvar/permutation.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>

#include "rvar/errors.hpp"

namespace rvar {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  if (n < 1 || n > KSubset::kMaxN) throw InvalidParameters("permutation size out of range");
  std::vector<bool> seen(n + 1, false);
  for (int x : images_) {
    if (x < 1 || x > n || seen[x]) throw InvalidParameters("not a permutation: " + to_string());
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::longest(int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = n - i;
  return Permutation(std::move(images));
}

Permutation Permutation::long_cycle(int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = (i + 1) % n + 1;
  return Permutation(std::move(images));
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(images_[i]);
  }
  return out + "]";
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw InvalidParameters("compose: size mismatch");
  std::vector<int> images(u.size());
  for (int i = 1; i <= u.size(); ++i) images[i - 1] = u(v(i));
  return Permutation(std::move(images));
}

Permutation simple_transposition(int t, int n) {
  if (t < 1 || t > n - 1) throw InvalidParameters("s_" + std::to_string(t) + " is not in S_" + std::to_string(n));
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::swap(images[t - 1], images[t]);
  return Permutation(std::move(images));
}

KSubset pi_k(const Permutation& w, int k) {
  if (k < 1 || k > w.size()) throw InvalidParameters("pi_k: k out of range");
  std::uint64_t mask = 0;
  for (int i = 1; i <= k; ++i) mask |= std::uint64_t{1} << (w(i) - 1);
  return KSubset::from_mask(mask, w.size());
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw InvalidParameters("bruhat_leq: size mismatch");
  // j = n compares {1..n} with itself.
  for (int j = 1; j < u.size(); ++j) {
    if (!subset_leq(pi_k(u, j), pi_k(v, j))) return false;
  }
  return true;
}

const std::vector<Permutation>& all_permutations(int n) {
  if (n < 1 || n > kMaxGroupN) {
    throw BudgetExceeded("refusing to enumerate S_" + std::to_string(n) + " (limit n <= " +
                         std::to_string(kMaxGroupN) + ")");
  }
  static std::mutex mutex;
  static std::map<int, std::vector<Permutation>> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace(n);
  if (inserted) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    do {
      it->second.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
  }
  return it->second;
}

std::vector<Permutation> bruhat_interval(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw InvalidParameters("bruhat_interval: size mismatch");
  std::vector<Permutation> out;
  if (!bruhat_leq(u, v)) return out;
  for (const auto& w : all_permutations(u.size())) {
    if (bruhat_leq(u, w) && bruhat_leq(w, v)) out.push_back(w);
  }
  return out;
}

Permutation grassmannian_perm(const KSubset& alpha) {
  std::vector<int> images = alpha.elements();
  for (int x = 1; x <= alpha.n(); ++x) {
    if (!alpha.contains(x)) images.push_back(x);
  }
  return Permutation(std::move(images));
}

SubsetFamily positroid_from_interval(const Permutation& u, const Permutation& v, int k) {
  if (k < 1 || k > u.size()) throw InvalidParameters("positroid_from_interval: k out of range");
  SubsetFamily out(k, u.size());
  for (const auto& w : bruhat_interval(u, v)) out.insert(pi_k(w, k));
  return out;
}

bool verify_positroidset(const KSubset& beta, const KSubset& gamma, int t) {
  const SubsetFamily lhs = p_set(beta, gamma, t);
  const Permutation lower = compose(grassmannian_perm(beta), simple_transposition(t, beta.n()));
  const Permutation upper = grassmannian_perm(gamma);
  const SubsetFamily rhs = positroid_from_interval(lower, upper, beta.k());
  if (lhs.empty() != !bruhat_leq(lower, upper)) return false;
  return lhs == rhs;
}

bool is_positroid_bruteforce(const SubsetFamily& family) {
  const int n = family.n();
  const int k = family.k();
  if (n > kMaxPositroidSearchN) {
    throw BudgetExceeded("is_positroid_bruteforce is limited to n <= " + std::to_string(kMaxPositroidSearchN));
  }
  if (family.empty()) return false;
  const auto& group = all_permutations(n);
  const std::size_t size = group.size();
  const std::size_t words = (size + 63) / 64;
  using Bits = std::vector<std::uint64_t>;

  // Bruhat up-sets and down-sets as bitsets over the group.
  std::vector<Bits> up(size, Bits(words, 0)), down(size, Bits(words, 0));
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      if (bruhat_leq(group[a], group[b])) {
        up[a][b / 64] |= std::uint64_t{1} << (b % 64);
        down[b][a / 64] |= std::uint64_t{1} << (a % 64);
      }
    }
  }
  Bits inside(words, 0);
  std::vector<std::size_t> image(size);
  for (std::size_t w = 0; w < size; ++w) {
    const KSubset a = pi_k(group[w], k);
    image[w] = lex_index(a);
    if (family.contains(a)) inside[w / 64] |= std::uint64_t{1} << (w % 64);
  }
  std::vector<std::size_t> wanted;
  for (const auto& a : family) wanted.push_back(lex_index(a));
  std::sort(wanted.begin(), wanted.end());

  for (std::size_t u = 0; u < size; ++u) {
    if (!((inside[u / 64] >> (u % 64)) & 1u)) continue;
    for (std::size_t v = 0; v < size; ++v) {
      if (!((up[u][v / 64] >> (v % 64)) & 1u) || !((inside[v / 64] >> (v % 64)) & 1u)) continue;
      bool contained = true;
      Bits members(words);
      for (std::size_t w = 0; w < words; ++w) {
        members[w] = up[u][w] & down[v][w];
        if (members[w] & ~inside[w]) {
          contained = false;
          break;
        }
      }
      if (!contained) continue;
      std::vector<std::size_t> hit;
      for (std::size_t w = 0; w < size; ++w) {
        if ((members[w / 64] >> (w % 64)) & 1u) hit.push_back(image[w]);
      }
      std::sort(hit.begin(), hit.end());
      hit.erase(std::unique(hit.begin(), hit.end()), hit.end());
      if (hit == wanted) return true;
    }
  }
  return false;
}

}  // namespace rvar
