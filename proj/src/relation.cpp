#include "rvar/relation.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "rvar/errors.hpp"

namespace rvar {

int sort_sign(std::span<const int> seq) {
  int sign = 1;
  for (std::size_t x = 0; x < seq.size(); ++x) {
    for (std::size_t y = x + 1; y < seq.size(); ++y) {
      if (seq[x] == seq[y]) return 0;
      if (seq[x] > seq[y]) sign = -sign;
    }
  }
  return sign;
}

PluckerRelation plucker_relation_terms(const KSubset& a, const KSubset& b, int i) {
  if (a.k() != b.k() || a.n() != b.n()) throw InvalidParameters("relation subsets differ in (k, n)");
  if (!b.contains(i) || a.contains(i)) {
    throw InvalidParameters("exchange element " + std::to_string(i) + " is not in " + b.to_string() + " \\ " +
                            a.to_string());
  }
  const int k = a.k();

  // b as the sequence (i, b \ {i}).
  std::vector<int> b_rest;
  for (int x : b.elements()) {
    if (x != i) b_rest.push_back(x);
  }
  std::vector<int> b_seq{i};
  b_seq.insert(b_seq.end(), b_rest.begin(), b_rest.end());
  const int b_sign = sort_sign(b_seq);

  PluckerRelation rel{a, b, i, {}};
  const std::vector<int> a_seq = a.elements();
  for (int m = 0; m < k; ++m) {
    const int j = a_seq[m];
    if (b.contains(j)) continue;  // b \ {i} u {j} would repeat j
    std::vector<int> left_seq = a_seq;
    left_seq[m] = i;
    std::vector<int> right_seq{j};
    right_seq.insert(right_seq.end(), b_rest.begin(), b_rest.end());
    const int sign = b_sign * sort_sign(left_seq) * sort_sign(right_seq);
    rel.terms.push_back({a.exchange(j, i), b.exchange(i, j), sign, j});
  }
  return rel;
}

const std::vector<PluckerRelation>& all_plucker_relations(int k, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<PluckerRelation>> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace({k, n});
  if (!inserted) return it->second;
  std::vector<PluckerRelation>& out = it->second;
  const auto& subsets = enumerate_subsets(k, n);
  for (const auto& a : subsets) {
    for (const auto& b : subsets) {
      for (int i : b.elements()) {
        if (!a.contains(i)) out.push_back(plucker_relation_terms(a, b, i));
      }
    }
  }
  return out;
}

}  // namespace rvar
