#include "rvar/parameterization.hpp"

namespace rvar {

YShape::YShape(KSubset beta, KSubset gamma) : beta_(std::move(beta)), gamma_(std::move(gamma)) {
  if (!subset_leq(beta_, gamma_)) {
    throw EmptyInterval("Y shape needs beta <= gamma, got " + beta_.to_string() + ", " + gamma_.to_string());
  }
  for (int i = 0; i < k(); ++i) {
    if (gamma_[i] > beta_[i]) {
      ++unit_count_;
      units_.emplace_back(i, beta_[i] - 1);
    }
    for (int j = beta_[i] + 1; j < gamma_[i]; ++j) {
      ++free_count_;
      free_.emplace_back(i, j - 1);
    }
  }
}

std::uint64_t y_point_count(const YShape& shape, std::uint64_t q) {
  std::uint64_t count = 1;
  for (int i = 0; i < shape.free_count(); ++i) count *= q;
  for (int i = 0; i < shape.unit_count(); ++i) count *= q - 1;
  return count;
}

void for_each_y(const KSubset& beta, const KSubset& gamma, const PrimeField& field,
                const std::function<void(const Matrix<PrimeField>&)>& visit) {
  const YShape shape(beta, gamma);
  const std::uint32_t q = field.characteristic();
  Matrix<PrimeField> m(field, shape.k(), shape.n());
  for (int i = 0; i < shape.k(); ++i) m(i, gamma[i] - 1) = field.one();

  // Odometer over unit entries (1..q-1) followed by free entries (0..q-1).
  std::vector<std::pair<int, int>> slots = shape.unit_positions();
  const std::size_t unit_slots = slots.size();
  slots.insert(slots.end(), shape.free_positions().begin(), shape.free_positions().end());
  std::vector<std::uint32_t> digit(slots.size());
  for (std::size_t s = 0; s < slots.size(); ++s) {
    digit[s] = s < unit_slots ? 1 : 0;
    m(slots[s].first, slots[s].second) = digit[s];
  }
  while (true) {
    visit(m);
    std::size_t s = 0;
    for (; s < slots.size(); ++s) {
      const std::uint32_t lo = s < unit_slots ? 1 : 0;
      if (digit[s] + 1 < q) {
        ++digit[s];
        m(slots[s].first, slots[s].second) = digit[s];
        break;
      }
      digit[s] = lo;
      m(slots[s].first, slots[s].second) = lo;
    }
    if (s == slots.size()) return;
  }
}

}  // namespace rvar
