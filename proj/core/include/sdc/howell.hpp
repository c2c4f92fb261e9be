#pragma once

// Canonical Howell form of a submodule of (Z/p^r)^n. Two generating sets span
// the same submodule exactly when their Howell forms are equal, which makes the
// form a hashable key for ideals.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sdc/number_theory.hpp"

namespace sdc {

using ResidueRow = std::vector<std::uint64_t>;

class HowellForm {
 public:
  /// The zero submodule of (Z/p^r)^columns.
  HowellForm(std::uint64_t p, unsigned r, std::size_t columns);

  /// Submodule spanned by the given rows (each of length `columns`).
  static HowellForm span(std::uint64_t p, unsigned r, std::size_t columns,
                         std::vector<ResidueRow> rows);

  std::uint64_t p() const { return p_; }
  unsigned r() const { return r_; }
  std::size_t columns() const { return columns_; }

  /// Rows in pivot order; row i has zeros left of pivot_columns()[i] and the
  /// value p^{pivot_valuations()[i]} at it.
  const std::vector<ResidueRow>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivot_columns() const { return pivot_columns_; }
  const std::vector<unsigned>& pivot_valuations() const { return pivot_valuations_; }

  /// log_p of the number of elements.
  std::uint64_t log_size() const;
  BigInt size() const;

  bool contains(std::span<const std::uint64_t> vector) const;
  bool contains(const HowellForm& other) const;
  HowellForm join(const HowellForm& other) const;

  /// Every element exactly once, as sum_i a_i row_i with 0 <= a_i < p^{r - v_i}.
  /// The caller bounds the size.
  template <typename Visitor>
  void for_each_element(Visitor&& visit) const;

  friend bool operator==(const HowellForm& a, const HowellForm& b) {
    return a.columns_ == b.columns_ && a.rows_ == b.rows_;
  }
  friend bool operator<(const HowellForm& a, const HowellForm& b) {
    return a.rows_ < b.rows_;
  }
  std::size_t hash() const;

 private:
  std::uint64_t p_;
  unsigned r_;
  std::uint64_t modulus_;
  std::size_t columns_;
  std::vector<ResidueRow> rows_;
  std::vector<std::size_t> pivot_columns_;
  std::vector<unsigned> pivot_valuations_;
};

struct HowellHash {
  std::size_t operator()(const HowellForm& h) const { return h.hash(); }
};

/// {v in (Z/p^r)^n : f(v) = 0 for every functional f}; each functional is a
/// row of length n acting by the dot product.
HowellForm kernel(std::uint64_t p, unsigned r, std::size_t n,
                  const std::vector<ResidueRow>& functionals);

template <typename Visitor>
void HowellForm::for_each_element(Visitor&& visit) const {
  const std::size_t k = rows_.size();
  std::vector<std::uint64_t> limits(k);
  for (std::size_t i = 0; i < k; ++i) limits[i] = checked_pow(p_, r_ - pivot_valuations_[i]);
  std::vector<std::uint64_t> digits(k, 0);
  ResidueRow current(columns_, 0);
  while (true) {
    visit(static_cast<const ResidueRow&>(current));
    std::size_t i = 0;
    for (; i < k; ++i) {
      for (std::size_t c = 0; c < columns_; ++c) current[c] = (current[c] + rows_[i][c]) % modulus_;
      if (++digits[i] < limits[i]) break;
      // digits[i] wrapped: remove limits[i] * row_i, which need not vanish.
      for (std::size_t c = 0; c < columns_; ++c) {
        current[c] = (current[c] + modulus_ - mul_mod(limits[i] % modulus_, rows_[i][c], modulus_)) %
                     modulus_;
      }
      digits[i] = 0;
    }
    if (i == k) return;
  }
}

}  // namespace sdc
