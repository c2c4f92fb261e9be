#include "sdc/howell.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/container_hash/hash.hpp>

namespace sdc {

namespace {

unsigned valuation_mod(std::uint64_t value, std::uint64_t p, unsigned r) {
  if (value == 0) return r;
  unsigned v = 0;
  while (value % p == 0) {
    value /= p;
    ++v;
  }
  return v;
}

bool is_zero_row(const ResidueRow& row) {
  return std::all_of(row.begin(), row.end(), [](std::uint64_t v) { return v == 0; });
}

// row -= factor * pivot (mod m), from column `from` on.
void subtract_multiple(ResidueRow& row, const ResidueRow& pivot, std::uint64_t factor,
                       std::uint64_t m, std::size_t from) {
  if (factor == 0) return;
  for (std::size_t c = from; c < row.size(); ++c) {
    if (pivot[c] != 0) row[c] = (row[c] + m - mul_mod(factor, pivot[c], m)) % m;
  }
}

}  // namespace

HowellForm::HowellForm(std::uint64_t p, unsigned r, std::size_t columns)
    : p_(p), r_(r), modulus_(checked_pow(p, r)), columns_(columns) {}

HowellForm HowellForm::span(std::uint64_t p, unsigned r, std::size_t columns,
                            std::vector<ResidueRow> rows) {
  HowellForm out(p, r, columns);
  const std::uint64_t m = out.modulus_;
  std::vector<ResidueRow> work;
  work.reserve(rows.size());
  for (auto& row : rows) {
    if (row.size() != columns) {
      throw std::invalid_argument("HowellForm::span: row of length " + std::to_string(row.size()) +
                                  ", expected " + std::to_string(columns));
    }
    for (auto& v : row) v %= m;
    if (!is_zero_row(row)) work.push_back(std::move(row));
  }

  for (std::size_t c = 0; c < columns && !work.empty(); ++c) {
    std::size_t best = work.size();
    unsigned best_v = r;
    for (std::size_t i = 0; i < work.size(); ++i) {
      const unsigned v = valuation_mod(work[i][c], p, r);
      if (v < best_v) {
        best_v = v;
        best = i;
        if (v == 0) break;
      }
    }
    if (best == work.size()) continue;
    ResidueRow pivot = std::move(work[best]);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(best));
    const std::uint64_t scale = checked_pow(p, best_v);
    const std::uint64_t unit_inv = inverse_mod((pivot[c] / scale) % m, m);
    for (auto& v : pivot) v = mul_mod(v, unit_inv, m);
    for (auto& row : work) {
      if (row[c] != 0) subtract_multiple(row, pivot, row[c] / scale, m, c);
    }
    // p^{r-v} * pivot vanishes at c but may carry information further right.
    if (best_v > 0) {
      ResidueRow extra(columns, 0);
      const std::uint64_t factor = checked_pow(p, r - best_v);
      for (std::size_t k = c + 1; k < columns; ++k) extra[k] = mul_mod(pivot[k], factor, m);
      if (!is_zero_row(extra)) work.push_back(std::move(extra));
    }
    std::erase_if(work, is_zero_row);
    out.rows_.push_back(std::move(pivot));
    out.pivot_columns_.push_back(c);
    out.pivot_valuations_.push_back(best_v);
  }

  for (std::size_t j = 0; j < out.rows_.size(); ++j) {
    const std::size_t c = out.pivot_columns_[j];
    const std::uint64_t scale = checked_pow(p, out.pivot_valuations_[j]);
    for (std::size_t i = 0; i < j; ++i) {
      subtract_multiple(out.rows_[i], out.rows_[j], out.rows_[i][c] / scale, m, c);
    }
  }
  return out;
}

std::uint64_t HowellForm::log_size() const {
  std::uint64_t total = 0;
  for (auto v : pivot_valuations_) total += r_ - v;
  return total;
}

BigInt HowellForm::size() const { return big_pow(BigInt(p_), log_size()); }

bool HowellForm::contains(std::span<const std::uint64_t> vector) const {
  if (vector.size() != columns_) return false;
  ResidueRow w(vector.begin(), vector.end());
  for (auto& v : w) v %= modulus_;
  std::size_t next_column = 0;
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    const std::size_t c = pivot_columns_[j];
    for (; next_column < c; ++next_column) {
      if (w[next_column] != 0) return false;
    }
    const std::uint64_t scale = checked_pow(p_, pivot_valuations_[j]);
    if (w[c] % scale != 0) return false;
    subtract_multiple(w, rows_[j], w[c] / scale, modulus_, c);
    next_column = c + 1;
  }
  for (; next_column < columns_; ++next_column) {
    if (w[next_column] != 0) return false;
  }
  return true;
}

bool HowellForm::contains(const HowellForm& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [this](const ResidueRow& row) { return contains(row); });
}

HowellForm HowellForm::join(const HowellForm& other) const {
  if (other.columns_ != columns_ || other.p_ != p_ || other.r_ != r_) {
    throw std::invalid_argument("HowellForm::join: incompatible modules");
  }
  std::vector<ResidueRow> rows = rows_;
  rows.insert(rows.end(), other.rows_.begin(), other.rows_.end());
  return span(p_, r_, columns_, std::move(rows));
}

std::size_t HowellForm::hash() const {
  std::size_t seed = columns_;
  for (const auto& row : rows_) boost::hash_combine(seed, boost::hash_range(row.begin(), row.end()));
  return seed;
}

HowellForm kernel(std::uint64_t p, unsigned r, std::size_t n,
                  const std::vector<ResidueRow>& functionals) {
  const std::size_t m = functionals.size();
  std::vector<ResidueRow> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ResidueRow row(m + n, 0);
    for (std::size_t k = 0; k < m; ++k) row[k] = functionals[k].at(i);
    row[m + i] = 1;
    rows.push_back(std::move(row));
  }
  const HowellForm augmented = HowellForm::span(p, r, m + n, std::move(rows));
  std::vector<ResidueRow> kernel_rows;
  for (std::size_t j = 0; j < augmented.rows().size(); ++j) {
    if (augmented.pivot_columns()[j] < m) continue;
    const auto& row = augmented.rows()[j];
    kernel_rows.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(m), row.end());
  }
  return HowellForm::span(p, r, n, std::move(kernel_rows));
}

}  // namespace sdc
