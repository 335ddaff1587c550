#include "susy/gf2.hpp"

#include <utility>

namespace susy {

namespace {

bool bit(const std::vector<std::uint64_t>& row, std::size_t i) {
  return (row[i / 64] >> (i % 64)) & 1u;
}

void flip(std::vector<std::uint64_t>& row, std::size_t i) { row[i / 64] ^= std::uint64_t{1} << (i % 64); }

}  // namespace

Gf2System::Gf2System(std::size_t variables) : variables_(variables), words_((variables + 63) / 64) {}

void Gf2System::add_equation(const std::vector<std::size_t>& vars, bool rhs) {
  Row row(words_, 0);
  for (auto v : vars) flip(row, v);
  rows_.push_back(std::move(row));
  rhs_.push_back(rhs);
}

Gf2System::Reduced Gf2System::reduce() const {
  Reduced r{rows_, rhs_, {}, true};
  std::size_t next = 0;
  for (std::size_t col = 0; col < variables_ && next < r.rows.size(); ++col) {
    std::size_t pivot = next;
    while (pivot < r.rows.size() && !bit(r.rows[pivot], col)) ++pivot;
    if (pivot == r.rows.size()) continue;
    std::swap(r.rows[pivot], r.rows[next]);
    {
      bool tmp = r.rhs[pivot];
      r.rhs[pivot] = r.rhs[next];
      r.rhs[next] = tmp;
    }
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      if (i == next || !bit(r.rows[i], col)) continue;
      for (std::size_t w = 0; w < words_; ++w) r.rows[i][w] ^= r.rows[next][w];
      r.rhs[i] = r.rhs[i] != r.rhs[next];
    }
    r.pivots.push_back(col);
    ++next;
  }
  for (std::size_t i = next; i < r.rows.size(); ++i) {
    if (r.rhs[i]) r.consistent = false;
  }
  r.rows.resize(next);
  r.rhs.resize(next);
  return r;
}

std::size_t Gf2System::rank() const { return reduce().pivots.size(); }

std::optional<Gf2System::Solution> Gf2System::solve() const {
  Reduced r = reduce();
  if (!r.consistent) return std::nullopt;

  std::vector<bool> is_pivot(variables_, false);
  for (auto p : r.pivots) is_pivot[p] = true;

  Solution s;
  s.particular.assign(variables_, false);
  for (std::size_t i = 0; i < r.pivots.size(); ++i) s.particular[r.pivots[i]] = r.rhs[i];

  for (std::size_t free = 0; free < variables_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<bool> v(variables_, false);
    v[free] = true;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      if (bit(r.rows[i], free)) v[r.pivots[i]] = true;
    }
    s.nullspace.push_back(std::move(v));
  }
  return s;
}

}  // namespace susy
