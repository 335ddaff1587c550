#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace susy {

/// Dense linear system over the two-element field, rows packed in 64-bit
/// words. Sized for the edge-parity systems in this library (tens of
/// variables), not for large sparse codes.
class Gf2System {
 public:
  explicit Gf2System(std::size_t variables);

  std::size_t variables() const { return variables_; }
  std::size_t equations() const { return rows_.size(); }

  /// Adds  sum_{i in vars} x_i = rhs. Repeated indices cancel.
  void add_equation(const std::vector<std::size_t>& vars, bool rhs);

  struct Solution {
    std::vector<bool> particular;
    /// Basis of the solution space of the homogeneous system.
    std::vector<std::vector<bool>> nullspace;
  };

  /// nullopt when inconsistent.
  std::optional<Solution> solve() const;
  std::size_t rank() const;

 private:
  using Row = std::vector<std::uint64_t>;

  struct Reduced {
    std::vector<Row> rows;
    std::vector<bool> rhs;
    std::vector<std::size_t> pivots;
    bool consistent = true;
  };
  Reduced reduce() const;

  std::size_t variables_;
  std::size_t words_;
  std::vector<Row> rows_;
  std::vector<bool> rhs_;
};

}  // namespace susy
