#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dpc {

// Raised when an exhaustive enumeration would exceed its configured size.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Limits {
  std::size_t max_cover_edges = 24;      // 2^m covers
  std::size_t max_search_vertices = 32;  // branch-and-bound over Φ-maps
  std::size_t max_potential_vertices = 24;
  std::size_t max_sparsity_vertices = 20;
  std::size_t max_fdp_vertices = 5;
  std::size_t max_fdp_edges = 10;
  unsigned threads = 1;
};

inline void require_within(std::size_t value, std::size_t limit, const std::string& what) {
  if (value > limit) {
    throw BudgetExceeded(what + " " + std::to_string(value) + " exceeds limit " +
                         std::to_string(limit));
  }
}

}  // namespace dpc
