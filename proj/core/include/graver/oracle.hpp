#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "graver/binomial.hpp"
#include "graver/graph.hpp"
#include "graver/walk.hpp"

namespace graver {

/// Integer vector u indexed by edges with A_G u = 0.
struct KernelVector {
  std::vector<int> entries;

  Monomial positive_part() const;
  Monomial negative_part() const;
  /// x^{u+} - x^{u-}.
  Binomial binomial() const;
  std::vector<int> support() const;
  int l1_norm() const;

  friend auto operator<=>(const KernelVector&, const KernelVector&) = default;
  friend bool operator==(const KernelVector&, const KernelVector&) = default;
};

inline constexpr std::size_t kDefaultKernelCap = 5'000'000;

/// Every nonzero u with A_G u = 0 and max |u_e| <= bound, one per sign pair
/// (the first nonzero entry is positive), sorted. Throws CapExceeded.
std::vector<KernelVector> bounded_kernel_vectors(const Graph& g, int bound, std::size_t cap = kDefaultKernelCap);

/// Primitive binomials among the bounded kernel vectors, canonical and
/// sorted by total degree then string. Exact once bound covers the largest
/// Graver exponent.
std::vector<Binomial> graver_oracle(const Graph& g, int bound = 2);

/// Thrown when the bound-3 pass finds Graver elements the bound-2 pass missed.
class OracleBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// graver_oracle at bound 2, checked against bound 3. Throws OracleBoundError.
std::vector<Binomial> graver_oracle_checked(const Graph& g);

inline constexpr std::size_t kDefaultFiberCap = 1'000'000;

/// All monomials of A-degree d, sorted. Throws CapExceeded.
std::vector<Monomial> fiber(const Graph& g, const ADegree& d, std::size_t cap = kDefaultFiberCap);

struct FiberRecord {
  ADegree degree;
  std::vector<Monomial> monomials;     // sorted
  std::vector<int> component;          // per monomial, 0-based, numbered by first member
  int component_count = 0;
};

struct MinimalGeneration {
  int mu = 0;
  std::vector<Binomial> minimal_set;        // sort_canonical order
  std::vector<Binomial> indispensable_set;  // sort_canonical order
  std::uint64_t systems_count = 1;
  std::vector<FiberRecord> fibers;          // candidate degrees in processing order
  std::vector<Binomial> generators;         // one committed minimal system
};

/// Degree-by-degree minimal generation over the candidate degrees of the
/// checked Graver oracle. Throws CapExceeded, std::overflow_error when the
/// systems count does not fit in 64 bits.
MinimalGeneration minimal_generation(const Graph& g, std::size_t fiber_cap = kDefaultFiberCap);

/// Number of spanning trees of the complete multigraph on parts of the given
/// sizes, with |C_i||C_j| parallel edges between parts i and j.
std::uint64_t weighted_spanning_trees(std::span<const std::size_t> part_sizes);

/// No kernel vector of the support subgraph (bounds 2 and 3) has support
/// strictly inside supp(b). Throws std::invalid_argument if b is not in the
/// toric ideal.
bool circuit_oracle(const Graph& g, const Binomial& b);

/// The toric ideal of the induced region is generated by B_w alone.
bool fundamental_oracle(const Graph& g, const ClosedWalk& w);

}  // namespace graver
