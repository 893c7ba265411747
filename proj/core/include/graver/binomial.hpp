#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graver/graph.hpp"

namespace graver {

using Exponent = std::uint16_t;

/// Monomial in the edge variables, stored as an exponent vector indexed by
/// edge position.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t edge_count) : exps_(edge_count, 0) {}
  explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}

  /// Product of the listed edges, counted with multiplicity.
  static Monomial from_edges(std::size_t edge_count, std::span<const int> edges);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t e) const { return exps_[e]; }
  Exponent& operator[](std::size_t e) { return exps_[e]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  unsigned total_degree() const noexcept;
  Exponent max_exponent() const noexcept;
  bool is_one() const noexcept { return total_degree() == 0; }
  /// Edge indices with positive exponent.
  std::vector<int> support() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

/// Vertex-indexed degree vector; entry k belongs to vertex k+1.
struct ADegree {
  std::vector<int> counts;

  int total() const noexcept;
  int at_vertex(int v) const { return counts.at(static_cast<std::size_t>(v - 1)); }

  friend auto operator<=>(const ADegree&, const ADegree&) = default;
  friend bool operator==(const ADegree&, const ADegree&) = default;
};

/// Sum over edges {i,j} of exponent * (v_i + v_j). Throws
/// std::invalid_argument when the monomial length differs from |E(g)|.
ADegree a_degree(const Monomial& m, const Graph& g);

/// Componentwise a <= b. Throws std::invalid_argument on length mismatch.
bool divides(const Monomial& a, const Monomial& b);

/// Binomial plus - minus with coprime sides. Orientation is whatever the
/// caller built; canonical() picks the lexicographically larger exponent
/// vector as the plus side.
class Binomial {
 public:
  /// Throws std::invalid_argument unless lengths agree, the sides share no
  /// variable and the sides differ.
  Binomial(Monomial plus, Monomial minus);

  const Monomial& plus() const noexcept { return plus_; }
  const Monomial& minus() const noexcept { return minus_; }
  std::size_t edge_count() const noexcept { return plus_.size(); }

  Binomial negated() const { return Binomial(minus_, plus_); }
  Binomial canonical() const { return is_canonical() ? *this : negated(); }
  bool is_canonical() const { return plus_ > minus_; }

  bool is_homogeneous(const Graph& g) const { return a_degree(plus_, g) == a_degree(minus_, g); }
  ADegree degree(const Graph& g) const { return a_degree(plus_, g); }
  unsigned total_degree() const noexcept { return plus_.total_degree(); }
  Exponent max_exponent() const noexcept;

  /// Same binomial up to sign.
  bool same_up_to_sign(const Binomial& other) const { return canonical() == other.canonical(); }

  friend auto operator<=>(const Binomial&, const Binomial&) = default;
  friend bool operator==(const Binomial&, const Binomial&) = default;

 private:
  Monomial plus_;
  Monomial minus_;
};

/// supp(b): edges with positive exponent on either side, sorted.
std::vector<int> support(const Binomial& b);

/// "e1*e4^2*e6"; factors sorted by edge index, "1" for the empty monomial.
std::string to_string(const Monomial& m);
/// "<plus> - <minus>" for the binomial exactly as oriented.
std::string to_string(const Binomial& b);
/// to_string(b.canonical()); the wire format used in JSON and CSV output.
std::string canonical_string(const Binomial& b);

/// Parses a monomial written as edge factors "e3", "e4^2" separated by '*'
/// or whitespace, in any order. Throws ParseError.
Monomial parse_monomial(std::string_view text, std::size_t edge_count);
/// Parses "<monomial> - <monomial>". Throws ParseError, or
/// std::invalid_argument when the sides are not coprime.
Binomial parse_binomial(std::string_view text, std::size_t edge_count);

/// Definition-level primitivity: no candidate other than +-b has its sides
/// dividing the sides of b (in either orientation). The candidate set must
/// contain every primitive binomial whose sides could divide those of b.
bool is_primitive_by_definition(const Binomial& b, std::span<const Binomial> candidates);

/// Sorts by total degree, then canonical string; removes duplicates up to sign.
void sort_canonical(std::vector<Binomial>& bs);

}  // namespace graver
