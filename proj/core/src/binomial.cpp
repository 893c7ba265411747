#include "graver/binomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "graver/error.hpp"

namespace graver {

Monomial Monomial::from_edges(std::size_t edge_count, std::span<const int> edges) {
  Monomial m(edge_count);
  for (int e : edges) {
    if (e < 0 || static_cast<std::size_t>(e) >= edge_count) throw std::out_of_range("edge index out of range");
    ++m.exps_[static_cast<std::size_t>(e)];
  }
  return m;
}

unsigned Monomial::total_degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

Exponent Monomial::max_exponent() const noexcept {
  return exps_.empty() ? Exponent{0} : *std::max_element(exps_.begin(), exps_.end());
}

std::vector<int> Monomial::support() const {
  std::vector<int> out;
  for (std::size_t e = 0; e < exps_.size(); ++e)
    if (exps_[e] > 0) out.push_back(static_cast<int>(e));
  return out;
}

int ADegree::total() const noexcept { return std::accumulate(counts.begin(), counts.end(), 0); }

ADegree a_degree(const Monomial& m, const Graph& g) {
  if (m.size() != static_cast<std::size_t>(g.edge_count()))
    throw std::invalid_argument("monomial length does not match the edge count");
  ADegree d{std::vector<int>(static_cast<std::size_t>(g.vertex_count()), 0)};
  for (std::size_t e = 0; e < m.size(); ++e) {
    if (m[e] == 0) continue;
    const Edge& edge = g.edge(static_cast<int>(e));
    d.counts[static_cast<std::size_t>(edge.u - 1)] += m[e];
    d.counts[static_cast<std::size_t>(edge.v - 1)] += m[e];
  }
  return d;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw std::invalid_argument("monomial lengths differ");
  for (std::size_t e = 0; e < a.size(); ++e)
    if (a[e] > b[e]) return false;
  return true;
}

Binomial::Binomial(Monomial plus, Monomial minus) : plus_(std::move(plus)), minus_(std::move(minus)) {
  if (plus_.size() != minus_.size()) throw std::invalid_argument("binomial sides have different lengths");
  for (std::size_t e = 0; e < plus_.size(); ++e)
    if (plus_[e] > 0 && minus_[e] > 0)
      throw std::invalid_argument("binomial sides share " + default_edge_label(static_cast<int>(e)));
  if (plus_ == minus_) throw std::invalid_argument("binomial sides are equal");
}

Exponent Binomial::max_exponent() const noexcept { return std::max(plus_.max_exponent(), minus_.max_exponent()); }

std::vector<int> support(const Binomial& b) {
  std::vector<int> out;
  for (std::size_t e = 0; e < b.edge_count(); ++e)
    if (b.plus()[e] > 0 || b.minus()[e] > 0) out.push_back(static_cast<int>(e));
  return out;
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t e = 0; e < m.size(); ++e) {
    if (m[e] == 0) continue;
    if (!out.empty()) out += '*';
    out += default_edge_label(static_cast<int>(e));
    if (m[e] >= 2) out += '^' + std::to_string(m[e]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Binomial& b) { return to_string(b.plus()) + " - " + to_string(b.minus()); }

std::string canonical_string(const Binomial& b) { return to_string(b.canonical()); }

Monomial parse_monomial(std::string_view text, std::size_t edge_count) {
  Monomial m(edge_count);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) ++i;
  };
  auto read_number = [&](const char* what) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    unsigned value = 0;
    auto res = std::from_chars(text.data() + start, text.data() + i, value);
    if (start == i || res.ec != std::errc()) throw ParseError(std::string("expected ") + what + " in '" + std::string(text) + "'");
    return value;
  };
  skip();
  if (i < text.size() && text[i] == '1' && text.find('e') == std::string_view::npos) {
    ++i;
    skip();
    if (i != text.size()) throw ParseError("unexpected text after '1' in '" + std::string(text) + "'");
    return m;
  }
  bool any = false;
  while (skip(), i < text.size()) {
    if (text[i] != 'e') throw ParseError("expected an edge factor like e3 in '" + std::string(text) + "'");
    ++i;
    unsigned idx = read_number("edge number");
    if (idx == 0 || idx > edge_count) throw ParseError("edge e" + std::to_string(idx) + " is out of range");
    unsigned power = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      power = read_number("exponent");
    }
    m[idx - 1] = static_cast<Exponent>(m[idx - 1] + power);
    any = true;
  }
  if (!any) throw ParseError("empty monomial");
  return m;
}

Binomial parse_binomial(std::string_view text, std::size_t edge_count) {
  auto dash = text.find('-');
  if (dash == std::string_view::npos || text.find('-', dash + 1) != std::string_view::npos)
    throw ParseError("expected exactly one ' - ' in '" + std::string(text) + "'");
  return Binomial(parse_monomial(text.substr(0, dash), edge_count), parse_monomial(text.substr(dash + 1), edge_count));
}

bool is_primitive_by_definition(const Binomial& b, std::span<const Binomial> candidates) {
  for (const Binomial& c : candidates) {
    if (c.same_up_to_sign(b)) continue;
    if (divides(c.plus(), b.plus()) && divides(c.minus(), b.minus())) return false;
    if (divides(c.minus(), b.plus()) && divides(c.plus(), b.minus())) return false;
  }
  return true;
}

void sort_canonical(std::vector<Binomial>& bs) {
  std::vector<std::pair<std::pair<unsigned, std::string>, Binomial>> keyed;
  keyed.reserve(bs.size());
  for (const Binomial& b : bs) {
    Binomial c = b.canonical();
    keyed.push_back({{c.total_degree(), to_string(c)}, c});
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first == y.first; }),
              keyed.end());
  bs.clear();
  for (auto& [key, b] : keyed) bs.push_back(std::move(b));
}

}  // namespace graver
