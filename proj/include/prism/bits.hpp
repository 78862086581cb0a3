#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace prism {

using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Square boolean matrix stored row-wise; rows[i][j] == true means i ≤ j.
struct Relation {
  std::vector<Bits> rows;

  Relation() = default;
  explicit Relation(std::size_t n) : rows(n, Bits(n)) {}

  std::size_t size() const { return rows.size(); }
  bool operator()(std::size_t i, std::size_t j) const { return rows[i][j]; }
  void set(std::size_t i, std::size_t j) { rows[i].set(j); }

  /// Column view: all i with i ≤ j.
  Bits column(std::size_t j) const {
    Bits c(size());
    for (std::size_t i = 0; i < size(); ++i)
      if (rows[i][j]) c.set(i);
    return c;
  }

  Relation transposed() const {
    Relation t(size());
    for (std::size_t i = 0; i < size(); ++i)
      for (auto j = rows[i].find_first(); j != Bits::npos; j = rows[i].find_next(j)) t.set(j, i);
    return t;
  }

  friend bool operator==(const Relation&, const Relation&) = default;
};

template <class F>
void for_each_bit(const Bits& b, F&& f) {
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) f(i);
}

inline std::vector<std::size_t> bit_indices(const Bits& b) {
  std::vector<std::size_t> out;
  out.reserve(b.count());
  for_each_bit(b, [&](std::size_t i) { out.push_back(i); });
  return out;
}

}  // namespace prism
