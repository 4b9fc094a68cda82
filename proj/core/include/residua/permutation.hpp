#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace residua {

using Point = std::uint16_t;

// A bijection on {0, ..., degree-1}. Products compose left to right:
// (a * b)(x) = b(a(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<Point> images);

  // Parses cycle notation such as "(1 2 3)(4 5)". An empty string or "()" is the identity.
  static Permutation from_cycles(std::string_view text, std::size_t degree, bool one_indexed = true);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  std::optional<Point> first_moved() const;
  Permutation inverse() const;
  std::uint64_t element_order() const;
  Permutation pow(std::uint64_t k) const;
  std::string to_cycles(bool one_indexed = true) const;
  std::size_t hash() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

Permutation identity(std::size_t degree);
// h^-1 g h
Permutation conjugate(const Permutation& g, const Permutation& h);
// a^-1 b^-1 a b
Permutation commutator(const Permutation& a, const Permutation& b);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

}  // namespace residua
