#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace grouplat {

// Bijection of {0, ..., n-1}. Text forms use 1-based cycle notation.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint16_t> images);
  static Permutation identity(std::size_t n);
  // "(1 2 3)(4 5)" on n points; "()" is the identity.
  static Permutation parse_cycles(std::size_t n, std::string_view text);

  std::size_t degree() const { return images_.size(); }
  std::uint16_t operator()(std::size_t point) const { return images_[point]; }
  const std::vector<std::uint16_t>& images() const { return images_; }

  // (a * b)(x) = b(a(x)): apply a first.
  Permutation operator*(const Permutation& b) const;
  Permutation inverse() const;
  bool is_identity() const;
  std::size_t order() const;

  std::string to_cycles() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<std::uint16_t> images_;
};

}  // namespace grouplat
