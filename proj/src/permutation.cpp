#include "grouplat/permutation.hpp"

#include <numeric>
#include <sstream>

#include "grouplat/errors.hpp"

namespace grouplat {

Permutation::Permutation(std::vector<std::uint16_t> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) throw InputError("image array is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint16_t> images(n);
  std::iota(images.begin(), images.end(), std::uint16_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::parse_cycles(std::size_t n, std::string_view text) {
  std::vector<std::uint16_t> images(n);
  std::iota(images.begin(), images.end(), std::uint16_t{0});
  std::vector<char> moved(n, 0);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ',')) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation: " + std::string(text));
    ++pos;
    std::vector<std::uint16_t> cycle;
    for (;;) {
      skip_space();
      if (pos >= text.size()) throw ParseError("unterminated cycle: " + std::string(text));
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t value = 0;
      std::size_t digits = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        ++pos;
        ++digits;
      }
      if (digits == 0) throw ParseError("expected a point in cycle: " + std::string(text));
      if (value < 1 || value > n) {
        throw ParseError("point " + std::to_string(value) + " outside 1.." + std::to_string(n));
      }
      cycle.push_back(static_cast<std::uint16_t>(value - 1));
    }
    for (auto p : cycle) {
      if (moved[p]) throw ParseError("point repeated across cycles: " + std::string(text));
      moved[p] = 1;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_space();
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& b) const {
  if (b.degree() != degree()) throw InputError("degree mismatch in product");
  std::vector<std::uint16_t> images(degree());
  for (std::size_t i = 0; i < degree(); ++i) images[i] = b.images_[images_[i]];
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint16_t> images(degree());
  for (std::size_t i = 0; i < degree(); ++i) images[images_[i]] = static_cast<std::uint16_t>(i);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  std::vector<char> seen(degree(), 0);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_cycles() const {
  std::ostringstream os;
  std::vector<char> seen(degree(), 0);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    os << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      if (!first) os << ' ';
      os << j + 1;
      first = false;
    }
    os << ')';
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

}  // namespace grouplat
