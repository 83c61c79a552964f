#pragma once

#include <iosfwd>
#include <string>

#include "grouplat/groups.hpp"
#include "grouplat/poset.hpp"

namespace grouplat {

// Poset text format:
//   # comment          only where # starts a word, so labels like Z3#4 survive
//   e <label>          one element
//   r <label> <label>  a relation a < b (closure is taken on load)
Poset read_poset(std::istream& in);
Poset read_poset_file(const std::string& path);
// Writes elements in index order and the covering relations.
void write_poset(std::ostream& out, const Poset& p);

// Group text format:
//   deg <n>
//   gen (1 2 3)(4 5)   1-based cycle notation, one generator per line
struct GroupText {
  std::size_t degree = 0;
  std::vector<std::string> generators;
};
GroupText read_group_text(std::istream& in);
PermGroup read_group(std::istream& in, std::size_t max_order = kDefaultMaxOrder);
PermGroup read_group_file(const std::string& path, std::size_t max_order = kDefaultMaxOrder);

// Canonical text of a group or poset, used for content hashing.
std::string canonical_text(const PermGroup& g);
std::string canonical_text(const Poset& p);

}  // namespace grouplat
