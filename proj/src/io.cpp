#include "grouplat/io.hpp"

#include <fstream>
#include <sstream>

#include "grouplat/errors.hpp"

namespace grouplat {
namespace {

std::string strip_comment(const std::string& line) {
  std::size_t hash = std::string::npos;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '#' && (i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t')) {
      hash = i;
      break;
    }
  }
  std::string s = hash == std::string::npos ? line : line.substr(0, hash);
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string where(std::size_t lineno) { return "line " + std::to_string(lineno) + ": "; }

}  // namespace

Poset read_poset(std::istream& in) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string s = strip_comment(line);
    if (s.empty()) continue;
    std::istringstream is(s);
    std::string kind;
    is >> kind;
    if (kind == "e") {
      std::string label;
      if (!(is >> label)) throw ParseError(where(lineno) + "element line needs a label");
      std::string extra;
      if (is >> extra) throw ParseError(where(lineno) + "labels may not contain spaces");
      labels.push_back(label);
    } else if (kind == "r") {
      std::string a, b, extra;
      if (!(is >> a >> b)) throw ParseError(where(lineno) + "relation line needs two labels");
      if (is >> extra) throw ParseError(where(lineno) + "relation line has extra fields");
      pairs.emplace_back(a, b);
    } else {
      throw ParseError(where(lineno) + "unknown directive '" + kind + "'");
    }
  }
  return Poset::from_label_pairs(std::move(labels), pairs);
}

Poset read_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open poset file '" + path + "'");
  return read_poset(in);
}

void write_poset(std::ostream& out, const Poset& p) {
  for (const auto& l : p.labels()) out << "e " << l << '\n';
  for (auto [a, b] : p.covering_pairs()) out << "r " << p.label(a) << ' ' << p.label(b) << '\n';
}

GroupText read_group_text(std::istream& in) {
  GroupText g;
  bool have_degree = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string s = strip_comment(line);
    if (s.empty()) continue;
    std::istringstream is(s);
    std::string kind;
    is >> kind;
    if (kind == "deg") {
      long long n = 0;
      if (!(is >> n) || n < 1 || n > 60000) throw ParseError(where(lineno) + "degree must be a positive integer");
      if (have_degree) throw ParseError(where(lineno) + "degree given twice");
      g.degree = static_cast<std::size_t>(n);
      have_degree = true;
    } else if (kind == "gen") {
      if (!have_degree) throw ParseError(where(lineno) + "generator before 'deg'");
      std::string rest;
      std::getline(is, rest);
      const auto first = rest.find_first_not_of(" \t");
      g.generators.push_back(first == std::string::npos ? "()" : rest.substr(first));
    } else {
      throw ParseError(where(lineno) + "unknown directive '" + kind + "'");
    }
  }
  if (!have_degree) throw ParseError("group file has no 'deg' line");
  return g;
}

PermGroup read_group(std::istream& in, std::size_t max_order) {
  const auto text = read_group_text(in);
  std::vector<Permutation> gens;
  for (const auto& s : text.generators) gens.push_back(Permutation::parse_cycles(text.degree, s));
  return PermGroup::from_generators(text.degree, std::move(gens), max_order);
}

PermGroup read_group_file(const std::string& path, std::size_t max_order) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open group file '" + path + "'");
  return read_group(in, max_order);
}

std::string canonical_text(const PermGroup& g) {
  std::ostringstream os;
  os << "deg " << g.degree() << '\n';
  for (const auto& s : g.generators()) os << "gen " << s.to_cycles() << '\n';
  return os.str();
}

std::string canonical_text(const Poset& p) {
  std::ostringstream os;
  write_poset(os, p);
  return os.str();
}

}  // namespace grouplat
