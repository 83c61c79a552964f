#include "grouplat/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "grouplat/errors.hpp"

namespace fs = std::filesystem;

namespace grouplat {

std::string content_hash(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : kCacheVersion) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string serialize_profile(const HomologyProfile& h) {
  std::ostringstream os;
  os << "reduced " << (h.reduced() ? 1 : 0) << '\n' << h.to_string();
  return os.str();
}

HomologyProfile parse_profile(const std::string& text) {
  std::istringstream is(text);
  std::string word;
  int reduced = 1;
  if (!(is >> word >> reduced) || word != "reduced") throw ParseError("cached profile lacks a header");
  HomologyProfile h(reduced != 0);
  std::string line;
  std::getline(is, line);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto open = line.find('[');
    const auto close = line.find(']');
    const auto eq = line.find('=');
    if (open == std::string::npos || close == std::string::npos || eq == std::string::npos) {
      throw ParseError("bad cached profile line '" + line + "'");
    }
    const int m = std::stoi(line.substr(open + 1, close - open - 1));
    h.set(m, AbelianGroup::parse(line.substr(eq + 1)));
  }
  return h;
}

ResultCache::ResultCache(std::string root) : root_(std::move(root)) {
  std::error_code ec;
  fs::create_directories(root_, ec);
  if (ec) throw InputError("cannot create cache directory '" + root_ + "': " + ec.message());
}

namespace {

std::string file_name(const std::string& name) {
  std::string s = name;
  for (char& c : s) {
    if (c == '/' || c == '\\' || c == ' ') c = '_';
  }
  return s + ".txt";
}

}  // namespace

std::optional<std::string> ResultCache::load(const std::string& hash, const std::string& name) const {
  std::ifstream in(fs::path(root_) / hash / file_name(name));
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void ResultCache::store(const std::string& hash, const std::string& name, const std::string& content,
                        const std::string& description) {
  std::lock_guard lock(write_mutex_);
  const fs::path dir = fs::path(root_) / hash;
  const bool fresh = !fs::exists(dir);
  fs::create_directories(dir);
  const fs::path target = dir / file_name(name);
  const fs::path tmp = dir / (file_name(name) + ".tmp");
  {
    std::ofstream out(tmp);
    if (!out) throw InputError("cannot write cache entry " + target.string());
    out << content;
  }
  fs::rename(tmp, target);
  if (fresh) {
    std::ofstream index(fs::path(root_) / "index.txt", std::ios::app);
    index << hash << "  " << description << '\n';
  }
}

FiberCache ResultCache::fiber_cache(const std::string& hash, const std::string& description) {
  FiberCache c;
  c.load = [this, hash](const std::string& key) -> std::optional<HomologyProfile> {
    auto text = load(hash, key);
    if (!text) return std::nullopt;
    return parse_profile(*text);
  };
  c.store = [this, hash, description](const std::string& key, const HomologyProfile& h) {
    store(hash, key, serialize_profile(h), description);
  };
  return c;
}

}  // namespace grouplat
