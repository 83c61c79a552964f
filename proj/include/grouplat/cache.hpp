#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "grouplat/group_bounds.hpp"
#include "grouplat/homology.hpp"

namespace grouplat {

inline constexpr std::string_view kCacheVersion = "grouplat-cache-1";

// 64-bit FNV-1a as 16 hex digits.
std::string content_hash(std::string_view text);

std::string serialize_profile(const HomologyProfile& h);
HomologyProfile parse_profile(const std::string& text);

// One directory per content hash; `index.txt` at the top lists every hash
// with a one-line description.
class ResultCache {
public:
  explicit ResultCache(std::string root);

  const std::string& root() const { return root_; }
  std::optional<std::string> load(const std::string& hash, const std::string& name) const;
  void store(const std::string& hash, const std::string& name, const std::string& content,
             const std::string& description);

  // Hooks for group_betti_bounds; entries live under `hash`.
  FiberCache fiber_cache(const std::string& hash, const std::string& description);

private:
  std::string root_;
  std::mutex write_mutex_;
};

}  // namespace grouplat
