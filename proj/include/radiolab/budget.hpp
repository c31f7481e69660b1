#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

namespace radiolab {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

// Found and None are answers; Timeout is not. None means the search space
// was exhausted.
enum class SearchStatus { Found, None, Timeout };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found:
      return "found";
    case SearchStatus::None:
      return "none";
    case SearchStatus::Timeout:
      return "timeout";
  }
  return "?";
}

// Search limit: a count of search-tree nodes, optionally tightened by wall-clock time.
struct Deadline {
  std::uint64_t max_nodes = kDefaultNodeBudget;
  std::optional<std::chrono::milliseconds> wall_clock;
};

class NodeCounter {
 public:
  explicit NodeCounter(const Deadline& deadline)
      : max_nodes_(deadline.max_nodes), start_(std::chrono::steady_clock::now()), wall_(deadline.wall_clock) {}

  // Charges one node; false once the budget is spent.
  bool tick() {
    if (exhausted_) return false;
    if (++used_ > max_nodes_) {
      exhausted_ = true;
      return false;
    }
    if (wall_ && (used_ & 0x3ff) == 0 && std::chrono::steady_clock::now() - start_ > *wall_) {
      exhausted_ = true;
      return false;
    }
    return true;
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t max_nodes_;
  std::uint64_t used_ = 0;
  bool exhausted_ = false;
  std::chrono::steady_clock::time_point start_;
  std::optional<std::chrono::milliseconds> wall_;
};

}  // namespace radiolab
