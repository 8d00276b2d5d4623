#pragma once

#include <atomic>
#include <mutex>
#include <optional>

namespace permchar
{

// Thread-safe compute-once slot. A throwing factory leaves the slot empty,
// so the next call retries.
template <class T>
class Lazy
{
public:
  template <class F>
  const T &get(F &&make) const
  {
    if (ready_.load(std::memory_order_acquire))
      return *value_;
    std::lock_guard lock(mutex_);
    if (!value_) {
      value_.emplace(make());
      ready_.store(true, std::memory_order_release);
    }
    return *value_;
  }

private:
  mutable std::recursive_mutex mutex_;
  mutable std::atomic<bool> ready_{false};
  mutable std::optional<T> value_;
};

} // namespace permchar
