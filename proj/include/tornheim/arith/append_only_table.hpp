#pragma once

#include <array>
#include <atomic>
#include <cstddef>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace tornheim::arith {

// Append-only memo table. Readers of already-published entries take no lock;
// a single writer (under the mutex) extends the table and then publishes the
// new size with release semantics. Entries never move once written.
template <typename T, std::size_t ChunkSize = 64, std::size_t MaxChunks = 256>
class AppendOnlyTable {
 public:
  static constexpr std::size_t capacity = ChunkSize * MaxChunks;

  AppendOnlyTable() {
    for (auto& c : chunks_) c.store(nullptr, std::memory_order_relaxed);
  }
  ~AppendOnlyTable() {
    for (auto& c : chunks_) delete[] c.load(std::memory_order_relaxed);
  }
  AppendOnlyTable(const AppendOnlyTable&) = delete;
  AppendOnlyTable& operator=(const AppendOnlyTable&) = delete;

  // `extend(table, n)` must return entry n given entries [0, n) via at().
  template <typename Extend>
  const T& get(std::size_t index, Extend&& extend) {
    if (index < size_.load(std::memory_order_acquire)) return slot(index);
    if (index >= capacity) throw std::out_of_range("AppendOnlyTable capacity exceeded");
    std::lock_guard lock(write_mutex_);
    std::size_t n = size_.load(std::memory_order_relaxed);
    while (n <= index) {
      const std::size_t c = n / ChunkSize;
      if (chunks_[c].load(std::memory_order_relaxed) == nullptr)
        chunks_[c].store(new T[ChunkSize], std::memory_order_release);
      slot(n) = extend(*this, n);
      ++n;
      size_.store(n, std::memory_order_release);
    }
    return slot(index);
  }

  // Valid only for indices already published.
  const T& at(std::size_t index) const { return slot(index); }

  std::size_t size() const { return size_.load(std::memory_order_acquire); }

 private:
  T& slot(std::size_t i) const {
    return chunks_[i / ChunkSize].load(std::memory_order_acquire)[i % ChunkSize];
  }

  mutable std::array<std::atomic<T*>, MaxChunks> chunks_;
  std::atomic<std::size_t> size_{0};
  std::mutex write_mutex_;
};

}  // namespace tornheim::arith
