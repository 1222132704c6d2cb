#pragma once

#include <cstddef>
#include <deque>
#include <unordered_map>
#include <utility>

namespace hookvan {

// Bounded memo table. Once `capacity` entries are stored the oldest
// insertion is dropped. Not synchronized; confine each instance to one
// thread.
template <typename Key, typename Value, typename Hash = std::hash<Key>>
class MemoCache {
 public:
  explicit MemoCache(std::size_t capacity) : capacity_(capacity == 0 ? 1 : capacity) {}

  const Value* find(const Key& key) {
    auto it = map_.find(key);
    if (it == map_.end()) {
      ++misses_;
      return nullptr;
    }
    ++hits_;
    return &it->second;
  }

  void insert(Key key, Value value) {
    auto [it, inserted] = map_.try_emplace(std::move(key), std::move(value));
    if (!inserted) return;
    order_.push_back(&it->first);
    while (map_.size() > capacity_) {
      map_.erase(*order_.front());
      order_.pop_front();
      ++evictions_;
    }
  }

  void clear() {
    map_.clear();
    order_.clear();
  }

  std::size_t size() const { return map_.size(); }
  std::size_t capacity() const { return capacity_; }
  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }
  std::size_t evictions() const { return evictions_; }

 private:
  std::size_t capacity_;
  std::unordered_map<Key, Value, Hash> map_;
  // Node-based map: key addresses are stable until erased.
  std::deque<const Key*> order_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
  std::size_t evictions_ = 0;
};

}  // namespace hookvan
