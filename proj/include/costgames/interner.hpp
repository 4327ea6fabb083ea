#pragma once

#include <cstdint>
#include <cstring>
#include <vector>

namespace cg {

// Maps fixed-width int32 tuples to dense ids (open addressing).
class FlatInterner {
 public:
  explicit FlatInterner(int width) : w_(width) { table_.assign(1024, -1); }

  int size() const { return n_; }
  int width() const { return w_; }
  const std::int32_t* get(int id) const { return data_.data() + static_cast<std::size_t>(id) * w_; }
  std::vector<std::int32_t>& data() { return data_; }
  const std::vector<int>& table() const { return table_; }

  int find(const std::int32_t* key) const {
    std::size_t mask = table_.size() - 1;
    for (std::size_t h = hash(key) & mask;; h = (h + 1) & mask) {
      int id = table_[h];
      if (id < 0) return -1;
      if (std::memcmp(get(id), key, sizeof(std::int32_t) * w_) == 0) return id;
    }
  }

  // Returns (id, inserted).
  std::pair<int, bool> intern(const std::int32_t* key) {
    if (static_cast<std::size_t>(n_ + 1) * 2 > table_.size()) grow();
    std::size_t mask = table_.size() - 1;
    for (std::size_t h = hash(key) & mask;; h = (h + 1) & mask) {
      int id = table_[h];
      if (id < 0) {
        table_[h] = n_;
        data_.insert(data_.end(), key, key + w_);
        return {n_++, true};
      }
      if (std::memcmp(get(id), key, sizeof(std::int32_t) * w_) == 0) return {id, false};
    }
  }

 private:
  std::size_t hash(const std::int32_t* key) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < w_; ++i) {
      h ^= static_cast<std::uint32_t>(key[i]);
      h *= 1099511628211ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }

  void grow() {
    std::vector<int> t(table_.size() * 2, -1);
    std::size_t mask = t.size() - 1;
    for (int id = 0; id < n_; ++id) {
      std::size_t h = hash(get(id)) & mask;
      while (t[h] >= 0) h = (h + 1) & mask;
      t[h] = id;
    }
    table_.swap(t);
  }

  int w_;
  int n_ = 0;
  std::vector<std::int32_t> data_;
  std::vector<int> table_;
};

}  // namespace cg
