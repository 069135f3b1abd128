#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "batchhl/types.hpp"

namespace batchhl::detail {

/// Monotone integer priority queue keyed by (distance, class). Classes order ties
/// within a distance; items with equal keys come out FIFO. Pushing a key below the
/// last popped one is a logic error and throws. Peeking may move the scan cursor
/// ahead; a later push between the last pop and the cursor pulls it back.
template <typename T, unsigned Classes = 1>
class BucketQueue {
 public:
  struct Entry {
    Dist d;
    unsigned cls;
    T item;
  };

  bool empty() const noexcept { return pending_ == 0; }

  void push(Dist d, unsigned cls, T item) {
    if (d < pop_d_ || (d == pop_d_ && cls < pop_cls_)) {
      throw std::logic_error("bucket queue: key below current extraction point");
    }
    if (d < cur_d_ || (d == cur_d_ && cls < cur_cls_)) {
      cur_d_ = d;
      cur_cls_ = cls;
    }
    if (d >= buckets_.size()) buckets_.resize(static_cast<std::size_t>(d) + 1);
    buckets_[d].items[cls].push_back(std::move(item));
    ++pending_;
  }

  /// Distance of the next entry. Requires !empty().
  Dist min_distance() {
    advance();
    return cur_d_;
  }

  Entry pop() {
    advance();
    auto& bucket = buckets_[cur_d_];
    Entry e{cur_d_, cur_cls_, std::move(bucket.items[cur_cls_][bucket.head[cur_cls_]++])};
    --pending_;
    pop_d_ = cur_d_;
    pop_cls_ = cur_cls_;
    return e;
  }

  /// Empties the queue but keeps allocated buckets for reuse.
  void clear() {
    for (auto& bucket : buckets_) {
      for (unsigned c = 0; c < Classes; ++c) {
        bucket.items[c].clear();
        bucket.head[c] = 0;
      }
    }
    cur_d_ = pop_d_ = 0;
    cur_cls_ = pop_cls_ = 0;
    pending_ = 0;
  }

 private:
  struct Bucket {
    std::array<std::vector<T>, Classes> items;
    std::array<std::size_t, Classes> head{};
  };

  void advance() {
    while (true) {
      auto& bucket = buckets_[cur_d_];
      if (bucket.head[cur_cls_] < bucket.items[cur_cls_].size()) return;
      if (++cur_cls_ == Classes) {
        cur_cls_ = 0;
        ++cur_d_;
      }
    }
  }

  std::vector<Bucket> buckets_;
  Dist cur_d_ = 0;
  unsigned cur_cls_ = 0;
  Dist pop_d_ = 0;
  unsigned pop_cls_ = 0;
  std::size_t pending_ = 0;
};

}  // namespace batchhl::detail
