#ifndef QCONG_DETAIL_MEMO_HPP
#define QCONG_DETAIL_MEMO_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace qcong::detail {

/// Concurrent-read, insert-once memo table. Values are computed outside
/// the lock; when two threads race on the same key the first published
/// value wins and is returned to both. Published entries are immutable and
/// never evicted, so returned references stay valid for the table's life.
template <class Key, class Value>
class MemoTable {
public:
    template <class Make>
    const Value& get_or_compute(const Key& key, Make&& make) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = entries_.find(key); it != entries_.end()) return *it->second;
        }
        auto fresh = std::make_unique<const Value>(make());
        std::unique_lock lock(mutex_);
        auto [it, inserted] = entries_.try_emplace(key, std::move(fresh));
        return *it->second;
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return entries_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, std::unique_ptr<const Value>> entries_;
};

}  // namespace qcong::detail

#endif  // QCONG_DETAIL_MEMO_HPP
