#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>

namespace hypereuler {

/// Read-mostly memo table for pure functions. Values are computed outside the
/// lock; when two threads race on the same key the first insertion wins, which
/// is harmless because both computed the same value.
template <class Key, class Value>
class MemoTable {
public:
    template <class Compute>
    Value get_or_compute(const Key& key, Compute&& compute) {
        {
            std::shared_lock lock(mutex_);
            auto it = table_.find(key);
            if (it != table_.end()) return it->second;
        }
        Value value = compute();
        std::unique_lock lock(mutex_);
        return table_.emplace(key, std::move(value)).first->second;
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, Value> table_;
};

}  // namespace hypereuler
