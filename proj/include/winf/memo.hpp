#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace winf::detail {

// Process-wide memo table. Values are computed outside the lock; a racing
// duplicate computation yields the same value, so the first insert wins.
template<typename Key, typename Value>
class SyncMemo {
public:
    std::optional<Value> find(const Key& key) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        if(it == table_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    Value insert(const Key& key, Value value) {
        std::unique_lock lock(mutex_);
        return table_.try_emplace(key, std::move(value)).first->second;
    }

    template<typename F>
    Value get_or_compute(const Key& key, F&& compute) {
        if(auto v = find(key)) {
            return *v;
        }
        return insert(key, compute());
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, Value> table_;
};

} // namespace winf::detail
