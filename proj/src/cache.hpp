/* Copyright 2026 The hypj Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Process-wide memo tables for read-only basis data.

#ifndef HYPJ_SRC_CACHE_HPP
#define HYPJ_SRC_CACHE_HPP

#include <map>
#include <memory>
#include <mutex>

namespace hypj::detail {

// Entries are built outside the lock (builders may recurse into other
// caches) and never replaced once published, so references stay valid.
template <class Key, class Value>
class MemoTable {
public:
    template <class Make>
    const Value& get(const Key& key, Make&& make) {
        {
            std::lock_guard lock(mutex_);
            auto it = table_.find(key);
            if (it != table_.end()) return *it->second;
        }
        auto value = std::make_unique<const Value>(make());
        std::lock_guard lock(mutex_);
        auto [it, inserted] = table_.try_emplace(key, std::move(value));
        return *it->second;
    }

private:
    std::mutex mutex_;
    std::map<Key, std::unique_ptr<const Value>> table_;
};

}  // namespace hypj::detail

#endif  // HYPJ_SRC_CACHE_HPP
