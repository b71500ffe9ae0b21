#pragma once

#include <cstdint>
#include <vector>

namespace swarmcheck {

// Deduplicating store of packed states. Keys live in insertion order in a
// dense vector (which doubles as the BFS queue); an open-addressing table of
// indices answers membership. Indices are stable across growth.
class StateIndex {
public:
    static constexpr std::uint32_t kNpos = 0xffffffffu;

    explicit StateIndex(std::size_t expected = 1024) {
        std::size_t cap = 16;
        while (cap < expected * 2)
            cap <<= 1;
        slots_.assign(cap, kNpos);
    }

    // Returns the index of key, inserting it if absent; `inserted` reports
    // which happened.
    std::uint32_t insert(std::uint64_t key, bool &inserted) {
        if ((keys_.size() + 1) * 2 > slots_.size())
            grow();
        std::size_t mask = slots_.size() - 1;
        std::size_t i = hash(key) & mask;
        for (;;) {
            std::uint32_t idx = slots_[i];
            if (idx == kNpos) {
                idx = static_cast<std::uint32_t>(keys_.size());
                keys_.push_back(key);
                slots_[i] = idx;
                inserted = true;
                return idx;
            }
            if (keys_[idx] == key) {
                inserted = false;
                return idx;
            }
            i = (i + 1) & mask;
        }
    }

    std::uint32_t find(std::uint64_t key) const {
        std::size_t mask = slots_.size() - 1;
        std::size_t i = hash(key) & mask;
        for (;;) {
            std::uint32_t idx = slots_[i];
            if (idx == kNpos)
                return kNpos;
            if (keys_[idx] == key)
                return idx;
            i = (i + 1) & mask;
        }
    }

    bool contains(std::uint64_t key) const { return find(key) != kNpos; }

    std::uint64_t key_at(std::uint32_t idx) const { return keys_[idx]; }
    std::size_t size() const { return keys_.size(); }
    const std::vector<std::uint64_t> &keys() const { return keys_; }

private:
    static std::uint64_t hash(std::uint64_t x) {
        // splitmix64 finalizer
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    void grow() {
        std::vector<std::uint32_t> fresh(slots_.size() * 2, kNpos);
        std::size_t mask = fresh.size() - 1;
        for (std::uint32_t idx = 0; idx < keys_.size(); ++idx) {
            std::size_t i = hash(keys_[idx]) & mask;
            while (fresh[i] != kNpos)
                i = (i + 1) & mask;
            fresh[i] = idx;
        }
        slots_.swap(fresh);
    }

    std::vector<std::uint32_t> slots_;
    std::vector<std::uint64_t> keys_;
};

} // namespace swarmcheck
