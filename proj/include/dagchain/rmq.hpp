#pragma once

// Keyed max structure: point update, range maximum query over a key set
// fixed at build time. Backed by an implicit segment tree over the sorted
// key array; build is O(n), update and query are O(log n).
//
// update(k, val) keeps the maximum of the old and new value. Several client
// algorithms write the same key more than once (anchors sharing an endpoint,
// nodes sharing a label) and always want the best score seen at that key.
//
// Entries carry an optional payload that travels with the maximum; clients
// use it to recover the argmax for traceback.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dagchain {

// Sentinel for "no value". Far below any legal score but safe to add small
// offsets to without wrapping.
inline constexpr long long kNegInf = std::numeric_limits<long long>::min() / 4;

inline long long sat_add(long long a, long long b) {
    if (a <= kNegInf || b <= kNegInf) return kNegInf;
    return a + b;
}

struct RmqEntry {
    long long value = kNegInf;
    long long payload = -1;
};

// a strictly better than b: larger value, ties prefer the smaller payload
// (keeps argmax choices deterministic).
inline bool rmq_better(const RmqEntry& a, const RmqEntry& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.payload < b.payload;
}

class RmqTree {
public:
    RmqTree() = default;

    // pairs must be sorted by key, keys strictly increasing.
    static RmqTree build(std::span<const std::pair<long long, long long>> pairs) {
        std::vector<long long> keys;
        keys.reserve(pairs.size());
        std::vector<RmqEntry> leaves(pairs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (i > 0 && pairs[i].first <= pairs[i - 1].first)
                throw std::invalid_argument("rmq keys must be strictly increasing");
            keys.push_back(pairs[i].first);
            leaves[i] = RmqEntry{pairs[i].second, -1};
        }
        return RmqTree(std::move(keys), std::move(leaves));
    }

    // All values start at -inf; clients seed sentinels explicitly.
    static RmqTree with_keys(std::vector<long long> keys) {
        for (std::size_t i = 1; i < keys.size(); ++i)
            if (keys[i] <= keys[i - 1]) throw std::invalid_argument("rmq keys must be strictly increasing");
        std::vector<RmqEntry> leaves(keys.size());
        return RmqTree(std::move(keys), std::move(leaves));
    }

    std::size_t size() const { return keys_.size(); }

    void update(long long key, long long value, long long payload = -1) {
        std::size_t i = leaf_of(key);
        RmqEntry cand{value, payload};
        if (!rmq_better(cand, data_[n_ + i])) return;
        data_[n_ + i] = cand;
        for (std::size_t p = (n_ + i) / 2; p >= 1; p /= 2)
            data_[p] = rmq_better(data_[2 * p], data_[2 * p + 1]) ? data_[2 * p] : data_[2 * p + 1];
    }

    // Maximum over keys in [lo, hi]; {kNegInf, -1} when the range holds no key.
    RmqEntry rmaxq(long long lo, long long hi) const {
        RmqEntry res;
        if (lo > hi || n_ == 0) return res;
        std::size_t l = static_cast<std::size_t>(std::lower_bound(keys_.begin(), keys_.end(), lo) - keys_.begin());
        std::size_t r = static_cast<std::size_t>(std::upper_bound(keys_.begin(), keys_.end(), hi) - keys_.begin());
        for (l += n_, r += n_; l < r; l /= 2, r /= 2) {
            if (l & 1) {
                if (rmq_better(data_[l], res)) res = data_[l];
                ++l;
            }
            if (r & 1) {
                --r;
                if (rmq_better(data_[r], res)) res = data_[r];
            }
        }
        return res;
    }

    long long value_at(long long key) const { return data_[n_ + leaf_of(key)].value; }

private:
    RmqTree(std::vector<long long> keys, std::vector<RmqEntry> leaves) : keys_(std::move(keys)), n_(keys_.size()) {
        data_.assign(2 * std::max<std::size_t>(n_, 1), RmqEntry{});
        for (std::size_t i = 0; i < n_; ++i) data_[n_ + i] = leaves[i];
        for (std::size_t p = n_; p-- > 1;)
            data_[p] = rmq_better(data_[2 * p], data_[2 * p + 1]) ? data_[2 * p] : data_[2 * p + 1];
    }

    std::size_t leaf_of(long long key) const {
        auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
        if (it == keys_.end() || *it != key)
            throw std::out_of_range("rmq key " + std::to_string(key) + " not in tree");
        return static_cast<std::size_t>(it - keys_.begin());
    }

    std::vector<long long> keys_;
    std::size_t n_ = 0;
    std::vector<RmqEntry> data_;
};

} // namespace dagchain
