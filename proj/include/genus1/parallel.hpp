#pragma once

#include <future>
#include <vector>

namespace genus1 {

// Applies fn (returning a vector) to every item, optionally across jobs
// worker threads in contiguous blocks. Results are concatenated in item
// order, so the output is independent of the job count.
template <class Item, class Fn>
auto map_blocks(const std::vector<Item>& items, int jobs, Fn fn) {
    using R = decltype(fn(items.front()));
    R all;
    if (jobs <= 1 || items.size() < 2) {
        for (const auto& it : items) {
            auto part = fn(it);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    std::size_t nblocks = std::min<std::size_t>(static_cast<std::size_t>(jobs), items.size());
    std::vector<std::future<R>> futs;
    for (std::size_t b = 0; b < nblocks; ++b) {
        std::size_t lo = items.size() * b / nblocks;
        std::size_t hi = items.size() * (b + 1) / nblocks;
        futs.push_back(std::async(std::launch::async, [&items, lo, hi, fn]() {
            R part;
            for (std::size_t i = lo; i < hi; ++i) {
                auto r = fn(items[i]);
                part.insert(part.end(), r.begin(), r.end());
            }
            return part;
        }));
    }
    for (auto& f : futs) {
        auto part = f.get();
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

}  // namespace genus1
