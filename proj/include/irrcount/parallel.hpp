#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace irrcount {

struct Range {
    std::uint64_t begin = 0;
    std::uint64_t end = 0;
};

/// Contiguous, near-equal split of [0, total) into at most `parts` non-empty ranges.
inline std::vector<Range> split_ranges(std::uint64_t total, unsigned parts)
{
    parts = std::max(1u, parts);
    if (total < parts) parts = static_cast<unsigned>(std::max<std::uint64_t>(total, 1));
    std::vector<Range> out;
    std::uint64_t base = total / parts, extra = total % parts, at = 0;
    for (unsigned i = 0; i < parts; ++i) {
        std::uint64_t len = base + (i < extra ? 1 : 0);
        out.push_back({at, at + len});
        at += len;
    }
    return out;
}

/// Runs body(part, range) for every range, one thread per range. Results must be
/// written to per-part slots by the caller and merged in part order afterwards.
template <class Body>
void run_partitioned(const std::vector<Range>& ranges, Body&& body)
{
    if (ranges.size() <= 1) {
        for (std::size_t i = 0; i < ranges.size(); ++i) body(i, ranges[i]);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> workers;
        workers.reserve(ranges.size());
        for (std::size_t i = 0; i < ranges.size(); ++i) {
            workers.emplace_back([&, i] {
                try {
                    body(i, ranges[i]);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace irrcount
