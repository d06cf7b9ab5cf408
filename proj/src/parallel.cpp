// SPDX-License-Identifier: Apache-2.0
//
// ansec: secrecy-rate analysis for artificial-noise MIMO wiretap channels
// Copyright (C) 2026 The ansec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "ansec/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace ansec
{
    unsigned default_threads()
    {
        if (const char *env = std::getenv(kThreadsEnv))
        {
            try
            {
                const long v = std::stol(env);
                if (v >= 1)
                    return static_cast<unsigned>(std::min(v, 1024L));
            }
            catch (const std::exception &)
            {
            }
        }
        return std::max(1u, std::thread::hardware_concurrency());
    }

    void parallel_chunks(std::uint64_t n_chunks, unsigned threads, const std::function<void(std::uint64_t)> &body)
    {
        if (n_chunks == 0)
            return;
        const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, threads), n_chunks));

        std::atomic<std::uint64_t> next{0};
        std::atomic<bool> failed{false};
        std::mutex mtx;
        std::uint64_t failed_chunk = n_chunks;
        std::exception_ptr error;

        auto worker = [&]()
        {
            while (!failed.load(std::memory_order_relaxed))
            {
                const std::uint64_t c = next.fetch_add(1);
                if (c >= n_chunks)
                    return;
                try
                {
                    body(c);
                }
                catch (...)
                {
                    std::lock_guard<std::mutex> lock(mtx);
                    if (c < failed_chunk)
                    {
                        failed_chunk = c;
                        error = std::current_exception();
                    }
                    failed = true;
                }
            }
        };

        if (workers == 1)
            worker();
        else
        {
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (unsigned i = 0; i < workers; ++i)
                pool.emplace_back(worker);
            for (auto &t : pool)
                t.join();
        }
        if (error)
            std::rethrow_exception(error);
    }

    void RunningStats::merge(const RunningStats &o)
    {
        if (o.count == 0)
            return;
        if (count == 0)
        {
            *this = o;
            return;
        }
        const double n_a = static_cast<double>(count);
        const double n_b = static_cast<double>(o.count);
        const double n = n_a + n_b;
        const double d = o.mean - mean;
        mean += d * (n_b / n);
        m2 += o.m2 + d * d * (n_a * n_b / n);
        count += o.count;
    }
}
