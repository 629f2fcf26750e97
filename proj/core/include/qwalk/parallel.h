// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QWALK_PARALLEL_H
#define QWALK_PARALLEL_H

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace qwalk {

/// Hardware concurrency, capped by the QWALK_THREADS environment variable when it is a positive integer.
int worker_count();

/// out[i] = fn(in[i]) computed on up to worker_count() threads. Output order
/// matches input order. The first exception thrown by fn is rethrown.
template <typename In, typename Fn>
auto parallel_map(const std::vector<In> &in, Fn fn) -> std::vector<decltype(fn(in.front()))> {
    using Out = decltype(fn(in.front()));
    std::vector<Out> out(in.size());
    int workers = std::min<int>(worker_count(), static_cast<int>(in.size()));
    if (workers <= 1) {
        for (size_t i = 0; i < in.size(); i++) {
            out[i] = fn(in[i]);
        }
        return out;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto work = [&] {
        for (size_t i = next++; i < in.size(); i = next++) {
            try {
                out[i] = fn(in[i]);
            } catch (...) {
                std::lock_guard lock(error_mu);
                if (!error) {
                    error = std::current_exception();
                }
                next = in.size();
            }
        }
    };
    std::vector<std::thread> threads;
    for (int t = 0; t < workers; t++) {
        threads.emplace_back(work);
    }
    for (auto &t : threads) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return out;
}

}  // namespace qwalk

#endif
