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

#include "qwalk/parallel.h"

#include <cstdlib>
#include <string>

namespace qwalk {

int worker_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) {
        hw = 1;
    }
    if (const char *env = std::getenv("QWALK_THREADS")) {
        try {
            int cap = std::stoi(env);
            if (cap > 0) {
                return std::min(hw, cap);
            }
        } catch (const std::exception &) {
            // ignore malformed values
        }
    }
    return hw;
}

}  // namespace qwalk
