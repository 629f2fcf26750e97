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

#ifndef QWALK_GRAPH6_H
#define QWALK_GRAPH6_H

#include <string>
#include <string_view>

#include "qwalk/graph.h"

namespace qwalk {

/// Largest vertex count representable in the one-byte size prefix.
inline constexpr int kGraph6MaxVertices = 62;

/// Decodes a short-form graph6 string (an optional ">>graph6<<" header is accepted).
///
/// Throws ParseError naming the offending byte offset for a bad size byte,
/// a character outside 63..126, a body that is too short or too long, or
/// non-zero padding bits.
Graph parse_graph6(std::string_view text);

/// Encodes g in canonical short-form graph6. Throws UnsupportedSizeError for n > 62.
std::string write_graph6(const Graph &g);

}  // namespace qwalk

#endif
