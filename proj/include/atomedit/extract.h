// Copyright 2026 The AtomEdit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ATOMEDIT_EXTRACT_H_
#define ATOMEDIT_EXTRACT_H_

#include <string>
#include <string_view>
#include <vector>

#include "atomedit/align.h"
#include "atomedit/atomic_edit.h"
#include "atomedit/snapshot.h"

namespace atomedit {

// Record id for an edit mined from base sentence `base_index`.
std::string MakeEditId(const Snapshot &base, const Snapshot &edited, size_t base_index);

// Aligns the sentences of two consecutive snapshots with AlignWindowed and
// keeps every matched pair that AtomicDiff accepts. Records come out in base
// sentence order; a repeated (s, e(s), span) triple is emitted once.
std::vector<AtomicEdit> ExtractEdits(const Snapshot &base, const Snapshot &edited,
                                     const AlignConfig &config,
                                     std::string_view language);

// Same, over a precomputed alignment. Used to compare alignment strategies.
std::vector<AtomicEdit> EditsFromAlignment(const Snapshot &base, const Snapshot &edited,
                                           const std::vector<AlignedPair> &pairs,
                                           std::string_view language);

}  // namespace atomedit

#endif  // ATOMEDIT_EXTRACT_H_
