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

#ifndef ATOMEDIT_MARKUP_H_
#define ATOMEDIT_MARKUP_H_

#include <string>
#include <string_view>

namespace atomedit {

// Converts wikitext with embedded HTML into plain text, one paragraph per
// line. Templates, tables, references, comments, headings and file/category
// links are dropped; wiki links render as their label; emphasis quotes, HTML
// tags and magic words are removed; character entities are decoded.
// Constructs that are not recognized (for example an unbalanced "{{") are
// kept as literal text.
//
// The result is a fixed point: StripMarkup(StripMarkup(x)) == StripMarkup(x).
std::string StripMarkup(std::string_view body);

}  // namespace atomedit

#endif  // ATOMEDIT_MARKUP_H_
