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

#include "atomedit/extract.h"

#include <set>
#include <tuple>

#include "atomedit/atomic_diff.h"

namespace atomedit {

std::string MakeEditId(const Snapshot &base, const Snapshot &edited, size_t base_index) {
  return base.article_id + ":" + base.revision_id + ":" + edited.revision_id + ":" +
         std::to_string(base_index);
}

std::vector<AtomicEdit> EditsFromAlignment(const Snapshot &base, const Snapshot &edited,
                                           const std::vector<AlignedPair> &pairs,
                                           std::string_view language) {
  std::vector<AtomicEdit> edits;
  std::set<std::tuple<std::string, std::string, size_t, size_t>> seen;
  for (const AlignedPair &pair : pairs) {
    const Sentence &s = base.sentences[pair.base_index];
    const Sentence &t = edited.sentences[pair.edited_index];
    std::optional<DiffResult> diff = AtomicDiff(s, t, language);
    if (!diff) continue;
    if (!seen.emplace(s.text, t.text, diff->byte_span.start, diff->byte_span.end).second) {
      continue;
    }

    AtomicEdit edit;
    edit.id = MakeEditId(base, edited, pair.base_index);
    edit.kind = diff->kind;
    edit.language = std::string(language);
    edit.article_id = base.article_id;
    edit.base_revision_id = base.revision_id;
    edit.edited_revision_id = edited.revision_id;
    edit.base_sentence = s;
    edit.edited_sentence = t;
    edit.phrase = std::move(diff->phrase);
    edit.phrase_tokens = std::move(diff->phrase_tokens);
    edit.byte_span = diff->byte_span;
    edit.token_index = diff->token_index;
    edit.token_aligned = diff->token_aligned;
    edit.bleu = pair.bleu;
    edits.push_back(std::move(edit));
  }
  return edits;
}

std::vector<AtomicEdit> ExtractEdits(const Snapshot &base, const Snapshot &edited,
                                     const AlignConfig &config,
                                     std::string_view language) {
  return EditsFromAlignment(base, edited,
                            AlignWindowed(base.sentences, edited.sentences, config),
                            language);
}

}  // namespace atomedit
