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

// Readers for article revision histories: MediaWiki XML exports (plain or
// gzip-compressed) and snapshot directories laid out as
// <root>/<article_id>/<revision_id>.txt.

#ifndef ATOMEDIT_DUMP_READER_H_
#define ATOMEDIT_DUMP_READER_H_

#include <cstddef>
#include <istream>
#include <memory>
#include <string>
#include <vector>

namespace atomedit {

inline constexpr size_t kDefaultMaxSnapshots = 100000;

// One historical version of one article, as raw markup.
struct RawSnapshot {
  std::string article_id;
  std::string revision_id;
  std::string timestamp;  // ISO-8601 UTC, empty for directory input
  std::string body;       // valid UTF-8
};

enum class InputFormat { kAuto, kXml, kDirectory };

struct IngestConfig {
  size_t max_snapshots = kDefaultMaxSnapshots;
  std::string language = "en";
  std::string abbrev_list_path;
  InputFormat format = InputFormat::kAuto;
};

// All retained revisions of one article, oldest first. A non-empty error
// means the article could not be read; revisions is then empty.
struct ArticleRevisions {
  std::string article_id;
  std::vector<RawSnapshot> revisions;
  std::string error;

  bool ok() const { return error.empty(); }
};

// Sequential source of articles.
class ArticleSource {
 public:
  virtual ~ArticleSource() = default;

  // Fills *article with the next article. Returns false at end of input.
  virtual bool Next(ArticleRevisions *article) = 0;
};

// Byte stream with transparent decompression.
class ByteStream {
 public:
  virtual ~ByteStream() = default;

  // Reads up to size bytes; returns 0 at end of stream.
  virtual size_t Read(char *buffer, size_t size) = 0;
};

// Wraps an input stream, sniffing the first bytes: gzip data is inflated,
// anything else is passed through. bzip2 and xz inputs are rejected with
// std::runtime_error since no decoder is linked in.
std::unique_ptr<ByteStream> OpenByteStream(std::unique_ptr<std::istream> in);

// Streams a MediaWiki XML export one <page> at a time. A page that fails to
// parse yields an ArticleRevisions with error set and reading continues at
// the next page.
class XmlDumpReader : public ArticleSource {
 public:
  XmlDumpReader(std::unique_ptr<ByteStream> stream, IngestConfig config);
  ~XmlDumpReader() override;

  bool Next(ArticleRevisions *article) override;

 private:
  bool FillBuffer();

  std::unique_ptr<ByteStream> stream_;
  IngestConfig config_;
  std::string buffer_;
  size_t scan_ = 0;
  bool eof_ = false;
  size_t page_ordinal_ = 0;
};

// Reads <root>/<article_id>/<revision_id>.txt. Articles are visited in name
// order; revisions in numeric order when every id is numeric, otherwise in
// lexicographic order.
class DirectoryReader : public ArticleSource {
 public:
  DirectoryReader(const std::string &root, IngestConfig config);

  bool Next(ArticleRevisions *article) override;

 private:
  std::vector<std::string> article_dirs_;
  size_t next_ = 0;
  IngestConfig config_;
};

// Opens path as a directory or a (possibly compressed) XML file according
// to config.format. "-" reads standard input. Throws std::runtime_error when
// the input cannot be opened.
std::unique_ptr<ArticleSource> OpenArticleSource(const std::string &path,
                                                 const IngestConfig &config);

// Orders revisions by timestamp (stable), drops repeated revision ids and
// keeps only the max_snapshots most recent.
void NormalizeRevisions(size_t max_snapshots, std::vector<RawSnapshot> *revisions);

}  // namespace atomedit

#endif  // ATOMEDIT_DUMP_READER_H_
