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

#include "atomedit/dump_reader.h"

#include <expat.h>
#include <zlib.h>

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "atomedit/text.h"

namespace atomedit {

namespace fs = std::filesystem;

namespace {

constexpr size_t kReadChunk = 1 << 16;

class IstreamByteStream : public ByteStream {
 public:
  IstreamByteStream(std::unique_ptr<std::istream> in, std::string prefix)
      : in_(std::move(in)), prefix_(std::move(prefix)) {}

  size_t Read(char *buffer, size_t size) override {
    if (prefix_pos_ < prefix_.size()) {
      const size_t n = std::min(size, prefix_.size() - prefix_pos_);
      std::copy_n(prefix_.data() + prefix_pos_, n, buffer);
      prefix_pos_ += n;
      return n;
    }
    in_->read(buffer, static_cast<std::streamsize>(size));
    return static_cast<size_t>(in_->gcount());
  }

 private:
  std::unique_ptr<std::istream> in_;
  std::string prefix_;
  size_t prefix_pos_ = 0;
};

class GzipByteStream : public ByteStream {
 public:
  explicit GzipByteStream(std::unique_ptr<ByteStream> raw) : raw_(std::move(raw)) {
    // 16 + MAX_WBITS selects gzip framing.
    if (inflateInit2(&zs_, 16 + MAX_WBITS) != Z_OK) {
      throw std::runtime_error("zlib initialization failed");
    }
  }
  ~GzipByteStream() override { inflateEnd(&zs_); }

  size_t Read(char *buffer, size_t size) override {
    zs_.next_out = reinterpret_cast<Bytef *>(buffer);
    zs_.avail_out = static_cast<uInt>(size);
    while (zs_.avail_out == size && !done_) {
      if (zs_.avail_in == 0) {
        const size_t n = raw_->Read(in_.data(), in_.size());
        if (n == 0) {
          done_ = true;
          break;
        }
        zs_.next_in = reinterpret_cast<Bytef *>(in_.data());
        zs_.avail_in = static_cast<uInt>(n);
      }
      const int rc = inflate(&zs_, Z_NO_FLUSH);
      if (rc == Z_STREAM_END) {
        // Concatenated gzip members continue the stream.
        if (inflateReset(&zs_) != Z_OK) done_ = true;
      } else if (rc != Z_OK && rc != Z_BUF_ERROR) {
        throw std::runtime_error("corrupt gzip stream");
      }
    }
    return size - zs_.avail_out;
  }

 private:
  std::unique_ptr<ByteStream> raw_;
  z_stream zs_{};
  std::array<char, kReadChunk> in_{};
  bool done_ = false;
};

// Collects one <page> element.
struct PageParseState {
  std::vector<std::string> path;
  std::string title;
  std::string page_id;
  RawSnapshot current;
  std::vector<RawSnapshot> revisions;
  std::string *sink = nullptr;
};

void XMLCALL OnStart(void *data, const XML_Char *name, const XML_Char **) {
  auto *state = static_cast<PageParseState *>(data);
  state->path.emplace_back(name);
  state->sink = nullptr;
  const auto &path = state->path;
  const size_t depth = path.size();
  if (depth == 2 && path[1] == "title") {
    state->sink = &state->title;
  } else if (depth == 2 && path[1] == "id") {
    state->sink = &state->page_id;
  } else if (depth == 2 && path[1] == "revision") {
    state->current = RawSnapshot();
  } else if (depth == 3 && path[1] == "revision") {
    if (path[2] == "id") state->sink = &state->current.revision_id;
    if (path[2] == "timestamp") state->sink = &state->current.timestamp;
    if (path[2] == "text") state->sink = &state->current.body;
  }
}

void XMLCALL OnEnd(void *data, const XML_Char *) {
  auto *state = static_cast<PageParseState *>(data);
  if (state->path.size() == 2 && state->path[1] == "revision") {
    state->revisions.push_back(std::move(state->current));
    state->current = RawSnapshot();
  }
  state->path.pop_back();
  state->sink = nullptr;
}

void XMLCALL OnText(void *data, const XML_Char *text, int length) {
  auto *state = static_cast<PageParseState *>(data);
  if (state->sink != nullptr) state->sink->append(text, length);
}

std::string Trim(const std::string &s) { return NormalizeWhitespace(s); }

// Returns the position of the next "<page" start tag at or after from.
size_t FindPageStart(const std::string &buffer, size_t from) {
  size_t pos = from;
  while ((pos = buffer.find("<page", pos)) != std::string::npos) {
    if (pos + 5 >= buffer.size()) return std::string::npos;
    const char next = buffer[pos + 5];
    if (next == '>' || next == ' ' || next == '\t' || next == '\n' || next == '\r') {
      return pos;
    }
    pos += 5;
  }
  return std::string::npos;
}

ArticleRevisions ParsePage(std::string_view chunk, size_t ordinal,
                           size_t max_snapshots) {
  const std::string clean = SanitizeUtf8(chunk);
  PageParseState state;
  XML_Parser parser = XML_ParserCreate("UTF-8");
  XML_SetUserData(parser, &state);
  XML_SetElementHandler(parser, OnStart, OnEnd);
  XML_SetCharacterDataHandler(parser, OnText);
  const bool ok =
      XML_Parse(parser, clean.data(), static_cast<int>(clean.size()), 1) ==
      XML_STATUS_OK;

  ArticleRevisions article;
  article.article_id = Trim(state.page_id);
  if (article.article_id.empty()) article.article_id = Trim(state.title);
  if (article.article_id.empty()) {
    article.article_id = "page#" + std::to_string(ordinal);
  }
  if (!ok) {
    article.error = "malformed XML at line " +
                    std::to_string(XML_GetCurrentLineNumber(parser)) + ": " +
                    XML_ErrorString(XML_GetErrorCode(parser));
    XML_ParserFree(parser);
    return article;
  }
  XML_ParserFree(parser);

  for (RawSnapshot &revision : state.revisions) {
    revision.article_id = article.article_id;
    revision.revision_id = Trim(revision.revision_id);
    revision.timestamp = Trim(revision.timestamp);
  }
  article.revisions = std::move(state.revisions);
  NormalizeRevisions(max_snapshots, &article.revisions);
  return article;
}

bool IsNumeric(const std::string &s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

std::unique_ptr<ByteStream> OpenByteStream(std::unique_ptr<std::istream> in) {
  std::string magic(6, '\0');
  in->read(magic.data(), static_cast<std::streamsize>(magic.size()));
  magic.resize(static_cast<size_t>(in->gcount()));

  const auto starts = [&](std::string_view prefix) {
    return magic.compare(0, prefix.size(), prefix) == 0 && magic.size() >= prefix.size();
  };
  if (starts("BZh")) throw std::runtime_error("bzip2 input is not supported; decompress first");
  if (starts("\xFD" "7zXZ")) throw std::runtime_error("xz input is not supported; decompress first");

  auto raw = std::make_unique<IstreamByteStream>(std::move(in), magic);
  if (starts("\x1F\x8B")) return std::make_unique<GzipByteStream>(std::move(raw));
  return raw;
}

void NormalizeRevisions(size_t max_snapshots, std::vector<RawSnapshot> *revisions) {
  std::stable_sort(revisions->begin(), revisions->end(),
                   [](const RawSnapshot &a, const RawSnapshot &b) {
                     return a.timestamp < b.timestamp;
                   });
  std::unordered_set<std::string> seen;
  std::vector<RawSnapshot> unique;
  unique.reserve(revisions->size());
  for (RawSnapshot &revision : *revisions) {
    if (seen.insert(revision.revision_id).second) unique.push_back(std::move(revision));
  }
  if (unique.size() > max_snapshots) {
    unique.erase(unique.begin(),
                 unique.begin() + static_cast<std::ptrdiff_t>(unique.size() - max_snapshots));
  }
  *revisions = std::move(unique);
}

XmlDumpReader::XmlDumpReader(std::unique_ptr<ByteStream> stream, IngestConfig config)
    : stream_(std::move(stream)), config_(std::move(config)) {}

XmlDumpReader::~XmlDumpReader() = default;

bool XmlDumpReader::FillBuffer() {
  if (eof_) return false;
  // Drop consumed bytes before growing the buffer.
  if (scan_ > 0) {
    buffer_.erase(0, scan_);
    scan_ = 0;
  }
  const size_t old_size = buffer_.size();
  buffer_.resize(old_size + kReadChunk);
  const size_t n = stream_->Read(buffer_.data() + old_size, kReadChunk);
  buffer_.resize(old_size + n);
  if (n == 0) eof_ = true;
  return n > 0;
}

bool XmlDumpReader::Next(ArticleRevisions *article) {
  // Locate the next page start.
  size_t start;
  while ((start = FindPageStart(buffer_, scan_)) == std::string::npos) {
    // Keep a short tail in case "<page" straddles the read boundary.
    if (buffer_.size() > scan_ + 6) scan_ = buffer_.size() - 6;
    if (!FillBuffer()) return false;
  }
  scan_ = start;

  constexpr std::string_view kPageEnd = "</page>";
  size_t search = start + 5;
  size_t end;
  while (true) {
    // A second page start before the close tag means this page is truncated.
    end = buffer_.find(kPageEnd, search);
    const size_t next_start = FindPageStart(buffer_, search);
    if (next_start != std::string::npos && (end == std::string::npos || next_start < end)) {
      ArticleRevisions broken = ParsePage(
          std::string_view(buffer_).substr(start, next_start - start), ++page_ordinal_,
          config_.max_snapshots);
      if (broken.ok()) broken.error = "page truncated before </page>";
      broken.revisions.clear();
      scan_ = next_start;
      *article = std::move(broken);
      return true;
    }
    if (end != std::string::npos) break;
    search = std::max(start + 5, buffer_.size() - std::min(buffer_.size(), kPageEnd.size()));
    const size_t offset = scan_;
    if (!FillBuffer()) {
      ArticleRevisions broken =
          ParsePage(std::string_view(buffer_).substr(scan_), ++page_ordinal_,
                    config_.max_snapshots);
      if (broken.ok()) broken.error = "unexpected end of input inside <page>";
      broken.revisions.clear();
      scan_ = buffer_.size();
      *article = std::move(broken);
      return true;
    }
    // FillBuffer shifted the buffer so the page now starts at 0.
    start -= offset;
    search -= offset;
  }

  end += kPageEnd.size();
  *article = ParsePage(std::string_view(buffer_).substr(start, end - start),
                       ++page_ordinal_, config_.max_snapshots);
  scan_ = end;
  return true;
}

DirectoryReader::DirectoryReader(const std::string &root, IngestConfig config)
    : config_(std::move(config)) {
  for (const auto &entry : fs::directory_iterator(root)) {
    if (entry.is_directory()) article_dirs_.push_back(entry.path().string());
  }
  std::sort(article_dirs_.begin(), article_dirs_.end());
}

bool DirectoryReader::Next(ArticleRevisions *article) {
  if (next_ >= article_dirs_.size()) return false;
  const fs::path dir = article_dirs_[next_++];
  ArticleRevisions result;
  result.article_id = dir.filename().string();

  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto &entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  if (ec) {
    result.error = "cannot list " + dir.string() + ": " + ec.message();
    *article = std::move(result);
    return true;
  }

  const bool numeric = std::all_of(files.begin(), files.end(), [](const fs::path &p) {
    return IsNumeric(p.stem().string());
  });
  std::sort(files.begin(), files.end(), [numeric](const fs::path &a, const fs::path &b) {
    const std::string sa = a.stem().string();
    const std::string sb = b.stem().string();
    if (numeric && sa.size() != sb.size()) return sa.size() < sb.size();
    return sa < sb;
  });

  for (const fs::path &file : files) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
      result.error = "cannot read " + file.string();
      result.revisions.clear();
      break;
    }
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    RawSnapshot snapshot;
    snapshot.article_id = result.article_id;
    snapshot.revision_id = file.stem().string();
    snapshot.body = SanitizeUtf8(body);
    result.revisions.push_back(std::move(snapshot));
  }
  // Timestamps are empty here, so the stable sort keeps file order.
  if (result.ok()) NormalizeRevisions(config_.max_snapshots, &result.revisions);
  *article = std::move(result);
  return true;
}

std::unique_ptr<ArticleSource> OpenArticleSource(const std::string &path,
                                                 const IngestConfig &config) {
  InputFormat format = config.format;
  if (format == InputFormat::kAuto) {
    format = path != "-" && fs::is_directory(path) ? InputFormat::kDirectory
                                                   : InputFormat::kXml;
  }
  if (format == InputFormat::kDirectory) {
    if (!fs::is_directory(path)) throw std::runtime_error("not a directory: " + path);
    return std::make_unique<DirectoryReader>(path, config);
  }

  std::unique_ptr<std::istream> in;
  if (path == "-") {
    // Borrow std::cin's buffer without taking ownership of the stream.
    in = std::make_unique<std::istream>(std::cin.rdbuf());
  } else {
    auto file = std::make_unique<std::ifstream>(path, std::ios::binary);
    if (!*file) throw std::runtime_error("cannot open input: " + path);
    in = std::move(file);
  }
  return std::make_unique<XmlDumpReader>(OpenByteStream(std::move(in)), config);
}

}  // namespace atomedit
