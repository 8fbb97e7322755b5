/*
 *    Copyright (c) 2026 The Authlab Authors.
 *
 *    Licensed under the Apache License, Version 2.0 (the "License");
 *    you may not use this file except in compliance with the License.
 *    You may obtain a copy of the License at
 *
 *        http://www.apache.org/licenses/LICENSE-2.0
 *
 *    Unless required by applicable law or agreed to in writing, software
 *    distributed under the License is distributed on an "AS IS" BASIS,
 *    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *    See the License for the specific language governing permissions and
 *    limitations under the License.
 */

#include "authlab/transcript.hpp"

#include <fstream>
#include <sstream>

#include "authlab/registry.hpp"

namespace authlab {

void Transcript::note(const std::string& party, std::string text) {
  // Notes ride in the payload column; hex keeps the format uniform.
  append(TranscriptEvent{0, "note", party, OpTally{},
                         to_bytes(text)});
}

std::string render_transcript(const Transcript& t) {
  std::ostringstream out;
  for (const auto& ev : t.events()) {
    out << ev.tick << '\t' << ev.direction << '\t' << ev.party << '\t'
        << ev.counters.hashes << ',' << ev.counters.exps << ','
        << ev.counters.muls << ',' << ev.counters.xors << '\t'
        << to_hex(ev.payload) << '\n';
  }
  return out.str();
}

void export_transcript(const Transcript& t,
                       const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw RegistryError(RegistryError::Kind::io,
                        "cannot open transcript file for writing: " +
                            path.string());
  }
  out << render_transcript(t);
  if (!out.flush()) {
    throw RegistryError(RegistryError::Kind::io,
                        "short write to transcript file: " + path.string());
  }
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw RegistryError(RegistryError::Kind::parse,
                      "transcript line " + std::to_string(line) + ": " + what,
                      line);
}

}  // namespace

Transcript parse_transcript(const std::string& text) {
  Transcript t;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::array<std::string, 5> cols;
    std::size_t start = 0;
    for (std::size_t i = 0; i < 5; ++i) {
      std::size_t tab = line.find('\t', start);
      if (i < 4 && tab == std::string::npos) {
        parse_fail(lineno, "expected 5 tab-separated columns");
      }
      cols[i] = line.substr(start, tab == std::string::npos
                                       ? std::string::npos
                                       : tab - start);
      start = tab + 1;
    }
    TranscriptEvent ev;
    try {
      ev.tick = std::stoll(cols[0]);
    } catch (const std::exception&) {
      parse_fail(lineno, "bad tick value '" + cols[0] + "'");
    }
    ev.direction = cols[1];
    ev.party = cols[2];
    std::uint64_t vals[4];
    std::istringstream cnt(cols[3]);
    for (int i = 0; i < 4; ++i) {
      char sep = ',';
      if (!(cnt >> vals[i]) || (i < 3 && !(cnt >> sep && sep == ','))) {
        parse_fail(lineno, "bad counter snapshot '" + cols[3] + "'");
      }
    }
    ev.counters = OpTally{vals[0], vals[1], vals[2], vals[3]};
    auto payload = from_hex(cols[4]);
    if (!payload) parse_fail(lineno, "bad hex payload");
    ev.payload = std::move(*payload);
    t.append(std::move(ev));
  }
  return t;
}

Transcript import_transcript(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw RegistryError(RegistryError::Kind::io,
                        "cannot open transcript file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_transcript(buf.str());
}

}  // namespace authlab
