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

#include "authlab/registry.hpp"

#include <openssl/evp.h>

#include <fstream>

namespace authlab {

namespace {

constexpr char kMagic[] = "APLAB01";
constexpr std::size_t kMagicLen = 7;
constexpr std::uint8_t kVersion = 1;
constexpr std::size_t kChecksumLen = 20;

constexpr std::uint8_t kFlagHasMasterKey = 0x01;

// File checksum is full SHA-1 regardless of the group's digest length,
// so a file is verifiable before its params are parsed.
Bytes file_checksum(ByteView data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int md_len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &md_len, EVP_sha1(),
                 nullptr) != 1) {
    throw RegistryError(RegistryError::Kind::io, "checksum computation failed");
  }
  return Bytes(md, md + kChecksumLen);
}

Bytes serialize(const proposed::ServerState& state, bool with_master_key) {
  const GroupParams& g = *state.params;
  Bytes out;
  append_bytes(out, ByteView(reinterpret_cast<const std::uint8_t*>(kMagic),
                             kMagicLen));
  out.push_back(kVersion);
  out.push_back(static_cast<std::uint8_t>(g.label));
  append_field(out, encode_be(g.p, element_width(g)));
  append_field(out, encode_be(g.q, scalar_width(g)));
  append_u32_be(out, static_cast<std::uint32_t>(g.digest_len));
  out.push_back(with_master_key ? kFlagHasMasterKey : 0);
  if (with_master_key) {
    append_field(out, encode_scalar(state.master_key, g));
  }
  append_u32_be(out, static_cast<std::uint32_t>(state.records.size()));
  for (const auto& [nid, record] : state.records) {
    append_field(out, record.nid);
    Bytes n;
    append_u64_be(n, record.reissue_count);
    append_bytes(out, n);
    append_field(out, record.card_id);
    append_field(out, to_bytes(record.id));
    out.push_back(static_cast<std::uint8_t>(record.status));
  }
  append_bytes(out, file_checksum(out));
  return out;
}

Bytes read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw RegistryError(RegistryError::Kind::io,
                        "cannot open file: " + path.string());
  }
  Bytes data((std::istreambuf_iterator<char>(in)),
             std::istreambuf_iterator<char>());
  return data;
}

bool is_valid_record_file(const Bytes& data) {
  if (data.size() < kMagicLen + kChecksumLen) return false;
  if (!std::equal(data.begin(), data.begin() + kMagicLen,
                  reinterpret_cast<const std::uint8_t*>(kMagic))) {
    return false;
  }
  ByteView body(data.data(), data.size() - kChecksumLen);
  ByteView trailer(data.data() + data.size() - kChecksumLen, kChecksumLen);
  Bytes expected = file_checksum(body);
  return std::equal(trailer.begin(), trailer.end(), expected.begin());
}

}  // namespace

void save_state(const proposed::ServerState& state,
                const std::filesystem::path& path,
                const SaveOptions& options) {
  namespace fs = std::filesystem;
  if (fs::exists(path) && !options.force) {
    // Overwriting is only safe when the destination is one of ours and
    // intact; anything else needs --force.
    Bytes existing = read_file(path);
    if (!is_valid_record_file(existing)) {
      throw RegistryError(
          RegistryError::Kind::checksum_mismatch,
          "refusing to overwrite " + path.string() +
              ": existing file fails validation (use force to override)");
    }
  }

  Bytes data = serialize(state, options.persist_master_key);
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw RegistryError(RegistryError::Kind::io,
                          "cannot open temp file: " + tmp.string());
    }
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
    if (!out.flush()) {
      throw RegistryError(RegistryError::Kind::io,
                          "short write to temp file: " + tmp.string());
    }
  }
  if (options.pre_rename_hook) options.pre_rename_hook();
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    throw RegistryError(RegistryError::Kind::io,
                        "rename failed: " + ec.message());
  }
}

proposed::ServerState load_state(const std::filesystem::path& path,
                                 std::optional<Scalar> master_key) {
  Bytes data = read_file(path);
  if (data.size() < kMagicLen + 1 + kChecksumLen) {
    throw RegistryError(RegistryError::Kind::parse, "file too short");
  }
  if (!std::equal(data.begin(), data.begin() + kMagicLen,
                  reinterpret_cast<const std::uint8_t*>(kMagic))) {
    throw RegistryError(RegistryError::Kind::parse, "bad magic");
  }
  // Verify the trailer before trusting any field.
  {
    ByteView body(data.data(), data.size() - kChecksumLen);
    ByteView trailer(data.data() + data.size() - kChecksumLen, kChecksumLen);
    Bytes expected = file_checksum(body);
    if (!std::equal(trailer.begin(), trailer.end(), expected.begin())) {
      throw RegistryError(RegistryError::Kind::checksum_mismatch,
                          "record table checksum mismatch");
    }
  }

  ByteReader r(ByteView(data.data() + kMagicLen,
                        data.size() - kMagicLen - kChecksumLen));
  auto fail = [](const std::string& what) -> RegistryError {
    return RegistryError(RegistryError::Kind::parse, what);
  };

  auto version = r.read_u8();
  if (!version) throw fail("missing version");
  if (*version != kVersion) {
    throw RegistryError(RegistryError::Kind::unsupported_version,
                        "unsupported record table version " +
                            std::to_string(*version));
  }
  auto label = r.read_u8();
  auto p_bytes = r.read_field();
  auto q_bytes = r.read_field();
  auto digest_len = r.read_u32_be();
  auto flags = r.read_u8();
  if (!label || *label > 2 || !p_bytes || !q_bytes || !digest_len || !flags) {
    throw fail("malformed params block");
  }

  auto params = std::make_shared<GroupParams>();
  params->p = decode_be(*p_bytes);
  params->q = decode_be(*q_bytes);
  params->digest_len = *digest_len;
  params->label = static_cast<SecurityLabel>(*label);

  proposed::ServerState state;
  state.params = params;
  if (*flags & kFlagHasMasterKey) {
    auto x_bytes = r.read_field();
    if (!x_bytes) throw fail("malformed master key field");
    state.master_key = Scalar{decode_be(*x_bytes)};
  } else if (master_key) {
    state.master_key = *master_key;
  } else {
    throw RegistryError(
        RegistryError::Kind::missing_master_key,
        "file does not contain the master key and none was supplied");
  }

  auto count = r.read_u32_be();
  if (!count) throw fail("missing record count");
  for (std::uint32_t i = 0; i < *count; ++i) {
    proposed::UserRecord record;
    auto nid = r.read_field();
    auto n = r.read_u64_be();
    auto card_id = r.read_field();
    auto id = r.read_field();
    auto status = r.read_u8();
    if (!nid || !n || !card_id || !id || !status || *status > 1) {
      throw fail("malformed record " + std::to_string(i));
    }
    record.nid = std::move(*nid);
    record.reissue_count = *n;
    record.card_id = std::move(*card_id);
    record.id = to_string(*id);
    record.status = static_cast<proposed::RecordStatus>(*status);
    // The id index is derivable: it maps each identity to its active
    // record's reissue counter.
    if (record.status == proposed::RecordStatus::active) {
      state.id_index[record.id] = record.reissue_count;
    }
    Bytes key = record.nid;
    state.records.emplace(std::move(key), std::move(record));
  }
  if (!r.empty()) throw fail("trailing bytes after records");
  return state;
}

}  // namespace authlab
