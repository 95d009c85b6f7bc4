#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace edist {

// A byte string with its alphabet rank-compressed to codes 1..sigma.
// Code 0 is reserved as the suffix-array sentinel and never appears in
// `codes`. The original bytes are recoverable through `code_to_byte`.
struct Sequence {
  std::vector<uint32_t> codes;
  uint32_t sigma = 0;
  std::vector<uint8_t> code_to_byte;  // size sigma + 1, entry 0 unused

  std::size_t size() const { return codes.size(); }
  bool empty() const { return codes.empty(); }

  // 1-based character access, matching the positions used by LCP queries.
  uint32_t at1(std::size_t i) const { return codes[i - 1]; }

  std::vector<uint8_t> to_bytes() const;
};

// Rank-compresses raw bytes: distinct byte values, in increasing byte order,
// become codes 1..sigma.
Sequence sequence_from_bytes(const uint8_t* data, std::size_t len);
Sequence sequence_from_string(std::string_view s);

// Builds a sequence over a declared alphabet: `codes` must already lie in
// 1..sigma; byte i maps back to value i-1.
Sequence sequence_from_codes(std::vector<uint32_t> codes, uint32_t sigma);

// Raw-byte file ingestion (no format parsing; strip FASTA headers and
// similar wrappers externally). Throws std::runtime_error on I/O failure.
Sequence load_sequence(const std::string& path);
void save_sequence(const Sequence& s, const std::string& path);

// Code equality must mean byte equality across a pair. Two sequences are
// aligned when one code_to_byte map is a prefix of the other.
bool alphabets_aligned(const Sequence& a, const Sequence& b);

// Recompresses both over the union of their byte alphabets.
void align_alphabets(Sequence& a, Sequence& b);

// Joint compression for string literals in tests and tools.
std::pair<Sequence, Sequence> sequences_from_strings(std::string_view a,
                                                     std::string_view b);

}  // namespace edist
