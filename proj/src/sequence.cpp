#include "edist/sequence.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <stdexcept>

namespace edist {

std::vector<uint8_t> Sequence::to_bytes() const {
  std::vector<uint8_t> out(codes.size());
  for (std::size_t i = 0; i < codes.size(); i++) out[i] = code_to_byte[codes[i]];
  return out;
}

Sequence sequence_from_bytes(const uint8_t* data, std::size_t len) {
  std::array<bool, 256> seen{};
  for (std::size_t i = 0; i < len; i++) seen[data[i]] = true;
  std::array<uint32_t, 256> code{};
  Sequence s;
  s.code_to_byte.push_back(0);
  for (int b = 0; b < 256; b++) {
    if (seen[b]) {
      code[b] = ++s.sigma;
      s.code_to_byte.push_back(static_cast<uint8_t>(b));
    }
  }
  s.codes.resize(len);
  for (std::size_t i = 0; i < len; i++) s.codes[i] = code[data[i]];
  return s;
}

Sequence sequence_from_string(std::string_view str) {
  return sequence_from_bytes(reinterpret_cast<const uint8_t*>(str.data()),
                             str.size());
}

Sequence sequence_from_codes(std::vector<uint32_t> codes, uint32_t sigma) {
  Sequence s;
  s.codes = std::move(codes);
  s.sigma = sigma;
  for (uint32_t c = 0; c <= sigma; c++)
    s.code_to_byte.push_back(static_cast<uint8_t>(c == 0 ? 0 : c - 1));
  return s;
}

Sequence load_sequence(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) throw std::runtime_error("cannot open " + path);
  std::fseek(f, 0, SEEK_END);
  long len = std::ftell(f);
  std::fseek(f, 0, SEEK_SET);
  std::vector<uint8_t> buf(static_cast<std::size_t>(len < 0 ? 0 : len));
  if (!buf.empty() && std::fread(buf.data(), 1, buf.size(), f) != buf.size()) {
    std::fclose(f);
    throw std::runtime_error("short read on " + path);
  }
  std::fclose(f);
  return sequence_from_bytes(buf.data(), buf.size());
}

bool alphabets_aligned(const Sequence& a, const Sequence& b) {
  const auto& s = a.code_to_byte.size() <= b.code_to_byte.size() ? a.code_to_byte
                                                                 : b.code_to_byte;
  const auto& l = a.code_to_byte.size() <= b.code_to_byte.size() ? b.code_to_byte
                                                                 : a.code_to_byte;
  return std::equal(s.begin() + 1, s.end(), l.begin() + 1);
}

void align_alphabets(Sequence& a, Sequence& b) {
  if (alphabets_aligned(a, b)) {
    uint32_t sigma = std::max(a.sigma, b.sigma);
    const auto& map = a.sigma >= b.sigma ? a.code_to_byte : b.code_to_byte;
    a.sigma = b.sigma = sigma;
    a.code_to_byte = b.code_to_byte = map;
    return;
  }
  auto ab = a.to_bytes();
  auto bb = b.to_bytes();
  std::array<bool, 256> seen{};
  for (uint8_t c : ab) seen[c] = true;
  for (uint8_t c : bb) seen[c] = true;
  std::array<uint32_t, 256> code{};
  std::vector<uint8_t> map{0};
  uint32_t sigma = 0;
  for (int v = 0; v < 256; v++) {
    if (seen[v]) {
      code[v] = ++sigma;
      map.push_back(static_cast<uint8_t>(v));
    }
  }
  auto remap = [&](Sequence& s, const std::vector<uint8_t>& bytes) {
    s.sigma = sigma;
    s.code_to_byte = map;
    for (std::size_t i = 0; i < bytes.size(); i++) s.codes[i] = code[bytes[i]];
  };
  remap(a, ab);
  remap(b, bb);
}

std::pair<Sequence, Sequence> sequences_from_strings(std::string_view sa,
                                                     std::string_view sb) {
  Sequence a = sequence_from_string(sa);
  Sequence b = sequence_from_string(sb);
  align_alphabets(a, b);
  return {std::move(a), std::move(b)};
}

void save_sequence(const Sequence& s, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  auto bytes = s.to_bytes();
  if (!bytes.empty() && std::fwrite(bytes.data(), 1, bytes.size(), f) != bytes.size()) {
    std::fclose(f);
    throw std::runtime_error("short write on " + path);
  }
  std::fclose(f);
}

}  // namespace edist
