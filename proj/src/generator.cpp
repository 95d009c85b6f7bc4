#include "edist/generator.hpp"

#include <algorithm>
#include <cassert>
#include <random>

namespace edist {

namespace {

// Raw engine output with modulo, not std::uniform_int_distribution: the
// distribution's mapping is implementation-defined and would break
// byte-reproducibility across standard libraries.
uint64_t rand_below(std::mt19937_64& rng, uint64_t bound) {
  return rng() % bound;
}

struct Edit {
  std::size_t pos;   // 1-based position in the original string
  int kind;          // 0 substitute, 1 insert (before pos), 2 delete
  uint32_t code;
  std::size_t order;
};

}  // namespace

std::pair<Sequence, Sequence> generate_edits(const GenSpec& spec) {
  assert(spec.sigma >= 2 && spec.sigma <= 256);
  assert(spec.k <= spec.n);
  std::mt19937_64 rng(spec.seed);
  std::vector<uint32_t> a(spec.n);
  for (auto& c : a) c = static_cast<uint32_t>(1 + rand_below(rng, spec.sigma));

  std::vector<Edit> edits(spec.k);
  for (std::size_t i = 0; i < spec.k; i++) {
    edits[i].pos = 1 + rand_below(rng, spec.n);
    edits[i].kind = static_cast<int>(rand_below(rng, 3));
    edits[i].code = static_cast<uint32_t>(1 + rand_below(rng, spec.sigma));
    edits[i].order = i;
  }
  // Right-to-left application keeps every pre-sampled position valid under
  // earlier insertions and deletions.
  std::sort(edits.begin(), edits.end(), [](const Edit& x, const Edit& y) {
    return x.pos != y.pos ? x.pos > y.pos : x.order < y.order;
  });

  std::vector<uint32_t> b = a;
  for (const Edit& e : edits) {
    std::size_t idx = e.pos - 1;
    if (idx >= b.size()) idx = b.size() == 0 ? 0 : b.size() - 1;
    switch (e.kind) {
      case 0:
        if (!b.empty()) b[idx] = e.code;
        break;
      case 1:
        b.insert(b.begin() + static_cast<std::ptrdiff_t>(idx), e.code);
        break;
      default:
        if (!b.empty()) b.erase(b.begin() + static_cast<std::ptrdiff_t>(idx));
        break;
    }
  }
  return {sequence_from_codes(std::move(a), spec.sigma),
          sequence_from_codes(std::move(b), spec.sigma)};
}

}  // namespace edist
