#include <doctest.h>

#include <bit>
#include <random>

#include "edist/hashing.hpp"
#include "edist/oracle.hpp"
#include "edist/parallel.hpp"
#include "testlib.hpp"

using namespace edist;

namespace {

// Raw byte values as codes, the convention of the worked examples below.
Sequence seq_raw(const std::string& s) {
  std::vector<uint32_t> codes;
  for (unsigned char c : s) codes.push_back(c);
  return sequence_from_codes(std::move(codes), 256);
}

HashFamily family31() {
  HashFamily f;
  f.h1 = make_hash_params(31);
  f.h2 = make_hash_params(37);
  f.dual = false;
  return f;
}

// Direct fold of the fingerprint definition, independent of the tables.
uint64_t fold(const std::vector<uint32_t>& codes, const HashParams& p) {
  uint64_t h = 0;
  for (uint32_t c : codes) h = add_mod(mul_mod(h, p.base), c);
  return h;
}

}  // namespace

TEST_CASE("single characters and concat match the worked examples") {
  HashParams p = make_hash_params(31);
  CHECK(hash_char('a', p).value == 97);
  CHECK(hash_char('a', p).length == 1);
  CHECK(hash_char('b', p).value == 98);

  HashValue ab = hash_concat(hash_char('a', p), hash_char('b', p), p);
  CHECK(ab.value == 3105);  // 97*31 + 98
  CHECK(ab.length == 2);

  HashValue b = hash_remove_prefix(ab, hash_char('a', p), p);
  CHECK(b.value == 98);
  CHECK(b.length == 1);
}

TEST_CASE("empty fingerprint is the identity") {
  HashParams p = make_hash_params(31);
  HashValue e{};
  HashValue s = hash_concat(hash_char('a', p), hash_char('b', p), p);
  CHECK(hash_concat(s, e, p) == s);
  CHECK(hash_concat(e, s, p) == s);
  CHECK(hash_remove_prefix(s, s, p) == HashValue{});
  CHECK(hash_remove_prefix(s, e, p) == s);
}

TEST_CASE("prefix table entries follow the recurrence") {
  HashFamily f = family31();
  PrefixHashTable t = build_prefix_table(seq_raw("aba"), f);
  CHECK(t.e1 == std::vector<uint64_t>{0, 97, 3105, 96352});
  PrefixHashTable t4 = build_prefix_table(seq_raw("aaaa"), f);
  CHECK(t4.e1[2] == 3104);  // 97*31 + 97
  PrefixHashTable te = build_prefix_table(seq_raw(""), f);
  CHECK(te.e1 == std::vector<uint64_t>{0});
}

TEST_CASE("blocked table stores whole blocks only") {
  HashFamily f = family31();
  BlockedHashTable t = build_blocked_table(seq_raw("abab"), 2, f);
  CHECK(t.e1 == std::vector<uint64_t>{0, 3105, 2987010});  // 3105*31^2+3105
  BlockedHashTable t2 = build_blocked_table(seq_raw("aba"), 2, f);
  CHECK(t2.e1 == std::vector<uint64_t>{0, 3105});  // partial block not stored
}

TEST_CASE("block size one degenerates to the prefix table") {
  std::mt19937_64 rng(7);
  Sequence a = testlib::random_sequence(rng, 300, 5);
  HashFamily f = make_hash_family(5);
  PrefixHashTable pt = build_prefix_table(a, f);
  BlockedHashTable bt = build_blocked_table(a, 1, f);
  CHECK(bt.e1 == pt.e1);
}

TEST_CASE("get_hash reconstructs any prefix from the blocked table") {
  HashFamily f = family31();
  Sequence a = seq_raw("abab");
  BlockedHashTable t = build_blocked_table(a, 2, f);
  CHECK(get_hash(a, t, f.h1, 3).value == 96352);  // h("aba")
  CHECK(get_hash(a, t, f.h1, 0) == HashValue{});
  CHECK(get_hash(a, t, f.h1, 2).value == t.e1[1]);  // block-aligned, verbatim
  CHECK(get_hash(a, t, f.h1, 4).value == t.e1[2]);
}

TEST_CASE("range_hash fingerprints half-open substrings") {
  HashFamily f = family31();
  Sequence a = seq_raw("abab");
  BlockedHashTable t = build_blocked_table(a, 2, f);
  CHECK(range_hash(a, t, f.h1, 2, 2).value == 3135);  // h("ba") = 98*31+97
  CHECK(range_hash(a, t, f.h1, 3, 0) == HashValue{});
  CHECK(range_hash(a, t, f.h1, 1, 4) == get_hash(a, t, f.h1, 4));
}

TEST_CASE("remove_prefix inverts concat on random fingerprints") {
  std::mt19937_64 rng(11);
  HashFamily f = make_hash_family(256, HashConfig{1234, false});
  for (int it = 0; it < 10000; it++) {
    std::size_t l1 = testlib::rand_below(rng, 40);
    std::size_t l2 = testlib::rand_below(rng, 40);
    std::vector<uint32_t> s1(l1), s2(l2);
    for (auto& c : s1) c = static_cast<uint32_t>(1 + testlib::rand_below(rng, 256));
    for (auto& c : s2) c = static_cast<uint32_t>(1 + testlib::rand_below(rng, 256));
    HashValue h1{fold(s1, f.h1), l1};
    HashValue h2{fold(s2, f.h1), l2};
    HashValue h12 = hash_concat(h1, h2, f.h1);
    CHECK(hash_remove_prefix(h12, h1, f.h1) == h2);
  }
}

TEST_CASE("blocked get_hash equals the full prefix table") {
  std::mt19937_64 rng(23);
  Sequence a = testlib::random_sequence(rng, 1500, 4);
  HashFamily f = make_hash_family(4, HashConfig{99, false});
  PrefixHashTable pt = build_prefix_table(a, f);
  for (uint64_t b : {1, 2, 4, 32}) {
    BlockedHashTable bt = build_blocked_table(a, b, f);
    CHECK(bt.e1.size() == a.size() / b + 1);
    for (int it = 0; it < 1000; it++) {
      uint64_t x = testlib::rand_below(rng, a.size() + 1);
      CHECK(get_hash(a, bt, f.h1, x).value == pt.e1[x]);
    }
  }
}

TEST_CASE("lcp_hash equals the naive scan on both tables") {
  std::mt19937_64 rng(31);
  for (uint32_t sigma : {2u, 4u, 64u}) {
    Sequence a = testlib::random_sequence(rng, 800, sigma);
    Sequence b = testlib::random_sequence(rng, 700, sigma);
    HashFamily f = make_hash_family(sigma, HashConfig{5, false});
    PrefixHashTable pa = build_prefix_table(a, f);
    PrefixHashTable pb = build_prefix_table(b, f);
    BlockedHashTable ba = build_blocked_table(a, 8, f);
    BlockedHashTable bb = build_blocked_table(b, 8, f);
    for (int it = 0; it < 3000; it++) {
      uint64_t x = 1 + testlib::rand_below(rng, a.size() + 1);
      uint64_t y = 1 + testlib::rand_below(rng, b.size() + 1);
      uint64_t want = lcp_naive(a, b, x, y);
      CHECK(lcp_hash(a, b, pa, pb, f, x, y) == want);
      CHECK(lcp_hash(a, b, ba, bb, f, x, y) == want);
    }
  }
}

TEST_CASE("lcp_hash worked examples") {
  auto [a, b] = sequences_from_strings("banana", "bandana");
  HashFamily f = make_hash_family(std::max(a.sigma, b.sigma));
  PrefixHashTable pa = build_prefix_table(a, f);
  PrefixHashTable pb = build_prefix_table(b, f);
  CHECK(lcp_hash(a, b, pa, pb, f, 1, 1) == 3);
  CHECK(lcp_hash(a, b, pa, pb, f, 7, 8) == 0);  // x = |A|+1 is allowed
  PrefixHashTable paa = build_prefix_table(a, f);
  CHECK(lcp_hash(a, a, pa, paa, f, 1, 1) == a.size());
  CHECK(lcp_hash(a, b, pa, pb, f, 2, 1) == 0);  // immediate mismatch
}

TEST_CASE("compare count stays within the dual-binary-search budget") {
  std::mt19937_64 rng(41);
  Sequence a = testlib::random_sequence(rng, 4000, 2);
  Sequence b = a;  // long matches to exercise the exponential phase
  b.codes[2000] = 3 - b.codes[2000];
  b.sigma = a.sigma = 2;
  HashFamily f = make_hash_family(2, HashConfig{17, false});
  PrefixHashTable pa = build_prefix_table(a, f);
  PrefixHashTable pb = build_prefix_table(b, f);
  LcpQueryCounter counter;
  for (int it = 0; it < 2000; it++) {
    uint64_t x = 1 + testlib::rand_below(rng, a.size() + 1);
    uint64_t y = 1 + testlib::rand_below(rng, b.size() + 1);
    uint64_t before = counter.compares.load();
    uint64_t l = lcp_hash(a, b, pa, pb, f, x, y, &counter);
    uint64_t used = counter.compares.load() - before;
    uint64_t budget = 2 * std::bit_width(l + 1) + 2;  // 2*ceil(log2(l+2))+2
    CHECK(used <= budget);
    CHECK(l == lcp_naive(a, b, x, y));
  }
}

TEST_CASE("double hashing agrees with the naive scan") {
  std::mt19937_64 rng(53);
  Sequence a = testlib::random_sequence(rng, 500, 3);
  Sequence b = testlib::random_sequence(rng, 500, 3);
  HashFamily f = make_hash_family(3, HashConfig{7, true});
  BlockedHashTable ba = build_blocked_table(a, 4, f);
  BlockedHashTable bb = build_blocked_table(b, 4, f);
  CHECK(ba.aux_words() == 2 * (a.size() / 4 + 1));
  for (int it = 0; it < 1000; it++) {
    uint64_t x = 1 + testlib::rand_below(rng, a.size() + 1);
    uint64_t y = 1 + testlib::rand_below(rng, b.size() + 1);
    CHECK(lcp_hash(a, b, ba, bb, f, x, y) == lcp_naive(a, b, x, y));
  }
}

TEST_CASE("table builds are identical across worker counts") {
  std::mt19937_64 rng(61);
  Sequence a = testlib::random_sequence(rng, 100000, 200);
  HashFamily f = make_hash_family(200, HashConfig{3, false});
  set_num_workers(1);
  PrefixHashTable p1 = build_prefix_table(a, f);
  BlockedHashTable b1 = build_blocked_table(a, 32, f);
  set_num_workers(4);
  PrefixHashTable p4 = build_prefix_table(a, f);
  BlockedHashTable b4 = build_blocked_table(a, 32, f);
  set_num_workers(0);
  CHECK(p1.e1 == p4.e1);
  CHECK(b1.e1 == b4.e1);
}
