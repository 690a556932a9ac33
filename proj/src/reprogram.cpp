#include "qemlab/reprogram.hpp"

namespace qemlab::perm {

void Transcript::append(uint64_t x, uint64_t y) {
  require(!contains_x(x), "Transcript: duplicate input");
  require(!contains_y(y), "Transcript: duplicate output");
  entries_.push_back({x, y});
}

void Transcript::append_any_y(uint64_t x, uint64_t y) {
  require(!contains_x(x), "Transcript: duplicate input");
  entries_.push_back({x, y});
}

bool Transcript::contains_x(uint64_t x) const {
  for (const auto& e : entries_)
    if (e.x == x) return true;
  return false;
}

bool Transcript::contains_y(uint64_t y) const {
  for (const auto& e : entries_)
    if (e.y == y) return true;
  return false;
}

Transcript Transcript::prefix(size_t t) const {
  require(t <= entries_.size(), "Transcript::prefix: length exceeds transcript");
  Transcript out;
  out.entries_.assign(entries_.begin(), entries_.begin() + static_cast<ptrdiff_t>(t));
  return out;
}

void ReprogramSet::insert(uint64_t input, uint64_t output) {
  for (const auto& [in, out] : pairs_)
    require(in != input, "ReprogramSet: duplicate input");
  pairs_.emplace_back(input, output);
}

Permutation perm_reprogram(const Permutation& p, const Transcript& t, const Key& k) {
  const uint64_t size = p.domain_size();
  const size_t count = t.size();
  // Transposition endpoints are all computed from the *original* P.
  std::vector<std::pair<uint64_t, uint64_t>> swaps(count);
  for (size_t i = 0; i < count; ++i) {
    const auto& e = t[i];
    require(e.x < size && e.y < size, "perm_reprogram: transcript entry out of range");
    for (size_t j = 0; j < i; ++j) {
      require(t[j].x != e.x, "perm_reprogram: transcript inputs must be distinct");
      require(t[j].y != e.y, "perm_reprogram: transcript outputs must be distinct");
    }
    swaps[i] = {p.forward(e.x ^ k.k1), e.y ^ k.k2};
  }
  std::vector<uint32_t> fwd(p.table().begin(), p.table().end());
  std::vector<uint32_t> inv(p.inverse_table().begin(), p.inverse_table().end());
  // Composition applies the last entry's transposition first.
  for (size_t idx = count; idx-- > 0;) {
    const auto [a, b] = swaps[idx];
    if (a == b) continue;
    // swap o table: exchange the outputs at the preimages of a and b.
    const uint32_t xa = inv[a];
    const uint32_t xb = inv[b];
    fwd[xa] = static_cast<uint32_t>(b);
    fwd[xb] = static_cast<uint32_t>(a);
    inv[a] = xb;
    inv[b] = xa;
  }
  return Permutation::from_table(p.bits(), std::move(fwd));
}

FunctionTable fn_reprogram_set(const FunctionTable& f, const ReprogramSet& b) {
  FunctionTable out = f;
  const uint64_t in_bound = f.domain_size();
  const uint64_t out_bound = uint64_t{1} << f.out_bits();
  for (const auto& [input, output] : b.pairs()) {
    require(input < in_bound && output < out_bound, "fn_reprogram_set: pair out of range");
    out.mutable_table()[input] = static_cast<uint32_t>(output);
  }
  return out;
}

FunctionTable fn_reprogram_point(const FunctionTable& f, uint64_t s, uint64_t y) {
  ReprogramSet b;
  b.insert(s, y);
  return fn_reprogram_set(f, b);
}

FunctionTable fwd_only_reprogram(const FunctionTable& f, const Transcript& t, uint64_t k) {
  FunctionTable out = f;
  const uint64_t in_bound = f.domain_size();
  const uint64_t out_bound = uint64_t{1} << f.out_bits();
  for (const auto& e : t.entries()) {
    require(e.x < in_bound && e.y < out_bound, "fwd_only_reprogram: transcript entry out of range");
    out.mutable_table()[e.x ^ k] = static_cast<uint32_t>(e.y);
  }
  return out;
}

}  // namespace qemlab::perm
