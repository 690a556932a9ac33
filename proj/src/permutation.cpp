#include "qemlab/permutation.hpp"

#include <istream>
#include <ostream>
#include <string>

namespace qemlab::perm {

namespace {
void check_bits(int n, const char* who) {
  require(n >= 1 && n <= 28, std::string(who) + ": bit width must be in [1, 28]");
}
}  // namespace

Permutation::Permutation(int n, std::vector<uint32_t> fwd, std::vector<uint32_t> inv)
    : n_(n), fwd_(std::move(fwd)), inv_(std::move(inv)) {}

Permutation Permutation::identity(int n) {
  check_bits(n, "Permutation::identity");
  const uint64_t size = uint64_t{1} << n;
  std::vector<uint32_t> t(size);
  for (uint64_t i = 0; i < size; ++i) t[i] = static_cast<uint32_t>(i);
  std::vector<uint32_t> inv = t;
  return Permutation(n, std::move(t), std::move(inv));
}

Permutation Permutation::from_table(int n, std::vector<uint32_t> table) {
  check_bits(n, "Permutation::from_table");
  const uint64_t size = uint64_t{1} << n;
  require(table.size() == size, "Permutation::from_table: table size must be 2^n");
  std::vector<uint32_t> inv(size, UINT32_MAX);
  for (uint64_t x = 0; x < size; ++x) {
    const uint32_t y = table[x];
    require(y < size, "Permutation::from_table: entry out of range");
    require(inv[y] == UINT32_MAX, "Permutation::from_table: table is not a bijection");
    inv[y] = static_cast<uint32_t>(x);
  }
  return Permutation(n, std::move(table), std::move(inv));
}

Permutation Permutation::sample(int n, Rng& rng) {
  check_bits(n, "Permutation::sample");
  const uint64_t size = uint64_t{1} << n;
  std::vector<uint32_t> t(size);
  for (uint64_t i = 0; i < size; ++i) t[i] = static_cast<uint32_t>(i);
  for (uint64_t i = size - 1; i > 0; --i) {
    const uint64_t j = rng.below(i + 1);
    std::swap(t[i], t[j]);
  }
  std::vector<uint32_t> inv(size);
  for (uint64_t x = 0; x < size; ++x) inv[t[x]] = static_cast<uint32_t>(x);
  return Permutation(n, std::move(t), std::move(inv));
}

Permutation make_swap(int n, uint64_t a, uint64_t b) {
  check_bits(n, "make_swap");
  const uint64_t size = uint64_t{1} << n;
  require(a < size && b < size, "make_swap: points out of range");
  std::vector<uint32_t> t(size);
  for (uint64_t i = 0; i < size; ++i) t[i] = static_cast<uint32_t>(i);
  std::swap(t[a], t[b]);
  return Permutation::from_table(n, std::move(t));
}

Permutation compose(const Permutation& f, const Permutation& g) {
  require(f.bits() == g.bits(), "compose: bit widths must match");
  const uint64_t size = f.domain_size();
  std::vector<uint32_t> t(size), inv(size);
  for (uint64_t x = 0; x < size; ++x) t[x] = static_cast<uint32_t>(f.forward(g.forward(x)));
  for (uint64_t x = 0; x < size; ++x) inv[t[x]] = static_cast<uint32_t>(x);
  return Permutation::from_table(f.bits(), std::move(t));
}

Permutation invert(const Permutation& p) {
  std::vector<uint32_t> t(p.inverse_table().begin(), p.inverse_table().end());
  return Permutation::from_table(p.bits(), std::move(t));
}

FunctionTable::FunctionTable(int in_bits, int out_bits, std::vector<uint32_t> table)
    : m_(in_bits), n_(out_bits), table_(std::move(table)) {
  check_bits(m_, "FunctionTable");
  check_bits(n_, "FunctionTable");
  require(table_.size() == (uint64_t{1} << m_), "FunctionTable: table size must be 2^m");
  const uint64_t out_bound = uint64_t{1} << n_;
  for (uint32_t v : table_) require(v < out_bound, "FunctionTable: entry out of range");
}

FunctionTable FunctionTable::sample(int in_bits, int out_bits, Rng& rng) {
  check_bits(in_bits, "FunctionTable::sample");
  check_bits(out_bits, "FunctionTable::sample");
  const uint64_t size = uint64_t{1} << in_bits;
  std::vector<uint32_t> t(size);
  for (uint64_t i = 0; i < size; ++i) t[i] = static_cast<uint32_t>(rng.bits(out_bits));
  return FunctionTable(in_bits, out_bits, std::move(t));
}

void write_hex_lines(std::ostream& os, std::span<const uint32_t> table) {
  static const char* digits = "0123456789abcdef";
  for (uint32_t v : table) {
    char buf[9];
    int len = 0;
    do {
      buf[len++] = digits[v & 0xf];
      v >>= 4;
    } while (v != 0);
    for (int i = len - 1; i >= 0; --i) os.put(buf[i]);
    os.put('\n');
  }
}

std::vector<uint32_t> read_hex_lines(std::istream& is) {
  std::vector<uint32_t> out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    uint64_t v = 0;
    for (char c : line) {
      int d;
      if (c >= '0' && c <= '9') d = c - '0';
      else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
      else throw ConfigError("read_hex_lines: invalid hex digit");
      v = (v << 4) | static_cast<uint64_t>(d);
      require(v <= UINT32_MAX, "read_hex_lines: value out of range");
    }
    out.push_back(static_cast<uint32_t>(v));
  }
  return out;
}

}  // namespace qemlab::perm
