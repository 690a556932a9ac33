#include "qemlab/statevector.hpp"

#include <cmath>

namespace qemlab::sim {

StateVector::StateVector(RegisterLayout layout) : layout_(std::move(layout)) {
  amps_.assign(layout_.dimension(), amp_t{0.0, 0.0});
  amps_[0] = amp_t{1.0, 0.0};
}

double StateVector::norm_sq() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

void StateVector::renormalize() {
  const double n = std::sqrt(norm_sq());
  require(n > 0.0, "statevector: cannot renormalize the zero vector");
  const double inv = 1.0 / n;
  for (auto& a : amps_) a *= inv;
}

StateVector init_basis_state(const RegisterLayout& layout,
                             std::span<const std::pair<std::string_view, uint64_t>> values) {
  StateVector st(layout);
  uint64_t idx = 0;
  for (const auto& [name, value] : values) {
    const int r = layout.index_of(name);
    require(value <= layout.mask_of(r),
            "init_basis_state: value for register '" + std::string(name) +
                "' exceeds its width");
    idx = layout.insert(idx, r, value);
  }
  auto amps = st.amplitudes();
  amps[0] = amp_t{0.0, 0.0};
  amps[idx] = amp_t{1.0, 0.0};
  return st;
}

StateVector init_basis_state(
    const RegisterLayout& layout,
    std::initializer_list<std::pair<std::string_view, uint64_t>> values) {
  return init_basis_state(
      layout, std::span<const std::pair<std::string_view, uint64_t>>(values.begin(),
                                                                     values.size()));
}

void apply_hadamard(StateVector& st, std::string_view reg) {
  const auto& layout = st.layout();
  const int r = layout.index_of(reg);
  const int width = layout.reg(r).width;
  const int base_shift = layout.shift_of(r);
  auto amps = st.amplitudes();
  const uint64_t dim = amps.size();
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  for (int q = 0; q < width; ++q) {
    const uint64_t bit = uint64_t{1} << (base_shift + q);
    for (uint64_t i = 0; i < dim; ++i) {
      if (i & bit) continue;
      const uint64_t j = i | bit;
      const amp_t a = amps[i];
      const amp_t b = amps[j];
      amps[i] = (a + b) * inv_sqrt2;
      amps[j] = (a - b) * inv_sqrt2;
    }
  }
}

namespace {

struct OraclePlan {
  int in_reg, out_reg;
  int in_shift, out_shift;
  uint64_t in_mask, out_mask;
};

OraclePlan plan_oracle(const RegisterLayout& layout, std::string_view in_reg,
                       std::string_view out_reg, std::span<const uint32_t> f) {
  OraclePlan p{};
  p.in_reg = layout.index_of(in_reg);
  p.out_reg = layout.index_of(out_reg);
  require(p.in_reg != p.out_reg, "xor oracle: input and output registers must differ");
  p.in_shift = layout.shift_of(p.in_reg);
  p.out_shift = layout.shift_of(p.out_reg);
  p.in_mask = layout.mask_of(p.in_reg);
  p.out_mask = layout.mask_of(p.out_reg);
  require(f.size() == p.in_mask + 1,
          "xor oracle: table size must equal 2^(input register width)");
  for (uint32_t v : f)
    require(v <= p.out_mask, "xor oracle: table output exceeds output register width");
  return p;
}

}  // namespace

void apply_xor_oracle(StateVector& st, std::string_view in_reg, std::string_view out_reg,
                      std::span<const uint32_t> f) {
  const OraclePlan p = plan_oracle(st.layout(), in_reg, out_reg, f);
  auto amps = st.amplitudes();
  const uint64_t dim = amps.size();
  // |x>|y> -> |x>|y ^ f(x)| permutes basis indices by an involution: flip the
  // out-register bits by f(x). Swap each orbit pair once.
  for (uint64_t i = 0; i < dim; ++i) {
    const uint64_t x = (i >> p.in_shift) & p.in_mask;
    const uint64_t fx = f[x];
    if (fx == 0) continue;
    const uint64_t j = i ^ (fx << p.out_shift);
    if (j > i) std::swap(amps[i], amps[j]);
  }
}

void apply_controlled_xor_oracle(StateVector& st, std::string_view ctrl_reg,
                                 std::string_view in_reg, std::string_view out_reg,
                                 std::span<const uint32_t> f) {
  const auto& layout = st.layout();
  const int c = layout.index_of(ctrl_reg);
  require(layout.reg(c).width == 1, "controlled xor oracle: control register must be 1 qubit");
  require(ctrl_reg != in_reg && ctrl_reg != out_reg,
          "controlled xor oracle: control register must be distinct");
  const OraclePlan p = plan_oracle(layout, in_reg, out_reg, f);
  const uint64_t ctrl_bit = uint64_t{1} << layout.shift_of(c);
  auto amps = st.amplitudes();
  const uint64_t dim = amps.size();
  for (uint64_t i = 0; i < dim; ++i) {
    if (!(i & ctrl_bit)) continue;
    const uint64_t x = (i >> p.in_shift) & p.in_mask;
    const uint64_t fx = f[x];
    if (fx == 0) continue;
    const uint64_t j = i ^ (fx << p.out_shift);
    if (j > i) std::swap(amps[i], amps[j]);
  }
}

void apply_phase_oracle(StateVector& st, std::string_view reg,
                        const std::function<bool(uint64_t)>& predicate) {
  const auto& layout = st.layout();
  const int r = layout.index_of(reg);
  const int shift = layout.shift_of(r);
  const uint64_t mask = layout.mask_of(r);
  // Evaluate the predicate once per register value, not once per amplitude.
  std::vector<char> flip(mask + 1);
  for (uint64_t v = 0; v <= mask; ++v) flip[v] = predicate(v) ? 1 : 0;
  auto amps = st.amplitudes();
  const uint64_t dim = amps.size();
  for (uint64_t i = 0; i < dim; ++i)
    if (flip[(i >> shift) & mask]) amps[i] = -amps[i];
}

uint64_t measure_register(StateVector& st, std::string_view reg, Rng& rng) {
  const auto& layout = st.layout();
  const int r = layout.index_of(reg);
  const int shift = layout.shift_of(r);
  const uint64_t mask = layout.mask_of(r);
  auto amps = st.amplitudes();
  const uint64_t dim = amps.size();

  std::vector<double> weight(mask + 1, 0.0);
  for (uint64_t i = 0; i < dim; ++i) weight[(i >> shift) & mask] += std::norm(amps[i]);

  // Cumulative inversion; rounding slack falls back to the last nonzero bucket.
  const double u = rng.uniform01() * st.norm_sq();
  uint64_t outcome = 0;
  bool chosen = false;
  uint64_t last_nonzero = 0;
  double acc = 0.0;
  for (uint64_t v = 0; v <= mask; ++v) {
    if (weight[v] > 0.0) last_nonzero = v;
    acc += weight[v];
    if (!chosen && u < acc) {
      outcome = v;
      chosen = true;
    }
  }
  if (!chosen || weight[outcome] == 0.0) outcome = last_nonzero;

  for (uint64_t i = 0; i < dim; ++i)
    if (((i >> shift) & mask) != outcome) amps[i] = amp_t{0.0, 0.0};
  st.renormalize();
  return outcome;
}

double probability_of(const StateVector& st, std::string_view reg, uint64_t value) {
  const auto& layout = st.layout();
  const int r = layout.index_of(reg);
  require(value <= layout.mask_of(r), "probability_of: value exceeds register width");
  const int shift = layout.shift_of(r);
  const uint64_t mask = layout.mask_of(r);
  auto amps = st.amplitudes();
  double p = 0.0;
  for (uint64_t i = 0; i < amps.size(); ++i)
    if (((i >> shift) & mask) == value) p += std::norm(amps[i]);
  return p;
}

}  // namespace qemlab::sim
