#include "gatesmith/lowering.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <type_traits>

#include "gatesmith/errors.hpp"
#include "gatesmith/synthesis.hpp"

namespace gatesmith::synthesis {
namespace {

using Emit = std::function<void(int, int, int)>;

bool same_angle(const Angle& a, const Angle& b) {
  if (a.exact() && b.exact()) return *a.exact() == *b.exact();
  const double d = std::abs(a.radians() - b.radians());
  return std::min(d, 2.0 * M_PI - d) < 1e-12;
}

bool is_rotation(const GateKind& kind) {
  return std::holds_alternative<gates::STheta>(kind) ||
         std::holds_alternative<gates::SThetaInv>(kind) ||
         std::holds_alternative<gates::SReflect>(kind) || std::holds_alternative<gates::H>(kind);
}

// a . b = identity for two single-qubit rotations.
bool cancels(const GateApp& a, const GateApp& b) {
  if (a.qubits != b.qubits) return false;
  if (auto* s = std::get_if<gates::STheta>(&a.kind)) {
    auto* t = std::get_if<gates::SThetaInv>(&b.kind);
    return t && same_angle(s->theta, t->theta);
  }
  if (auto* s = std::get_if<gates::SThetaInv>(&a.kind)) {
    auto* t = std::get_if<gates::STheta>(&b.kind);
    return t && same_angle(s->theta, t->theta);
  }
  if (auto* s = std::get_if<gates::SReflect>(&a.kind)) {
    auto* t = std::get_if<gates::SReflect>(&b.kind);
    return t && same_angle(s->theta, t->theta);
  }
  return std::holds_alternative<gates::H>(a.kind) && std::holds_alternative<gates::H>(b.kind);
}

void clean_vchain(const Emit& emit, const std::vector<int>& c, int t, const std::vector<int>& a) {
  const int m = static_cast<int>(c.size());
  emit(c[0], c[1], a[0]);
  for (int i = 2; i <= m - 2; ++i) emit(c[i], a[i - 2], a[i - 1]);
  emit(c[m - 1], a[m - 3], t);
  for (int i = m - 2; i >= 2; --i) emit(c[i], a[i - 2], a[i - 1]);
  emit(c[0], c[1], a[0]);
}

void dirty_vchain(const Emit& emit, const std::vector<int>& c, int t, const std::vector<int>& a) {
  const int m = static_cast<int>(c.size());
  auto top = [&] { emit(c[m - 1], a[m - 3], t); };
  auto down = [&] {
    for (int j = m - 4; j >= 0; --j) emit(c[j + 2], a[j], a[j + 1]);
  };
  auto up = [&] {
    for (int j = 0; j <= m - 4; ++j) emit(c[j + 2], a[j], a[j + 1]);
  };
  auto base = [&] { emit(c[0], c[1], a[0]); };
  top();
  down();
  base();
  up();
  top();
  down();
  base();
  up();
}

void mcx_with_dirty(const Emit& emit, const std::vector<int>& c, int t,
                    const std::vector<int>& dirty);

// Splits the controls in two halves around one borrowed wire d.
void split_mcx(const Emit& emit, const std::vector<int>& c, int t, int d) {
  const std::size_t m1 = (c.size() + 1) / 2;
  std::vector<int> c1(c.begin(), c.begin() + m1);
  std::vector<int> c2(c.begin() + m1, c.end());
  std::vector<int> pool1 = c2;
  pool1.push_back(t);
  std::vector<int> c2d = c2;
  c2d.push_back(d);
  for (int rep = 0; rep < 2; ++rep) {
    mcx_with_dirty(emit, c1, d, pool1);
    mcx_with_dirty(emit, c2d, t, c1);
  }
}

void mcx_with_dirty(const Emit& emit, const std::vector<int>& c, int t,
                    const std::vector<int>& dirty) {
  const std::size_t m = c.size();
  if (m == 1) throw LoweringError("single-control X needs a |1> wire");
  if (m == 2) {
    emit(c[0], c[1], t);
    return;
  }
  if (dirty.size() >= m - 2) {
    dirty_vchain(emit, c, t, dirty);
    return;
  }
  if (dirty.empty()) throw LoweringError("multi-controlled X needs a spare wire");
  split_mcx(emit, c, t, dirty[0]);
}

}  // namespace

void append_multi_controlled_x(Circuit& circuit, const std::vector<int>& controls, int target,
                               const std::vector<int>& clean, const std::vector<int>& dirty) {
  Emit emit = [&](int a, int b, int t) { circuit.add(gates::Toffoli{}, {a, b, t}); };
  const std::size_t m = controls.size();
  if (m < 2) throw LoweringError("multi-controlled X needs at least two controls");
  if (m >= 3 && clean.size() >= m - 2) {
    clean_vchain(emit, controls, target, clean);
    return;
  }
  mcx_with_dirty(emit, controls, target, dirty);
}

// -----------------------------------------------------------------------------

class BasisLowerer::Impl {
 public:
  Impl(int source_qubits, const BasisSpec& basis, SigmaZBuilder builder)
      : n_source_(source_qubits), basis_(basis), builder_(builder), next_(source_qubits) {
    if (source_qubits < 0) throw PreconditionError("negative qubit count");
    if (builder_.k2 < 1) throw PreconditionError("k2 must be at least 1");
    busy_.assign(static_cast<std::size_t>(source_qubits), 0);
  }

  void lower(const Circuit& block, std::int64_t repeat, bool materialize) {
    if (block.n_qubits() > n_source_) throw DimensionError("block is wider than the source register");
    if (repeat < 0) throw PreconditionError("negative repeat count");
    if (repeat == 0) return;
    std::vector<int> wiring(static_cast<std::size_t>(block.n_qubits()));
    for (int i = 0; i < block.n_qubits(); ++i) wiring[static_cast<std::size_t>(i)] = i;

    if (materialize) {
      for (std::int64_t r = 0; r < repeat; ++r) {
        const std::size_t before = body_.size();
        sink_ = &body_;
        lower_gates(block.gates(), wiring, {});
        add_counts(body_, before, body_.size(), 1);
      }
      return;
    }
    materialized_ = false;
    std::vector<GateApp> first;
    sink_ = &first;
    lower_gates(block.gates(), wiring, {});
    add_counts(first, 0, first.size(), 1);
    if (repeat == 1) return;
    std::vector<GateApp> second;
    const std::int64_t uses_before = uses_;
    sink_ = &second;
    lower_gates(block.gates(), wiring, {});
    const std::int64_t uses_per_block = uses_ - uses_before;
    add_counts(second, 0, second.size(), repeat - 1);
    uses_ += (repeat - 2) * uses_per_block;
    if (builder_.policy == AncillaPolicy::fresh) virtual_registers_ += (repeat - 2) * uses_per_block;
  }

  const LoweringTally& tally() {
    tally_.total_qubits = next_ + virtual_registers_ * 2 * builder_.k2;
    tally_.sigma_z_uses = uses_;
    tally_.phase_registers = static_cast<std::int64_t>(registers_.size()) + virtual_registers_;
    return tally_;
  }

  LoweredCircuit finish() {
    if (!materialized_) throw std::logic_error("lowering was only counted");
    std::vector<GateApp> prep;
    std::vector<GateApp> unprep;
    for (const auto& reg : registers_) {
      sink_ = &prep;
      prepare(reg);
    }
    for (auto it = registers_.rbegin(); it != registers_.rend(); ++it) {
      sink_ = &unprep;
      unprepare(*it);
    }
    LoweredCircuit out;
    out.circuit = Circuit(next_);
    for (auto* list : {&prep, &body_, &unprep}) {
      for (auto& g : *list) out.circuit.add(std::move(g.kind), std::move(g.qubits));
    }
    out.source_qubits = n_source_;
    out.ancilla_bits = init_;
    out.sigma_z_uses = static_cast<int>(uses_);
    out.phase_registers = static_cast<int>(registers_.size());
    return out;
  }

  LoweringTally finish_tally() {
    const std::int64_t regs = static_cast<std::int64_t>(registers_.size()) + virtual_registers_;
    if (regs > 0) {
      std::vector<GateApp> one;
      sink_ = &one;
      const std::vector<int>& reg = registers_.front();
      prepare(reg);
      unprepare(reg);
      add_counts(one, 0, one.size(), regs);
    }
    return tally();
  }

 private:
  void add_counts(const std::vector<GateApp>& list, std::size_t from, std::size_t to,
                  std::int64_t times) {
    for (std::size_t i = from; i < to; ++i) tally_.gate_counts[kind_name(list[i].kind)] += times;
    tally_.size += static_cast<std::int64_t>(to - from) * times;
  }

  int alloc(char bit) {
    init_.push_back(bit);
    busy_.push_back(0);
    return next_++;
  }
  int one1() {
    if (!one1_) one1_ = alloc('1');
    return *one1_;
  }
  int one2() {
    one1();
    if (!one2_) one2_ = alloc('1');
    return *one2_;
  }
  int flag() {
    if (!flag_) flag_ = alloc('0');
    return *flag_;
  }
  const std::vector<int>& new_register() {
    std::vector<int> reg;
    for (int i = 0; i < 2 * builder_.k2; ++i) reg.push_back(alloc('0'));
    registers_.push_back(std::move(reg));
    return registers_.back();
  }

  void emit(GateKind kind, std::vector<int> qubits) { sink_->push_back({std::move(kind), std::move(qubits)}); }
  void toffoli(int a, int b, int t) { emit(gates::Toffoli{}, {a, b, t}); }
  void x(int t) { toffoli(one1(), one2(), t); }
  void cnot(int c, int t) { toffoli(one1(), c, t); }

  // U_w (forward) or U_{-w} on q, w the working angle.
  void rotation(int q, bool forward) {
    if (!basis_.s_is_reflection) {
      if (forward) {
        emit(gates::STheta{basis_.s_theta}, {q});
      } else {
        x(q);
        emit(gates::STheta{basis_.s_theta}, {q});
        x(q);
      }
      return;
    }
    if (forward) {
      emit(gates::SReflect{basis_.s_theta}, {q});
      x(q);
    } else {
      x(q);
      emit(gates::SReflect{basis_.s_theta}, {q});
    }
  }

  void prepare(const std::vector<int>& reg) {
    for (std::size_t i = 0; i + 1 < reg.size(); i += 2) {
      rotation(reg[i], true);
      x(reg[i + 1]);
      rotation(reg[i + 1], true);
    }
  }
  void unprepare(const std::vector<int>& reg) {
    for (std::size_t i = reg.size(); i >= 2; i -= 2) {
      rotation(reg[i - 1], false);
      x(reg[i - 1]);
      rotation(reg[i - 2], false);
    }
  }

  std::vector<int> free_clean_work(const std::vector<int>& exclude) const {
    std::vector<int> out;
    for (int w : work_) {
      if (busy_[static_cast<std::size_t>(w)]) continue;
      if (std::find(exclude.begin(), exclude.end(), w) != exclude.end()) continue;
      out.push_back(w);
    }
    return out;
  }

  void mcx(const std::vector<int>& controls, int target) {
    const std::size_t m = controls.size();
    if (m == 0) return x(target);
    if (m == 1) return cnot(controls[0], target);
    if (m == 2) return toffoli(controls[0], controls[1], target);
    Emit e = [this](int a, int b, int t) { toffoli(a, b, t); };
    std::vector<int> exclude = controls;
    exclude.push_back(target);
    const std::vector<int> clean = free_clean_work(exclude);
    if (clean.size() >= m - 2) return clean_vchain(e, controls, target, clean);
    std::vector<int> dirty;
    for (int q = 0; q < next_; ++q) {
      if (std::find(exclude.begin(), exclude.end(), q) != exclude.end()) continue;
      if (q == one1_ || q == one2_) continue;
      dirty.push_back(q);
    }
    if (dirty.size() >= m - 2) return dirty_vchain(e, controls, target, dirty);
    if (!dirty.empty()) return split_mcx(e, controls, target, dirty[0]);
    work_.push_back(alloc('0'));
    mcx(controls, target);
  }

  // Flips pair i of `pairs` when every wire of `conds` is 1 and i is the
  // first pair whose bits agree.
  void sigma_z_tilde(const std::vector<int>& conds, const std::vector<std::pair<int, int>>& pairs) {
    const std::size_t k = pairs.size();
    for (const auto& [b, bp] : pairs) cnot(b, bp);

    std::vector<int> s = free_clean_work(conds);
    for (const auto& [b, bp] : pairs) {
      s.erase(std::remove_if(s.begin(), s.end(), [&](int q) { return q == b || q == bp; }), s.end());
    }
    while (s.size() + 1 < k) {
      const int w = alloc('0');
      work_.push_back(w);
      s.push_back(w);
    }
    s.resize(k > 0 ? k - 1 : 0);
    for (int w : s) busy_[static_cast<std::size_t>(w)] = 1;

    std::vector<int> first = conds;
    first.push_back(pairs[0].second);
    x(pairs[0].second);
    mcx(first, pairs[0].first);
    x(pairs[0].second);
    if (k >= 2) mcx(first, s[0]);
    for (std::size_t i = 1; i < k; ++i) {
      const int xi = pairs[i].second;
      x(xi);
      toffoli(s[i - 1], xi, pairs[i].first);
      x(xi);
      if (i + 1 < k) toffoli(s[i - 1], xi, s[i]);
    }
    for (std::size_t i = k; i-- > 2;) toffoli(s[i - 2], pairs[i - 1].second, s[i - 1]);
    if (k >= 2) mcx(first, s[0]);

    for (int w : s) busy_[static_cast<std::size_t>(w)] = 0;
    for (const auto& [b, bp] : pairs) cnot(b, bp);
  }

  // -1 on the subspace where every wire of `conds` is 1.
  void phase_flip(const std::vector<int>& conds) {
    const std::vector<int>& reg = (builder_.policy == AncillaPolicy::shared && !registers_.empty())
                                      ? registers_.front()
                                      : new_register();
    ++uses_;
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i + 1 < reg.size(); i += 2) pairs.emplace_back(reg[i], reg[i + 1]);
    sigma_z_tilde(conds, pairs);
  }

  // f ^= K and (Q == 0), or K and (Q != 0) when `nonzero`.
  void mark(const std::vector<int>& K, const std::vector<int>& Q, int f, bool nonzero) {
    for (int q : Q) x(q);
    std::vector<int> cq = K;
    cq.insert(cq.end(), Q.begin(), Q.end());
    mcx(cq, f);
    for (int q : Q) x(q);
    if (nonzero) mcx(K, f);
  }
  void unmark(const std::vector<int>& K, const std::vector<int>& Q, int f, bool nonzero) {
    if (nonzero) mcx(K, f);
    for (int q : Q) x(q);
    std::vector<int> cq = K;
    cq.insert(cq.end(), Q.begin(), Q.end());
    mcx(cq, f);
    for (int q : Q) x(q);
  }

  void rotation_gate(const GateKind& kind, int q) {
    const Angle w = basis_.working_theta();
    if (auto* g = std::get_if<gates::STheta>(&kind)) {
      if (!same_angle(g->theta, w)) throw LoweringError("rotation angle differs from the basis angle");
      return rotation(q, true);
    }
    if (auto* g = std::get_if<gates::SThetaInv>(&kind)) {
      if (!same_angle(g->theta, w)) throw LoweringError("rotation angle differs from the basis angle");
      return rotation(q, false);
    }
    if (auto* g = std::get_if<gates::SReflect>(&kind)) {
      if (!basis_.s_is_reflection || !same_angle(g->theta, basis_.s_theta)) {
        throw LoweringError("reflection is not the basis gate");
      }
      return emit(gates::SReflect{basis_.s_theta}, {q});
    }
    throw LoweringError("no lowering rule for " + kind_name(kind));
  }

  void lower_gate(const GateApp& g, const std::vector<int>& wiring, const std::vector<int>& K) {
    std::vector<int> q;
    q.reserve(g.qubits.size());
    for (int local : g.qubits) q.push_back(wiring[static_cast<std::size_t>(local)]);
    auto with = [&](std::initializer_list<int> extra) {
      std::vector<int> c = K;
      c.insert(c.end(), extra.begin(), extra.end());
      return c;
    };
    std::visit(
        [&](const auto& kind) {
          using T = std::decay_t<decltype(kind)>;
          if constexpr (std::is_same_v<T, gates::Toffoli>) {
            mcx(with({q[0], q[1]}), q[2]);
          } else if constexpr (std::is_same_v<T, gates::Cnot>) {
            mcx(with({q[0]}), q[1]);
          } else if constexpr (std::is_same_v<T, gates::X>) {
            mcx(K, q[0]);
          } else if constexpr (std::is_same_v<T, gates::Z>) {
            phase_flip(with({q[0]}));
          } else if constexpr (std::is_same_v<T, gates::ReflectZero>) {
            const int f = flag();
            mark(K, q, f, kind.negated);
            phase_flip({f});
            unmark(K, q, f, kind.negated);
          } else if constexpr (std::is_same_v<T, gates::MarkNonZeroFlip>) {
            const std::vector<int> reg(q.begin(), q.end() - 1);
            mark(K, reg, q.back(), true);
          } else if constexpr (std::is_same_v<T, gates::SigmaZTilde>) {
            std::vector<std::pair<int, int>> pairs;
            for (std::size_t i = 1; i + 1 < q.size(); i += 2) pairs.emplace_back(q[i], q[i + 1]);
            sigma_z_tilde(with({q[0]}), pairs);
          } else if constexpr (std::is_same_v<T, gates::ControlledBlock>) {
            const std::vector<int> inner(q.begin() + 1, q.end());
            lower_gates(kind.inner->gates(), inner, with({q[0]}));
          } else {
            if (!K.empty()) throw LoweringError("controlled rotation outside a conjugation");
            rotation_gate(g.kind, q[0]);
          }
        },
        g.kind);
  }

  void lower_gates(const std::vector<GateApp>& list, const std::vector<int>& wiring,
                   const std::vector<int>& K) {
    if (K.empty()) {
      for (const auto& g : list) lower_gate(g, wiring, K);
      return;
    }
    // Under a control, rotations must come as V . C . V^-1 with C classical;
    // only C is controlled.
    const std::size_t n = list.size();
    std::size_t i = 0;
    while (i < n) {
      if (!is_rotation(list[i].kind)) {
        lower_gate(list[i], wiring, K);
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < n && is_rotation(list[j].kind)) ++j;
      std::size_t l = j;
      while (l < n && !is_rotation(list[l].kind)) ++l;
      const std::size_t len = j - i;
      if (l + len > n) throw LoweringError("controlled rotation outside a conjugation");
      for (std::size_t t = 0; t < len; ++t) {
        if (!cancels(list[j - 1 - t], list[l + t])) {
          throw LoweringError("controlled rotation outside a conjugation");
        }
      }
      for (std::size_t t = i; t < j; ++t) lower_gate(list[t], wiring, {});
      for (std::size_t t = j; t < l; ++t) lower_gate(list[t], wiring, K);
      for (std::size_t t = l; t < l + len; ++t) lower_gate(list[t], wiring, {});
      i = l + len;
    }
  }

  int n_source_;
  BasisSpec basis_;
  SigmaZBuilder builder_;
  int next_;
  std::string init_;
  std::vector<char> busy_;
  std::optional<int> one1_, one2_, flag_;
  std::vector<std::vector<int>> registers_;
  std::vector<int> work_;
  std::vector<GateApp> body_;
  std::vector<GateApp>* sink_ = &body_;
  std::int64_t uses_ = 0;
  std::int64_t virtual_registers_ = 0;
  bool materialized_ = true;
  LoweringTally tally_;
};

BasisLowerer::BasisLowerer(int source_qubits, const BasisSpec& basis, SigmaZBuilder builder)
    : impl_(new Impl(source_qubits, basis, builder)) {}
BasisLowerer::~BasisLowerer() { delete impl_; }
void BasisLowerer::lower(const Circuit& block, std::int64_t repeat, bool materialize) {
  impl_->lower(block, repeat, materialize);
}
const LoweringTally& BasisLowerer::tally() const { return impl_->tally(); }
LoweredCircuit BasisLowerer::finish() { return impl_->finish(); }
LoweringTally BasisLowerer::finish_tally() { return impl_->finish_tally(); }

LoweredCircuit lower_to_basis(const Circuit& circuit, const BasisSpec& basis, SigmaZBuilder builder) {
  BasisLowerer lowerer(circuit.n_qubits(), basis, builder);
  lowerer.lower(circuit);
  return lowerer.finish();
}

bool uses_only_basis(const Circuit& circuit, const BasisSpec& basis) {
  for (const auto& g : circuit.gates()) {
    if (std::holds_alternative<gates::Toffoli>(g.kind)) continue;
    if (!basis.s_is_reflection) {
      auto* s = std::get_if<gates::STheta>(&g.kind);
      if (s && same_angle(s->theta, basis.s_theta)) continue;
    } else {
      auto* s = std::get_if<gates::SReflect>(&g.kind);
      if (s && same_angle(s->theta, basis.s_theta)) continue;
    }
    return false;
  }
  return true;
}

PhaseRoutedCircuit route_phases_through_sigma_z(const Circuit& circuit, const Angle& theta, int k2,
                                                AncillaPolicy policy) {
  if (k2 < 1) throw PreconditionError("k2 must be at least 1");
  int uses = 0;
  bool needs_flag = false;
  for (const auto& g : circuit.gates()) {
    if (std::holds_alternative<gates::Z>(g.kind)) ++uses;
    if (std::holds_alternative<gates::ReflectZero>(g.kind)) {
      ++uses;
      needs_flag = true;
    }
    if (auto* b = std::get_if<gates::ControlledBlock>(&g.kind)) {
      for (const auto& [name, count] : b->inner->gate_counts()) {
        if (count > 0 && (name == "z" || name == "reflect_zero")) {
          throw LoweringError("phase gates inside a controlled block are not routed");
        }
      }
    }
  }
  const int regs = uses == 0 ? 0 : (policy == AncillaPolicy::shared ? 1 : uses);
  const int n = circuit.n_qubits();
  const int f = n;
  const int first_reg = n + (needs_flag ? 1 : 0);
  PhaseRoutedCircuit out;
  out.circuit = Circuit(first_reg + regs * 2 * k2);
  int next_reg = 0;
  auto reg_wires = [&](int c) {
    std::vector<int> w = {c};
    const int r = policy == AncillaPolicy::shared ? 0 : next_reg++;
    for (int i = 0; i < 2 * k2; ++i) w.push_back(first_reg + r * 2 * k2 + i);
    return w;
  };
  for (const auto& g : circuit.gates()) {
    if (std::holds_alternative<gates::Z>(g.kind)) {
      out.circuit.add(gates::SigmaZTilde{k2}, reg_wires(g.qubits[0]));
    } else if (auto* r = std::get_if<gates::ReflectZero>(&g.kind)) {
      std::vector<int> mq = g.qubits;
      mq.push_back(f);
      out.circuit.add(gates::MarkNonZeroFlip{r->m}, mq);
      if (!r->negated) out.circuit.add(gates::X{}, {f});
      out.circuit.add(gates::SigmaZTilde{k2}, reg_wires(f));
      if (!r->negated) out.circuit.add(gates::X{}, {f});
      out.circuit.add(gates::MarkNonZeroFlip{r->m}, mq);
    } else {
      out.circuit.add(g.kind, g.qubits);
    }
  }
  out.extension = StateVector::basis(needs_flag ? 1 : 0, 0);
  for (int i = 0; i < regs; ++i) out.extension = tensor(out.extension, phase_ancilla(theta, k2));
  out.sigma_z_uses = uses;
  out.phase_registers = regs;
  return out;
}

}  // namespace gatesmith::synthesis
