#include "ptso/lowering.hpp"

namespace ptso {

namespace {

class GadgetBuilder {
 public:
  GadgetBuilder(RegisterMachine& rm, std::string prefix) : rm_(rm), prefix_(std::move(prefix)) {}

  std::uint32_t fresh() { return rm_.add_state(prefix_ + "." + std::to_string(counter_++)); }
  void edge(std::uint32_t from, RmAction action, std::uint32_t to) { rm_.add(from, action, to); }
  /// from --a--> fresh --b--> to
  void edge2(std::uint32_t from, RmAction a, RmAction b, std::uint32_t to) {
    const auto mid = fresh();
    edge(from, a, mid);
    edge(mid, b, to);
  }

 private:
  RegisterMachine& rm_;
  std::string prefix_;
  std::uint32_t counter_ = 0;
};

bool holds(ActionKind kind, std::uint32_t x, std::uint32_t y) {
  switch (kind) {
    case ActionKind::CheckEq: return x == y;
    case ActionKind::CheckNe: return x != y;
    case ActionKind::CheckLt: return x < y;
    case ActionKind::CheckGt: return x > y;
    case ActionKind::CheckLe: return x <= y;
    case ActionKind::CheckGe: return x >= y;
    default: return false;
  }
}

ActionKind mirrored(ActionKind kind) {
  switch (kind) {
    case ActionKind::CheckLt: return ActionKind::CheckGt;
    case ActionKind::CheckGt: return ActionKind::CheckLt;
    case ActionKind::CheckLe: return ActionKind::CheckGe;
    case ActionKind::CheckGe: return ActionKind::CheckLe;
    default: return kind;
  }
}

// Loop that moves `src` into every register of `dsts` until src is zero,
// then continues at `done`.  Returns the loop head.
std::uint32_t drain_entry(GadgetBuilder& b, std::uint32_t src, const std::vector<std::uint32_t>& dsts,
                          std::uint32_t done) {
  const auto loop = b.fresh();
  b.edge(loop, RmAction::check_zero(src), done);
  std::uint32_t at = b.fresh();
  b.edge(loop, RmAction::dec(src), at);
  for (std::size_t i = 0; i < dsts.size(); ++i) {
    const auto next = i + 1 == dsts.size() ? loop : b.fresh();
    b.edge(at, RmAction::inc(dsts[i]), next);
    at = next;
  }
  return loop;
}

// Register-versus-literal comparison: counts r down into aux.
void lower_reg_lit(GadgetBuilder& b, std::uint32_t from, std::uint32_t to, ActionKind kind, std::uint32_t r,
                   std::uint32_t k, std::uint32_t aux) {
  const auto restore = drain_entry(b, aux, {r}, to);
  std::uint32_t at = from;
  for (std::uint32_t i = 0; i <= k; ++i) {
    // At this point r holds the original value minus i and aux holds i.
    if (holds(kind, i, k)) b.edge(at, RmAction::check_zero(r), restore);
    const auto next = b.fresh();
    b.edge2(at, RmAction::dec(r), RmAction::inc(aux), next);
    at = next;
  }
  // original value > k
  if (holds(kind, k + 1, k)) b.edge(at, RmAction::skip(), restore);
}

void lower_reg_reg(GadgetBuilder& b, std::uint32_t from, std::uint32_t to, ActionKind kind, std::uint32_t r1,
                   std::uint32_t r2, std::uint32_t aux) {
  const auto restore = drain_entry(b, aux, {r1, r2}, to);
  const auto loop = b.fresh();
  b.edge(from, RmAction::skip(), loop);
  {
    const auto m1 = b.fresh();
    b.edge(loop, RmAction::dec(r1), m1);
    b.edge2(m1, RmAction::dec(r2), RmAction::inc(aux), loop);
  }
  if (kind == ActionKind::CheckEq || kind == ActionKind::CheckLe || kind == ActionKind::CheckGe)
    b.edge2(loop, RmAction::check_zero(r1), RmAction::check_zero(r2), restore);
  if (kind == ActionKind::CheckLt || kind == ActionKind::CheckLe || kind == ActionKind::CheckNe) {
    const auto z = b.fresh();
    b.edge(loop, RmAction::check_zero(r1), z);
    b.edge2(z, RmAction::dec(r2), RmAction::inc(r2), restore);
  }
  if (kind == ActionKind::CheckGt || kind == ActionKind::CheckGe || kind == ActionKind::CheckNe) {
    const auto z = b.fresh();
    b.edge(loop, RmAction::check_zero(r2), z);
    b.edge2(z, RmAction::dec(r1), RmAction::inc(r1), restore);
  }
}

void lower_set(GadgetBuilder& b, std::uint32_t from, std::uint32_t to, std::uint32_t r, const Operand& y,
               std::uint32_t aux) {
  if (y.is_register && y.value == r) {
    b.edge(from, RmAction::skip(), to);
    return;
  }
  // zero r
  const auto zero = b.fresh();
  b.edge(from, RmAction::skip(), zero);
  b.edge(zero, RmAction::dec(r), zero);
  const auto cleared = b.fresh();
  b.edge(zero, RmAction::check_zero(r), cleared);
  if (!y.is_register) {
    std::uint32_t at = cleared;
    for (std::uint32_t i = 0; i < y.value; ++i) {
      const auto next = i + 1 == y.value ? to : b.fresh();
      b.edge(at, RmAction::inc(r), next);
      at = next;
    }
    if (y.value == 0) b.edge(at, RmAction::skip(), to);
    return;
  }
  const auto copy_back = drain_entry(b, aux, {r, y.value}, to);
  const auto move = drain_entry(b, y.value, {aux}, copy_back);
  b.edge(cleared, RmAction::skip(), move);
}

std::string fresh_register_name(const RegisterMachine& rm) {
  std::string name = "aux";
  while (rm.register_index(name)) name += "_";
  return name;
}

}  // namespace

RegisterMachine lower_tier3_to_tier2(const RegisterMachine& rm) {
  RegisterMachine out = rm;
  out.delta.clear();
  std::uint32_t aux = 0;
  if (rm.max_tier() == 3) aux = out.add_register(fresh_register_name(rm));
  for (std::size_t i = 0; i < rm.delta.size(); ++i) {
    const auto& t = rm.delta[i];
    const auto& a = t.action;
    if (a.tier() < 3) {
      out.add(t.from, a, t.to);
      continue;
    }
    GadgetBuilder b(out, rm.states[t.from] + ".g" + std::to_string(i));
    if (a.kind == ActionKind::Set) {
      lower_set(b, t.from, t.to, a.a.value, a.b, aux);
      continue;
    }
    if (!a.a.is_register && !a.b.is_register) {
      if (holds(a.kind, a.a.value, a.b.value)) out.add(t.from, RmAction::skip(), t.to);
      continue;
    }
    if (a.a.is_register && a.b.is_register) {
      if (a.a.value == a.b.value) {
        if (holds(a.kind, 0, 0)) out.add(t.from, RmAction::skip(), t.to);
        continue;
      }
      lower_reg_reg(b, t.from, t.to, a.kind, a.a.value, a.b.value, aux);
      continue;
    }
    if (a.a.is_register)
      lower_reg_lit(b, t.from, t.to, a.kind, a.a.value, a.b.value, aux);
    else
      lower_reg_lit(b, t.from, t.to, mirrored(a.kind), a.b.value, a.a.value, aux);
  }
  return out;
}

RegisterMachine lower_tier2_to_tier1(const RegisterMachine& rm) {
  if (rm.max_tier() > 2) throw ModelError("machine still uses tier-3 actions");
  RegisterMachine out = rm;
  out.delta.clear();
  for (std::size_t i = 0; i < rm.delta.size(); ++i) {
    const auto& t = rm.delta[i];
    const auto& a = t.action;
    const auto r = a.a.value;
    const std::string prefix = rm.states[t.from] + ".l" + std::to_string(i) + ".";
    switch (a.kind) {
      case ActionKind::Inc:
        for (std::uint32_t d = 0; d < rm.bound; ++d) {
          const auto mid = out.add_state(prefix + std::to_string(d));
          out.add(t.from, RmAction::read(r, d), mid);
          out.add(mid, RmAction::write(r, d + 1), t.to);
        }
        break;
      case ActionKind::Dec:
        for (std::uint32_t d = 1; d <= rm.bound; ++d) {
          const auto mid = out.add_state(prefix + std::to_string(d));
          out.add(t.from, RmAction::read(r, d), mid);
          out.add(mid, RmAction::write(r, d - 1), t.to);
        }
        break;
      case ActionKind::CheckZero: out.add(t.from, RmAction::read(r, 0), t.to); break;
      default: out.add(t.from, a, t.to); break;
    }
  }
  return out;
}

RegisterMachine lower_to_tier1(const RegisterMachine& rm) { return lower_tier2_to_tier1(lower_tier3_to_tier2(rm)); }

}  // namespace ptso
