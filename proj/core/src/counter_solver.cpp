#include <chrono>
#include <limits>

#include "ptso/solvers.hpp"
#include "search_detail.hpp"

namespace ptso {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

}  // namespace

std::uint64_t counter_bound(const RegisterMachine& rm) {
  std::uint64_t n = rm.states.size();
  for (std::size_t r = 0; r < rm.registers.size(); ++r) n = saturating_mul(n, std::uint64_t{rm.bound} + 1);
  return saturating_mul(n, n);
}

Verdict solve_counter(const RegisterMachine& rm, const CounterOptions& options) {
  if (rm.adt.kind != AdtKind::Counter && rm.adt.kind != AdtKind::WeakCounter)
    throw ModelError("counter backend needs a counter or weak-counter machine");
  const auto start = std::chrono::steady_clock::now();
  RegisterMachine augmented = rm;
  augmented.add(rm.target, RmAction::adt({OpCode::Dec, 0, 0}), rm.target);

  const std::uint64_t bound = counter_bound(rm);
  const std::uint64_t limit = options.cap ? std::min(bound, *options.cap) : bound;
  auto out = detail::bfs(augmented, limit, options.max_states);

  Verdict v;
  v.stats = out.stats;
  if (out.found) {
    v.outcome = Outcome::Reachable;
    v.run = std::move(out.run);
    v.witness = describe_run(rm, v.run);
    v.note = "counter";
  } else if (out.budget) {
    v.outcome = Outcome::Inconclusive;
    v.note = "counter: state budget exhausted";
  } else if (out.pruned && limit < bound) {
    v.outcome = Outcome::Inconclusive;
    v.note = "counter: cap " + std::to_string(limit) + " below bound blocked an increment";
  } else {
    v.outcome = Outcome::Unreachable;
    v.note = "counter";
  }
  v.stats.millis = detail::elapsed_ms(start);
  return v;
}

RegisterMachine binarize_counter(const RegisterMachine& rm, std::uint64_t bound) {
  if (rm.adt.kind != AdtKind::Counter && rm.adt.kind != AdtKind::WeakCounter)
    throw ModelError("binary encoding needs a counter machine");
  if (bound < 1) throw ModelError("binary encoding needs a bound of at least 1");
  std::uint32_t bits = 0;
  while (bits < 64 && (bound >> bits) != 0) ++bits;  // ceil(log2(B+1))

  RegisterMachine out;
  out.name = rm.name + ".bin";
  out.states = rm.states;
  out.init = rm.init;
  out.target = rm.target;
  out.registers = rm.registers;
  out.bound = std::max<std::uint32_t>(rm.bound, 1);
  out.adt = AdtType::trivial();
  std::vector<std::uint32_t> bit;
  for (std::uint32_t i = 0; i < bits; ++i) {
    std::string name = "bit" + std::to_string(i);
    while (out.register_index(name)) name += "_";
    bit.push_back(out.add_register(name));
  }

  for (std::size_t ti = 0; ti < rm.delta.size(); ++ti) {
    const auto& t = rm.delta[ti];
    if (t.action.kind != ActionKind::Adt) {
      out.add(t.from, t.action, t.to);
      continue;
    }
    const std::string tag = rm.states[t.from] + ".b" + std::to_string(ti) + ".";
    std::uint32_t counter = 0;
    const auto fresh = [&] { return out.add_state(tag + std::to_string(counter++)); };
    switch (t.action.op.code) {
      case OpCode::Inc: {
        // value < bound, most significant bit first
        const auto below = fresh();
        std::uint32_t at = t.from;
        for (std::uint32_t i = bits; i-- > 0;) {
          const bool one = (bound >> i) & 1U;
          const auto next = i == 0 ? std::numeric_limits<std::uint32_t>::max() : fresh();
          if (one) {
            out.add(at, RmAction::read(bit[i], 0), below);
            if (i != 0) out.add(at, RmAction::read(bit[i], 1), next);
          } else if (i != 0) {
            out.add(at, RmAction::read(bit[i], 0), next);
          }
          at = next;
        }
        // ripple carry from the least significant bit
        at = below;
        for (std::uint32_t i = 0; i < bits; ++i) {
          const auto set = fresh();
          out.add(at, RmAction::read(bit[i], 0), set);
          out.add(set, RmAction::write(bit[i], 1), t.to);
          if (i + 1 < bits) {
            const auto carry = fresh();
            const auto next = fresh();
            out.add(at, RmAction::read(bit[i], 1), carry);
            out.add(carry, RmAction::write(bit[i], 0), next);
            at = next;
          }
        }
        break;
      }
      case OpCode::Dec: {
        std::uint32_t at = t.from;
        for (std::uint32_t i = 0; i < bits; ++i) {
          const auto clear = fresh();
          out.add(at, RmAction::read(bit[i], 1), clear);
          out.add(clear, RmAction::write(bit[i], 0), t.to);
          if (i + 1 < bits) {
            const auto borrow = fresh();
            const auto next = fresh();
            out.add(at, RmAction::read(bit[i], 0), borrow);
            out.add(borrow, RmAction::write(bit[i], 1), next);
            at = next;
          }
        }
        break;
      }
      case OpCode::IsZero: {
        std::uint32_t at = t.from;
        for (std::uint32_t i = 0; i < bits; ++i) {
          const auto next = i + 1 == bits ? t.to : fresh();
          out.add(at, RmAction::read(bit[i], 0), next);
          at = next;
        }
        break;
      }
      default: throw ModelError("unexpected counter operation");
    }
  }
  return out;
}

}  // namespace ptso
