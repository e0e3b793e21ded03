#include <algorithm>
#include <chrono>
#include <unordered_map>
#include <unordered_set>

#include "ptso/hash.hpp"
#include "ptso/solvers.hpp"
#include "search_detail.hpp"

namespace ptso {

namespace detail {

SearchOutcome bfs(const RegisterMachine& rm, std::optional<std::uint64_t> value_bound, std::uint64_t max_states) {
  struct Node {
    RmConfiguration cfg;
    std::uint32_t parent;
    std::uint32_t via;
  };
  std::vector<Node> nodes;
  const auto hash = [&](std::uint32_t i) { return RmConfigurationHash{}(nodes[i].cfg); };
  const auto eq = [&](std::uint32_t a, std::uint32_t b) { return nodes[a].cfg == nodes[b].cfg; };
  std::unordered_set<std::uint32_t, decltype(hash), decltype(eq)> seen(64, hash, eq);
  const auto outgoing = rm.outgoing();

  SearchOutcome out;
  nodes.push_back({initial_configuration(rm), 0, 0});
  seen.insert(0);
  std::optional<std::uint32_t> hit;
  if (nodes[0].cfg.state == rm.target) hit = 0;
  for (std::size_t head = 0; head < nodes.size() && !hit; ++head) {
    ++out.stats.iterations;
    const RmConfiguration current = nodes[head].cfg;
    for (auto ti : outgoing[current.state]) {
      auto next = rm_apply(rm, current, rm.delta[ti]);
      if (!next) continue;
      if (value_bound && value_size(rm.adt, next->value) > *value_bound) {
        out.pruned = true;
        if (rm.delta[ti].action.kind == ActionKind::Adt && rm.delta[ti].action.op.code == OpCode::Inc)
          out.blocked_inc = true;
        continue;
      }
      if (nodes.size() >= max_states) {
        out.budget = true;
        break;
      }
      const auto id = static_cast<std::uint32_t>(nodes.size());
      nodes.push_back({std::move(*next), static_cast<std::uint32_t>(head), ti});
      if (!seen.insert(id).second) {
        nodes.pop_back();
        continue;
      }
      if (nodes.back().cfg.state == rm.target) {
        hit = id;
        break;
      }
    }
    if (out.budget) break;
  }
  out.stats.explored = nodes.size();
  if (hit) {
    out.found = true;
    for (std::uint32_t at = *hit; at != 0; at = nodes[at].parent) out.run.push_back(nodes[at].via);
    std::reverse(out.run.begin(), out.run.end());
  }
  return out;
}

std::uint64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
}

}  // namespace detail

std::vector<std::string> describe_run(const RegisterMachine& rm, const std::vector<std::uint32_t>& run) {
  std::vector<std::string> lines;
  for (auto i : run) {
    const auto& t = rm.delta[i];
    lines.push_back(rm.states[t.from] + " -> " + rm.states[t.to] + " : " + format_action(rm, t.action));
  }
  return lines;
}

namespace {

Verdict finish(const RegisterMachine& rm, detail::SearchOutcome out, const std::string& backend,
               std::chrono::steady_clock::time_point start, bool closed_if_unpruned) {
  Verdict v;
  v.stats = out.stats;
  if (out.found) {
    v.outcome = Outcome::Reachable;
    v.run = std::move(out.run);
    v.witness = describe_run(rm, v.run);
    v.note = backend;
  } else if (out.budget) {
    v.outcome = Outcome::Inconclusive;
    v.note = backend + ": state budget exhausted";
  } else if (out.pruned || !closed_if_unpruned) {
    v.outcome = Outcome::Inconclusive;
    v.note = backend + ": values pruned at the bound";
  } else {
    v.outcome = Outcome::Unreachable;
    v.note = backend;
  }
  v.stats.millis = detail::elapsed_ms(start);
  return v;
}

}  // namespace

Verdict solve_finite(const RegisterMachine& rm, std::uint64_t max_states) {
  const auto start = std::chrono::steady_clock::now();
  return finish(rm, detail::bfs(rm, std::nullopt, max_states), "finite", start, true);
}

Verdict explore_bounded(const RegisterMachine& rm, std::uint64_t value_bound, std::uint64_t max_states) {
  const auto start = std::chrono::steady_clock::now();
  return finish(rm, detail::bfs(rm, value_bound, max_states), "bounded", start, true);
}

std::optional<std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>>> control_overapproximation(
    const RegisterMachine& rm, std::uint64_t max_states) {
  using Key = std::pair<std::uint32_t, std::vector<std::uint32_t>>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return hash_range(k.second, k.first); }
  };
  std::vector<Key> order;
  std::unordered_set<Key, KeyHash> seen;
  const auto outgoing = rm.outgoing();
  Key init{rm.init, std::vector<std::uint32_t>(rm.registers.size(), 0)};
  seen.insert(init);
  order.push_back(init);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Key current = order[head];
    for (auto ti : outgoing[current.first]) {
      const auto& t = rm.delta[ti];
      auto regs = apply_to_registers(rm, current.second, t.action);
      if (!regs) continue;
      Key next{t.to, std::move(*regs)};
      if (seen.count(next)) continue;
      if (order.size() >= max_states) return std::nullopt;
      seen.insert(next);
      order.push_back(std::move(next));
    }
  }
  return order;
}

}  // namespace ptso
