#include <algorithm>
#include <charconv>
#include <chrono>
#include <unordered_map>

#include "ptso/hash.hpp"
#include "ptso/solvers.hpp"
#include "search_detail.hpp"

namespace ptso {

namespace {

constexpr std::uint32_t kNone = 0xffffffffU;

bool leq(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

CoverabilityResult backward_coverability(const PetriNet& net, const Marking& target) {
  const std::size_t places = net.places.size();
  if (target.tokens.size() != places || net.initial.tokens.size() != places)
    throw ModelError("marking does not match the net's places");
  struct Element {
    std::vector<std::uint32_t> m;
    std::uint32_t succ;
    std::uint32_t via;
  };
  std::vector<Element> arena{{target.tokens, kNone, 0}};
  std::vector<std::uint32_t> active{0};
  std::vector<std::uint32_t> frontier{0};
  CoverabilityResult result;

  const auto finish = [&](std::uint32_t at) {
    result.coverable = true;
    for (; arena[at].succ != kNone; at = arena[at].succ) result.firing.push_back(arena[at].via);
  };
  if (leq(target.tokens, net.initial.tokens)) {
    finish(0);
    result.basis_elements = 1;
    return result;
  }

  while (!frontier.empty()) {
    ++result.iterations;
    std::vector<std::uint32_t> next;
    for (auto e : frontier) {
      for (std::uint32_t ti = 0; ti < net.transitions.size(); ++ti) {
        const auto& t = net.transitions[ti];
        std::vector<std::uint32_t> pre(places);
        for (std::size_t p = 0; p < places; ++p) {
          const auto m = arena[e].m[p];
          pre[p] = (m > t.output[p] ? m - t.output[p] : 0) + t.input[p];
        }
        bool covered = false;
        for (auto a : active)
          if (leq(arena[a].m, pre)) {
            covered = true;
            break;
          }
        if (covered) continue;
        const auto id = static_cast<std::uint32_t>(arena.size());
        arena.push_back({std::move(pre), e, ti});
        std::erase_if(active, [&](std::uint32_t a) { return leq(arena[id].m, arena[a].m); });
        std::erase_if(next, [&](std::uint32_t a) { return leq(arena[id].m, arena[a].m); });
        active.push_back(id);
        next.push_back(id);
        if (leq(arena[id].m, net.initial.tokens)) {
          finish(id);
          result.basis_elements = active.size();
          return result;
        }
      }
    }
    // every element added this round must be incomparable with the rest
    for (auto n : next)
      for (auto a : active)
        if (a != n && (leq(arena[a].m, arena[n].m) || leq(arena[n].m, arena[a].m))) result.antichain_ok = false;
    frontier = std::move(next);
  }
  result.basis_elements = active.size();
  return result;
}

Verdict solve_petri(const RegisterMachine& rm) {
  const auto start = std::chrono::steady_clock::now();
  const auto instance = encode_rm_to_coverability(rm);
  const auto cover = backward_coverability(instance.net, instance.target);
  Verdict v;
  v.note = "petri";
  v.stats.iterations = cover.iterations;
  v.stats.explored = cover.basis_elements;
  if (!cover.antichain_ok) v.note += ": basis lost the antichain property";
  if (cover.coverable) {
    v.outcome = Outcome::Reachable;
    for (auto ti : cover.firing) {
      // net transitions are named e<edge> or e<edge>.<suffix>
      const auto& name = instance.net.transitions[ti].name;
      std::uint32_t edge = 0;
      std::from_chars(name.data() + 1, name.data() + name.size(), edge);
      v.run.push_back(edge);
    }
    v.witness = describe_run(rm, v.run);
  } else {
    v.outcome = Outcome::Unreachable;
  }
  v.stats.millis = detail::elapsed_ms(start);
  return v;
}

Verdict solve_wsts(const RegisterMachine& rm, std::uint64_t max_elements) {
  if (!is_well_structured(rm.adt.kind))
    throw UnsupportedOrder(std::string("backward search needs a monotone ADT, not ") +
                           std::string(kind_name(rm.adt.kind)));
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  v.note = "wsts";

  const auto controls = control_overapproximation(rm, max_elements);
  if (!controls) {
    v.outcome = Outcome::Inconclusive;
    v.note = "wsts: control state budget exhausted";
    v.stats.millis = detail::elapsed_ms(start);
    return v;
  }
  using Key = std::pair<std::uint32_t, std::vector<std::uint32_t>>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return hash_range(k.second, k.first); }
  };
  std::unordered_map<Key, std::uint32_t, KeyHash> index;
  const auto n = static_cast<std::uint32_t>(controls->size());
  for (std::uint32_t i = 0; i < n; ++i) index.emplace((*controls)[i], i);

  // pred[c] = (c', edge) with c' --edge--> c on the registers
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> pred(n);
  const auto outgoing = rm.outgoing();
  for (std::uint32_t c = 0; c < n; ++c) {
    for (auto ti : outgoing[(*controls)[c].first]) {
      auto regs = apply_to_registers(rm, (*controls)[c].second, rm.delta[ti].action);
      if (!regs) continue;
      pred[index.at(Key{rm.delta[ti].to, std::move(*regs)})].emplace_back(c, ti);
    }
  }

  struct Element {
    std::uint32_t control;
    AdtValue value;
    std::uint32_t succ;
    std::uint32_t via;
  };
  std::vector<Element> arena;
  std::vector<std::vector<std::uint32_t>> active(n);
  std::vector<std::uint32_t> frontier;
  const std::uint32_t init_control = index.at(Key{rm.init, std::vector<std::uint32_t>(rm.registers.size(), 0)});
  std::optional<std::uint32_t> hit;

  const auto insert = [&](std::uint32_t control, AdtValue value, std::uint32_t succ, std::uint32_t via) {
    auto& group = active[control];
    for (auto a : group)
      if (wqo_leq(rm.adt, arena[a].value, value)) return false;
    const auto id = static_cast<std::uint32_t>(arena.size());
    arena.push_back({control, std::move(value), succ, via});
    std::erase_if(group, [&](std::uint32_t a) { return wqo_leq(rm.adt, arena[id].value, arena[a].value); });
    group.push_back(id);
    frontier.push_back(id);
    if (control == init_control && wqo_leq(rm.adt, arena[id].value, rm.adt.initial)) hit = id;
    return true;
  };

  for (std::uint32_t c = 0; c < n && !hit; ++c)
    if ((*controls)[c].first == rm.target) insert(c, wqo_bottom(rm.adt), kNone, 0);

  bool budget = false;
  while (!frontier.empty() && !hit && !budget) {
    ++v.stats.iterations;
    auto current = std::move(frontier);
    frontier.clear();
    for (auto e : current) {
      // skip elements subsumed since they were queued
      if (std::find(active[arena[e].control].begin(), active[arena[e].control].end(), e) ==
          active[arena[e].control].end())
        continue;
      for (const auto& [c, ti] : pred[arena[e].control]) {
        const auto& action = rm.delta[ti].action;
        if (action.kind != ActionKind::Adt) {
          insert(c, arena[e].value, e, ti);
        } else {
          for (auto& value : pre_min_upward(rm.adt, action.op, UpwardBasis{{arena[e].value}}).elements)
            insert(c, std::move(value), e, ti);
        }
        if (hit) break;
        if (arena.size() > max_elements) {
          budget = true;
          break;
        }
      }
      if (hit || budget) break;
    }
  }
  v.stats.explored = arena.size();
  if (hit) {
    v.outcome = Outcome::Reachable;
    for (std::uint32_t at = *hit; arena[at].succ != kNone; at = arena[at].succ) v.run.push_back(arena[at].via);
    v.witness = describe_run(rm, v.run);
  } else if (budget) {
    v.outcome = Outcome::Inconclusive;
    v.note = "wsts: element budget exhausted";
  } else {
    v.outcome = Outcome::Unreachable;
  }
  v.stats.millis = detail::elapsed_ms(start);
  return v;
}

}  // namespace ptso
