#include <chrono>
#include <deque>
#include <unordered_map>

#include "ptso/hash.hpp"
#include "ptso/solvers.hpp"
#include "search_detail.hpp"

namespace ptso {

namespace {

// Pushdown rule (p, top) -> (to, push) with push top first, |push| <= 2.
struct PdsRule {
  std::uint32_t p = 0;
  std::uint32_t top = 0;
  std::uint32_t to = 0;
  std::vector<std::uint32_t> push;
  std::uint32_t edge = 0;
};

enum class Origin { Initial, Pop, Simple, Push };

struct Provenance {
  Origin origin = Origin::Initial;
  std::uint32_t rule = 0;
  std::uint64_t t1 = 0;
  std::uint64_t t2 = 0;
};

struct DerivedRule {
  std::uint32_t p = 0;
  std::uint32_t top = 0;
  std::uint32_t rule = 0;
  std::uint64_t t1 = 0;
};

class PreStar {
 public:
  PreStar(std::uint32_t controls, std::uint32_t gamma) : controls_(controls), gamma_(gamma), states_(controls + 2) {}

  std::uint32_t sink() const { return controls_; }
  std::uint32_t accept() const { return controls_ + 1; }

  std::uint64_t key(std::uint32_t from, std::uint32_t sym, std::uint32_t to) const {
    return (std::uint64_t{from} * gamma_ + sym) * states_ + to;
  }
  std::uint32_t from_of(std::uint64_t k) const { return static_cast<std::uint32_t>(k / states_ / gamma_); }
  std::uint32_t sym_of(std::uint64_t k) const { return static_cast<std::uint32_t>(k / states_ % gamma_); }
  std::uint32_t to_of(std::uint64_t k) const { return static_cast<std::uint32_t>(k % states_); }

  void add_rule(PdsRule rule) {
    const auto id = static_cast<std::uint32_t>(rules_.size());
    if (rule.push.size() == 1) by_rhs_[head(rule.to, rule.push[0])].push_back(id);
    if (rule.push.size() == 2) by_push_head_[head(rule.to, rule.push[0])].push_back(id);
    rules_.push_back(std::move(rule));
  }

  void add(std::uint64_t k, Provenance prov) {
    if (prov_.count(k)) return;
    prov_.emplace(k, prov);
    work_.push_back(k);
  }

  void saturate(Stats& stats) {
    for (std::uint32_t i = 0; i < rules_.size(); ++i)
      if (rules_[i].push.empty()) add(key(rules_[i].p, rules_[i].top, rules_[i].to), {Origin::Pop, i, 0, 0});
    while (!work_.empty()) {
      ++stats.iterations;
      const auto t = work_.front();
      work_.pop_front();
      const auto q = from_of(t);
      const auto g = sym_of(t);
      const auto q2 = to_of(t);
      rel_[head(q, g)].push_back(q2);
      const auto h = head(q, g);
      if (auto it = by_rhs_.find(h); it != by_rhs_.end())
        for (auto r : it->second) add(key(rules_[r].p, rules_[r].top, q2), {Origin::Simple, r, t, 0});
      if (auto it = derived_.find(h); it != derived_.end())
        for (const auto& d : it->second) add(key(d.p, d.top, q2), {Origin::Push, d.rule, d.t1, t});
      if (auto it = by_push_head_.find(h); it != by_push_head_.end()) {
        for (auto r : it->second) {
          const auto& rule = rules_[r];
          const auto dh = head(q2, rule.push[1]);
          derived_[dh].push_back({rule.p, rule.top, r, t});
          if (auto rt = rel_.find(dh); rt != rel_.end()) {
            const auto targets = rt->second;
            for (auto q3 : targets) add(key(rule.p, rule.top, q3), {Origin::Push, r, t, key(q2, rule.push[1], q3)});
          }
        }
      }
    }
    stats.explored = prov_.size();
  }

  // Path of saturated transitions reading `word` from `from` into accept().
  std::optional<std::vector<std::uint64_t>> accepting_path(std::uint32_t from,
                                                           const std::vector<std::uint32_t>& word) const {
    std::vector<std::vector<std::optional<std::uint64_t>>> via(word.size() + 1,
                                                               std::vector<std::optional<std::uint64_t>>(states_));
    std::vector<std::vector<bool>> seen(word.size() + 1, std::vector<bool>(states_, false));
    seen[0][from] = true;
    for (std::size_t i = 0; i < word.size(); ++i) {
      for (std::uint32_t s = 0; s < states_; ++s) {
        if (!seen[i][s]) continue;
        auto it = rel_.find(head(s, word[i]));
        if (it == rel_.end()) continue;
        for (auto s2 : it->second) {
          if (seen[i + 1][s2]) continue;
          seen[i + 1][s2] = true;
          via[i + 1][s2] = key(s, word[i], s2);
        }
      }
    }
    if (!seen[word.size()][accept()]) return std::nullopt;
    std::vector<std::uint64_t> path(word.size());
    std::uint32_t at = accept();
    for (std::size_t i = word.size(); i-- > 0;) {
      path[i] = *via[i + 1][at];
      at = from_of(path[i]);
    }
    return path;
  }

  // Edges of a run from the configuration read along `path` to a target one.
  std::vector<std::uint32_t> expand(const std::vector<std::uint64_t>& path) const {
    std::vector<std::uint32_t> edges;
    std::vector<std::uint64_t> pending(path.rbegin(), path.rend());
    while (!pending.empty()) {
      const auto t = pending.back();
      pending.pop_back();
      const auto& p = prov_.at(t);
      if (p.origin == Origin::Initial) break;
      edges.push_back(rules_[p.rule].edge);
      if (p.origin == Origin::Simple) {
        pending.push_back(p.t1);
      } else if (p.origin == Origin::Push) {
        pending.push_back(p.t2);
        pending.push_back(p.t1);
      }
    }
    return edges;
  }

 private:
  std::uint64_t head(std::uint32_t state, std::uint32_t sym) const { return std::uint64_t{state} * gamma_ + sym; }

  std::uint32_t controls_;
  std::uint32_t gamma_;
  std::uint32_t states_;
  std::vector<PdsRule> rules_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> by_rhs_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> by_push_head_;
  std::unordered_map<std::uint64_t, std::vector<DerivedRule>> derived_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> rel_;
  std::unordered_map<std::uint64_t, Provenance> prov_;
  std::deque<std::uint64_t> work_;
};

}  // namespace

Verdict solve_stack(const RegisterMachine& rm, std::uint64_t max_control_states) {
  if (rm.adt.kind != AdtKind::Stack && rm.adt.kind != AdtKind::Trivial)
    throw ModelError("stack backend needs a stack machine");
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  v.note = "stack";

  const auto controls = control_overapproximation(rm, max_control_states);
  if (!controls) {
    v.outcome = Outcome::Inconclusive;
    v.note = "stack: control state budget exhausted";
    v.stats.millis = detail::elapsed_ms(start);
    return v;
  }
  using Key = std::pair<std::uint32_t, std::vector<std::uint32_t>>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return hash_range(k.second, k.first); }
  };
  std::unordered_map<Key, std::uint32_t, KeyHash> index;
  for (std::uint32_t i = 0; i < controls->size(); ++i) index.emplace((*controls)[i], i);

  const auto n = static_cast<std::uint32_t>(controls->size());
  const auto letters = static_cast<std::uint32_t>(rm.adt.alphabet.size());
  const std::uint32_t bottom = letters;
  PreStar pds(n, letters + 1);

  const auto outgoing = rm.outgoing();
  for (std::uint32_t c = 0; c < n; ++c) {
    const auto& [q, regs] = (*controls)[c];
    for (auto ti : outgoing[q]) {
      const auto& t = rm.delta[ti];
      auto next_regs = apply_to_registers(rm, regs, t.action);
      if (!next_regs) continue;
      const auto c2 = index.at(Key{t.to, std::move(*next_regs)});
      if (t.action.kind != ActionKind::Adt) {
        for (std::uint32_t x = 0; x <= letters; ++x) pds.add_rule({c, x, c2, {x}, ti});
        continue;
      }
      const auto& op = t.action.op;
      switch (op.code) {
        case OpCode::Push:
          for (std::uint32_t x = 0; x <= letters; ++x) pds.add_rule({c, x, c2, {op.symbol, x}, ti});
          break;
        case OpCode::Pop: pds.add_rule({c, op.symbol, c2, {}, ti}); break;
        case OpCode::IsEmpty: pds.add_rule({c, bottom, c2, {bottom}, ti}); break;
        default: throw ModelError("unexpected stack operation");
      }
    }
  }

  for (std::uint32_t c = 0; c < n; ++c) {
    if ((*controls)[c].first != rm.target) continue;
    for (std::uint32_t x = 0; x < letters; ++x) pds.add(pds.key(c, x, pds.sink()), {});
    pds.add(pds.key(c, bottom, pds.accept()), {});
  }
  for (std::uint32_t x = 0; x < letters; ++x) pds.add(pds.key(pds.sink(), x, pds.sink()), {});
  pds.add(pds.key(pds.sink(), bottom, pds.accept()), {});

  pds.saturate(v.stats);

  std::vector<std::uint32_t> word;
  if (rm.adt.kind == AdtKind::Stack) {
    const auto& init = std::get<Word>(rm.adt.initial).symbols;
    word.assign(init.rbegin(), init.rend());
  }
  word.push_back(bottom);
  const auto init_control = index.at(Key{rm.init, std::vector<std::uint32_t>(rm.registers.size(), 0)});
  if (auto path = pds.accepting_path(init_control, word)) {
    v.outcome = Outcome::Reachable;
    v.run = pds.expand(*path);
    v.witness = describe_run(rm, v.run);
  } else {
    v.outcome = Outcome::Unreachable;
  }
  v.stats.millis = detail::elapsed_ms(start);
  return v;
}

}  // namespace ptso
