#include "ptso/pivot.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_set>

#include "ptso/hash.hpp"

namespace ptso {

std::uint32_t View::phi_l_max() const {
  std::uint32_t m = 0;
  for (auto v : phi_l) m = std::max(m, v);
  return m;
}

std::uint32_t rank_of(const std::vector<std::uint32_t>& omega, std::uint32_t message) {
  for (std::uint32_t i = 0; i < omega.size(); ++i)
    if (omega[i] == message) return i + 1;
  return 0;
}

View initial_view(const Program& program, std::vector<std::uint32_t> omega, std::uint32_t k) {
  const auto& mem = program.memory;
  for (std::size_t i = 0; i < omega.size(); ++i) {
    if (omega[i] >= mem.message_count()) throw ModelError("update sequence names an unknown message");
    for (std::size_t j = 0; j < i; ++j)
      if (omega[j] == omega[i]) throw ModelError("update sequence repeats a message");
  }
  if (k < 1 || k > omega.size() + 1) throw ModelError("provider index out of range");
  View v;
  v.q = program.process.init;
  v.val = program.adt.initial;
  v.lw.assign(mem.var_count(), kNoWrite);
  v.omega = std::move(omega);
  v.phi_l.assign(mem.var_count(), 0);
  v.phi_p = k;
  return v;
}

std::string rule_name(PivotRule rule) {
  switch (rule) {
    case PivotRule::Skip: return "skip";
    case PivotRule::Write1: return "write(1)";
    case PivotRule::Write2: return "write(2)";
    case PivotRule::Read1: return "read(1)";
    case PivotRule::Read2: return "read(2)";
    case PivotRule::Read3: return "read(3)";
    case PivotRule::Fence: return "fence";
    case PivotRule::DataOp: return "data";
  }
  return "?";
}

namespace {

// rank of the first message on x in omega; 0 if x never occurs.
std::uint32_t first_rank_of_var(const MemoryLayout& mem, const std::vector<std::uint32_t>& omega, std::uint32_t x) {
  for (std::uint32_t i = 0; i < omega.size(); ++i)
    if (mem.message_var(omega[i]) == x) return i + 1;
  return 0;
}

}  // namespace

std::vector<std::pair<PivotLabel, View>> pivot_step(const Program& program, const View& view) {
  std::vector<std::pair<PivotLabel, View>> out;
  const auto& mem = program.memory;
  const auto& delta = program.process.delta;
  for (std::uint32_t ti = 0; ti < delta.size(); ++ti) {
    const auto& t = delta[ti];
    if (t.from != view.q) continue;
    const auto& instr = t.instr;
    switch (instr.kind) {
      case InstrKind::Skip: {
        View next = view;
        next.q = t.to;
        out.push_back({{PivotRule::Skip, ti}, std::move(next)});
        break;
      }
      case InstrKind::Write: {
        const auto rank = rank_of(view.omega, mem.message_index(instr.var, instr.value));
        if (rank == 0) break;
        if (rank < view.phi_p) {
          View next = view;
          next.q = t.to;
          next.lw[instr.var] = static_cast<std::int32_t>(instr.value);
          const auto raised = std::max(view.phi_l_max(), rank);
          next.phi_l[instr.var] = raised;
          out.push_back({{PivotRule::Write1, ti}, std::move(next)});
        } else if (rank == view.phi_p) {
          out.push_back({{PivotRule::Write2, ti}, initial_view(program, view.omega, view.phi_p + 1)});
        }
        break;
      }
      case InstrKind::Read: {
        const auto x = instr.var;
        const auto d = instr.value;
        if (view.lw[x] == static_cast<std::int32_t>(d)) {
          View next = view;
          next.q = t.to;
          out.push_back({{PivotRule::Read1, ti}, std::move(next)});
        }
        if (d == 0 && view.lw[x] == kNoWrite) {
          const auto first = first_rank_of_var(mem, view.omega, x);
          if (first == 0 || first > view.phi_e) {
            View next = view;
            next.q = t.to;
            out.push_back({{PivotRule::Read2, ti}, std::move(next)});
          }
        }
        const auto pos = rank_of(view.omega, mem.message_index(x, d));
        if (pos >= 1 && pos < view.phi_p) {
          View next = view;
          next.q = t.to;
          next.phi_e = std::max({view.phi_e, view.phi_l[x], pos});
          out.push_back({{PivotRule::Read3, ti}, std::move(next)});
        }
        break;
      }
      case InstrKind::Fence: {
        View next = view;
        next.q = t.to;
        next.phi_e = std::max(view.phi_e, view.phi_l_max());
        out.push_back({{PivotRule::Fence, ti}, std::move(next)});
        break;
      }
      case InstrKind::Op: {
        auto value = adt_apply(program.adt, view.val, instr.op);
        if (!value) break;
        View next = view;
        next.q = t.to;
        next.val = std::move(*value);
        out.push_back({{PivotRule::DataOp, ti}, std::move(next)});
        break;
      }
    }
  }
  return out;
}

namespace {

// A view whose omega is only known up to the current provider: phi_P is
// |prefix| + 1 and messages beyond the prefix have not been chosen yet.
struct LazyView {
  std::vector<std::uint32_t> prefix;
  std::uint32_t q = 0;
  AdtValue val;
  std::vector<std::int32_t> lw;
  std::uint32_t phi_e = 0;
  std::vector<std::uint32_t> phi_l;

  bool operator==(const LazyView&) const = default;
};

std::size_t hash_lazy(const LazyView& v) {
  std::size_t seed = hash_range(v.prefix, v.q);
  hash_combine(seed, hash_value(v.val));
  hash_combine(seed, hash_range(v.lw));
  hash_combine(seed, v.phi_e);
  hash_combine(seed, hash_range(v.phi_l));
  return seed;
}

struct Node {
  LazyView view;
  std::uint32_t parent;
  PivotLabel label;
};

struct NodeHash {
  const std::vector<Node>* nodes;
  std::size_t operator()(std::uint32_t i) const { return hash_lazy((*nodes)[i].view); }
};

struct NodeEq {
  const std::vector<Node>* nodes;
  bool operator()(std::uint32_t a, std::uint32_t b) const { return (*nodes)[a].view == (*nodes)[b].view; }
};

LazyView lazy_initial(const Program& program, std::vector<std::uint32_t> prefix) {
  LazyView v;
  v.prefix = std::move(prefix);
  v.q = program.process.init;
  v.val = program.adt.initial;
  v.lw.assign(program.memory.var_count(), kNoWrite);
  v.phi_l.assign(program.memory.var_count(), 0);
  return v;
}

template <typename Emit>
void lazy_step(const Program& program, const LazyView& view, const std::vector<std::vector<std::uint32_t>>& outgoing,
               Emit&& emit) {
  const auto& mem = program.memory;
  const auto& delta = program.process.delta;
  std::uint32_t phi_l_max = 0;
  for (auto v : view.phi_l) phi_l_max = std::max(phi_l_max, v);
  const auto phi_p = static_cast<std::uint32_t>(view.prefix.size() + 1);
  const auto moved = [&](std::uint32_t to) {
    LazyView next = view;
    next.q = to;
    return next;
  };
  for (auto ti : outgoing[view.q]) {
    const auto& t = delta[ti];
    const auto& instr = t.instr;
    switch (instr.kind) {
      case InstrKind::Skip: emit(PivotLabel{PivotRule::Skip, ti}, moved(t.to)); break;
      case InstrKind::Write: {
        const auto m = mem.message_index(instr.var, instr.value);
        const auto rank = rank_of(view.prefix, m);
        if (rank != 0) {
          LazyView next = moved(t.to);
          next.lw[instr.var] = static_cast<std::int32_t>(instr.value);
          next.phi_l[instr.var] = std::max(phi_l_max, rank);
          emit(PivotLabel{PivotRule::Write1, ti}, std::move(next));
        } else {
          auto prefix = view.prefix;
          prefix.push_back(m);
          emit(PivotLabel{PivotRule::Write2, ti}, lazy_initial(program, std::move(prefix)));
        }
        break;
      }
      case InstrKind::Read: {
        const auto x = instr.var;
        const auto d = instr.value;
        if (view.lw[x] == static_cast<std::int32_t>(d)) emit(PivotLabel{PivotRule::Read1, ti}, moved(t.to));
        if (d == 0 && view.lw[x] == kNoWrite) {
          const auto first = first_rank_of_var(mem, view.prefix, x);
          if (first == 0 || first > view.phi_e) emit(PivotLabel{PivotRule::Read2, ti}, moved(t.to));
        }
        const auto pos = rank_of(view.prefix, mem.message_index(x, d));
        if (pos >= 1 && pos < phi_p) {
          LazyView next = moved(t.to);
          next.phi_e = std::max({view.phi_e, view.phi_l[x], pos});
          emit(PivotLabel{PivotRule::Read3, ti}, std::move(next));
        }
        break;
      }
      case InstrKind::Fence: {
        LazyView next = moved(t.to);
        next.phi_e = std::max(view.phi_e, phi_l_max);
        emit(PivotLabel{PivotRule::Fence, ti}, std::move(next));
        break;
      }
      case InstrKind::Op: {
        auto value = adt_apply(program.adt, view.val, instr.op);
        if (!value) break;
        LazyView next = moved(t.to);
        next.val = std::move(*value);
        emit(PivotLabel{PivotRule::DataOp, ti}, std::move(next));
        break;
      }
    }
  }
}

}  // namespace

PivotResult pivot_reach(const Program& program, const PivotOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  PivotResult result;
  const auto outgoing = program.process.outgoing();
  std::vector<Node> nodes;
  nodes.reserve(1024);
  std::unordered_set<std::uint32_t, NodeHash, NodeEq> seen(64, NodeHash{&nodes}, NodeEq{&nodes});
  nodes.push_back({lazy_initial(program, {}), 0, {}});
  seen.insert(0);

  bool pruned = false;
  bool budget = false;
  std::optional<std::uint32_t> hit;
  if (nodes[0].view.q == program.process.target) hit = 0;
  for (std::size_t head = 0; head < nodes.size() && !hit && !budget; ++head) {
    ++result.verdict.stats.iterations;
    const LazyView current = nodes[head].view;
    lazy_step(program, current, outgoing, [&](const PivotLabel& label, LazyView next) {
      if (hit || budget) return;
      if (value_size(program.adt, next.val) > options.value_bound) {
        pruned = true;
        return;
      }
      if (nodes.size() >= options.max_states) {
        budget = true;
        return;
      }
      const auto id = static_cast<std::uint32_t>(nodes.size());
      nodes.push_back({std::move(next), static_cast<std::uint32_t>(head), label});
      if (!seen.insert(id).second) {
        nodes.pop_back();
        return;
      }
      if (nodes.back().view.q == program.process.target) hit = id;
    });
  }
  result.verdict.stats.explored = nodes.size();
  if (hit) {
    result.verdict.outcome = Outcome::Reachable;
    result.omega = nodes[*hit].view.prefix;
    for (std::uint32_t at = *hit; at != 0; at = nodes[at].parent) result.run.push_back(nodes[at].label);
    std::reverse(result.run.begin(), result.run.end());
    result.verdict.note = "pivot";
    result.verdict.witness.push_back("omega: " + format_omega(program, result.omega));
    for (const auto& label : result.run)
      result.verdict.witness.push_back(rule_name(label.rule) + " " +
                                       format_instruction(program, program.process.delta[label.transition].instr));
  } else if (pruned || budget) {
    result.verdict.outcome = Outcome::Inconclusive;
    result.verdict.note = budget ? "state budget exhausted" : "ADT values pruned at the value bound";
  } else {
    result.verdict.outcome = Outcome::Unreachable;
    result.verdict.note = "pivot";
  }
  result.verdict.stats.millis = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  return result;
}

std::optional<View> replay_pivot(const Program& program, const std::vector<std::uint32_t>& omega,
                                 const std::vector<PivotLabel>& run) {
  View view = initial_view(program, omega, 1);
  for (const auto& label : run) {
    bool found = false;
    for (auto& [l, next] : pivot_step(program, view)) {
      if (l == label) {
        view = std::move(next);
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return view;
}

std::string format_omega(const Program& program, const std::vector<std::uint32_t>& omega) {
  std::string out;
  for (std::size_t i = 0; i < omega.size(); ++i) {
    if (i) out += "; ";
    out += program.memory.vars[program.memory.message_var(omega[i])] + "=" +
           std::to_string(program.memory.message_value(omega[i]));
  }
  return out;
}

}  // namespace ptso
