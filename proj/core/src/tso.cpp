#include "ptso/tso.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <unordered_map>

#include "ptso/hash.hpp"

namespace ptso {

std::optional<std::uint32_t> lval(const Buffer& buffer, std::uint32_t x) {
  for (const auto& m : buffer)
    if (m.var == x) return m.value;
  return std::nullopt;
}

std::uint32_t rval(const Buffer& buffer, std::uint32_t memory_value, std::uint32_t x) {
  return lval(buffer, x).value_or(memory_value);
}

std::size_t TsoConfigurationHash::operator()(const TsoConfiguration& c) const {
  std::size_t seed = hash_range(c.states);
  for (const auto& v : c.values) hash_combine(seed, hash_value(v));
  for (const auto& b : c.buffers) {
    hash_combine(seed, b.size());
    for (const auto& m : b) hash_combine(seed, (std::size_t{m.var} << 16) ^ m.value);
  }
  hash_combine(seed, hash_range(c.memory));
  return seed;
}

TsoConfiguration initial_tso(const Program& program, std::uint32_t processes) {
  TsoConfiguration cfg;
  cfg.states.assign(processes, program.process.init);
  cfg.values.assign(processes, program.adt.initial);
  cfg.buffers.assign(processes, Buffer{});
  cfg.memory.assign(program.memory.var_count(), 0);
  return cfg;
}

std::optional<TsoConfiguration> tso_apply(const Program& program, const TsoConfiguration& cfg, const TsoLabel& label) {
  const auto i = label.proc;
  if (i >= cfg.processes()) return std::nullopt;
  if (label.update) {
    const auto& buffer = cfg.buffers[i];
    if (buffer.empty() || buffer.back() != label.message) return std::nullopt;
    TsoConfiguration next = cfg;
    next.buffers[i].pop_back();
    next.memory[label.message.var] = label.message.value;
    return next;
  }
  if (label.transition >= program.process.delta.size()) return std::nullopt;
  const auto& t = program.process.delta[label.transition];
  if (t.from != cfg.states[i]) return std::nullopt;
  const auto& instr = t.instr;
  switch (instr.kind) {
    case InstrKind::Skip: break;
    case InstrKind::Write: {
      TsoConfiguration next = cfg;
      auto& buffer = next.buffers[i];
      buffer.insert(buffer.begin(), Message{instr.var, instr.value});
      next.states[i] = t.to;
      return next;
    }
    case InstrKind::Read:
      if (rval(cfg.buffers[i], cfg.memory[instr.var], instr.var) != instr.value) return std::nullopt;
      break;
    case InstrKind::Fence:
      if (!cfg.buffers[i].empty()) return std::nullopt;
      break;
    case InstrKind::Op: {
      auto value = adt_apply(program.adt, cfg.values[i], instr.op);
      if (!value) return std::nullopt;
      TsoConfiguration next = cfg;
      next.values[i] = std::move(*value);
      next.states[i] = t.to;
      return next;
    }
  }
  TsoConfiguration next = cfg;
  next.states[i] = t.to;
  return next;
}

std::vector<std::pair<TsoLabel, TsoConfiguration>> tso_step(const Program& program, const TsoConfiguration& cfg) {
  std::vector<std::pair<TsoLabel, TsoConfiguration>> out;
  const auto& delta = program.process.delta;
  for (std::uint32_t i = 0; i < cfg.processes(); ++i) {
    for (std::uint32_t t = 0; t < delta.size(); ++t) {
      if (delta[t].from != cfg.states[i]) continue;
      TsoLabel label{i, false, t, {}};
      if (auto next = tso_apply(program, cfg, label)) out.emplace_back(label, std::move(*next));
    }
    if (!cfg.buffers[i].empty()) {
      TsoLabel label{i, true, 0, cfg.buffers[i].back()};
      if (auto next = tso_apply(program, cfg, label)) out.emplace_back(label, std::move(*next));
    }
  }
  return out;
}

TsoConfiguration canonical(const TsoConfiguration& cfg) {
  std::vector<std::uint32_t> order(cfg.processes());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (cfg.states[a] != cfg.states[b]) return cfg.states[a] < cfg.states[b];
    if (cfg.values[a] != cfg.values[b]) return cfg.values[a] < cfg.values[b];
    return cfg.buffers[a] < cfg.buffers[b];
  });
  TsoConfiguration out;
  out.memory = cfg.memory;
  for (auto i : order) {
    out.states.push_back(cfg.states[i]);
    out.values.push_back(cfg.values[i]);
    out.buffers.push_back(cfg.buffers[i]);
  }
  return out;
}

std::string format_tso_label(const Program& program, const TsoLabel& label) {
  const std::string who = std::to_string(label.proc) + ": ";
  if (label.update)
    return who + "upd " + program.memory.vars[label.message.var] + " " + std::to_string(label.message.value);
  return who + format_instruction(program, program.process.delta[label.transition].instr);
}

namespace {

struct Node {
  TsoConfiguration cfg;  // canonical
  std::uint32_t parent;
  std::uint32_t depth;
};

bool within(const Program& program, const OracleBounds& bounds, const TsoConfiguration& cfg) {
  for (std::size_t i = 0; i < cfg.processes(); ++i) {
    if (cfg.buffers[i].size() > bounds.buffer_max) return false;
    if (value_size(program.adt, cfg.values[i]) > bounds.value_bound) return false;
  }
  return true;
}

bool at_target(const Program& program, const TsoConfiguration& cfg) {
  return std::find(cfg.states.begin(), cfg.states.end(), program.process.target) != cfg.states.end();
}

// Rebuilds a concrete run along a path of canonical configurations.
std::vector<TsoLabel> concretize(const Program& program, std::uint32_t processes,
                                 const std::vector<const TsoConfiguration*>& path) {
  std::vector<TsoLabel> run;
  TsoConfiguration cfg = initial_tso(program, processes);
  for (std::size_t k = 1; k < path.size(); ++k) {
    bool found = false;
    for (auto& [label, next] : tso_step(program, cfg)) {
      if (canonical(next) == *path[k]) {
        run.push_back(label);
        cfg = std::move(next);
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("oracle path does not concretize");
  }
  return run;
}

}  // namespace

OracleResult bounded_reach(const Program& program, const OracleBounds& bounds) {
  const auto start = std::chrono::steady_clock::now();
  OracleResult result;
  bool truncated = false;
  for (std::uint32_t n = 1; n <= bounds.n_max; ++n) {
    std::vector<Node> nodes;
    std::unordered_map<TsoConfiguration, std::uint32_t, TsoConfigurationHash> seen;
    nodes.push_back({canonical(initial_tso(program, n)), 0, 0});
    seen.emplace(nodes[0].cfg, 0);
    std::optional<std::uint32_t> hit;
    if (at_target(program, nodes[0].cfg)) hit = 0;
    for (std::size_t head = 0; head < nodes.size() && !hit; ++head) {
      ++result.verdict.stats.iterations;
      if (nodes[head].depth >= bounds.step_max) {
        truncated = true;
        continue;
      }
      const TsoConfiguration current = nodes[head].cfg;
      const auto depth = nodes[head].depth;
      for (auto& [label, next] : tso_step(program, current)) {
        if (!within(program, bounds, next)) {
          truncated = true;
          continue;
        }
        auto key = canonical(next);
        if (seen.count(key)) continue;
        if (nodes.size() >= bounds.max_configs) {
          truncated = true;
          break;
        }
        const auto id = static_cast<std::uint32_t>(nodes.size());
        seen.emplace(key, id);
        nodes.push_back({std::move(key), static_cast<std::uint32_t>(head), depth + 1});
        if (at_target(program, nodes.back().cfg)) {
          hit = id;
          break;
        }
      }
    }
    result.verdict.stats.explored += nodes.size();
    if (hit) {
      std::vector<const TsoConfiguration*> path;
      for (std::uint32_t at = *hit;; at = nodes[at].parent) {
        path.push_back(&nodes[at].cfg);
        if (at == 0) break;
      }
      std::reverse(path.begin(), path.end());
      result.processes = n;
      result.run = concretize(program, n, path);
      result.verdict.outcome = Outcome::Reachable;
      result.verdict.note = "oracle, " + std::to_string(n) + " process" + (n == 1 ? "" : "es");
      for (const auto& label : result.run) result.verdict.witness.push_back(format_tso_label(program, label));
      break;
    }
  }
  if (result.verdict.outcome != Outcome::Reachable) {
    result.verdict.outcome = Outcome::Inconclusive;
    result.verdict.note = truncated ? "not found within bounds" : "not found within bounds (explored space closed)";
  }
  result.verdict.stats.millis = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  return result;
}

std::optional<TsoConfiguration> replay_tso(const Program& program, std::uint32_t processes,
                                           const std::vector<TsoLabel>& run) {
  TsoConfiguration cfg = initial_tso(program, processes);
  for (const auto& label : run) {
    auto next = tso_apply(program, cfg, label);
    if (!next) return std::nullopt;
    cfg = std::move(*next);
  }
  return cfg;
}

}  // namespace ptso
