#include "oclique/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "oclique/sequence.hpp"

namespace oclique {

ArcCount lower_bound_seed(std::size_t n) {
  if (n < 2) return 0;
  return std::max(half_n_log_lower(n), static_cast<ArcCount>(n) - 1);
}

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

std::pair<Vertex, Vertex> pair_at(std::size_t n, std::size_t index) {
  if (index >= pair_count(n))
    throw std::out_of_range("pair_at: index out of range");
  std::size_t u = 0, rem = index;
  while (rem >= n - 1 - u) {
    rem -= n - 1 - u;
    ++u;
  }
  return {u, u + 1 + rem};
}

namespace {

constexpr std::size_t kMaxSearchOrder = 32;  // vertex bitmask width

inline bool mask_sees(const SearchState& s, std::size_t a, std::size_t b) {
  const std::uint32_t bit_a = std::uint32_t{1} << a;
  const std::uint32_t bit_b = std::uint32_t{1} << b;
  if ((s.out[a] & bit_b) || (s.out[b] & bit_a)) return true;
  return (s.out[a] & s.in[b]) || (s.out[b] & s.in[a]);
}

// Pairs strictly before block u in the lexicographic pair order.
inline std::size_t block_offset(std::size_t n, std::size_t u) {
  return u * (n - 1) - u * (u - 1) / 2;
}

struct Analysis {
  bool cut = false;
  std::uint64_t unseeing = 0;
};

Analysis analyze(const SearchState& s) {
  const std::size_t n = s.n;
  const std::size_t total = pair_count(n);

  if (s.arcs_used > s.budget) return {true, 0};
  const ArcCount remaining = s.budget - s.arcs_used;
  if (remaining > total - s.next_pair) return {true, 0};

  std::uint64_t unseeing = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!mask_sees(s, a, b)) ++unseeing;

  // One arc u->v newly satisfies at most the pair {u,v} plus 2-paths
  // through u or v: 1 + (n-2) + (n-2) pairs.
  const std::uint64_t per_arc = n >= 2 ? 2 * n - 3 : 0;
  if (unseeing > remaining * per_arc) return {true, unseeing};

  // Vertices whose every incident pair is decided; their mutual seeing
  // relation is final.
  std::size_t complete = 0;
  if (s.next_pair == total) {
    complete = n;
  } else {
    while (complete + 1 < n && block_offset(n, complete + 1) <= s.next_pair)
      ++complete;
  }
  for (std::size_t a = 0; a < complete; ++a)
    for (std::size_t b = a + 1; b < complete; ++b)
      if (!mask_sees(s, a, b)) return {true, unseeing};

  return {false, unseeing};
}

// Choice encoding per pair (u, v): 0 none, 1 arc u->v, 2 arc v->u.
// Rank orders choices for the first-row symmetry cut: out-arc > in-arc >
// none, so a sorted first row is reachable by relabeling vertices 2..n-1.
constexpr int kChoiceRank[3] = {0, 2, 1};

struct SharedControl {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> found{false};
  std::atomic<bool> truncated{false};
  std::uint64_t node_budget = ~std::uint64_t{0};

  std::mutex witness_mu;
  std::uint64_t witness_task = ~std::uint64_t{0};
  std::vector<std::uint8_t> witness_choices;
};

class Engine {
 public:
  Engine(std::size_t n, ArcCount budget, bool symmetry_cut,
         SharedControl* ctl, std::uint64_t task_id)
      : n_(n),
        total_(pair_count(n)),
        symmetry_cut_(symmetry_cut),
        ctl_(ctl),
        task_id_(task_id),
        choices_(total_, 0) {
    state_.n = n;
    state_.budget = budget;
    pairs_.reserve(total_);
    for (std::size_t i = 0; i < total_; ++i) pairs_.push_back(pair_at(n, i));
  }

  SearchState& state() { return state_; }

  // Applies one choice if legal under the search's structural rules
  // (budget-independent): the root arc fix and the optional first-row cut.
  // Returns false when the choice is filtered out.
  bool try_apply(std::uint8_t choice) {
    const std::size_t idx = state_.next_pair;
    if (idx == 0 && state_.budget >= 1 && n_ >= 2 && choice != 1)
      return false;  // some witness has its first pair oriented 0->1
    if (symmetry_cut_ && idx >= 1 && pairs_[idx].first == 0 &&
        kChoiceRank[choice] > kChoiceRank[choices_[idx - 1]])
      return false;
    apply(choice);
    return true;
  }

  void apply(std::uint8_t choice) {
    const auto [u, v] = pairs_[state_.next_pair];
    if (choice == 1) {
      state_.out[u] |= std::uint32_t{1} << v;
      state_.in[v] |= std::uint32_t{1} << u;
      ++state_.arcs_used;
    } else if (choice == 2) {
      state_.out[v] |= std::uint32_t{1} << u;
      state_.in[u] |= std::uint32_t{1} << v;
      ++state_.arcs_used;
    }
    choices_[state_.next_pair] = choice;
    ++state_.next_pair;
  }

  void undo() {
    --state_.next_pair;
    const std::uint8_t choice = choices_[state_.next_pair];
    const auto [u, v] = pairs_[state_.next_pair];
    if (choice == 1) {
      state_.out[u] &= ~(std::uint32_t{1} << v);
      state_.in[v] &= ~(std::uint32_t{1} << u);
      --state_.arcs_used;
    } else if (choice == 2) {
      state_.out[v] &= ~(std::uint32_t{1} << u);
      state_.in[u] &= ~(std::uint32_t{1} << v);
      --state_.arcs_used;
    }
    choices_[state_.next_pair] = 0;
  }

  void dfs() {
    if (ctl_->found.load(std::memory_order_relaxed) ||
        ctl_->truncated.load(std::memory_order_relaxed))
      return;
    count_node();

    const Analysis a = analyze(state_);
    if (a.cut) return;

    if (state_.arcs_used == state_.budget && a.unseeing == 0) {
      record_witness();
      return;
    }
    // Unfinishable leaves never get here: with pairs exhausted, either the
    // budget is unspent (cut b) or some pair is unseeing (cut a).

    for (std::uint8_t choice : {std::uint8_t{1}, std::uint8_t{2}, std::uint8_t{0}}) {
      if (!try_apply(choice)) continue;
      dfs();
      undo();
      if (ctl_->found.load(std::memory_order_relaxed)) return;
    }
  }

  void flush_nodes() {
    if (pending_nodes_ == 0) return;
    const std::uint64_t now =
        ctl_->nodes.fetch_add(pending_nodes_, std::memory_order_relaxed) +
        pending_nodes_;
    pending_nodes_ = 0;
    if (now > ctl_->node_budget)
      ctl_->truncated.store(true, std::memory_order_relaxed);
  }

 private:
  void count_node() {
    ++pending_nodes_;
    if (pending_nodes_ >= 1024) flush_nodes();
  }

  void record_witness() {
    std::lock_guard<std::mutex> lock(ctl_->witness_mu);
    if (task_id_ >= ctl_->witness_task && !ctl_->witness_choices.empty())
      return;
    ctl_->witness_task = task_id_;
    std::vector<std::uint8_t> snap(total_, 0);
    for (std::size_t i = 0; i < state_.next_pair; ++i) snap[i] = choices_[i];
    ctl_->witness_choices = std::move(snap);
    ctl_->found.store(true, std::memory_order_seq_cst);
  }

  std::size_t n_;
  std::size_t total_;
  bool symmetry_cut_;
  SharedControl* ctl_;
  std::uint64_t task_id_;
  std::uint64_t pending_nodes_ = 0;
  SearchState state_;
  std::vector<std::uint8_t> choices_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
};

OrientedGraph witness_from_choices(std::size_t n,
                                   const std::vector<std::uint8_t>& choices) {
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < choices.size(); ++i) {
    const auto [u, v] = pair_at(n, i);
    if (choices[i] == 1) arcs.push_back({u, v});
    if (choices[i] == 2) arcs.push_back({v, u});
  }
  return OrientedGraph::from_arcs(n, arcs);
}

struct RoundResult {
  bool found = false;
  bool completed = true;
  std::uint64_t nodes = 0;
  std::vector<std::uint8_t> witness_choices;
};

RoundResult run_round_serial(std::size_t n, ArcCount budget, bool symmetry_cut,
                             std::uint64_t node_budget) {
  SharedControl ctl;
  ctl.node_budget = node_budget;
  Engine e(n, budget, symmetry_cut, &ctl, 0);
  e.dfs();
  e.flush_nodes();
  RoundResult r;
  r.nodes = ctl.nodes.load();
  r.found = ctl.found.load();
  r.completed = !ctl.truncated.load();
  r.witness_choices = std::move(ctl.witness_choices);
  return r;
}

RoundResult run_round_parallel(std::size_t n, ArcCount budget,
                               bool symmetry_cut, std::uint64_t node_budget,
                               unsigned threads) {
  const std::size_t total = pair_count(n);
  const std::size_t start = 1;  // pair (0,1) is fixed by the root rule
  if (budget == 0 || total <= start + 1 || threads <= 1)
    return run_round_serial(n, budget, symmetry_cut, node_budget);

  // Depth of the task prefix: enough tasks to keep the pool busy.
  std::size_t depth = 1, tasks = 3;
  while (tasks < 16ull * threads && depth < total - start && depth < 10) {
    ++depth;
    tasks *= 3;
  }

  SharedControl ctl;
  ctl.node_budget = node_budget;
  std::atomic<std::size_t> next_task{0};

  auto worker = [&]() {
    for (;;) {
      const std::size_t t = next_task.fetch_add(1, std::memory_order_relaxed);
      if (t >= tasks) return;
      if (ctl.found.load(std::memory_order_relaxed) ||
          ctl.truncated.load(std::memory_order_relaxed))
        return;
      Engine e(n, budget, symmetry_cut, &ctl, t);
      if (budget >= 1) e.apply(1);  // the fixed root arc
      // Decode the task id in base 3, most significant digit first, and
      // apply as the choices for pairs [start, start + depth).
      bool valid = true;
      std::size_t rest = t;
      std::size_t scale = tasks / 3;
      for (std::size_t d = 0; d < depth; ++d) {
        const std::uint8_t choice =
            static_cast<std::uint8_t>(rest / scale);
        rest %= scale;
        scale /= 3;
        if (!e.try_apply(choice)) {
          valid = false;
          break;
        }
        if (e.state().arcs_used > budget) {
          valid = false;
          break;
        }
      }
      if (valid) e.dfs();
      e.flush_nodes();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  RoundResult r;
  r.nodes = ctl.nodes.load();
  r.found = ctl.found.load();
  r.completed = !ctl.truncated.load();
  r.witness_choices = std::move(ctl.witness_choices);
  return r;
}

}  // namespace

bool prune(const SearchState& s) { return analyze(s).cut; }

SearchOutcome f2_exact(const SearchConfig& cfg) {
  if (cfg.n == 0) throw std::domain_error("f2_exact: order must be positive");
  if (cfg.n > kMaxSearchOrder)
    throw std::invalid_argument("f2_exact: order exceeds the search cap of 32");
  if (cfg.n > 8 && !cfg.node_budget)
    throw std::invalid_argument(
        "f2_exact: orders above 8 require an explicit node budget");
  if (cfg.m_start && cfg.m_end && *cfg.m_start > *cfg.m_end)
    throw std::invalid_argument("f2_exact: m_start exceeds m_end");

  const ArcCount seed = lower_bound_seed(cfg.n);
  const ArcCount m_lo = std::max(cfg.m_start.value_or(seed), seed);
  ArcCount m_hi;
  if (cfg.m_end) {
    m_hi = *cfg.m_end;
  } else {
    SequenceTable table;
    m_hi = table.value(cfg.n);  // a witness of this size always exists
  }

  unsigned threads = cfg.threads;
  if (cfg.parallel && threads == 0) {
    threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
  }

  SearchOutcome outcome;
  outcome.n = cfg.n;
  const std::uint64_t node_budget =
      cfg.node_budget.value_or(~std::uint64_t{0});

  for (ArcCount m = m_lo; m <= m_hi; ++m) {
    const std::uint64_t spent = outcome.nodes_explored;
    if (spent >= node_budget) {
      outcome.exhaustive = false;
      break;
    }
    const std::uint64_t round_budget = node_budget - spent;
    const RoundResult r =
        cfg.parallel
            ? run_round_parallel(cfg.n, m, cfg.symmetry_cut, round_budget,
                                 threads)
            : run_round_serial(cfg.n, m, cfg.symmetry_cut, round_budget);

    outcome.rounds.push_back({m, r.nodes, r.found, r.completed});
    outcome.nodes_explored += r.nodes;

    if (r.found) {
      outcome.f2 = m;
      outcome.witness = witness_from_choices(cfg.n, r.witness_choices);
      if (!is_absolute_clique(*outcome.witness) ||
          outcome.witness->arc_count() != m)
        throw std::logic_error("f2_exact: witness failed post-validation");
      break;
    }
    if (!r.completed) {
      outcome.exhaustive = false;
      break;
    }
  }
  return outcome;
}

std::vector<ConjectureRow> conjecture_report(std::size_t n_max,
                                             const SearchConfig& base) {
  if (n_max == 0)
    throw std::domain_error("conjecture_report: n_max must be positive");
  if (n_max > 7 && !base.node_budget)
    throw std::invalid_argument(
        "conjecture_report: n_max above 7 requires a node budget");

  SequenceTable table;
  std::vector<ConjectureRow> rows;
  rows.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    SearchConfig cfg = base;
    cfg.n = n;
    const SearchOutcome out = f2_exact(cfg);
    ConjectureRow row;
    row.n = n;
    row.sequence_value = table.value(n);
    row.exhaustive = out.exhaustive;
    row.nodes = out.nodes_explored;
    if (out.found()) {
      row.f2 = out.f2;
      row.match = out.f2 == row.sequence_value;
      row.witness = out.witness;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace oclique
