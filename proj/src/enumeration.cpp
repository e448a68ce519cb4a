#include "hyperlaw/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <numeric>
#include <random>
#include <string>
#include <thread>

#include "hyperlaw/regularity.hpp"

namespace hyperlaw {

std::string_view flag_name(StructureFlag flag) noexcept {
  switch (flag) {
    case StructureFlag::HasLeftIdentity: return "left-identity";
    case StructureFlag::HasPureLeftIdentity: return "pure-left-identity";
    case StructureFlag::IntraRegular: return "intra-regular";
    case StructureFlag::NotIntraRegular: return "not-intra-regular";
  }
  return "";
}

std::optional<StructureFlag> parse_flag(std::string_view name) {
  for (auto f : {StructureFlag::HasLeftIdentity,
                 StructureFlag::HasPureLeftIdentity,
                 StructureFlag::IntraRegular, StructureFlag::NotIntraRegular}) {
    if (flag_name(f) == name) {
      return f;
    }
  }
  return std::nullopt;
}

bool satisfies(HyperTable const& t, StructureFlag flag) {
  switch (flag) {
    case StructureFlag::HasLeftIdentity:
      return !classify_identities(t).left_identities().empty();
    case StructureFlag::HasPureLeftIdentity:
      return !classify_identities(t).pure_left_identities().empty();
    case StructureFlag::IntraRegular: return intra_regular(t).intra_regular;
    case StructureFlag::NotIntraRegular: return !intra_regular(t).intra_regular;
  }
  return false;
}

namespace {

  [[noreturn]] void infeasible(std::string const& why) {
    throw Error(ErrorCode::InfeasibleQuery, why);
  }

  // A table filled in row-major order. A law instance is checked exactly
  // once: at the step where the last cell it depends on is assigned.
  class PartialTable {
   public:
    PartialTable(std::size_t n, std::span<LawId const> laws)
        : _n(n), _cells(n * n), _laws(laws.begin(), laws.end()) {}

    std::size_t order() const { return _n; }
    std::size_t assigned() const { return _assigned; }
    bool        complete() const { return _assigned == _cells.size(); }

    bool push(SubsetMask value) {
      _cells[_assigned++] = value;
      return consistent();
    }
    void pop() { --_assigned; }

    std::vector<SubsetMask> cells() const { return _cells; }

   private:
    // What is known about a product so far: `known` only grows as cells are
    // assigned, so it is a lower bound of the final value.
    struct Bound {
      SubsetMask known;
      bool       complete = true;
    };

    struct Partial {
      PartialTable const& p;
      bool                used_last = false;

      Bound operator()(Bound a, Bound b) {
        Bound out{SubsetMask(), a.complete && b.complete};
        for (Element x : a.known) {
          for (Element y : b.known) {
            std::size_t const idx = x * p._n + y;
            if (idx >= p._assigned) {
              out.complete = false;
              continue;
            }
            used_last = used_last || idx + 1 == p._assigned;
            out.known |= p._cells[idx];
          }
        }
        return out;
      }
    };

    static bool conflict(Bound const& l, Bound const& r) {
      if (l.complete && !r.known.subset_of(l.known)) {
        return true;
      }
      if (r.complete && !l.known.subset_of(r.known)) {
        return true;
      }
      return l.complete && r.complete && l.known != r.known;
    }

    // Only evaluations that read the newest cell can have changed since the
    // previous step, so only those are re-checked.
    bool consistent() const {
      auto leaf = [](Element e) { return Bound{SubsetMask::singleton(e), true}; };
      for (LawId law : _laws) {
        auto const&          eq = equation(law);
        std::vector<Element> tuple(eq.arity, 0);
        while (true) {
          Partial     op{*this};
          Bound const lhs = evaluate_side(eq.lhs, tuple, op, leaf);
          Bound const rhs = evaluate_side(eq.rhs, tuple, op, leaf);
          if (op.used_last && conflict(lhs, rhs)) {
            return false;
          }
          std::size_t i = tuple.size();
          while (i > 0 && ++tuple[i - 1] == _n) {
            tuple[--i] = 0;
          }
          if (i == 0) {
            break;
          }
        }
      }
      return true;
    }

    std::size_t             _n;
    std::vector<SubsetMask> _cells;
    std::size_t             _assigned = 0;
    std::vector<LawId>      _laws;
  };

  template <typename OnComplete>
  void exhaustive_dfs(PartialTable& p, std::size_t depth_limit,
                      std::uint64_t& nodes, OnComplete&& on_complete) {
    if (p.assigned() == depth_limit) {
      on_complete(p);
      return;
    }
    std::uint32_t const top = SubsetMask::full(p.order()).bits();
    for (std::uint64_t v = 1; v <= top; ++v) {
      ++nodes;
      if (p.push(SubsetMask(static_cast<std::uint32_t>(v)))) {
        exhaustive_dfs(p, depth_limit, nodes, on_complete);
      }
      p.pop();
    }
  }

  // Tasks are produced in one order, may finish in any order, and are handed
  // to `emit` strictly in task order.
  template <typename Result, typename Work, typename Emit>
  void run_ordered(std::size_t tasks, std::size_t jobs, Work work, Emit emit) {
    if (jobs <= 1 || tasks <= 1) {
      for (std::size_t i = 0; i < tasks; ++i) {
        Result r = work(i);
        emit(r);
      }
      return;
    }
    std::vector<std::optional<Result>> results(tasks);
    std::mutex                         mutex;
    std::condition_variable            ready;
    std::atomic<std::size_t>           next{0};
    std::atomic<bool>                  stop{false};
    std::exception_ptr                 error;
    {
      std::vector<std::jthread> pool;
      for (std::size_t j = 0; j < std::min(jobs, tasks); ++j) {
        pool.emplace_back([&] {
          while (!stop) {
            std::size_t const i = next++;
            if (i >= tasks) {
              break;
            }
            try {
              Result r = work(i);
              std::lock_guard lock(mutex);
              results[i] = std::move(r);
            } catch (...) {
              std::lock_guard lock(mutex);
              if (!error) {
                error = std::current_exception();
              }
              stop = true;
            }
            ready.notify_all();
          }
        });
      }
      try {
        for (std::size_t i = 0; i < tasks; ++i) {
          std::unique_lock lock(mutex);
          ready.wait(lock, [&] { return results[i].has_value() || error; });
          if (error) {
            break;
          }
          Result r = std::move(*results[i]);
          results[i].reset();
          lock.unlock();
          emit(r);
        }
      } catch (...) {
        stop = true;
        throw;
      }
      stop = true;
    }
    if (error) {
      std::rethrow_exception(error);
    }
  }

  struct Batch {
    std::vector<HyperTable> tables;
    std::uint64_t           law_tables = 0;
    std::uint64_t           nodes      = 0;
    std::uint64_t           failed     = 0;
  };

  bool passes_filters(HyperTable const& t, EnumerationQuery const& q) {
    for (StructureFlag f : q.flags) {
      if (!satisfies(t, f)) {
        return false;
      }
    }
    return true;
  }

  std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(index >> 32)};
    std::array<std::uint32_t, 2> out{};
    seq.generate(out.begin(), out.end());
    return (std::uint64_t{out[0]} << 32) | out[1];
  }

  constexpr std::uint64_t kFirstRestartNodes = 256;
  constexpr std::size_t   kCandidates        = 4;
  constexpr double        kFullFirst         = 0.6;

  class RandomSearch {
   public:
    RandomSearch(PartialTable& p, std::mt19937_64& rng, std::uint64_t budget)
        : _p(p), _rng(rng), _budget(budget) {}

    std::uint64_t nodes() const { return _nodes; }

    bool run() {
      if (_p.complete()) {
        return true;
      }
      for (SubsetMask v : candidates()) {
        if (_nodes >= _budget) {
          return false;
        }
        ++_nodes;
        if (_p.push(v) && run()) {
          return true;
        }
        _p.pop();
      }
      return false;
    }

   private:
    // A few random masks per cell: a dead end is abandoned quickly and the
    // restarts do the rest. The full set H goes in often, since it is the
    // value least likely to break a law later.
    std::vector<SubsetMask> candidates() {
      std::size_t const   n    = _p.order();
      std::uint32_t const top  = SubsetMask::full(n).bits();
      std::size_t const   want = std::min<std::size_t>(kCandidates, top);
      std::uniform_int_distribution<std::uint32_t> pick(1, top);
      std::vector<SubsetMask> out;
      if (std::bernoulli_distribution(kFullFirst)(_rng)) {
        out.push_back(SubsetMask(top));
      }
      while (out.size() < want) {
        SubsetMask const m(pick(_rng));
        if (std::find(out.begin(), out.end(), m) == out.end()) {
          out.push_back(m);
        }
      }
      return out;
    }

    PartialTable&    _p;
    std::mt19937_64& _rng;
    std::uint64_t    _budget;
    std::uint64_t    _nodes = 0;
  };

}  // namespace

void check_feasible(EnumerationQuery const& q) {
  if (q.order < 1 || q.order > kMaxOrder) {
    infeasible("order must be in 1.." + std::to_string(kMaxOrder));
  }
  if (q.canonical_only && q.order > kMaxCanonicalOrder) {
    infeasible("canonical forms need order <= "
               + std::to_string(kMaxCanonicalOrder));
  }
  if (q.mode == EnumerationMode::Exhaustive) {
    if (q.order > 4) {
      infeasible("exhaustive enumeration needs order <= 4");
    }
    if (q.order == 4 && q.laws.empty()) {
      infeasible("exhaustive enumeration of order 4 needs a pruning law");
    }
  }
}

std::optional<HyperTable> sample_table(std::size_t order,
                                       std::span<LawId const> laws,
                                       std::uint64_t seed, std::uint64_t index,
                                       std::uint64_t  node_budget,
                                       std::uint64_t& nodes_used) {
  std::mt19937_64 rng(mix_seed(seed, index));
  nodes_used = 0;
  // Restarts with doubling limits keep one unlucky early choice from eating
  // the whole budget.
  for (std::uint64_t limit = kFirstRestartNodes; nodes_used < node_budget;
       limit *= 2) {
    PartialTable p(order, laws);
    RandomSearch search(p, rng, std::min(limit, node_budget - nodes_used));
    bool const   found = search.run();
    nodes_used += search.nodes();
    if (found) {
      return make_table(order, p.cells());
    }
  }
  return std::nullopt;
}

EnumerationSummary enumerate(EnumerationQuery const& q, TableSink const& sink) {
  check_feasible(q);
  std::size_t const  n    = q.order;
  std::size_t const  jobs = std::max<std::size_t>(1, q.jobs);
  EnumerationSummary summary;

  auto emit = [&](Batch& b) {
    summary.law_tables += b.law_tables;
    summary.nodes += b.nodes;
    summary.failed_samples += b.failed;
    for (auto const& t : b.tables) {
      ++summary.emitted;
      sink(t);
    }
  };

  if (q.mode == EnumerationMode::Sample) {
    auto work = [&](std::size_t i) {
      Batch         b;
      std::uint64_t used = 0;
      auto t = sample_table(n, q.laws, q.seed, i, q.sample_node_budget, used);
      b.nodes = used;
      if (!t) {
        b.failed = 1;
        return b;
      }
      b.law_tables = 1;
      HyperTable table = q.canonical_only ? canonicalize(*t).table() : *t;
      if (passes_filters(table, q)) {
        b.tables.push_back(std::move(table));
      }
      return b;
    };
    run_ordered<Batch>(q.sample_count, jobs, work, emit);
    return summary;
  }

  // Partition by first-row prefix.
  std::vector<std::vector<SubsetMask>> prefixes;
  {
    PartialTable p(n, q.laws);
    std::uint64_t prefix_nodes = 0;
    exhaustive_dfs(p, n, prefix_nodes, [&](PartialTable const& done) {
      auto cells = done.cells();
      cells.resize(n);
      prefixes.push_back(std::move(cells));
    });
    summary.nodes += prefix_nodes;
  }

  auto work = [&](std::size_t i) {
    Batch        b;
    PartialTable p(n, q.laws);
    for (SubsetMask c : prefixes[i]) {
      p.push(c);
    }
    exhaustive_dfs(p, n * n, b.nodes, [&](PartialTable const& done) {
      ++b.law_tables;
      HyperTable t = make_table(n, done.cells());
      if (q.canonical_only && !is_canonical(t)) {
        return;
      }
      if (passes_filters(t, q)) {
        b.tables.push_back(std::move(t));
      }
    });
    return b;
  };
  run_ordered<Batch>(prefixes.size(), jobs, work, emit);
  return summary;
}

std::vector<HyperTable> enumerate_tables(EnumerationQuery const& q) {
  std::vector<HyperTable> out;
  enumerate(q, [&out](HyperTable const& t) { out.push_back(t); });
  return out;
}

namespace {

  SubsetMask map_mask(SubsetMask m, std::span<Element const> perm) {
    SubsetMask out;
    for (Element e : m) {
      out |= SubsetMask::singleton(perm[e]);
    }
    return out;
  }

}  // namespace

HyperTable CanonicalForm::table() const { return make_table(order, cells); }

CanonicalForm canonicalize(HyperTable const& t) {
  std::size_t const n = t.order();
  if (n > kMaxCanonicalOrder) {
    throw Error(ErrorCode::OrderTooLargeForCanonical,
                "canonical forms need order <= "
                    + std::to_string(kMaxCanonicalOrder),
                {static_cast<std::int64_t>(n)});
  }
  std::vector<SubsetMask> best(t.cells().begin(), t.cells().end());
  std::vector<SubsetMask> candidate(n * n);
  std::vector<Element>    perm(n);
  std::vector<Element>    inverse(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  while (std::next_permutation(perm.begin(), perm.end())) {
    for (Element i = 0; i < n; ++i) {
      inverse[perm[i]] = i;
    }
    int cmp = 0;
    for (std::size_t k = 0; k < n * n && cmp <= 0; ++k) {
      SubsetMask const m =
          map_mask(t.cell(inverse[k / n], inverse[k % n]), perm);
      candidate[k] = m;
      if (cmp == 0 && m != best[k]) {
        cmp = m < best[k] ? -1 : 1;
      }
    }
    if (cmp < 0) {
      best = candidate;
    }
  }
  return CanonicalForm{n, std::move(best)};
}

bool is_canonical(HyperTable const& t) {
  auto const c = canonicalize(t);
  return std::equal(c.cells.begin(), c.cells.end(), t.cells().begin());
}

HyperTable relabel(HyperTable const& t, std::span<Element const> perm) {
  std::size_t const n = t.order();
  std::vector<bool> seen(n, false);
  if (perm.size() != n) {
    throw Error(ErrorCode::IndexOutOfRange, "permutation has wrong length");
  }
  for (Element e : perm) {
    if (e >= n || seen[e]) {
      throw Error(ErrorCode::IndexOutOfRange, "not a permutation");
    }
    seen[e] = true;
  }
  std::vector<SubsetMask>  cells(n * n);
  std::vector<std::string> labels(n);
  for (Element i = 0; i < n; ++i) {
    labels[perm[i]] = t.label(i);
    for (Element j = 0; j < n; ++j) {
      cells[perm[i] * n + perm[j]] = map_mask(t.cell(i, j), perm);
    }
  }
  return make_table(n, std::move(cells), std::move(labels));
}

namespace {

  void check_step(std::size_t n, std::size_t k) {
    if (n < 1 || n > kMaxOrder) {
      throw Error(ErrorCode::OrderOutOfBounds,
                  "modulus must be in 1.." + std::to_string(kMaxOrder),
                  {static_cast<std::int64_t>(n)});
    }
    if (k == 0 || n % k != 0) {
      throw Error(ErrorCode::StepDoesNotDivideModulus,
                  "step " + std::to_string(k) + " does not divide "
                      + std::to_string(n),
                  {static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)});
    }
  }

  SubsetMask multiples(std::size_t n, std::size_t k, std::size_t offset) {
    SubsetMask out;
    for (std::size_t j = 0; j < n; j += k) {
      out |= SubsetMask::singleton(static_cast<Element>((offset + j) % n));
    }
    return out;
  }

}  // namespace

HyperTable gen_coset(std::size_t n, std::size_t k) {
  check_step(n, k);
  std::vector<SubsetMask> cells(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      cells[x * n + y] = multiples(n, k, (y + n - x) % n);
    }
  }
  return make_table(n, std::move(cells));
}

HyperTable gen_union(std::size_t n, std::size_t k) {
  check_step(n, k);
  SubsetMask const        base = multiples(n, k, 0);
  std::vector<SubsetMask> cells(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      cells[x * n + y] = base
                         | SubsetMask::singleton(static_cast<Element>(x))
                         | SubsetMask::singleton(static_cast<Element>(y));
    }
  }
  return make_table(n, std::move(cells));
}

}  // namespace hyperlaw
