// Exact minimum k-resolving sets via cardinality-staged branch and bound
// over the pair-resolver multicover formulation, plus a naive subset
// oracle and a greedy upper-bound heuristic.
#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "gridres/bounds.hpp"
#include "gridres/grid.hpp"
#include "gridres/resolvers.hpp"
#include "gridres/verify.hpp"
#include "gridres/vertex_set.hpp"

namespace gridres {

enum class SolveMode { Exact, Oracle, Greedy };
enum class SolveStatus { Optimal, Nonexistent, BudgetExceeded };

inline const char* solve_mode_name(SolveMode m) {
    switch (m) {
        case SolveMode::Exact: return "exact";
        case SolveMode::Oracle: return "oracle";
        case SolveMode::Greedy: return "greedy";
    }
    return "?";
}

inline const char* solve_status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::Nonexistent: return "nonexistent";
        case SolveStatus::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

struct SolveOptions {
    std::optional<Index> max_size;
    std::optional<double> time_budget_s;
    SolveMode mode = SolveMode::Exact;
    std::optional<Index> start_size_hint;  // trusted floor: sizes below it are taken as infeasible
    std::optional<Index> table_cap;
    bool oracle_override = false;  // lifts the oracle's 16-vertex guard
    int threads = 1;               // accepted for interface stability; search runs one worker
};

// proof_size_floor: largest cardinality proven infeasible. Optimal implies
// floor = size - 1; Nonexistent implies strength(V) < k and floor = N.
struct SolveResult {
    GridDims grid;
    int k = 1;
    SolveStatus status = SolveStatus::Optimal;
    std::optional<VertexSet> set;  // Optimal: a minimum set; BudgetExceeded: best upper bound
    std::optional<Index> size;
    Index proof_size_floor = 0;
    std::uint64_t nodes_explored = 0;
    double elapsed_ms = 0;
    SolveMode mode = SolveMode::Exact;
};

namespace detail {

struct SearchProblem {
    Index n = 0;
    Index pairs = 0;
    std::size_t words_n = 0;
    std::size_t words_p = 0;
    std::vector<std::uint64_t> pair_rows;    // pairs x words_n, resolvers of each pair
    std::vector<std::uint64_t> vertex_rows;  // n x words_p, pairs resolved by each vertex
    std::vector<int> counts;                 // |resolvers| per pair

    explicit SearchProblem(const PairResolverTable& table) {
        n = table.vertex_count();
        pairs = table.pair_count();
        words_n = static_cast<std::size_t>((n + 63) / 64);
        words_p = static_cast<std::size_t>((pairs + 63) / 64);
        pair_rows.assign(static_cast<std::size_t>(pairs) * words_n, 0);
        vertex_rows.assign(static_cast<std::size_t>(n) * words_p, 0);
        counts.assign(static_cast<std::size_t>(pairs), 0);
        for (Index p = 0; p < pairs; ++p) {
            auto row = table.row(p);
            std::copy(row.begin(), row.end(),
                      pair_rows.begin() + static_cast<std::size_t>(p) * words_n);
            counts[static_cast<std::size_t>(p)] = table.resolver_count(p);
            for (Index z = 0; z < n; ++z)
                if ((row[static_cast<std::size_t>(z >> 6)] >> (z & 63)) & 1)
                    vertex_rows[static_cast<std::size_t>(z) * words_p +
                                static_cast<std::size_t>(p >> 6)] |=
                        std::uint64_t{1} << (p & 63);
        }
    }

    const std::uint64_t* pair_row(Index p) const {
        return pair_rows.data() + static_cast<std::size_t>(p) * words_n;
    }
    const std::uint64_t* vertex_row(Index z) const {
        return vertex_rows.data() + static_cast<std::size_t>(z) * words_p;
    }
};

// One cardinality stage: does a k-cover of size <= target exist, given the
// clock budget? Deterministic single-worker depth-first search.
class StageSearch {
public:
    StageSearch(const SearchProblem& prob, int k, std::uint64_t& nodes,
                std::optional<std::chrono::steady_clock::time_point> deadline)
        : prob_(prob), k_(k), nodes_(nodes), deadline_(deadline) {
        chosen_.assign(prob_.words_n, 0);
        excluded_.assign(prob_.words_n, 0);
        deficit_.assign(static_cast<std::size_t>(prob_.pairs), k_);
        avail_ = prob_.counts;
        deficient_.assign(prob_.words_p, 0);
        for (Index p = 0; p < prob_.pairs; ++p)
            deficient_[static_cast<std::size_t>(p >> 6)] |= std::uint64_t{1} << (p & 63);
        total_deficit_ = static_cast<std::int64_t>(prob_.pairs) * k_;
        mask_arena_.assign((static_cast<std::size_t>(prob_.n) + 2) * prob_.words_p, 0);
        gains_.assign(static_cast<std::size_t>(prob_.n), 0);
        cand_pool_.resize(static_cast<std::size_t>(prob_.n) + 1);
    }

    enum class Outcome { Found, Infeasible, TimedOut };

    Outcome run(Index target, std::vector<Index>& solution) {
        target_ = target;
        chosen_count_ = 0;
        const bool found = dfs();
        if (timed_out_) return Outcome::TimedOut;
        if (!found) return Outcome::Infeasible;
        solution.clear();
        for (Index z = 0; z < prob_.n; ++z)
            if ((chosen_[static_cast<std::size_t>(z >> 6)] >> (z & 63)) & 1)
                solution.push_back(z);
        return Outcome::Found;
    }

private:
    bool dfs() {
        ++nodes_;
        if (deadline_ && (nodes_ & 0xFFF) == 0 &&
            std::chrono::steady_clock::now() > *deadline_) {
            timed_out_ = true;
            return false;
        }
        if (total_deficit_ == 0) return true;
        const Index slots = target_ - chosen_count_;
        if (slots <= 0) return false;

        // Per-pair prunes and fail-first branch selection: the deficient
        // pair with fewest addable resolvers, ties to the smallest key.
        Index branch = -1;
        int branch_addable = std::numeric_limits<int>::max();
        for (std::size_t w = 0; w < prob_.words_p; ++w) {
            std::uint64_t bits = deficient_[w];
            while (bits) {
                const Index p = static_cast<Index>(w * 64) + std::countr_zero(bits);
                bits &= bits - 1;
                const int def = deficit_[static_cast<std::size_t>(p)];
                if (def > slots) return false;
                const int addable =
                    avail_[static_cast<std::size_t>(p)] - (k_ - def);
                if (addable < def) return false;
                if (addable < branch_addable) {
                    branch_addable = addable;
                    branch = p;
                }
            }
        }

        // Aggregate bound: no remaining vertex reduces the deficit by more
        // than its deficient-pair coverage.
        int max_gain = 0;
        for (Index z = 0; z < prob_.n; ++z) {
            const std::uint64_t in_use =
                (chosen_[static_cast<std::size_t>(z >> 6)] |
                 excluded_[static_cast<std::size_t>(z >> 6)]) >>
                (z & 63);
            if (in_use & 1) {
                gains_[static_cast<std::size_t>(z)] = -1;
                continue;
            }
            const std::uint64_t* row = prob_.vertex_row(z);
            int gain = 0;
            for (std::size_t w = 0; w < prob_.words_p; ++w)
                gain += std::popcount(row[w] & deficient_[w]);
            gains_[static_cast<std::size_t>(z)] = gain;
            max_gain = std::max(max_gain, gain);
        }
        if (static_cast<std::int64_t>(slots) * max_gain < total_deficit_) return false;

        // Candidates: addable resolvers of the branch pair, by descending
        // deficient-pair coverage, ties by index. One buffer per depth, as
        // recursion happens only after a choose.
        auto& cands = cand_pool_[static_cast<std::size_t>(chosen_count_)];
        cands.clear();
        const std::uint64_t* brow = prob_.pair_row(branch);
        for (std::size_t w = 0; w < prob_.words_n; ++w) {
            std::uint64_t bits = brow[w] & ~chosen_[w] & ~excluded_[w];
            while (bits) {
                cands.push_back(static_cast<Index>(w * 64) + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
        std::stable_sort(cands.begin(), cands.end(), [&](Index a, Index b) {
            return gains_[static_cast<std::size_t>(a)] > gains_[static_cast<std::size_t>(b)];
        });

        int excluded_here = 0;
        bool found = false;
        for (const Index z : cands) {
            choose(z);
            if (dfs()) {
                found = true;
                break;
            }
            unchoose(z);
            if (timed_out_) break;
            exclude(z);
            ++excluded_here;
            const int def = deficit_[static_cast<std::size_t>(branch)];
            if (avail_[static_cast<std::size_t>(branch)] - (k_ - def) < def) break;
        }
        if (!found)
            while (excluded_here-- > 0) unexclude();
        return found;
    }

    std::uint64_t* push_mask(const std::uint64_t* vrow) {
        std::uint64_t* m = mask_arena_.data() + mask_top_ * prob_.words_p;
        ++mask_top_;
        for (std::size_t w = 0; w < prob_.words_p; ++w) m[w] = vrow[w] & deficient_[w];
        return m;
    }

    void choose(Index z) {
        chosen_[static_cast<std::size_t>(z >> 6)] |= std::uint64_t{1} << (z & 63);
        ++chosen_count_;
        const std::uint64_t* m = push_mask(prob_.vertex_row(z));
        for (std::size_t w = 0; w < prob_.words_p; ++w) {
            std::uint64_t bits = m[w];
            total_deficit_ -= std::popcount(bits);
            while (bits) {
                const std::size_t p = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                if (--deficit_[p] == 0)
                    deficient_[w] &= ~(std::uint64_t{1} << (p & 63));
            }
        }
        choice_stack_.push_back(z);
    }

    void unchoose(Index z) {
        choice_stack_.pop_back();
        --mask_top_;
        const std::uint64_t* m = mask_arena_.data() + mask_top_ * prob_.words_p;
        for (std::size_t w = 0; w < prob_.words_p; ++w) {
            std::uint64_t bits = m[w];
            total_deficit_ += std::popcount(bits);
            while (bits) {
                const std::size_t p = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                if (deficit_[p]++ == 0)
                    deficient_[w] |= std::uint64_t{1} << (p & 63);
            }
        }
        chosen_[static_cast<std::size_t>(z >> 6)] &= ~(std::uint64_t{1} << (z & 63));
        --chosen_count_;
    }

    void exclude(Index z) {
        excluded_[static_cast<std::size_t>(z >> 6)] |= std::uint64_t{1} << (z & 63);
        const std::uint64_t* m = push_mask(prob_.vertex_row(z));
        for (std::size_t w = 0; w < prob_.words_p; ++w) {
            std::uint64_t bits = m[w];
            while (bits) {
                const std::size_t p = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                --avail_[p];
            }
        }
        exclude_stack_.push_back(z);
    }

    void unexclude() {
        const Index z = exclude_stack_.back();
        exclude_stack_.pop_back();
        --mask_top_;
        const std::uint64_t* m = mask_arena_.data() + mask_top_ * prob_.words_p;
        for (std::size_t w = 0; w < prob_.words_p; ++w) {
            std::uint64_t bits = m[w];
            while (bits) {
                const std::size_t p = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                ++avail_[p];
            }
        }
        excluded_[static_cast<std::size_t>(z >> 6)] &= ~(std::uint64_t{1} << (z & 63));
    }

    const SearchProblem& prob_;
    int k_;
    std::uint64_t& nodes_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    bool timed_out_ = false;

    Index target_ = 0;
    Index chosen_count_ = 0;
    std::vector<std::uint64_t> chosen_, excluded_, deficient_;
    std::vector<int> deficit_, avail_, gains_;
    std::int64_t total_deficit_ = 0;
    std::vector<std::uint64_t> mask_arena_;
    std::size_t mask_top_ = 0;
    std::vector<Index> choice_stack_, exclude_stack_;
    std::vector<std::vector<Index>> cand_pool_;
};

// Sizes proven infeasible before any search: the metric-dimension shift,
// and for 3D grids the cut-plane pigeonhole floor with its parity sharpening.
inline Index theory_floor(const GridDims& g, int k) {
    Index lb = std::max<Index>(1, k);
    if (g.rank() == 3) {
        lb = std::max<Index>(lb, k + 2);
        if (k >= 2) lb = std::max<Index>(lb, 2 * k);
        if (k % 2 == 1) lb = std::max<Index>(lb, 2 * k + 1);
    }
    return lb;
}

}  // namespace detail

inline VertexSet greedy_upper_bound(const GridDims& g, int k,
                                    Index table_cap = kDefaultTableCap) {
    if (k < 1) throw DomainError("greedy bound needs k >= 1");
    if (g.vertex_count() < 2)
        throw DomainError("greedy bound needs a grid with at least two vertices");
    PairResolverTable table(g, table_cap);
    const Index n = table.vertex_count();
    const Index pairs = table.pair_count();
    for (Index p = 0; p < pairs; ++p)
        if (table.resolver_count(p) < k)
            throw NonexistentError("no set is " + std::to_string(k) +
                                   "-resolving: the full vertex set has strength below " +
                                   std::to_string(k));

    std::vector<int> cov(static_cast<std::size_t>(pairs), 0);
    VertexSet s(g);
    while (true) {
        std::vector<Index> deficient;
        for (Index p = 0; p < pairs; ++p)
            if (cov[static_cast<std::size_t>(p)] < k) deficient.push_back(p);
        if (deficient.empty()) break;
        std::vector<int> score(static_cast<std::size_t>(n), 0);
        for (const Index p : deficient) {
            auto row = table.row(p);
            for (Index z = 0; z < n; ++z)
                if ((row[static_cast<std::size_t>(z >> 6)] >> (z & 63)) & 1)
                    ++score[static_cast<std::size_t>(z)];
        }
        Index best = -1;
        int best_score = -1;
        for (Index z = 0; z < n; ++z) {
            if (s.contains_index(z)) continue;
            if (score[static_cast<std::size_t>(z)] > best_score) {
                best_score = score[static_cast<std::size_t>(z)];
                best = z;
            }
        }
        s.insert_index(best);
        for (Index p = 0; p < pairs; ++p)
            if (table.resolves_pair(best, p)) ++cov[static_cast<std::size_t>(p)];
    }
    return s;
}

inline SolveResult min_k_resolving(const GridDims& g, int k, const SolveOptions& opts = {}) {
    if (k < 1) throw DomainError("minimum k-resolving search needs k >= 1");
    if (g.vertex_count() < 2)
        throw DomainError("minimum k-resolving search needs a grid with at least two vertices");
    if (opts.max_size && (*opts.max_size < 1 || *opts.max_size > g.vertex_count()))
        throw DomainError("max_size must be between 1 and the vertex count");
    if (opts.time_budget_s && *opts.time_budget_s <= 0)
        throw DomainError("time budget must be positive");
    const auto t0 = std::chrono::steady_clock::now();
    const Index cap = opts.table_cap.value_or(kDefaultTableCap);

    SolveResult res;
    res.grid = g;
    res.k = k;
    res.mode = SolveMode::Exact;

    PairResolverTable table(g, cap);
    const Index n = table.vertex_count();
    int max_k = std::numeric_limits<int>::max();
    for (Index p = 0; p < table.pair_count(); ++p)
        max_k = std::min(max_k, table.resolver_count(p));
    if (k > max_k) {
        res.status = SolveStatus::Nonexistent;
        res.proof_size_floor = n;
        res.elapsed_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
        return res;
    }

    Index lb = detail::theory_floor(g, k);
    if (opts.start_size_hint) lb = std::max(lb, *opts.start_size_hint);
    lb = std::min(lb, n);
    const Index ub_stage = std::min(n, opts.max_size.value_or(n));

    std::optional<std::chrono::steady_clock::time_point> deadline;
    if (opts.time_budget_s)
        deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(*opts.time_budget_s));

    const detail::SearchProblem prob(table);
    std::vector<Index> solution;
    bool found = false;
    Index floor = lb - 1;
    for (Index s = lb; s <= ub_stage; ++s) {
        detail::StageSearch search(prob, k, res.nodes_explored, deadline);
        const auto outcome = search.run(s, solution);
        if (outcome == detail::StageSearch::Outcome::TimedOut) {
            floor = s - 1;
            break;
        }
        if (outcome == detail::StageSearch::Outcome::Found) {
            found = true;
            break;
        }
        floor = s;
    }

    if (found) {
        VertexSet set(g);
        for (const Index z : solution) set.insert_index(z);
        const auto check = is_k_resolving(g, set, k);
        if (!check.ok)
            throw std::logic_error("search returned a set the verifier rejects");
        res.status = SolveStatus::Optimal;
        res.size = set.size();
        res.proof_size_floor = *res.size - 1;
        res.set = std::move(set);
    } else {
        // stages can only run out when max_size caps them: the full vertex
        // set is feasible at stage n once existence holds
        res.status = SolveStatus::BudgetExceeded;
        res.proof_size_floor = floor;
        try {
            VertexSet upper = greedy_upper_bound(g, k, cap);
            res.size = upper.size();
            res.set = std::move(upper);
        } catch (const NonexistentError&) {
        }
    }
    res.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return res;
}

// Plain subset enumeration: sizes ascending, index-lexicographic order,
// first feasible subset wins. Independent of the staged search internals.
inline SolveResult oracle_min_k_resolving(const GridDims& g, int k,
                                          const SolveOptions& opts = {}) {
    if (k < 1) throw DomainError("oracle search needs k >= 1");
    if (g.vertex_count() < 2)
        throw DomainError("oracle search needs a grid with at least two vertices");
    if (g.vertex_count() > 16 && !opts.oracle_override)
        throw ResourceLimitError("oracle enumeration is guarded at 16 vertices; pass the "
                                 "override to enumerate " +
                                     std::to_string(g.vertex_count()),
                                 g.vertex_count());
    const auto t0 = std::chrono::steady_clock::now();
    const Index n = g.vertex_count();

    SolveResult res;
    res.grid = g;
    res.k = k;
    res.mode = SolveMode::Oracle;

    for (Index m = 1; m <= n; ++m) {
        std::vector<Index> idx(static_cast<std::size_t>(m));
        for (Index i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            ++res.nodes_explored;
            VertexSet s(g);
            for (const Index i : idx) s.insert_index(i);
            if (is_k_resolving(g, s, k).ok) {
                res.status = SolveStatus::Optimal;
                res.size = m;
                res.proof_size_floor = m - 1;
                res.set = std::move(s);
                res.elapsed_ms = std::chrono::duration<double, std::milli>(
                                     std::chrono::steady_clock::now() - t0)
                                     .count();
                return res;
            }
            // next combination in lexicographic order
            Index i = m - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - m + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (Index j = i + 1; j < m; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    res.status = SolveStatus::Nonexistent;
    res.proof_size_floor = n;
    res.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return res;
}

// Mode dispatcher. Greedy reports Optimal only when its set meets the
// proven floor; otherwise it is an upper bound with BudgetExceeded status.
inline SolveResult solve(const GridDims& g, int k, const SolveOptions& opts = {}) {
    switch (opts.mode) {
        case SolveMode::Exact: return min_k_resolving(g, k, opts);
        case SolveMode::Oracle: return oracle_min_k_resolving(g, k, opts);
        case SolveMode::Greedy: break;
    }
    const auto t0 = std::chrono::steady_clock::now();
    SolveResult res;
    res.grid = g;
    res.k = k;
    res.mode = SolveMode::Greedy;
    const Index cap = opts.table_cap.value_or(kDefaultTableCap);
    try {
        VertexSet s = greedy_upper_bound(g, k, cap);
        const Index floor = std::min<Index>(detail::theory_floor(g, k), g.vertex_count()) - 1;
        res.size = s.size();
        res.status = (*res.size == floor + 1) ? SolveStatus::Optimal
                                              : SolveStatus::BudgetExceeded;
        res.proof_size_floor = res.status == SolveStatus::Optimal ? *res.size - 1 : floor;
        res.set = std::move(s);
    } catch (const NonexistentError&) {
        res.status = SolveStatus::Nonexistent;
        res.proof_size_floor = g.vertex_count();
    }
    res.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return res;
}

}  // namespace gridres
