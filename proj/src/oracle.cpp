#include "hurwitz/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hurwitz {

double log_class_size(const Partition& type) {
    double out = std::lgamma(static_cast<double>(type.total()) + 1.0);
    std::map<Int, int> multiplicity;
    for (Int p : type.parts()) {
        out -= std::log(static_cast<double>(p));
        ++multiplicity[p];
    }
    for (const auto& [part, mult] : multiplicity) out -= std::lgamma(mult + 1.0);
    return out;
}

namespace {

constexpr int kMaxDegree = kMaxSearchDegree;
constexpr std::uint64_t kFlushInterval = 1u << 14;

using Img = std::array<std::int8_t, kMaxDegree>;
using Counts = std::array<int, kMaxDegree + 1>;
using Mask = std::uint64_t;

Counts counts_of(const Partition& type) {
    Counts c{};
    for (Int p : type.parts()) ++c[static_cast<std::size_t>(p)];
    return c;
}

Img img_of(const Permutation& p) {
    Img out{};
    out.fill(-1);
    for (int x = 0; x < p.degree(); ++x) out[static_cast<std::size_t>(x)] = static_cast<std::int8_t>(p(x));
    return out;
}

Permutation perm_of(const Img& img, int d) {
    return Permutation(std::vector<int>(img.begin(), img.begin() + d));
}

/// Search order over the datum's partitions: position 0 fixed, 1..n-2
/// backtracked, n-1 forced.
struct Plan {
    int d = 0;
    int n = 0;
    std::vector<std::size_t> order;
    std::vector<Partition> types;
    std::vector<Counts> counts;
    std::vector<int> merge_after; ///< sum over positions > L of (d - length)
};

Plan make_plan(const CandidateDatum& datum) {
    Plan plan;
    plan.d = static_cast<int>(datum.degree());
    plan.n = static_cast<int>(datum.size());
    std::vector<std::size_t> idx(datum.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<double> size(datum.size());
    for (std::size_t i = 0; i < datum.size(); ++i) size[i] = log_class_size(datum[i]);
    // largest class first (fixed), next largest forced, the rest ascending
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return size[a] > size[b]; });
    if (idx.size() >= 2) {
        plan.order.push_back(idx[0]);
        std::vector<std::size_t> middle(idx.begin() + 2, idx.end());
        std::reverse(middle.begin(), middle.end());
        plan.order.insert(plan.order.end(), middle.begin(), middle.end());
        plan.order.push_back(idx[1]);
    } else {
        plan.order = idx;
    }
    for (auto i : plan.order) {
        plan.types.push_back(datum[i]);
        plan.counts.push_back(counts_of(datum[i]));
    }
    plan.merge_after.assign(plan.order.size(), 0);
    int acc = 0;
    for (int pos = plan.n - 1; pos >= 0; --pos) {
        plan.merge_after[static_cast<std::size_t>(pos)] = acc;
        acc += plan.d - static_cast<int>(plan.types[static_cast<std::size_t>(pos)].length());
    }
    return plan;
}

struct Shared {
    explicit Shared(const SearchBudget& b) : budget(b) {}
    const SearchBudget& budget;
    std::atomic<bool> stop{false};
    std::atomic<bool> budget_hit{false};
    std::atomic<std::uint64_t> nodes{0};
    std::mutex mutex;
    std::vector<Img> witness;
};

struct Snapshot {
    Img img;
    Mask used;
    Counts cnt;
    int cycles;
};

class Kernel {
public:
    Kernel(const Plan& plan, Shared& shared)
        : plan_(plan), shared_(shared), d_(plan.d), n_(plan.n), last_(plan.n - 2),
          full_(d_ == 64 ? ~Mask{0} : ((Mask{1} << d_) - 1)) {
        const std::size_t levels = static_cast<std::size_t>(std::max(n_ - 1, 1));
        img_.resize(levels);
        prefix_.resize(levels + 1);
        used_.assign(levels, 0);
        cnt_.resize(levels);
        cycles_.assign(levels, 0);
        img_[0] = img_of(canonical_of_type(plan.types[0]));
        prefix_[1] = img_[0];
    }

    ~Kernel() { flush(true); }

    /// Entire search from the fixed factor.
    void run_all() {
        if (!orbit_prune(0)) return;
        if (last_ < 1) {
            leaf_n2();
            return;
        }
        begin_level(1);
    }

    /// Level-1 prefixes with `depth` cycles placed (or complete permutations).
    std::vector<Snapshot> split(int depth) {
        std::vector<Snapshot> out;
        if (last_ < 1 || !orbit_prune(0)) return out;
        collect_ = &out;
        collect_depth_ = depth;
        begin_level(1);
        collect_ = nullptr;
        return out;
    }

    void run_from(const Snapshot& s) {
        img_[1] = s.img;
        used_[1] = s.used;
        cnt_[1] = s.cnt;
        cycles_[1] = s.cycles;
        place_cycle(1);
    }

private:
    void begin_level(int level) {
        auto L = static_cast<std::size_t>(level);
        img_[L].fill(-1);
        used_[L] = 0;
        cnt_[L] = plan_.counts[L];
        cycles_[L] = 0;
        place_cycle(level);
    }

    void place_cycle(int level) {
        auto L = static_cast<std::size_t>(level);
        if (shared_.stop.load(std::memory_order_relaxed)) return;
        if (collect_ && level == 1 && (cycles_[L] == collect_depth_ || used_[L] == full_)) {
            collect_->push_back({img_[L], used_[L], cnt_[L], cycles_[L]});
            return;
        }
        if (used_[L] == full_) {
            complete_level(level);
            return;
        }
        const int start = std::countr_zero(~used_[L]);
        const int free_points = d_ - std::popcount(used_[L]);
        used_[L] |= Mask{1} << start;
        for (int len = std::min(free_points, d_); len >= 1; --len) {
            if (cnt_[L][static_cast<std::size_t>(len)] == 0) continue;
            --cnt_[L][static_cast<std::size_t>(len)];
            ++cycles_[L];
            extend(level, start, start, len - 1);
            --cycles_[L];
            ++cnt_[L][static_cast<std::size_t>(len)];
        }
        used_[L] &= ~(Mask{1} << start);
    }

    void extend(int level, int start, int cur, int remaining) {
        auto L = static_cast<std::size_t>(level);
        if (remaining == 0) {
            img_[L][static_cast<std::size_t>(cur)] = static_cast<std::int8_t>(start);
            if (!collect_) count_node();
            if (level != last_ || partial_feasible()) place_cycle(level);
            img_[L][static_cast<std::size_t>(cur)] = -1;
            return;
        }
        Mask avail = ~used_[L] & full_;
        while (avail) {
            const int x = std::countr_zero(avail);
            avail &= avail - 1;
            img_[L][static_cast<std::size_t>(cur)] = static_cast<std::int8_t>(x);
            used_[L] |= Mask{1} << x;
            extend(level, start, x, remaining - 1);
            used_[L] &= ~(Mask{1} << x);
            if (shared_.stop.load(std::memory_order_relaxed)) break;
        }
        img_[L][static_cast<std::size_t>(cur)] = -1;
    }

    void complete_level(int level) {
        auto L = static_cast<std::size_t>(level);
        compose_into(prefix_[L + 1], prefix_[L], img_[L]);
        if (level == last_) {
            leaf();
            return;
        }
        if (!orbit_prune(level)) return;
        begin_level(level + 1);
    }

    /// The running product on the last backtracked level, restricted to the
    /// points assigned so far, must still be completable to the forced type.
    bool partial_feasible() const {
        const auto L = static_cast<std::size_t>(last_);
        const Img& q = prefix_[L];
        const Img& s = img_[L];
        std::array<std::int8_t, kMaxDegree> p{};
        std::array<bool, kMaxDegree> has_pre{};
        std::array<bool, kMaxDegree> seen{};
        for (int x = 0; x < d_; ++x) {
            auto X = static_cast<std::size_t>(x);
            if (s[X] >= 0) {
                p[X] = q[static_cast<std::size_t>(s[X])];
                has_pre[static_cast<std::size_t>(p[X])] = true;
            } else {
                p[X] = -1;
            }
        }
        Counts need = plan_.counts[static_cast<std::size_t>(n_ - 1)];
        int longest_chain = 0;
        for (int x = 0; x < d_; ++x) {
            auto X = static_cast<std::size_t>(x);
            if (p[X] < 0 || has_pre[X]) continue;
            int len = 1;
            int y = x;
            while (p[static_cast<std::size_t>(y)] >= 0) {
                seen[static_cast<std::size_t>(y)] = true;
                y = p[static_cast<std::size_t>(y)];
                ++len;
            }
            seen[static_cast<std::size_t>(y)] = true;
            longest_chain = std::max(longest_chain, len);
        }
        for (int x = 0; x < d_; ++x) {
            auto X = static_cast<std::size_t>(x);
            if (p[X] < 0 || seen[X]) continue;
            int len = 0;
            int y = x;
            do {
                seen[static_cast<std::size_t>(y)] = true;
                y = p[static_cast<std::size_t>(y)];
                ++len;
            } while (y != x);
            if (need[static_cast<std::size_t>(len)] == 0) return false;
            --need[static_cast<std::size_t>(len)];
        }
        int largest_left = 0;
        for (int len = d_; len >= 1; --len) {
            if (need[static_cast<std::size_t>(len)] > 0) {
                largest_left = len;
                break;
            }
        }
        return longest_chain <= largest_left;
    }

    void leaf() {
        const Img& prod = prefix_[static_cast<std::size_t>(last_) + 1];
        if (!matches_type(prod, plan_.counts[static_cast<std::size_t>(n_ - 1)])) return;
        if (orbits_through(last_) != 1) return;
        record_witness(prod);
    }

    void leaf_n2() {
        const Img& prod = prefix_[1];
        if (!matches_type(prod, plan_.counts[1])) return;
        if (orbits_through(0) != 1) return;
        record_witness(prod);
    }

    void record_witness(const Img& prod) {
        std::lock_guard lock(shared_.mutex);
        if (!shared_.witness.empty()) return;
        for (int pos = 0; pos < n_ - 1; ++pos) shared_.witness.push_back(img_[static_cast<std::size_t>(pos)]);
        Img inv{};
        inv.fill(-1);
        for (int x = 0; x < d_; ++x) inv[static_cast<std::size_t>(prod[static_cast<std::size_t>(x)])] = static_cast<std::int8_t>(x);
        shared_.witness.push_back(inv);
        shared_.stop.store(true);
    }

    bool matches_type(const Img& perm, Counts need) const {
        std::array<bool, kMaxDegree> seen{};
        for (int x = 0; x < d_; ++x) {
            if (seen[static_cast<std::size_t>(x)]) continue;
            int len = 0;
            int y = x;
            do {
                seen[static_cast<std::size_t>(y)] = true;
                y = perm[static_cast<std::size_t>(y)];
                ++len;
            } while (y != x);
            if (need[static_cast<std::size_t>(len)]-- == 0) return false;
        }
        return true;
    }

    /// Orbits of the group generated by the factors at positions 0..level.
    int orbits_through(int level) const {
        std::array<std::int8_t, kMaxDegree> parent{};
        for (int x = 0; x < d_; ++x) parent[static_cast<std::size_t>(x)] = static_cast<std::int8_t>(x);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
            return x;
        };
        int orbits = d_;
        for (int pos = 0; pos <= level; ++pos) {
            const Img& p = img_[static_cast<std::size_t>(pos)];
            for (int x = 0; x < d_; ++x) {
                int a = find(x), b = find(p[static_cast<std::size_t>(x)]);
                if (a != b) {
                    parent[static_cast<std::size_t>(a)] = static_cast<std::int8_t>(b);
                    --orbits;
                }
            }
        }
        return orbits;
    }

    /// A factor with l cycles can merge at most d - l orbits.
    bool orbit_prune(int level) const {
        return orbits_through(level) - 1 <= plan_.merge_after[static_cast<std::size_t>(level)];
    }

    void compose_into(Img& out, const Img& p, const Img& q) const {
        for (int x = 0; x < d_; ++x) out[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(q[static_cast<std::size_t>(x)])];
    }

    void count_node() {
        if (++local_nodes_ < kFlushInterval) return;
        flush();
    }

    void flush(bool finished = false) {
        if (local_nodes_ == 0) return;
        auto total = shared_.nodes.fetch_add(local_nodes_) + local_nodes_;
        local_nodes_ = 0;
        if (!finished && total >= shared_.budget.max_nodes) {
            shared_.budget_hit.store(true);
            shared_.stop.store(true);
        }
    }

    const Plan& plan_;
    Shared& shared_;
    int d_;
    int n_;
    int last_;
    Mask full_;
    std::vector<Img> img_;
    std::vector<Img> prefix_;
    std::vector<Mask> used_;
    std::vector<Counts> cnt_;
    std::vector<int> cycles_;
    std::uint64_t local_nodes_ = 0;
    std::vector<Snapshot>* collect_ = nullptr;
    int collect_depth_ = 0;
};

Verdict finish(Verdict v, std::chrono::steady_clock::time_point start) {
    v.stats.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return v;
}

Verdict exceptional_by_search(std::uint64_t nodes) {
    Verdict v;
    v.status = Status::exceptional;
    v.method = "oracle";
    v.reasons.push_back(FilterReport{"oracle-exhausted-search", "no transitive tuple with identity product", 0, 0, 0,
                                     0, 1, 0});
    v.stats.nodes = nodes;
    return v;
}

} // namespace

Verdict oracle_decide(const CandidateDatum& datum, const SearchBudget& budget) {
    if (rh_defect(datum) != 0) {
        throw DomainError("oracle requires a candidate with zero RH defect: " + datum.render());
    }
    const auto start = std::chrono::steady_clock::now();
    const int d = static_cast<int>(datum.degree());
    if (datum.degree() > budget.max_degree || d > kMaxDegree) {
        Verdict v;
        v.method = "oracle";
        v.limit = "degree-limit";
        return finish(std::move(v), start);
    }
    if (datum.size() == 0) {
        // only degree 1 has zero defect with no branch points
        Verdict v;
        v.status = Status::realizable;
        v.method = "oracle";
        v.certificate = ConstellationWitness{d, {}};
        return finish(std::move(v), start);
    }
    if (datum.size() == 1) return finish(exceptional_by_search(0), start);

    const Plan plan = make_plan(datum);
    Shared shared(budget);
    const int last = plan.n - 2;

    if (budget.deterministic || last < 1) {
        Kernel kernel(plan, shared);
        kernel.run_all();
    } else {
        std::vector<Snapshot> tasks;
        int threads = budget.jobs > 0 ? budget.jobs : omp_get_max_threads();
        for (int depth = 1; depth <= 3; ++depth) {
            Kernel splitter(plan, shared);
            tasks = splitter.split(depth);
            if (tasks.size() >= static_cast<std::size_t>(16 * threads)) break;
        }
        const auto count = static_cast<std::ptrdiff_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            if (shared.stop.load(std::memory_order_relaxed)) continue;
            Kernel kernel(plan, shared);
            kernel.run_from(tasks[static_cast<std::size_t>(i)]);
        }
    }

    const std::uint64_t nodes = shared.nodes.load();
    Verdict v;
    if (!shared.witness.empty()) {
        ConstellationWitness w{d, {}};
        for (const auto& img : shared.witness) w.perms.push_back(perm_of(img, d));
        w = reorder_witness(std::move(w), datum.partitions());
        if (!check_witness(w, datum)) {
            throw std::logic_error("oracle produced an invalid witness for " + datum.render());
        }
        v.status = Status::realizable;
        v.method = "oracle";
        v.certificate = std::move(w);
        v.stats.nodes = nodes;
    } else if (shared.budget_hit.load()) {
        v.method = "oracle";
        v.limit = "budget";
        v.stats.nodes = nodes;
    } else {
        v = exceptional_by_search(nodes);
    }
    return finish(std::move(v), start);
}

} // namespace hurwitz
