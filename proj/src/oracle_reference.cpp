#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>

#include "hurwitz/oracle.hpp"

namespace hurwitz {

namespace {

using Images = std::vector<int>;

std::vector<Int> lengths_of(const Images& p) {
    std::vector<Int> out;
    std::vector<char> seen(p.size(), 0);
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (seen[x]) continue;
        Int len = 0;
        for (std::size_t y = x; !seen[y]; y = static_cast<std::size_t>(p[y])) {
            seen[y] = 1;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

bool transitive(const std::vector<const Images*>& perms, int d) {
    std::vector<char> reached(static_cast<std::size_t>(d), 0);
    std::vector<int> stack{0};
    reached[0] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const Images* p : perms) {
            int y = (*p)[static_cast<std::size_t>(x)];
            if (!reached[static_cast<std::size_t>(y)]) {
                reached[static_cast<std::size_t>(y)] = 1;
                stack.push_back(y);
            }
        }
    }
    return std::all_of(reached.begin(), reached.end(), [](char c) { return c != 0; });
}

} // namespace

Verdict reference_decide(const CandidateDatum& datum, std::uint64_t max_tuples) {
    if (rh_defect(datum) != 0) throw DomainError("reference search requires zero RH defect");
    const auto start = std::chrono::steady_clock::now();
    const int d = static_cast<int>(datum.degree());
    const std::size_t n = datum.size();
    Verdict v;
    v.method = "reference";
    auto done = [&](Verdict out) {
        out.stats.millis =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return out;
    };
    if (n == 0) {
        v.status = d == 1 ? Status::realizable : Status::exceptional;
        if (d == 1) v.certificate = ConstellationWitness{1, {}};
        return done(v);
    }

    // every element of S_d, bucketed by cycle type
    std::map<std::vector<Int>, std::vector<Images>> classes;
    for (const auto& p : datum.partitions()) classes[p.parts()];
    Images p(static_cast<std::size_t>(d));
    std::iota(p.begin(), p.end(), 0);
    do {
        auto it = classes.find(lengths_of(p));
        if (it != classes.end()) it->second.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::vector<const std::vector<Images>*> lists;
    for (std::size_t i = 0; i + 1 < n; ++i) lists.push_back(&classes[datum[i].parts()]);
    const std::vector<Int>& last_type = datum[n - 1].parts();

    std::vector<std::size_t> idx(lists.size(), 0);
    std::uint64_t tuples = 0;
    while (true) {
        if (++tuples > max_tuples) {
            v.limit = "budget";
            v.stats.nodes = tuples;
            return done(v);
        }
        Images prod(static_cast<std::size_t>(d));
        std::iota(prod.begin(), prod.end(), 0);
        std::vector<const Images*> perms;
        for (std::size_t k = 0; k < lists.size(); ++k) {
            const Images& f = (*lists[k])[idx[k]];
            perms.push_back(&f);
            Images next(static_cast<std::size_t>(d));
            for (int x = 0; x < d; ++x) next[static_cast<std::size_t>(x)] = prod[static_cast<std::size_t>(f[static_cast<std::size_t>(x)])];
            prod = std::move(next);
        }
        Images last(static_cast<std::size_t>(d));
        for (int x = 0; x < d; ++x) last[static_cast<std::size_t>(prod[static_cast<std::size_t>(x)])] = x;
        if (lengths_of(last) == last_type) {
            perms.push_back(&last);
            if (transitive(perms, d)) {
                ConstellationWitness w{d, {}};
                for (const Images* q : perms) w.perms.emplace_back(*q);
                v.status = Status::realizable;
                v.certificate = std::move(w);
                v.stats.nodes = tuples;
                return done(v);
            }
        }
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == lists[k]->size()) {
            idx[k] = 0;
            ++k;
        }
        if (k == idx.size()) break;
    }
    v.status = Status::exceptional;
    v.stats.nodes = tuples;
    return done(v);
}

} // namespace hurwitz
