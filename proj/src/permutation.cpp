#include "hurwitz/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace hurwitz {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)]) {
            throw DomainError("image list is not a bijection");
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    std::vector<char> seen(images.size(), 0);
    for (const auto& cycle : cycles) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int x = cycle[i];
            if (x < 0 || x >= degree || seen[static_cast<std::size_t>(x)]) {
                throw DomainError("cycles are not disjoint cycles on 0.." + std::to_string(degree - 1));
            }
            seen[static_cast<std::size_t>(x)] = 1;
            images[static_cast<std::size_t>(x)] = cycle[(i + 1) % cycle.size()];
        }
    }
    return Permutation(std::move(images));
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> cycle;
        for (int x = static_cast<int>(start); !seen[static_cast<std::size_t>(x)]; x = images_[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = 1;
            cycle.push_back(x);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

std::string Permutation::render_cycles() const {
    std::string out;
    for (const auto& cycle : cycles()) {
        if (cycle.size() < 2) continue;
        out += '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(cycle[i] + 1);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw DomainError("compose: degree mismatch");
    std::vector<int> images(static_cast<std::size_t>(p.degree()));
    for (int x = 0; x < p.degree(); ++x) images[static_cast<std::size_t>(x)] = p(q(x));
    return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> images(static_cast<std::size_t>(p.degree()));
    for (int x = 0; x < p.degree(); ++x) images[static_cast<std::size_t>(p(x))] = x;
    return Permutation(std::move(images));
}

Partition cycle_type(const Permutation& p) {
    std::vector<Int> lengths;
    for (const auto& c : p.cycles()) lengths.push_back(static_cast<Int>(c.size()));
    return Partition(std::move(lengths));
}

Permutation canonical_of_type(const Partition& type) {
    std::vector<std::vector<int>> cycles;
    int next = 0;
    for (Int len : type.parts()) {
        std::vector<int> cycle(static_cast<std::size_t>(len));
        std::iota(cycle.begin(), cycle.end(), next);
        next += static_cast<int>(len);
        cycles.push_back(std::move(cycle));
    }
    return Permutation::from_cycles(static_cast<int>(type.total()), cycles);
}

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
    }
    return x;
}

} // namespace

int orbit_count(int degree, std::span<const Permutation> perms) {
    std::vector<int> parent(static_cast<std::size_t>(degree));
    std::iota(parent.begin(), parent.end(), 0);
    int orbits = degree;
    for (const auto& p : perms) {
        for (int x = 0; x < degree; ++x) {
            int a = find_root(parent, x), b = find_root(parent, p(x));
            if (a != b) {
                parent[static_cast<std::size_t>(a)] = b;
                --orbits;
            }
        }
    }
    return orbits;
}

bool check_witness(const ConstellationWitness& witness, const CandidateDatum& datum) {
    if (witness.degree != datum.degree() || witness.perms.size() != datum.size()) return false;
    auto product = Permutation::identity(witness.degree);
    for (std::size_t i = 0; i < witness.perms.size(); ++i) {
        const auto& p = witness.perms[i];
        if (p.degree() != witness.degree) return false;
        if (!(cycle_type(p) == datum[i])) return false;
        product = compose(product, p);
    }
    if (!(product == Permutation::identity(witness.degree))) return false;
    return orbit_count(witness.degree, witness.perms) == (witness.degree > 0 ? 1 : 0);
}

ConstellationWitness reorder_witness(ConstellationWitness witness, const std::vector<Partition>& target_types) {
    const std::size_t n = witness.perms.size();
    if (target_types.size() != n) throw DomainError("reorder_witness: length mismatch");
    for (std::size_t pos = 0; pos < n; ++pos) {
        std::size_t found = pos;
        while (found < n && !(cycle_type(witness.perms[found]) == target_types[pos])) ++found;
        if (found == n) throw DomainError("reorder_witness: type " + target_types[pos].render() + " not present");
        // Hurwitz move (a, b) -> (b, b^-1 a b) keeps the product and the generated group.
        for (std::size_t i = found; i > pos; --i) {
            Permutation a = witness.perms[i - 1];
            Permutation b = witness.perms[i];
            witness.perms[i - 1] = b;
            witness.perms[i] = compose(inverse(b), compose(a, b));
        }
    }
    return witness;
}

} // namespace hurwitz
