#include "hurwitz/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace hurwitz {

Int gcd_of(std::span<const Int> values) {
    Int g = 0;
    for (Int v : values) g = std::gcd(g, v);
    return g;
}

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
    for (Int p : parts_) {
        if (p < 1) throw DomainError("partition parts must be positive, got " + std::to_string(p));
        total_ += p;
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

bool Partition::trivial() const noexcept {
    return std::all_of(parts_.begin(), parts_.end(), [](Int p) { return p == 1; });
}

Int Partition::gcd() const noexcept {
    Int g = gcd_of(parts_);
    return g == 0 ? 1 : g;
}

std::size_t Partition::fixed_points() const noexcept {
    return static_cast<std::size_t>(std::count(parts_.begin(), parts_.end(), Int{1}));
}

Partition Partition::scaled(Int factor) const {
    std::vector<Int> out(parts_);
    for (Int& p : out) p *= factor;
    return Partition(std::move(out));
}

std::string Partition::render() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

std::strong_ordering canonical_compare(const Partition& a, const Partition& b) {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.parts().begin(), a.parts().end(),
                                                  b.parts().begin(), b.parts().end());
}

Partition divide(const Partition& partition, Int s) {
    if (s < 1) throw DomainError("divisor must be positive");
    std::vector<Int> out;
    out.reserve(partition.length());
    for (Int p : partition.parts()) {
        if (p % s != 0) {
            throw DomainError("part " + std::to_string(p) + " of " + partition.render() +
                              " is not divisible by " + std::to_string(s));
        }
        out.push_back(p / s);
    }
    return Partition(std::move(out));
}

CandidateDatum::CandidateDatum(Int degree, std::vector<Partition> partitions) : degree_(degree) {
    if (degree < 1) throw DomainError("degree must be at least 1, got " + std::to_string(degree));
    for (auto& p : partitions) {
        if (p.total() != degree) {
            throw DomainError("sum mismatch: " + p.render() + " sums to " + std::to_string(p.total()) +
                              " but degree is " + std::to_string(degree));
        }
        if (!p.trivial()) partitions_.push_back(std::move(p));
    }
    std::sort(partitions_.begin(), partitions_.end(), CanonicalLess{});
}

Int CandidateDatum::total_length() const noexcept {
    Int sum = 0;
    for (const auto& p : partitions_) sum += static_cast<Int>(p.length());
    return sum;
}

std::string CandidateDatum::render() const {
    std::string out = std::to_string(degree_) + ":";
    for (const auto& p : partitions_) out += " " + p.render();
    return out;
}

namespace {

class DatumParser {
public:
    explicit DatumParser(std::string_view text) : text_(text) {}

    CandidateDatum parse() {
        skip_space();
        std::size_t degree_pos = pos_;
        Int degree = integer("degree");
        if (degree < 1) throw ParseError("degree must be at least 1", degree_pos);
        skip_space();
        expect(':');
        std::vector<Partition> partitions;
        std::vector<std::size_t> starts;
        skip_space();
        while (pos_ < text_.size()) {
            starts.push_back(pos_);
            partitions.push_back(partition());
            skip_space();
        }
        for (std::size_t i = 0; i < partitions.size(); ++i) {
            if (partitions[i].total() != degree) {
                throw ParseError("sum mismatch: " + partitions[i].render() + " sums to " +
                                     std::to_string(partitions[i].total()) + " ≠ " + std::to_string(degree),
                                 starts[i]);
            }
        }
        return CandidateDatum(degree, std::move(partitions));
    }

private:
    Partition partition() {
        expect('[');
        std::vector<Int> parts;
        while (true) {
            skip_space();
            std::size_t at = pos_;
            Int v = integer("part");
            if (v < 1) throw ParseError("parts must be positive, got " + std::to_string(v), at);
            parts.push_back(v);
            skip_space();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            expect(']');
            break;
        }
        return Partition(std::move(parts));
    }

    Int integer(const char* what) {
        std::size_t start = pos_;
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            throw ParseError(std::string("expected ") + what, start);
        }
        Int v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (v > (INT64_MAX - 9) / 10) throw ParseError(std::string(what) + " too large", start);
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return negative ? -v : v;
    }

    void expect(char c) {
        if (peek() != c) {
            std::string got = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of input";
            throw ParseError(std::string("expected '") + c + "', got " + got, pos_);
        }
        ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

CandidateDatum parse_datum(std::string_view text) { return DatumParser(text).parse(); }

Int rh_defect(const CandidateDatum& datum) {
    Int n = static_cast<Int>(datum.size());
    return (n - 2) * datum.degree() + 2 - datum.total_length();
}

namespace {

struct DecomposeState {
    const std::vector<Int>& parts;
    Int capacity;
    std::vector<std::vector<Int>> groups;
    std::vector<Int> fill;
    std::vector<std::size_t> placed_in; // group index of each placed part
    std::vector<Decomposition>& out;

    void run(std::size_t index) {
        if (index == parts.size()) {
            Decomposition d;
            for (const auto& g : groups) d.groups.emplace_back(g);
            std::sort(d.groups.begin(), d.groups.end(), CanonicalLess{});
            out.push_back(std::move(d));
            return;
        }
        Int part = parts[index];
        std::size_t first = 0;
        if (index > 0 && parts[index - 1] == part) first = placed_in[index - 1];
        for (std::size_t g = first; g < groups.size(); ++g) {
            if (fill[g] + part > capacity) continue;
            bool duplicate = false;
            for (std::size_t h = 0; h < g && !duplicate; ++h) {
                duplicate = fill[h] == fill[g] && groups[h] == groups[g];
            }
            if (duplicate) continue;
            groups[g].push_back(part);
            fill[g] += part;
            placed_in[index] = g;
            run(index + 1);
            groups[g].pop_back();
            fill[g] -= part;
        }
    }
};

} // namespace

std::vector<Decomposition> decompose(const Partition& partition, Int m, Int u) {
    if (m < 1 || u < 1 || m * u != partition.total()) {
        throw DomainError("decompose: " + std::to_string(m) + " groups of " + std::to_string(u) +
                          " do not match total " + std::to_string(partition.total()));
    }
    std::vector<Decomposition> out;
    if (partition.largest() > u) return out;
    DecomposeState state{partition.parts(), u,
                         std::vector<std::vector<Int>>(static_cast<std::size_t>(m)),
                         std::vector<Int>(static_cast<std::size_t>(m), 0),
                         std::vector<std::size_t>(partition.length(), 0), out};
    // total = m*u and no group exceeds u, so every leaf has all groups exactly full
    state.run(0);
    return out;
}

std::vector<Partition> nontrivial_partitions(Int d) {
    std::vector<Partition> out;
    std::vector<Int> current;
    std::function<void(Int, Int)> rec = [&](Int remaining, Int max_part) {
        if (remaining == 0) {
            if (current.front() > 1) out.emplace_back(current);
            return;
        }
        for (Int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    if (d >= 2) rec(d, d);
    return out;
}

void for_each_length_exact(Int d, std::size_t n, Int total_length,
                           const std::function<bool(const std::vector<Partition>&)>& visit) {
    if (d < 2 || n < 1 || total_length < 0) return;
    auto parts = nontrivial_partitions(d);
    std::sort(parts.begin(), parts.end(), CanonicalLess{});
    const Int max_len = static_cast<Int>(parts.back().length());

    std::vector<Partition> chosen;
    bool stop = false;
    std::function<void(std::size_t, Int)> rec = [&](std::size_t from, Int budget) {
        if (stop) return;
        const auto slots = static_cast<Int>(n - chosen.size());
        if (slots == 0) {
            if (budget == 0 && !visit(chosen)) stop = true;
            return;
        }
        for (std::size_t i = from; i < parts.size() && !stop; ++i) {
            const auto len = static_cast<Int>(parts[i].length());
            // sorted by length, so later choices are at least as long
            if (len * slots > budget) break;
            if (len + max_len * (slots - 1) < budget) continue;
            chosen.push_back(parts[i]);
            rec(i, budget - len);
            chosen.pop_back();
        }
    };
    rec(0, total_length);
}

void for_each_candidate(Int d, std::size_t n, const std::function<bool(const CandidateDatum&)>& visit) {
    const Int target = (static_cast<Int>(n) - 2) * d + 2;
    for_each_length_exact(d, n, target, [&](const std::vector<Partition>& ps) { return visit(CandidateDatum(d, ps)); });
}

std::vector<CandidateDatum> enumerate_candidates(Int d, std::size_t n) {
    std::vector<CandidateDatum> out;
    for_each_candidate(d, n, [&](const CandidateDatum& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

} // namespace hurwitz
