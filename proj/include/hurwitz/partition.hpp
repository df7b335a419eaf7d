#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hurwitz {

using Int = std::int64_t;

/// Raised for malformed datum text; `position` is the byte offset of the problem.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Raised when an operation's arithmetic precondition fails (sum mismatch,
/// non-divisible part, m*u != total, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Multiset of positive integers, kept sorted non-increasing.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<Int> parts);
    Partition(std::initializer_list<Int> parts) : Partition(std::vector<Int>(parts)) {}

    const std::vector<Int>& parts() const noexcept { return parts_; }
    Int total() const noexcept { return total_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    Int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    /// True iff every part is 1 (an unbranched fiber).
    bool trivial() const noexcept;
    Int gcd() const noexcept;
    /// Number of parts equal to 1.
    std::size_t fixed_points() const noexcept;

    /// Each part multiplied by `factor`.
    Partition scaled(Int factor) const;

    std::string render() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<Int> parts_;
    Int total_ = 0;
};

/// Canonical total order on partitions: by length, then lexicographically on parts.
std::strong_ordering canonical_compare(const Partition& a, const Partition& b);

struct CanonicalLess {
    bool operator()(const Partition& a, const Partition& b) const {
        return canonical_compare(a, b) < 0;
    }
};

/// Partition with each part divided by s. Throws DomainError if s does not
/// divide some part.
Partition divide(const Partition& partition, Int s);

/// Degree plus a multiset of nontrivial partitions of that degree.
class CandidateDatum {
public:
    CandidateDatum() = default;
    /// Normalizes: drops trivial partitions, sorts canonically. Throws
    /// DomainError if a partition does not sum to `degree` or degree < 1.
    CandidateDatum(Int degree, std::vector<Partition> partitions);

    Int degree() const noexcept { return degree_; }
    const std::vector<Partition>& partitions() const noexcept { return partitions_; }
    std::size_t size() const noexcept { return partitions_.size(); }
    const Partition& operator[](std::size_t i) const { return partitions_[i]; }
    Int total_length() const noexcept;

    /// Canonical text form, e.g. "4: [3,1] [2,2] [2,2]". Also the memo key.
    std::string render() const;

    friend bool operator==(const CandidateDatum&, const CandidateDatum&) = default;

private:
    Int degree_ = 1;
    std::vector<Partition> partitions_;
};

/// Parses `degree ":" partition+` with partitions written "[a,b,...]".
/// The result is normalized.
CandidateDatum parse_datum(std::string_view text);

/// (n-2)d + 2 - sum of lengths. Zero iff the datum is a sphere-to-sphere candidate.
Int rh_defect(const CandidateDatum& datum);

/// One way to split a partition into m groups of equal total u.
struct Decomposition {
    std::vector<Partition> groups; ///< canonical order, trivial groups kept
    std::size_t source = 0;        ///< index of the split partition in its datum

    friend bool operator==(const Decomposition& a, const Decomposition& b) {
        return a.groups == b.groups;
    }
};

/// All distinct multisets of m sub-partitions of u whose parts reassemble
/// `partition`. Throws DomainError unless m*u == partition.total().
std::vector<Decomposition> decompose(const Partition& partition, Int m, Int u);

/// Nontrivial partitions of d in descending-lex order ([d] first).
std::vector<Partition> nontrivial_partitions(Int d);

/// Calls `visit` on every multiset of n nontrivial partitions of d whose
/// lengths sum to `total_length`, in canonical order. Returning false stops.
void for_each_length_exact(Int d, std::size_t n, Int total_length,
                           const std::function<bool(const std::vector<Partition>&)>& visit);

/// Calls `visit` on every multiset of n nontrivial partitions of d with zero
/// RH defect, each once, in canonical order. Returning false stops the scan.
void for_each_candidate(Int d, std::size_t n, const std::function<bool(const CandidateDatum&)>& visit);

std::vector<CandidateDatum> enumerate_candidates(Int d, std::size_t n);

Int gcd_of(std::span<const Int> values);

} // namespace hurwitz
