#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hurwitz/partition.hpp"

namespace hurwitz {

/// Bijection of {0,...,d-1}, stored as its image list.
///
/// Composition convention used everywhere in the project:
/// compose(p, q) applies q first, then p, i.e. compose(p, q)(x) = p(q(x)).
/// A tuple (s_1, ..., s_n) has identity product when
/// compose(s_1, compose(s_2, ... s_n)) is the identity.
class Permutation {
public:
    Permutation() = default;
    /// Throws DomainError if `images` is not a bijection of {0,...,size-1}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int degree);
    /// Builds from disjoint cycles on 0-based points; unlisted points are fixed.
    static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

    int degree() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& images() const noexcept { return images_; }

    std::vector<std::vector<int>> cycles() const;
    /// Disjoint-cycle notation on points 1..d; fixed points omitted, "()" for identity.
    std::string render_cycles() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
/// Cycle lengths including fixed points as 1s.
Partition cycle_type(const Permutation& p);
/// Cycles on consecutive points, longest first: [3,2] -> (0 1 2)(3 4).
Permutation canonical_of_type(const Partition& type);

/// The algebraic certificate of a branched cover: perms[i] has the cycle type
/// of the i-th partition of the (normalized) datum, their product is the
/// identity and they generate a transitive group.
struct ConstellationWitness {
    int degree = 0;
    std::vector<Permutation> perms;
};

/// Number of orbits of the group generated by `perms` on {0,...,degree-1}.
int orbit_count(int degree, std::span<const Permutation> perms);

/// Independent re-check of all three witness invariants against `datum`.
bool check_witness(const ConstellationWitness& witness, const CandidateDatum& datum);

/// Applies Hurwitz moves so the witness' factor types follow `target_types`.
/// `target_types` must be a rearrangement of the witness' current types.
ConstellationWitness reorder_witness(ConstellationWitness witness, const std::vector<Partition>& target_types);

} // namespace hurwitz
