#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "wavepart/types.hpp"

namespace wavepart {

/// A finite group stored as a Cayley table over dense element indices 0..|G|-1.
///
/// Instances are only produced by the factory functions below, all of which
/// run the full axiom check, so a FiniteGroup in hand is always valid.
/// Immutable after construction.
class FiniteGroup {
 public:
  std::size_t order() const noexcept { return order_; }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t inverse(std::size_t x) const { return inverse_.at(x); }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a * order_ + b]; }
  bool is_abelian() const;
  std::vector<std::vector<std::size_t>> cayley_table() const;
  /// Short human-readable name, e.g. "Z_4", "D_3" or "cayley(6)".
  const std::string& label() const noexcept { return label_; }

 private:
  FiniteGroup() = default;
  friend FiniteGroup group_from_cayley(const std::vector<std::vector<std::int64_t>>& table);
  friend FiniteGroup cyclic_group(std::size_t n);
  friend FiniteGroup dihedral_group(std::size_t n);

  std::size_t order_ = 0;
  std::size_t identity_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::size_t> inverse_;
  std::string label_;
};

/// Z_n with multiply(a, b) = (a + b) mod n. Throws InvalidArgument for n = 0.
FiniteGroup cyclic_group(std::size_t n);

/// D_n of order 2n, n >= 3. Element r^k f^s has index s*n + k, so indices
/// 0..n-1 are rotations and n..2n-1 are flips; r^n = f^2 = e and f r f = r^-1.
FiniteGroup dihedral_group(std::size_t n);

/// Validates an arbitrary table. Throws GroupAxiomError naming the first
/// violated axiom, checked in the order: square, range, Latin square,
/// identity, associativity. Associativity is exhaustive for |G| <= 64 and
/// uses 10*|G|^2 deterministic random triples above that.
FiniteGroup group_from_cayley(const std::vector<std::vector<std::int64_t>>& table);

/// Homomorphism g -> T_g into the D x D unitaries.
class UnitaryRep {
 public:
  const FiniteGroup& group() const noexcept { return *group_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t order() const noexcept { return group_->order(); }
  const Matrix& operator[](std::size_t g) const { return matrices_[g]; }
  std::span<const Matrix> matrices() const noexcept { return matrices_; }

 private:
  UnitaryRep(std::shared_ptr<const FiniteGroup> group, std::vector<Matrix> matrices);
  friend UnitaryRep regular_representation(const FiniteGroup& group);
  friend UnitaryRep rep_from_matrices(const FiniteGroup& group, std::vector<Matrix> matrices);

  std::shared_ptr<const FiniteGroup> group_;
  std::size_t dim_;
  std::vector<Matrix> matrices_;
};

/// Left-regular permutation representation: (T_g)_{gh, h} = 1, D = |G|.
UnitaryRep regular_representation(const FiniteGroup& group);

/// Validates shape, unitarity, identity and homomorphism (exhaustive for
/// |G| <= 64, 10*|G|^2 sampled pairs above) and throws RepError on failure.
UnitaryRep rep_from_matrices(const FiniteGroup& group, std::vector<Matrix> matrices);

/// Throws InvalidArgument if a |G|-element representation on C^D would be
/// larger than the library is willing to hold.
void check_working_set(std::size_t order, std::size_t dim);

}  // namespace wavepart
