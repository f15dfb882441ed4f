#pragma once

// Block presentations Σ [U_i] ⊗ [I_i] of classes in the volume RV
// semiring, and the maps out of them: the class in Z[X, Y^(2)], ∫G into
// Z^(2), ∫R^g and ∫R^b into Z, ∫R^± into Z[X], and the level-m values e_m.
//
// Everything is computed in the groupified rings, where [T] = [A] = [A!] =
// -[1]. The formal fraction v = [1]/[A!] is kept as a Laurent ledger and
// evaluates to -1.

#include <cstdint>
#include <optional>
#include <vector>

#include "tzeta/gamma.hpp"
#include "tzeta/rat.hpp"
#include "tzeta/rings.hpp"

namespace tzeta {

struct VolResBlock {
  std::int64_t grade = 0;
  std::int64_t dim = 0;
  BigInt euler = 1;
  Sign sign = Sign::Plus;  // carried; the groupified maps do not see it
  Rat weight;

  friend bool operator==(const VolResBlock&, const VolResBlock&) = default;
};

struct Block {
  VolResBlock res;
  GammaSet gamma;

  std::int64_t total_grade() const {
    return res.grade + static_cast<std::int64_t>(gamma.ambient);
  }
  friend bool operator==(const Block&, const Block&) = default;
};

struct BlockSum {
  std::int64_t ambient_vf_dim = 0;
  std::vector<Block> blocks;
  std::optional<Rat> q;  // declared invariance radius, not verified

  friend bool operator==(const BlockSum&, const BlockSum&) = default;
};

/// The two evaluations of e_m together with the unreduced v-ledger.
struct EmValue {
  LaurentPoly plus;
  LaurentPoly minus;
  LaurentPoly ledger;  // in v = [1]/[A!]

  friend bool operator==(const EmValue&, const EmValue&) = default;
};

enum class Assignment { Plus, Minus };

/// grade >= dim >= 0 and a valid Γ-part.
void validate_block(const Block& b, bool check_disjoint = true);
/// Also requires every block to have total grade ambient_vf_dim.
void validate_homogeneous(const BlockSum& s);

/// A single block whose RES part is the grade-0 point (the unit).
Block pure_gamma_block(GammaSet g);
/// A pure RES block of grade k and Euler characteristic euler.
Block pure_res_block(std::int64_t grade, std::int64_t dim, BigInt euler, Rat weight = Rat(0));

BlockSum concat(const BlockSum& a, const BlockSum& b);
Block tensor(const Block& a, const Block& b);
BlockSum tensor(const BlockSum& a, const BlockSum& b);

RvRingElem rv_class(const Block& b);
RvRingElem rv_class(const BlockSum& s);
Z2Elem int_G(const BlockSum& s);
BigInt int_R_g(const BlockSum& s);
BigInt int_R_b(const BlockSum& s);
BigInt int_R_g(const Block& b);
BigInt int_R_b(const Block& b);

struct RPair {
  LaurentPoly plus;
  LaurentPoly minus;
};
/// Throws NotDoublyBounded.
RPair int_R_pm(const BlockSum& s);

/// Level-m restriction: for each block, the admissible total weights
/// w + β in (1/m)Z together with the fibre Euler characteristic of the
/// slice {Σq = β}.
struct LevelSlice {
  Rat total_weight;
  BigInt fiber_chi_g;
};
struct LevelRestriction {
  std::int64_t m = 0;
  BlockSum source;
  std::vector<std::vector<LevelSlice>> slices;  // parallel to source.blocks
};
/// Throws InvalidLevel (m <= 0) and NotDoublyBounded.
LevelRestriction delta_m(const BlockSum& s, std::int64_t m);

/// h_m as a Laurent polynomial in v.
LaurentPoly h_m(const LevelRestriction& r);
/// Throws InvalidLevel, NotDoublyBounded, GradeMismatch.
EmValue e_m(const BlockSum& s, std::int64_t m);

/// (±1)^n times the value at v = -1.
BigInt evaluate_ledger(const LaurentPoly& ledger, Assignment a, std::int64_t n);

}  // namespace tzeta
