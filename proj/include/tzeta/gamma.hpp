#pragma once

// Definable subsets of Γ^l, Γ = {±1} x Q, presented as finite disjoint unions
// of relatively open rational polyhedral cells.
//
// χ_g, χ_b and the Grothendieck class are computed by cylindrical
// decomposition: the last coordinate is eliminated first (exact
// Fourier–Motzkin over Q). Because a cell is convex, the fibre over its
// projection has constant type (point, bounded open interval, open
// half-line, line), and the invariants multiply over fibres:
//
//   fibre        χ_g   χ_b   class in Z[X, Y^(2)]
//   point          1     1   X
//   bounded       -1    -1   -X
//   half-line     -1     0   XY
//   line          -1     1   2XY + X
//
// The line row follows from additivity over (-∞,0) ⊔ {0} ⊔ (0,∞); the
// bounded class from [half-line] = [bounded] + [point] + [half-line].

#include <cstdint>
#include <optional>
#include <vector>

#include "tzeta/rat.hpp"
#include "tzeta/rings.hpp"

namespace tzeta {

enum class Sign : int { Plus = 1, Minus = -1 };

inline Sign operator*(Sign a, Sign b) {
  return static_cast<int>(a) * static_cast<int>(b) > 0 ? Sign::Plus : Sign::Minus;
}

enum class Direction { Less, Greater };

struct LinearEquality {
  std::vector<Rat> coeffs;
  Rat rhs;
  friend bool operator==(const LinearEquality&, const LinearEquality&) = default;
};

struct StrictInequality {
  std::vector<Rat> coeffs;
  Rat rhs;
  Direction dir = Direction::Less;
  friend bool operator==(const StrictInequality&, const StrictInequality&) = default;
};

/// Non-strict constraint accepted only by the open-face splitter.
struct WeakInequality {
  std::vector<Rat> coeffs;
  Rat rhs;
  Direction dir = Direction::Less;  // Less means <=, Greater means >=
};

struct GammaCell {
  std::size_t ambient = 0;
  std::vector<Sign> signs;
  std::vector<LinearEquality> equalities;
  std::vector<StrictInequality> strict;

  Sign sign_product() const;
  friend bool operator==(const GammaCell&, const GammaCell&) = default;
};

struct GammaSet {
  std::size_t ambient = 0;
  std::vector<GammaCell> cells;

  /// The one-point set Γ^0 (ambient 0, single unconstrained cell).
  static GammaSet unit();
  static GammaSet empty(std::size_t ambient) { return GammaSet{ambient, {}}; }
  friend bool operator==(const GammaSet&, const GammaSet&) = default;
};

enum class FiberType { Point, Bounded, HalfLine, Line };

/// Fibre types from the last coordinate to the first; nullopt when empty.
std::optional<std::vector<FiberType>> cylindrical_profile(const GammaCell& cell);

bool cell_is_empty(const GammaCell& cell);

/// Throws InvalidCell / SchemaViolation / NonDisjointCells with the cell index.
void validate(const GammaSet& s, bool check_disjoint = true);

/// Γ-dimension; nullopt for the empty set.
std::optional<std::int64_t> gamma_dim(const GammaSet& s);

BigInt chi_g(const GammaSet& s);
BigInt chi_b(const GammaSet& s);
BigInt chi_g(const GammaCell& c);
BigInt chi_b(const GammaCell& c);

RvRingElem gamma_class(const GammaSet& s);

/// Image of a cell under a linear functional: a point or an open interval
/// (either end may be unbounded).
struct FunctionalRange {
  bool is_point = false;
  std::optional<Rat> lo;  // point value stored in lo when is_point
  std::optional<Rat> hi;
  bool bounded() const { return is_point || (lo && hi); }
};

/// nullopt when the cell is empty.
std::optional<FunctionalRange> functional_range(const GammaCell& cell,
                                                const std::vector<Rat>& functional);

bool is_doubly_bounded(const GammaSet& s);

/// One piece of the partition of the range of the weight Σq.
struct SigmaPiece {
  bool is_point = false;
  Rat lo;  // breakpoint value when is_point
  Rat hi;
  BigInt fiber_chi_g = 0;
  BigInt fiber_chi_b = 0;
  BigInt fiber_chi_g_plus = 0;   // contribution of cells with σ-sign +
  BigInt fiber_chi_g_minus = 0;  // contribution of cells with σ-sign -
};

/// Partition of Σq(S) into breakpoints and open intervals on which the fibre
/// Euler characteristics are constant. Throws NotDoublyBounded.
std::vector<SigmaPiece> sigma_range(const GammaSet& s);

/// The slice S ∩ {Σq = β} (ambient unchanged).
GammaSet weight_slice(const GammaSet& s, const Rat& beta);

struct UnimodularImage {
  GammaSet image;
  /// Σ(Mq) - Σq = weight_change · q.
  std::vector<BigInt> weight_change;
  bool preserves_weight() const;
};

/// Throws NotUnimodular unless det M = ±1.
UnimodularImage transform_unimodular(const GammaSet& s,
                                     const std::vector<std::vector<BigInt>>& m);

/// Cartesian product; ambient adds and coordinates of b follow those of a.
GammaSet product(const GammaSet& a, const GammaSet& b);

/// Disjoint union of two sets with the same ambient.
GammaSet disjoint_union(const GammaSet& a, const GammaSet& b);

/// Partitions a polyhedron with weak constraints into its relatively open faces.
std::vector<GammaCell> split_into_open_faces(std::size_t ambient, std::vector<Sign> signs,
                                             const std::vector<LinearEquality>& equalities,
                                             const std::vector<WeakInequality>& weak,
                                             const std::vector<StrictInequality>& strict);

/// Permutes coordinates: new coordinate i is old coordinate perm[i].
GammaCell permute_coordinates(const GammaCell& c, const std::vector<std::size_t>& perm);

// Small constructors used throughout tests and the germ compiler.
GammaCell point_cell(const std::vector<Rat>& q, std::vector<Sign> signs = {});
GammaCell box_cell(const std::vector<std::pair<Rat, Rat>>& bounds, std::vector<Sign> signs = {});

}  // namespace tzeta
