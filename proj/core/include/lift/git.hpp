#pragma once

#include <optional>
#include <vector>

#include "lift/cone.hpp"
#include "lift/fan.hpp"

namespace lift {

/// GIT data for a toric quotient: torus rank r, characters D_1..D_R in
/// Z^r, and a rational stability condition inside the cone they span.
struct GitData {
  std::size_t r = 0;
  std::vector<IVec> characters;
  RVec omega;

  std::size_t R() const { return characters.size(); }
};

/// Stacky fan data (N; Sigma; rho_1..rho_R) with the ray order matching
/// the character indices. The rho_i are kept exactly as given (they need
/// not be primitive); Fan geometry is derived on demand.
struct StackyFan {
  std::size_t n = 0;  // rank of N
  std::vector<IVec> rho;
  std::vector<std::vector<std::size_t>> max_cones;

  Fan fan() const;
};

/// omega = sum of strictly positive multiples of { D_i : i in I }?
bool covers(const std::vector<IVec>& characters, const RVec& omega,
            const std::vector<std::size_t>& subset);

/// All covering subsets (the set A_omega), each sorted, in lexicographic
/// order.
std::vector<std::vector<std::size_t>> cover_sets(const std::vector<IVec>& characters,
                                                 const RVec& omega);

/// Dualize the divisor sequence and read off the fan: cones are spanned
/// by { rho_i : i in I } with the complement of I covering omega.
/// Errors: characters with torsion cokernel (generic isotropy), omega on
/// a chamber wall (not Deligne-Mumford), unstable coordinates.
StackyFan git_to_fan(const GitData& g);

/// Same fan construction but with the rays supplied by the caller (used
/// when a weight matrix provides a distinguished basis of N).
StackyFan stacky_from_rho(const GitData& g, std::vector<IVec> rho);

/// Reverse construction: characters from the ray kernel, omega a point
/// interior to the intersection of the cones spanned by off-cone
/// characters (the nef chamber).
GitData fan_to_git(const StackyFan& s, const std::optional<RVec>& omega_hint = std::nullopt);

/// A line bundle class in Z^r = Pic together with an optional divisor
/// lift (a_1..a_R with sum a_i D_i = class).
struct LineBundle {
  IVec cls;
  std::optional<IVec> lift;
};

enum class PositivityTier { ample, nef_not_ample, not_nef };

/// A simplicial projective toric orbifold carried in both presentations,
/// with cached wall data. All positivity checks live here.
class Ambient {
public:
  Ambient(GitData g, StackyFan s);
  explicit Ambient(const GitData& g) : Ambient(g, git_to_fan(g)) {}

  const GitData& git() const { return git_; }
  const StackyFan& stacky() const { return stacky_; }

  /// Integral wall relations sum b_i rho_i = 0, positive on the two
  /// off-wall rays, one per codimension-1 wall.
  const std::vector<IVec>& wall_relations() const;

  /// Lexicographically smallest non-negative integral lift when one
  /// exists, otherwise an arbitrary integral lift.
  IVec lift_class(const IVec& cls) const;

  /// Wall intersection numbers sum b_i a_i for a divisor lift a.
  std::vector<Int> wall_degrees(const IVec& lift) const;

  bool nef(const IVec& cls) const;
  bool ample(const IVec& cls) const;
  /// Nef and each maximal cone's local representative m_sigma is integral
  /// (the bundle descends to the coarse space).
  bool convex(const IVec& cls) const;
  PositivityTier tier(const IVec& cls) const;

  bool orbifold() const;            // rho surjective onto N
  bool smooth_fixed_point() const;  // some maximal cone has det +-1
  std::vector<Int> max_cone_dets() const;

  IVec anticanonical() const;  // sum of all characters

private:
  GitData git_;
  StackyFan stacky_;
  mutable std::optional<std::vector<IVec>> walls_;
};

const char* tier_name(PositivityTier t);

}  // namespace lift
