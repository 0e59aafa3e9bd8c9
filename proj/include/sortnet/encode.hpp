#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sortnet/cnf.hpp"
#include "sortnet/network.hpp"
#include "sortnet/varmap.hpp"

namespace sortnet {

// Constraint tiers: the plain existence encoding, plus the necessary
// last-two-layer conditions, plus the co-saturation symmetry breaks.
enum class Tier { Base, Necessary, Full };

std::string to_string(Tier tier);
// Accepts "base", "necessary", "full"; throws RangeError otherwise.
Tier parse_tier(const std::string& text);

struct EncodeOptions {
  bool necessary = false;         // phi1..phi4
  bool generalized_phi1 = false;  // phi1(l) for every l < d
  bool symmetry = false;          // psi1, psi2a-c, psi3a-b
  bool parberry = false;          // fix layer 1 to (2k-1,2k)
  std::optional<Network> prefix;  // fix the first layers exactly

  static EncodeOptions for_tier(Tier tier);
};

struct Encoding {
  VarMap vars;
  CnfInstance cnf;
};

// Desk-scale guard for the base encoding.
inline constexpr int kMaxEncodeChannels = 12;
inline constexpr int kMaxEncodeDepth = 12;

// Satisfiable iff an n-channel depth-d sorting network exists. Groups:
//   phi0.layer   at most one comparator per channel and layer
//   phi0.used    u(l,k) <-> some comparator of layer l touches k
//   phi0.input   value variables at level 0 fixed to each unsorted input
//   phi0.update  comparator semantics, and unused channels copy their value
//   phi0.sorted  every output ascending
// Throws RangeError outside 2 <= n <= 12, 1 <= d <= 12.
Encoding encode_base(int n, int d);

// Last layer only has comparators (i,i+1).
ClauseGroup encode_phi1(const VarMap& vars);
// A non-adjacent comparator at layer l has a channel used later.
ClauseGroup encode_phi1_ell(const VarMap& vars, int layer);
// Penultimate layer spans at most 3 channels. The three below need d >= 2.
ClauseGroup encode_phi2(const VarMap& vars);
// (i,i+3) at d-1 forces (i,i+1) and (i+2,i+3) at d.
ClauseGroup encode_phi3(const VarMap& vars);
// (i,i+2) at d-1 forces (i,i+1) or (i+1,i+2) at d.
ClauseGroup encode_phi4(const VarMap& vars);

// psi1, psi2a, psi2b, psi2c, psi3a, psi3b in that order. Needs d >= 2.
std::vector<ClauseGroup> encode_psi(const VarMap& vars);

// Units fixing every layer of `prefix` exactly. Throws ShapeError on channel
// mismatch or a prefix deeper than the encoding.
ClauseGroup encode_prefix(const Network& prefix, const VarMap& vars);

// Full instance. Throws DomainError if a prefix is combined with last-layer
// constraints that would touch fixed layers (prefix depth > max(d-2, 0)),
// or if both `parberry` and `prefix` are set.
Encoding encode(int n, int d, const EncodeOptions& options);

// Reads the comparator block: (i,j) at layer l iff c(l,i,j) is true.
// `assignment[v]` is the value of variable v (index 0 unused). Throws
// ShapeError if the assignment is too short and IntegrityError if a layer
// reuses a channel.
Network decode_model(const VarMap& vars, const std::vector<bool>& assignment);

}  // namespace sortnet
