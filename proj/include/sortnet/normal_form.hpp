#pragma once

#include "sortnet/network.hpp"

namespace sortnet {

// Last layer normal form: the last layer has only comparators (i,i+1) and no
// two adjacent channels are both unused in it.
bool is_llnf_layer(const Layer& last, int channels);
bool is_llnf(const Network& net);

// Co-saturation of the last two layers:
//   (i)   the last layer is in llnf;
//   (ii)  no two consecutive blocks (components of the last layer) both
//         contain a channel unused in the penultimate layer;
//   (iii) if (i,i+1) is in the last layer and i, i+1 are unused in the
//         penultimate layer, then i-1 and i+2 (when they exist) are used in
//         the last layer.
bool is_co_saturated_suffix(const Layer& penultimate, const Layer& last, int channels);
// False for depth < 2.
bool is_co_saturated(const Network& net);

// Removes redundancy, then fills the last layer with (j,j+1) for every pair
// of adjacent unused channels, scanning j = 1..n-1. Same depth, still sorting.
// Throws DomainError unless `net` is a sorting network of depth >= 1.
Network to_llnf(const Network& net);

enum class MoveDirection {
  // Partner channel i+2: adds (i+1,i+2) to the last layer.
  Down,
  // Partner channel i-1: adds (i-1,i) to the last layer.
  Up,
};

// Moves (i,i+1) from the last layer to the penultimate one and adds the
// comparator toward the partner channel in the last layer. Requires (i,i+1)
// in the last layer, i and i+1 unused in the penultimate layer, and the
// partner channel unused in the last layer; throws DomainError otherwise.
Network move_to_penultimate(const Network& net, Channel i, MoveDirection direction);

// Equal-depth co-saturated sorting network obtained from `net` by
// to_llnf, adding comparators between free channels of consecutive blocks in
// layer d-1, and moving isolated last-layer comparators until (iii) holds.
// Throws DomainError unless `net` is a sorting network of depth >= 2.
Network co_saturate(const Network& net);

}  // namespace sortnet
