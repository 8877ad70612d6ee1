#pragma once

#include <vector>

#include "excseq/matrix.hpp"
#include "excseq/quiver.hpp"

namespace excseq {

// Quiver representation: a dimension vector and one exact-rational matrix per
// arrow. maps[a] has shape dims[target] x dims[source], aligned with the
// owning quiver's arrow list.
struct Rep {
    IntVec dims;
    std::vector<QMat> maps;
};

// Simple representation S_v.
Rep simple_rep(const Quiver& q, int v);

// Quiver with all arrows at v reversed.
Quiver reflect_quiver(const Quiver& q, int v);

// BGP reflection functor C_v^+ at a sink v: passes to the kernel of the
// combined incoming map. Result lives over reflect_quiver(q, v).
Rep reflect_plus(const Quiver& q, const Rep& m, int v);

// BGP reflection functor C_v^- at a source v: passes to the cokernel of the
// combined outgoing map. Result lives over reflect_quiver(q, v).
Rep reflect_minus(const Quiver& q, const Rep& m, int v);

// dim Hom(M, N): nullity of the intertwiner system
// { f_j M_a = N_a f_i : a an arrow i->j }.
long long hom_dim(const Quiver& q, const Rep& m, const Rep& n);

// Dimension vector of the top M / rad M, where rad M at vertex v is the sum
// of the images of the incoming arrow maps.
IntVec top_vector(const Quiver& q, const Rep& m);

} // namespace excseq
