#pragma once

#include <cstdint>
#include <vector>

#include "excseq/exc_seq.hpp"

namespace excseq {

// Module together with a shift level. Cluster-side objects live in the
// m-cluster fundamental domain (levels 0..m-1 free, level m only for
// projectives); sequence-side terms may sit at level m only when relatively
// projective.
struct LeveledObject {
    int module = 0;
    int level = 0;
    bool operator==(const LeveledObject& o) const { return module == o.module && level == o.level; }
    bool operator!=(const LeveledObject& o) const { return !(*this == o); }
    bool operator<(const LeveledObject& o) const {
        return module != o.module ? module < o.module : level < o.level;
    }
};

struct CompatibleTuple {
    int m = 1;
    std::vector<LeveledObject> entries;
    bool operator==(const CompatibleTuple& o) const { return m == o.m && entries == o.entries; }
};

struct MExcSequence {
    int m = 1;
    ExcSequence seq;
    std::vector<int> levels; // aligned with seq.terms
    bool operator==(const MExcSequence& o) const { return m == o.m && seq == o.seq && levels == o.levels; }
};

// (-1)^level * dim.
IntVec signed_dim(const Catalog& cat, const LeveledObject& obj);

// Compatibility of two fundamental-domain objects:
//   different levels: the lower-level module must be right-perpendicular to
//   the higher-level one; equal levels: ext-orthogonality.
bool compatible(const Catalog& cat, const LeveledObject& a, const LeveledObject& b, int m);

// Fundamental domain of the wide subcategory `ctx`: every module at levels
// 0..m-1 plus the ctx-projectives at level m, ordered by (module, level).
std::vector<LeveledObject> fundamental_domain(const Catalog& cat, std::uint64_t ctx, int m);

bool domain_object_ok(const Catalog& cat, std::uint64_t ctx, const LeveledObject& obj, int m);
void require_tuple(const Catalog& cat, const CompatibleTuple& tuple);       // DomainError
void require_m_exc(const Catalog& cat, const MExcSequence& mseq);           // ValidationError

enum class SigmaDirection { forward, inverse };

// Single-object bijection sigma_{T[k]} between the fundamental domain of
// T^perp (within ctx) and the objects of ctx compatible with T[k]. Forward
// fixes compatible objects and otherwise mutates (X,T) -> (T,Y), placing Y at
// the unique level j in {i, i-1} for which (-1)^i dim X - (-1)^j dim Y is an
// integer multiple of dim T.
LeveledObject key_sigma(const Catalog& cat, std::uint64_t ctx, const LeveledObject& t_obj,
                        const LeveledObject& x_obj, int m, SigmaDirection dir);

// The bijection between compatible tuples and m-exceptional sequences and its
// inverse. Both revalidate their output, assert the linear and level
// conditions together with the projectivity side properties, and verify the
// round trip.
MExcSequence theta(const Catalog& cat, const CompatibleTuple& tuple);
CompatibleTuple theta_inverse(const Catalog& cat, const MExcSequence& mseq);

// No relatively injective term sits at level m (for m = 1: negative terms
// are never relatively injective).
bool is_projectively_signed(const Catalog& cat, const MExcSequence& mseq);

// Every cluster-side object lies below level m.
bool is_positive(const CompatibleTuple& tuple);

// All ordered t-tuples of pairwise-compatible distinct fundamental-domain
// objects, in lexicographic domain order.
std::vector<CompatibleTuple> enumerate_tuples(const Catalog& cat, int m, int t);

// All m-exceptional sequences of length t: every valid level assignment over
// every length-t exceptional sequence.
std::vector<MExcSequence> enumerate_m_exc(const Catalog& cat, int m, int t);

// Unordered complete m-clusters (pairwise-compatible n-element subsets).
std::vector<std::vector<LeveledObject>> enumerate_clusters(const Catalog& cat, int m);

} // namespace excseq
