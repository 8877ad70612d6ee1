#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "excseq/quiver.hpp"
#include "excseq/rep.hpp"

namespace excseq {

// One explicit indecomposable per positive root of a Dynkin quiver, with
// cached exact Hom/Ext dimensions for every ordered pair. Immutable after
// build; module ids follow the lexicographic order of the dimension vectors.
class Catalog {
public:
    static Catalog build(const Quiver& q);

    const Quiver& quiver() const { return quiver_; }
    int size() const { return static_cast<int>(reps_.size()); }

    const Rep& rep(int id) const { return reps_.at(static_cast<std::size_t>(id)); }
    const IntVec& dim(int id) const { return reps_.at(static_cast<std::size_t>(id)).dims; }
    std::string key(int id) const;

    int id_of(const IntVec& dim_vec) const;                // CatalogError if absent
    std::optional<int> try_id(const IntVec& dim_vec) const;
    int id_of_key(const std::string& key_str) const;       // CatalogError naming the key

    long long hom(int a, int b) const { return hom_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    long long ext(int a, int b) const { return ext_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    bool right_perp(int a, int b) const { return hom(a, b) == 0 && ext(a, b) == 0; } // b in a^perp

    std::uint32_t support(int id) const { return support_[static_cast<std::size_t>(id)]; }
    bool projective(int id) const { return proj_vertex_[static_cast<std::size_t>(id)] != 0; }
    bool injective(int id) const { return inj_vertex_[static_cast<std::size_t>(id)] != 0; }
    bool simple(int id) const { return simple_vertex_[static_cast<std::size_t>(id)] != 0; }
    int projective_of(int vertex) const { return proj_of_.at(static_cast<std::size_t>(vertex) - 1); }
    int injective_of(int vertex) const { return inj_of_.at(static_cast<std::size_t>(vertex) - 1); }
    int simple_of(int vertex) const { return simple_of_.at(static_cast<std::size_t>(vertex) - 1); }

    // Vertex of the simple top when the top is simple, 0 otherwise.
    int top_vertex(int id) const { return top_vertex_[static_cast<std::size_t>(id)]; }

    std::optional<int> ar_translate(int id) const;          // none for projectives
    std::optional<int> ar_translate_inverse(int id) const;  // none for injectives

    // Indecomposable summands of the middle term of the almost split sequence
    // ending at a non-projective module, via dimension-level knitting of the
    // AR quiver. Throws DomainError for projectives.
    std::vector<int> ar_middle(int id) const;

    // Subcategory masks: bit i set = module i belongs.
    std::uint64_t all_mask() const;
    std::uint64_t right_perp_mask(int id, std::uint64_t within) const;
    std::uint64_t left_perp_mask(int id, std::uint64_t within) const;
    bool projective_in(int id, std::uint64_t mask) const; // Ext(id, -) vanishes on mask
    bool injective_in(int id, std::uint64_t mask) const;  // Ext(-, id) vanishes on mask

    static IntVec parse_key(const std::string& key_str);

private:
    Catalog(Quiver q) : quiver_(std::move(q)) {}

    Quiver quiver_;
    std::vector<Rep> reps_;
    std::map<IntVec, int> id_by_dim_;
    std::vector<std::vector<long long>> hom_;
    std::vector<std::vector<long long>> ext_;
    std::vector<std::uint32_t> support_;
    std::vector<int> proj_vertex_, inj_vertex_, simple_vertex_; // vertex or 0
    std::vector<int> proj_of_, inj_of_, simple_of_;             // per vertex
    std::vector<int> top_vertex_;
    std::vector<std::pair<int, int>> slice_;                    // (orbit vertex, shift t)
    std::map<std::pair<int, int>, int> slice_id_;
};

} // namespace excseq
