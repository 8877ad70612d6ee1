#include "excseq/census.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "excseq/errors.hpp"

namespace excseq {

int rank_cap() {
    if (const char* env = std::getenv("EXCSEQ_RANK_CAP")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 5;
}

namespace {

void check_rank(const Catalog& cat, int cap) {
    if (cat.quiver().n() > cap)
        throw ScaleError("rank " + std::to_string(cat.quiver().n()) + " exceeds cap " +
                         std::to_string(cap) + " (set EXCSEQ_RANK_CAP to raise)");
}

// The private vertex of an rPI term: in its support and in nobody else's.
int private_vertex(const Catalog& cat, const ExcSequence& seq, int k) {
    std::uint32_t others = 0;
    for (int j = seq.start; j <= seq.last_index(); ++j)
        if (j != k) others |= cat.support(seq.term_at(j));
    std::uint32_t mine = cat.support(seq.term_at(k)) & ~others;
    if (mine == 0 || (mine & (mine - 1)) != 0)
        throw IntegrityError("rPI term without a unique private vertex");
    int v = 1;
    while (!((mine >> (v - 1)) & 1)) ++v;
    return v;
}

} // namespace

CensusReport census(const Catalog& cat) {
    check_rank(cat, rank_cap());
    const int n = cat.quiver().n();
    CensusReport r;
    r.quiver_label = cat.quiver().label();
    r.n = n;
    r.h = coxeter_number(cat.quiver());
    r.rel_proj_count.assign(static_cast<std::size_t>(n), 0);
    r.rel_inj_count.assign(static_cast<std::size_t>(n), 0);
    r.rpi_count.assign(static_cast<std::size_t>(n), 0);
    r.last_k_projective.assign(static_cast<std::size_t>(n), 0);
    r.last_k_rel_proj.assign(static_cast<std::size_t>(n), 0);

    std::vector<ExcSequence> all = enumerate_ces(cat);
    r.total = static_cast<long long>(all.size());
    std::vector<std::uint32_t> rpi_masks(all.size(), 0);
    std::vector<std::vector<TermClass>> classes(all.size());
    for (std::size_t s = 0; s < all.size(); ++s) {
        classes[s] = classify(cat, all[s]);
        for (int k = 1; k <= n; ++k) {
            const TermClass& tc = classes[s][static_cast<std::size_t>(k - 1)];
            if (tc.rel_proj) ++r.rel_proj_count[static_cast<std::size_t>(k - 1)];
            if (tc.rel_inj) ++r.rel_inj_count[static_cast<std::size_t>(k - 1)];
            if (tc.root()) {
                ++r.rpi_count[static_cast<std::size_t>(k - 1)];
                rpi_masks[s] |= 1u << (k - 1);
            }
        }
        for (int k = 1; k <= n; ++k) {
            bool all_proj = true, all_rel = true;
            for (int j = n - k + 1; j <= n; ++j) {
                if (!cat.projective(all[s].term_at(j))) all_proj = false;
                if (!classes[s][static_cast<std::size_t>(j - 1)].rel_proj) all_rel = false;
            }
            if (all_proj) ++r.last_k_projective[static_cast<std::size_t>(k - 1)];
            if (all_rel) ++r.last_k_rel_proj[static_cast<std::size_t>(k - 1)];
        }
    }

    // Joint rPI counts and the explicit bijection onto sequences with
    // projective tails, for every non-empty index set.
    for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
        JointRpi jr;
        for (int k = 1; k <= n; ++k)
            if ((subset >> (k - 1)) & 1) jr.positions.push_back(k);
        int k = static_cast<int>(jr.positions.size());
        jr.last_k_projective = r.last_k_projective[static_cast<std::size_t>(k - 1)];

        std::set<std::vector<int>> images;
        bool ok = true;
        for (std::size_t s = 0; s < all.size(); ++s) {
            if ((rpi_masks[s] & subset) != subset) continue;
            ++jr.count;
            // Remove the rPI terms, then append the projectives over their
            // private vertices in reverse position order.
            std::vector<int> verts;
            for (int pos : jr.positions) verts.push_back(private_vertex(cat, all[s], pos));
            std::vector<int> terms;
            for (int j = 1; j <= n; ++j)
                if (!((subset >> (j - 1)) & 1)) terms.push_back(all[s].term_at(j));
            for (auto it = verts.rbegin(); it != verts.rend(); ++it)
                terms.push_back(cat.projective_of(*it));
            ExcSequence image = make_sequence(cat, terms);
            if (!validate(cat, image).ok) ok = false;
            for (int j = n - k + 1; j <= n && ok; ++j)
                if (!cat.projective(image.term_at(j))) ok = false;
            if (!images.insert(image.terms).second) ok = false; // injectivity
        }
        jr.bijection_verified = ok && jr.count == jr.last_k_projective;
        r.joint_rpi.push_back(std::move(jr));
    }
    return r;
}

LastKRecord last_k_projective_structure(const Catalog& cat, int k) {
    check_rank(cat, rank_cap());
    const int n = cat.quiver().n();
    if (k < 1 || k > n) throw DomainError("k out of range");
    LastKRecord rec;
    rec.k = k;
    bool items_ok = true;
    std::map<std::vector<int>, long long> counts_by_tuple;

    for (const ExcSequence& seq : enumerate_ces(cat)) {
        std::vector<TermClass> cls = classify(cat, seq);
        bool tail_rel_proj = true;
        for (int j = n - k + 1; j <= n; ++j)
            if (!cls[static_cast<std::size_t>(j - 1)].rel_proj) tail_rel_proj = false;
        if (!tail_rel_proj) continue;
        ++rec.sequences;

        // (1) simple tops v_1..v_k for the tail terms.
        std::vector<int> verts;
        for (int i = 1; i <= k; ++i) {
            int term = seq.term_at(n - k + i);
            int v = cat.top_vertex(term);
            if (v == 0) items_ok = false;
            verts.push_back(v);
        }
        // (2) v_i absent from every support strictly to the left.
        for (int i = 1; i <= k && items_ok; ++i)
            for (int j = seq.start; j < n - k + i; ++j)
                if (cat.support(seq.term_at(j)) & (1u << (verts[static_cast<std::size_t>(i - 1)] - 1)))
                    items_ok = false;
        // (3) the tail term is the unique projective object of the
        // perpendicular category with that top.
        for (int i = 1; i <= k && items_ok; ++i) {
            std::uint64_t a = perp_a_mask(cat, seq, n - k + i, cat.all_mask());
            int expect = seq.term_at(n - k + i);
            for (int x = 0; x < cat.size(); ++x) {
                if (!((a >> x) & 1)) continue;
                if (!cat.projective_in(x, a)) continue;
                if (cat.top_vertex(x) != verts[static_cast<std::size_t>(i - 1)]) continue;
                if (x != expect) items_ok = false;
            }
        }
        ++counts_by_tuple[verts];

        // (5) rPI tail iff Hom(P_{v_i}, P_{v_j}) = 0 for i < j.
        bool all_rpi = true;
        for (int j = n - k + 1; j <= n; ++j)
            if (!cls[static_cast<std::size_t>(j - 1)].root()) all_rpi = false;
        bool hom_vanish = true;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (cat.hom(cat.projective_of(verts[static_cast<std::size_t>(i)]),
                            cat.projective_of(verts[static_cast<std::size_t>(j)])) != 0)
                    hom_vanish = false;
        if (all_rpi) ++rec.rpi_sequences;
        if (hom_vanish) ++rec.hom_vanishing;
        if (all_rpi != hom_vanish) items_ok = false;
    }
    rec.items_verified = items_ok;

    // (4) counts depend only on the vertex multiset.
    rec.reorder_invariant = true;
    std::map<std::vector<int>, std::vector<long long>> by_multiset;
    for (const auto& [tuple, count] : counts_by_tuple) {
        std::vector<int> sorted = tuple;
        std::sort(sorted.begin(), sorted.end());
        by_multiset[sorted].push_back(count);
    }
    for (auto& [sorted, counts] : by_multiset) {
        // Every permutation must appear with the same count.
        std::vector<int> perm = sorted;
        std::size_t perms = 0;
        do {
            ++perms;
            auto it = counts_by_tuple.find(perm);
            if (it == counts_by_tuple.end() || it->second != counts.front()) rec.reorder_invariant = false;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (counts.size() != perms) rec.reorder_invariant = false;
    }
    return rec;
}

ClusterCensus cluster_census(const Catalog& cat, int m) {
    if (m < 1) throw DomainError("m must be at least 1");
    int cap = std::min(rank_cap(), m <= 2 ? 4 : 3);
    check_rank(cat, cap);
    const int n = cat.quiver().n();
    ClusterCensus cc;
    cc.m = m;
    std::vector<std::vector<LeveledObject>> clusters = enumerate_clusters(cat, m);
    cc.clusters = static_cast<long long>(clusters.size());
    for (const auto& c : clusters) {
        bool pos = std::all_of(c.begin(), c.end(), [&](const LeveledObject& o) { return o.level < m; });
        if (pos) ++cc.positive_clusters;
    }
    for (int t = 1; t <= n; ++t) {
        std::vector<CompatibleTuple> tuples = enumerate_tuples(cat, m, t);
        std::set<std::vector<LeveledObject>> seq_images;
        for (const CompatibleTuple& tup : tuples) {
            MExcSequence ms = theta(cat, tup);
            std::vector<LeveledObject> flat;
            for (std::size_t i = 0; i < ms.seq.terms.size(); ++i)
                flat.push_back({ms.seq.terms[i], ms.levels[i]});
            seq_images.insert(std::move(flat));
        }
        long long m_exc = static_cast<long long>(enumerate_m_exc(cat, m, t).size());
        cc.tuples_by_length.push_back(static_cast<long long>(tuples.size()));
        cc.m_exc_by_length.push_back(m_exc);
        if (static_cast<long long>(seq_images.size()) != static_cast<long long>(tuples.size()) ||
            m_exc != static_cast<long long>(tuples.size()))
            throw IntegrityError("theta is not a bijection at length " + std::to_string(t));
    }
    cc.ordered_complete_tuples = cc.tuples_by_length.back();
    long long factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;
    if (cc.ordered_complete_tuples != factorial * cc.clusters)
        throw IntegrityError("ordered tuple count is not n! times the cluster count");
    return cc;
}

DynkinType detect_type(const Quiver& q) {
    if (!q.is_dynkin()) throw NotFiniteTypeError("not a Dynkin quiver");
    int n = q.n();
    std::vector<std::set<int>> adj(static_cast<std::size_t>(n) + 1);
    for (auto [s, t] : q.arrows()) {
        adj[static_cast<std::size_t>(s)].insert(t);
        adj[static_cast<std::size_t>(t)].insert(s);
    }
    int branch_vertex = 0;
    for (int v = 1; v <= n; ++v) {
        if (adj[static_cast<std::size_t>(v)].size() > 3)
            throw NotFiniteTypeError("vertex degree exceeds 3");
        if (adj[static_cast<std::size_t>(v)].size() == 3) {
            if (branch_vertex) throw NotFiniteTypeError("two branch vertices");
            branch_vertex = v;
        }
    }
    if (!branch_vertex) return {'A', n};
    std::vector<int> branch_lengths;
    for (int start : adj[static_cast<std::size_t>(branch_vertex)]) {
        int len = 1, prev = branch_vertex, cur = start;
        while (true) {
            int next = 0;
            for (int w : adj[static_cast<std::size_t>(cur)])
                if (w != prev) next = w;
            if (!next) break;
            prev = cur;
            cur = next;
            ++len;
        }
        branch_lengths.push_back(len);
    }
    std::sort(branch_lengths.begin(), branch_lengths.end());
    if (branch_lengths[0] == 1 && branch_lengths[1] == 1) return {'D', n};
    if (branch_lengths[0] == 1 && branch_lengths[1] == 2 && branch_lengths[2] >= 2 && branch_lengths[2] <= 4)
        return {'E', n};
    throw NotFiniteTypeError("unrecognized diagram");
}

long long weyl_group_order(const Quiver& q) {
    DynkinType t = detect_type(q);
    long long f = 1;
    switch (t.series) {
        case 'A':
            for (int i = 2; i <= t.rank + 1; ++i) f *= i;
            return f;
        case 'D':
            for (int i = 2; i <= t.rank; ++i) f *= i;
            return f << (t.rank - 1);
        case 'E':
            if (t.rank == 6) return 51840;
            if (t.rank == 7) return 2903040;
            return 696729600;
    }
    throw NotFiniteTypeError("unrecognized series");
}

std::vector<int> degrees(const Quiver& q) {
    DynkinType t = detect_type(q);
    std::vector<int> d;
    switch (t.series) {
        case 'A':
            for (int i = 2; i <= t.rank + 1; ++i) d.push_back(i);
            return d;
        case 'D':
            for (int i = 1; i < t.rank; ++i) d.push_back(2 * i);
            d.push_back(t.rank);
            std::sort(d.begin(), d.end());
            return d;
        case 'E':
            if (t.rank == 6) return {2, 5, 6, 8, 9, 12};
            if (t.rank == 7) return {2, 6, 8, 10, 12, 14, 18};
            return {2, 8, 12, 14, 18, 20, 24, 30};
    }
    throw NotFiniteTypeError("unrecognized series");
}

namespace {

long long catalan_product(const Quiver& q, int m, int shift) {
    long long h = coxeter_number(q);
    long long num = 1, den = 1;
    for (int d : degrees(q)) {
        num *= m * h + d + shift;
        den *= d;
    }
    if (num % den != 0) throw IntegrityError("non-integral Catalan product");
    return num / den;
}

} // namespace

long long fuss_catalan(const Quiver& q, int m) { return catalan_product(q, m, 0); }
long long fuss_catalan_positive(const Quiver& q, int m) { return catalan_product(q, m, -2); }

} // namespace excseq
