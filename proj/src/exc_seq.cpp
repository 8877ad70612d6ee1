#include "excseq/exc_seq.hpp"

#include <algorithm>

#include "excseq/errors.hpp"

namespace excseq {

ExcSequence make_sequence(const Catalog& cat, std::vector<int> term_ids) {
    if (term_ids.empty()) throw ValidationError("empty sequence");
    if (static_cast<int>(term_ids.size()) > cat.quiver().n())
        throw ValidationError("sequence longer than the quiver rank");
    for (int id : term_ids)
        if (id < 0 || id >= cat.size()) throw CatalogError("term id out of range");
    ExcSequence s;
    s.start = cat.quiver().n() - static_cast<int>(term_ids.size()) + 1;
    s.terms = std::move(term_ids);
    return s;
}

std::string ValidationResult::message() const {
    if (ok) return "valid";
    return std::string(hom_nonzero ? "Hom" : "Ext") + "(E_" + std::to_string(j) + ", E_" +
           std::to_string(i) + ") != 0";
}

ValidationResult validate(const Catalog& cat, const ExcSequence& seq) {
    ValidationResult r;
    int len = static_cast<int>(seq.terms.size());
    for (int pj = 0; pj < len; ++pj)
        for (int pi = 0; pi < pj; ++pi) {
            int ei = seq.terms[static_cast<std::size_t>(pi)];
            int ej = seq.terms[static_cast<std::size_t>(pj)];
            if (cat.hom(ej, ei) != 0 || cat.ext(ej, ei) != 0) {
                r.ok = false;
                r.i = seq.start + pi;
                r.j = seq.start + pj;
                r.hom_nonzero = cat.hom(ej, ei) != 0;
                return r;
            }
        }
    if (len == cat.quiver().n()) {
        QMat m(static_cast<std::size_t>(len), static_cast<std::size_t>(len));
        for (int c = 0; c < len; ++c) {
            const IntVec& d = cat.dim(seq.terms[static_cast<std::size_t>(c)]);
            for (int rrow = 0; rrow < len; ++rrow)
                m.at(static_cast<std::size_t>(rrow), static_cast<std::size_t>(c)) = Rat(d[static_cast<std::size_t>(rrow)]);
        }
        Rat det = determinant(m);
        if (det != Rat(1) && det != Rat(-1))
            throw IntegrityError("complete exceptional sequence with non-unimodular dimension matrix");
    }
    return r;
}

void require_valid(const Catalog& cat, const ExcSequence& seq) {
    ValidationResult r = validate(cat, seq);
    if (!r.ok) throw ValidationError("not an exceptional sequence: " + r.message());
}

std::uint64_t perp_a_mask(const Catalog& cat, const ExcSequence& seq, int k, std::uint64_t ctx) {
    int n = seq.last_index();
    if (k < seq.start - 1 || k > n) throw DomainError("perp_a index out of range");
    std::uint64_t mask = ctx;
    for (int j = k + 1; j <= n; ++j) mask &= cat.right_perp_mask(seq.term_at(j), mask);
    return mask;
}

std::uint64_t perp_b_mask(const Catalog& cat, const ExcSequence& seq, int k, std::uint64_t ctx) {
    if (k < seq.start || k > seq.last_index() + 1) throw DomainError("perp_b index out of range");
    std::uint64_t a_prev = perp_a_mask(cat, seq, k - 1, ctx);
    std::uint64_t mask = 0;
    for (int x = 0; x < cat.size(); ++x) {
        if (!((ctx >> x) & 1)) continue;
        bool in = true;
        for (int z = 0; z < cat.size() && in; ++z)
            if ((a_prev >> z) & 1)
                if (cat.hom(x, z) != 0 || cat.ext(x, z) != 0) in = false;
        if (in) mask |= 1ull << x;
    }
    return mask;
}

std::vector<int> mask_to_ids(const Catalog& cat, std::uint64_t mask) {
    std::vector<int> ids;
    for (int x = 0; x < cat.size(); ++x)
        if ((mask >> x) & 1) ids.push_back(x);
    return ids;
}

std::vector<TermClass> classify(const Catalog& cat, const ExcSequence& seq) {
    return classify(cat, seq, cat.all_mask());
}

std::vector<TermClass> classify(const Catalog& cat, const ExcSequence& seq, std::uint64_t ctx) {
    require_valid(cat, seq);
    int n = seq.last_index();
    std::vector<TermClass> out;
    // Running A_k masks: A_n = ctx, then intersect perps right to left.
    std::vector<std::uint64_t> a_mask(static_cast<std::size_t>(seq.terms.size()) + 1);
    a_mask.back() = ctx;
    for (int k = n - 1; k >= seq.start - 1; --k) {
        std::uint64_t prev = a_mask[static_cast<std::size_t>(k - seq.start + 2)];
        a_mask[static_cast<std::size_t>(k - seq.start + 1)] =
            prev & cat.right_perp_mask(seq.term_at(k + 1), prev);
    }
    for (int k = seq.start; k <= n; ++k) {
        int e = seq.term_at(k);
        std::uint64_t ak = a_mask[static_cast<std::size_t>(k - seq.start + 1)];
        TermClass tc;
        tc.rel_proj = cat.projective_in(e, ak);
        std::uint64_t bk = perp_b_mask(cat, seq, k, ctx);
        tc.rel_inj = cat.injective_in(e, bk);
        if (!tc.rel_proj && !tc.rel_inj)
            throw IntegrityError("term neither relatively projective nor relatively injective");
        out.push_back(tc);
    }
    // The last term is always relatively injective, and relatively projective
    // exactly when it is a projective module over the ambient context.
    if (!out.back().rel_inj) throw IntegrityError("last term not relatively injective");
    if (out.back().rel_proj != cat.projective_in(seq.terms.back(), ctx))
        throw IntegrityError("last-term relative projectivity disagrees with projectivity");
    return out;
}

namespace {

std::uint32_t side_support(const Catalog& cat, const ExcSequence& seq, int k, Side side) {
    std::uint32_t u = 0;
    for (int j = seq.start; j <= seq.last_index(); ++j) {
        if (side == Side::left && j >= k) continue;
        if (side == Side::right && j <= k) continue;
        u |= cat.support(seq.term_at(j));
    }
    return u;
}

} // namespace

bool covered_by(const Catalog& cat, const ExcSequence& seq, int k, Side side) {
    std::uint32_t s = cat.support(seq.term_at(k));
    return (s & ~side_support(cat, seq, k, side)) == 0;
}

bool covered_by(const Catalog& cat, const ExcSequence& seq, int k, const std::vector<int>& indices) {
    std::uint32_t u = 0;
    for (int j : indices) {
        if (j == k) continue;
        u |= cat.support(seq.term_at(j));
    }
    return (cat.support(seq.term_at(k)) & ~u) == 0;
}

namespace {

IntVec combine(const IntVec& a, long long ca, const IntVec& b, long long cb) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = ca * a[i] + cb * b[i];
    return r;
}

// Shared candidate selection for both mutation directions. `fixed` is the
// term that survives unchanged; candidates are tested as (result, fixed) or
// (fixed, result) exceptional pairs depending on direction.
int select_candidate(const Catalog& cat, const std::vector<IntVec>& cands, int fixed, bool fixed_is_later) {
    std::vector<int> hits;
    for (const IntVec& v : cands) {
        bool ok = true;
        for (long long x : v)
            if (x < 0) ok = false;
        if (!ok) continue;
        auto id = cat.try_id(v);
        if (!id) continue;
        bool pair_ok = fixed_is_later ? cat.right_perp(fixed, *id) : cat.right_perp(*id, fixed);
        if (pair_ok) hits.push_back(*id);
    }
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    if (hits.size() != 1)
        throw IntegrityError("braid mutation selected " + std::to_string(hits.size()) +
                             " candidates instead of one");
    return hits.front();
}

} // namespace

int mutate_right(const Catalog& cat, int x, int t) {
    if (!cat.right_perp(t, x)) throw DomainError("mutate_right requires an exceptional pair");
    long long h = cat.hom(x, t), e = cat.ext(x, t);
    std::vector<IntVec> cands;
    if (h == 0 && e == 0) cands.push_back(cat.dim(x));
    if (e > 0) cands.push_back(combine(cat.dim(x), 1, cat.dim(t), e));
    if (h > 0) {
        cands.push_back(combine(cat.dim(x), 1, cat.dim(t), -h));
        cands.push_back(combine(cat.dim(t), h, cat.dim(x), -1));
    }
    // Output pair (T, Y): Y must lie in T^perp.
    return select_candidate(cat, cands, t, false);
}

int mutate_left(const Catalog& cat, int t, int y) {
    if (!cat.right_perp(y, t)) throw DomainError("mutate_left requires an exceptional pair");
    long long h = cat.hom(t, y), e = cat.ext(t, y);
    std::vector<IntVec> cands;
    if (h == 0 && e == 0) cands.push_back(cat.dim(y));
    if (e > 0) cands.push_back(combine(cat.dim(y), 1, cat.dim(t), e));
    if (h > 0) {
        cands.push_back(combine(cat.dim(y), 1, cat.dim(t), -h));
        cands.push_back(combine(cat.dim(t), h, cat.dim(y), -1));
    }
    // Output pair (X, T): T must lie in X^perp... X left of T.
    return select_candidate(cat, cands, t, true);
}

ExcSequence braid_sigma(const Catalog& cat, const ExcSequence& seq, int k, BraidDirection dir) {
    require_valid(cat, seq);
    if (k < seq.start || k + 1 > seq.last_index())
        throw DomainError("braid move needs an adjacent pair at index " + std::to_string(k));
    std::size_t p = static_cast<std::size_t>(k - seq.start);
    ExcSequence out = seq;
    int a = seq.terms[p], b = seq.terms[p + 1];
    if (dir == BraidDirection::right) {
        out.terms[p] = b;
        out.terms[p + 1] = mutate_right(cat, a, b);
    } else {
        out.terms[p] = mutate_left(cat, a, b);
        out.terms[p + 1] = a;
    }
    ValidationResult r = validate(cat, out);
    if (!r.ok) throw IntegrityError("braid move produced an invalid sequence: " + r.message());
    return out;
}

ExcSequence delta_k(const Catalog& cat, const ExcSequence& seq, int k) {
    if (static_cast<int>(seq.terms.size()) != cat.quiver().n())
        throw DomainError("delta_k is defined on complete sequences");
    if (k < 1 || k > seq.last_index()) throw DomainError("delta_k index out of range");
    ExcSequence cur = seq;
    for (int p = k - 1; p >= 1; --p) cur = braid_sigma(cat, cur, p, BraidDirection::left);
    return cur;
}

ExcSequence garside(const Catalog& cat, const ExcSequence& seq) {
    if (static_cast<int>(seq.terms.size()) != cat.quiver().n())
        throw DomainError("garside is defined on complete sequences");
    ExcSequence cur = seq;
    for (int k = 2; k <= cat.quiver().n(); ++k) cur = delta_k(cat, cur, k);
    return cur;
}

namespace {

void backtrack(const Catalog& cat, int remaining, std::uint64_t mask, std::vector<int>& chosen,
               std::vector<ExcSequence>& out) {
    if (remaining == 0) {
        std::vector<int> terms(chosen.rbegin(), chosen.rend());
        out.push_back(make_sequence(cat, std::move(terms)));
        return;
    }
    for (int x = 0; x < cat.size(); ++x) {
        if (!((mask >> x) & 1)) continue;
        chosen.push_back(x);
        backtrack(cat, remaining - 1, mask & cat.right_perp_mask(x, mask), chosen, out);
        chosen.pop_back();
    }
}

} // namespace

std::vector<ExcSequence> enumerate_partial(const Catalog& cat, int t) {
    if (t < 1 || t > cat.quiver().n()) throw DomainError("sequence length out of range");
    std::vector<ExcSequence> out;
    std::vector<int> chosen; // built right to left: E_n first
    backtrack(cat, t, cat.all_mask(), chosen, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ExcSequence> enumerate_ces(const Catalog& cat) {
    return enumerate_partial(cat, cat.quiver().n());
}

SupportHasse support_hasse(const Catalog& cat, const ExcSequence& seq) {
    require_valid(cat, seq);
    SupportHasse h;
    int len = static_cast<int>(seq.terms.size());
    std::vector<std::uint32_t> supp(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) {
        int id = seq.terms[static_cast<std::size_t>(i)];
        h.term_ids.push_back(id);
        h.keys.push_back(cat.key(id));
        supp[static_cast<std::size_t>(i)] = cat.support(id);
    }
    auto strictly_below = [&](int a, int b) {
        return supp[static_cast<std::size_t>(a)] != supp[static_cast<std::size_t>(b)] &&
               (supp[static_cast<std::size_t>(a)] & ~supp[static_cast<std::size_t>(b)]) == 0;
    };
    for (int a = 0; a < len; ++a)
        for (int b = 0; b < len; ++b) {
            if (!strictly_below(a, b)) continue;
            bool covering = true;
            for (int c = 0; c < len && covering; ++c)
                if (strictly_below(a, c) && strictly_below(c, b)) covering = false;
            if (covering) h.edges.emplace_back(a, b);
        }
    h.maximal.assign(static_cast<std::size_t>(len), true);
    for (int a = 0; a < len; ++a)
        for (int b = 0; b < len; ++b)
            if (strictly_below(a, b)) h.maximal[static_cast<std::size_t>(a)] = false;
    return h;
}

} // namespace excseq
