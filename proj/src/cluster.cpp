#include "excseq/cluster.hpp"

#include <algorithm>
#include <optional>

#include "excseq/errors.hpp"

namespace excseq {

IntVec signed_dim(const Catalog& cat, const LeveledObject& obj) {
    IntVec d = cat.dim(obj.module);
    if (obj.level % 2 != 0)
        for (long long& x : d) x = -x;
    return d;
}

bool compatible(const Catalog& cat, const LeveledObject& a, const LeveledObject& b, int) {
    if (a == b) return true; // rigidity
    if (a.level < b.level) return cat.right_perp(b.module, a.module);
    if (a.level > b.level) return cat.right_perp(a.module, b.module);
    return cat.ext(a.module, b.module) == 0 && cat.ext(b.module, a.module) == 0;
}

std::vector<LeveledObject> fundamental_domain(const Catalog& cat, std::uint64_t ctx, int m) {
    if (m < 1) throw DomainError("m must be at least 1");
    std::vector<LeveledObject> objs;
    for (int id = 0; id < cat.size(); ++id) {
        if (!((ctx >> id) & 1)) continue;
        for (int j = 0; j < m; ++j) objs.push_back({id, j});
        if (cat.projective_in(id, ctx)) objs.push_back({id, m});
    }
    return objs;
}

bool domain_object_ok(const Catalog& cat, std::uint64_t ctx, const LeveledObject& obj, int m) {
    if (obj.module < 0 || obj.module >= cat.size()) return false;
    if (!((ctx >> obj.module) & 1)) return false;
    if (obj.level < 0 || obj.level > m) return false;
    if (obj.level == m && !cat.projective_in(obj.module, ctx)) return false;
    return true;
}

void require_tuple(const Catalog& cat, const CompatibleTuple& tuple) {
    if (tuple.entries.empty()) throw DomainError("empty tuple");
    if (tuple.entries.size() > static_cast<std::size_t>(cat.quiver().n()))
        throw DomainError("tuple longer than the quiver rank");
    std::uint64_t ctx = cat.all_mask();
    for (const LeveledObject& e : tuple.entries)
        if (!domain_object_ok(cat, ctx, e, tuple.m))
            throw DomainError("tuple entry outside the m-cluster fundamental domain");
    for (std::size_t i = 0; i < tuple.entries.size(); ++i)
        for (std::size_t j = i + 1; j < tuple.entries.size(); ++j) {
            if (tuple.entries[i] == tuple.entries[j]) throw DomainError("repeated tuple entry");
            if (!compatible(cat, tuple.entries[i], tuple.entries[j], tuple.m))
                throw DomainError("tuple entries are not pairwise compatible");
        }
}

void require_m_exc(const Catalog& cat, const MExcSequence& mseq) {
    if (mseq.levels.size() != mseq.seq.terms.size())
        throw ValidationError("level list does not match sequence length");
    require_valid(cat, mseq.seq);
    for (int lv : mseq.levels)
        if (lv < 0 || lv > mseq.m) throw ValidationError("term level outside 0..m");
    std::vector<TermClass> cls = classify(cat, mseq.seq);
    for (std::size_t i = 0; i < mseq.levels.size(); ++i)
        if (mseq.levels[i] == mseq.m && !cls[i].rel_proj)
            throw ValidationError("level-m term is not relatively projective");
}

namespace {

// Is v an integer multiple of d (d nonzero)?
bool integer_multiple(const IntVec& v, const IntVec& d) {
    std::size_t p = 0;
    while (p < d.size() && d[p] == 0) ++p;
    if (p == d.size()) throw IntegrityError("zero dimension vector");
    if (v[p] % d[p] != 0) return false;
    long long c = v[p] / d[p];
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != c * d[i]) return false;
    return true;
}

IntVec diff(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

int pick_level(const Catalog& cat, const LeveledObject& from, int to_module,
               std::initializer_list<int> choices, const IntVec& t_dim) {
    std::optional<int> found;
    for (int j : choices) {
        LeveledObject cand{to_module, j};
        // Sign bookkeeping only; levels outside 0..m are rejected later.
        IntVec v = diff(signed_dim(cat, from), signed_dim(cat, cand));
        if (integer_multiple(v, t_dim)) {
            if (found) throw IntegrityError("both level choices satisfy the multiple condition");
            found = j;
        }
    }
    if (!found) throw IntegrityError("no level choice satisfies the multiple condition");
    return *found;
}

} // namespace

LeveledObject key_sigma(const Catalog& cat, std::uint64_t ctx, const LeveledObject& t_obj,
                        const LeveledObject& x_obj, int m, SigmaDirection dir) {
    if (!domain_object_ok(cat, ctx, t_obj, m))
        throw DomainError("key_sigma: T outside the fundamental domain");
    std::uint64_t ctxp = cat.right_perp_mask(t_obj.module, ctx);
    const IntVec& t_dim = cat.dim(t_obj.module);

    if (dir == SigmaDirection::forward) {
        if (!domain_object_ok(cat, ctxp, x_obj, m))
            throw DomainError("key_sigma forward: X outside the fundamental domain of T-perp");
        if (compatible(cat, x_obj, t_obj, m)) return x_obj;
        int y = mutate_right(cat, x_obj.module, t_obj.module);
        int j = pick_level(cat, x_obj, y, {x_obj.level, x_obj.level - 1}, t_dim);
        LeveledObject out{y, j};
        if (!domain_object_ok(cat, ctx, out, m))
            throw IntegrityError("key_sigma forward left the fundamental domain");
        if (!compatible(cat, out, t_obj, m))
            throw IntegrityError("key_sigma forward image not compatible with T");
        return out;
    }

    if (!domain_object_ok(cat, ctx, x_obj, m))
        throw DomainError("key_sigma inverse: object outside the fundamental domain");
    if (!compatible(cat, x_obj, t_obj, m))
        throw DomainError("key_sigma inverse: object not compatible with T");
    if (cat.right_perp(t_obj.module, x_obj.module)) return x_obj;
    int x = mutate_left(cat, t_obj.module, x_obj.module);
    int i = pick_level(cat, x_obj, x, {x_obj.level, x_obj.level + 1}, t_dim);
    // pick_level measured signed(x_obj) - signed(candidate); the lemma wants
    // signed(X) - signed(Y), which only flips the sign of the multiple.
    LeveledObject out{x, i};
    if (!domain_object_ok(cat, ctxp, out, m))
        throw IntegrityError("key_sigma inverse left the fundamental domain of T-perp");
    return out;
}

namespace {

std::vector<LeveledObject> theta_raw(const Catalog& cat, std::uint64_t ctx, int m,
                                     const std::vector<LeveledObject>& entries);
std::vector<LeveledObject> theta_inv_raw(const Catalog& cat, std::uint64_t ctx, int m,
                                         const std::vector<LeveledObject>& eseq);

std::vector<LeveledObject> theta_raw(const Catalog& cat, std::uint64_t ctx, int m,
                                     const std::vector<LeveledObject>& entries) {
    if (entries.size() <= 1) return entries;
    LeveledObject t_obj = entries.back();
    std::uint64_t ctxp = cat.right_perp_mask(t_obj.module, ctx);
    std::vector<LeveledObject> rest;
    for (std::size_t i = 0; i + 1 < entries.size(); ++i)
        rest.push_back(key_sigma(cat, ctx, t_obj, entries[i], m, SigmaDirection::inverse));
    // Key Lemma: compatibility is preserved into E^m(T^perp).
    for (std::size_t i = 0; i < rest.size(); ++i)
        for (std::size_t j = i + 1; j < rest.size(); ++j)
            if (!compatible(cat, rest[i], rest[j], m))
                throw IntegrityError("sigma inverse broke pairwise compatibility");
    std::vector<LeveledObject> sub = theta_raw(cat, ctxp, m, rest);
    sub.push_back(t_obj);
    return sub;
}

std::vector<LeveledObject> theta_inv_raw(const Catalog& cat, std::uint64_t ctx, int m,
                                         const std::vector<LeveledObject>& eseq) {
    if (eseq.size() <= 1) return eseq;
    LeveledObject t_obj = eseq.back();
    std::uint64_t ctxp = cat.right_perp_mask(t_obj.module, ctx);
    std::vector<LeveledObject> sub(eseq.begin(), eseq.end() - 1);
    std::vector<LeveledObject> rest = theta_inv_raw(cat, ctxp, m, sub);
    std::vector<LeveledObject> mapped;
    for (const LeveledObject& r : rest)
        mapped.push_back(key_sigma(cat, ctx, t_obj, r, m, SigmaDirection::forward));
    for (std::size_t i = 0; i < mapped.size(); ++i)
        for (std::size_t j = i + 1; j < mapped.size(); ++j)
            if (!compatible(cat, mapped[i], mapped[j], m))
                throw IntegrityError("sigma forward broke pairwise compatibility");
    mapped.push_back(t_obj);
    return mapped;
}

// Is target an integer linear combination of the given vectors?
bool in_integer_span(const std::vector<IntVec>& vecs, const IntVec& target) {
    bool target_zero = std::all_of(target.begin(), target.end(), [](long long x) { return x == 0; });
    if (vecs.empty()) return target_zero;
    QMat a(target.size(), vecs.size());
    for (std::size_t c = 0; c < vecs.size(); ++c)
        for (std::size_t r = 0; r < target.size(); ++r) a.at(r, c) = Rat(vecs[c][r]);
    std::vector<Rat> b(target.size());
    for (std::size_t r = 0; r < target.size(); ++r) b[r] = Rat(target[r]);
    auto sol = solve(a, b);
    if (!sol) return false;
    for (const Rat& x : *sol)
        if (!x.is_integer()) return false;
    // With free variables zeroed the solve may be partial; confirm exactly.
    std::vector<Rat> check = a.apply(*sol);
    return check == b;
}

void assert_theta_conditions(const Catalog& cat, const CompatibleTuple& tuple, const MExcSequence& mseq) {
    std::size_t t = tuple.entries.size();
    std::vector<TermClass> cls = classify(cat, mseq.seq);
    for (std::size_t i = 0; i < t; ++i) {
        LeveledObject ti = tuple.entries[i];
        LeveledObject ei{mseq.seq.terms[i], mseq.levels[i]};
        // (1) signed dim T_i - signed dim E_i lies in the integer span of the
        // later T_j and of the later E_j.
        IntVec delta = diff(signed_dim(cat, ti), signed_dim(cat, ei));
        std::vector<IntVec> later_t, later_e;
        for (std::size_t j = i + 1; j < t; ++j) {
            later_t.push_back(signed_dim(cat, tuple.entries[j]));
            later_e.push_back(signed_dim(cat, LeveledObject{mseq.seq.terms[j], mseq.levels[j]}));
        }
        if (!in_integer_span(later_t, delta) || !in_integer_span(later_e, delta))
            throw IntegrityError("theta linear condition violated");
        // (2) level(T_i) is level(E_i) or one less.
        if (ti.level != ei.level && ti.level != ei.level - 1)
            throw IntegrityError("theta level condition violated");
        // (a) projective T_i forces a relatively projective E_i at the same level.
        if (cat.projective(ti.module) && (!cls[i].rel_proj || ti.level != ei.level))
            throw IntegrityError("projective cluster object without matching relatively projective term");
        // (b) both-relative terms keep their level.
        if (cls[i].root() && ti.level != ei.level)
            throw IntegrityError("rPI term changed level");
        // (c) level mismatch forces a non-injective relatively projective term
        // one level above T_i.
        if (ti.level != ei.level) {
            if (!cls[i].rel_proj || cls[i].rel_inj || ei.level != ti.level + 1 || cat.projective(ti.module))
                throw IntegrityError("level mismatch without the forced projectivity pattern");
        }
    }
    if (tuple.entries.back() != LeveledObject{mseq.seq.terms.back(), mseq.levels.back()})
        throw IntegrityError("last tuple object must equal the last sequence term");
}

} // namespace

MExcSequence theta(const Catalog& cat, const CompatibleTuple& tuple) {
    require_tuple(cat, tuple);
    std::vector<LeveledObject> seq_objs = theta_raw(cat, cat.all_mask(), tuple.m, tuple.entries);
    MExcSequence out;
    out.m = tuple.m;
    std::vector<int> ids;
    for (const LeveledObject& o : seq_objs) {
        ids.push_back(o.module);
        out.levels.push_back(o.level);
    }
    out.seq = make_sequence(cat, ids);
    try {
        require_m_exc(cat, out);
    } catch (const Error& e) {
        throw IntegrityError(std::string("theta produced an invalid m-exceptional sequence: ") + e.what());
    }
    assert_theta_conditions(cat, tuple, out);
    if (theta_inv_raw(cat, cat.all_mask(), tuple.m, seq_objs) != tuple.entries)
        throw IntegrityError("theta round trip failed");
    return out;
}

CompatibleTuple theta_inverse(const Catalog& cat, const MExcSequence& mseq) {
    require_m_exc(cat, mseq);
    std::vector<LeveledObject> seq_objs;
    for (std::size_t i = 0; i < mseq.seq.terms.size(); ++i)
        seq_objs.push_back({mseq.seq.terms[i], mseq.levels[i]});
    CompatibleTuple out;
    out.m = mseq.m;
    out.entries = theta_inv_raw(cat, cat.all_mask(), mseq.m, seq_objs);
    try {
        require_tuple(cat, out);
    } catch (const Error& e) {
        throw IntegrityError(std::string("theta_inverse produced an invalid tuple: ") + e.what());
    }
    assert_theta_conditions(cat, out, mseq);
    if (theta_raw(cat, cat.all_mask(), mseq.m, out.entries) != seq_objs)
        throw IntegrityError("theta_inverse round trip failed");
    return out;
}

bool is_projectively_signed(const Catalog& cat, const MExcSequence& mseq) {
    require_m_exc(cat, mseq);
    std::vector<TermClass> cls = classify(cat, mseq.seq);
    for (std::size_t i = 0; i < mseq.levels.size(); ++i)
        if (mseq.levels[i] == mseq.m && cls[i].rel_inj) return false;
    return true;
}

bool is_positive(const CompatibleTuple& tuple) {
    for (const LeveledObject& e : tuple.entries)
        if (e.level >= tuple.m) return false;
    return true;
}

namespace {

void tuple_backtrack(const Catalog& cat, const std::vector<LeveledObject>& domain, int m, int t,
                     std::vector<LeveledObject>& cur, std::vector<CompatibleTuple>& out) {
    if (static_cast<int>(cur.size()) == t) {
        out.push_back({m, cur});
        return;
    }
    for (const LeveledObject& cand : domain) {
        bool ok = true;
        for (const LeveledObject& prev : cur) {
            if (prev == cand || !compatible(cat, prev, cand, m)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        cur.push_back(cand);
        tuple_backtrack(cat, domain, m, t, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<CompatibleTuple> enumerate_tuples(const Catalog& cat, int m, int t) {
    if (t < 1 || t > cat.quiver().n()) throw DomainError("tuple length out of range");
    std::vector<LeveledObject> domain = fundamental_domain(cat, cat.all_mask(), m);
    std::vector<CompatibleTuple> out;
    std::vector<LeveledObject> cur;
    tuple_backtrack(cat, domain, m, t, cur, out);
    return out;
}

std::vector<MExcSequence> enumerate_m_exc(const Catalog& cat, int m, int t) {
    std::vector<MExcSequence> out;
    for (const ExcSequence& seq : enumerate_partial(cat, t)) {
        std::vector<TermClass> cls = classify(cat, seq);
        std::vector<int> levels(seq.terms.size(), 0);
        while (true) {
            out.push_back({m, seq, levels});
            // Odometer over admissible levels: 0..m-1 always, m when rel proj.
            std::size_t p = 0;
            for (; p < levels.size(); ++p) {
                int cap = cls[p].rel_proj ? m : m - 1;
                if (levels[p] < cap) {
                    ++levels[p];
                    for (std::size_t q = 0; q < p; ++q) levels[q] = 0;
                    break;
                }
            }
            if (p == levels.size()) break;
        }
    }
    return out;
}

std::vector<std::vector<LeveledObject>> enumerate_clusters(const Catalog& cat, int m) {
    std::vector<LeveledObject> domain = fundamental_domain(cat, cat.all_mask(), m);
    int n = cat.quiver().n();
    std::vector<std::vector<LeveledObject>> out;
    std::vector<std::size_t> idx;
    // DFS over increasing domain indices keeps each subset canonical.
    std::vector<std::size_t> stack;
    auto extend = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<int>(stack.size()) == n) {
            std::vector<LeveledObject> c;
            for (std::size_t s : stack) c.push_back(domain[s]);
            out.push_back(std::move(c));
            return;
        }
        for (std::size_t i = from; i < domain.size(); ++i) {
            bool ok = true;
            for (std::size_t s : stack)
                if (!compatible(cat, domain[s], domain[i], m)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            stack.push_back(i);
            self(self, i + 1);
            stack.pop_back();
        }
    };
    extend(extend, 0);
    return out;
}

} // namespace excseq
