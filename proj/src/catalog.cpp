#include "excseq/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "excseq/errors.hpp"

namespace excseq {

namespace {

// Admissible vertex ordering: each entry is a sink of the quiver obtained by
// reflecting at all previous entries. Exists because the quiver is acyclic.
std::vector<int> admissible_sink_order(const Quiver& q) {
    int n = q.n();
    std::vector<int> order;
    std::vector<bool> used(n + 1, false);
    std::vector<int> outdeg(n + 1, 0);
    for (auto [s, t] : q.arrows()) ++outdeg[s];
    for (int step = 0; step < n; ++step) {
        int pick = 0;
        for (int v = 1; v <= n; ++v)
            if (!used[v] && outdeg[v] == 0) {
                pick = v;
                break;
            }
        if (pick == 0) throw IntegrityError("no sink found in acyclic quiver");
        used[pick] = true;
        order.push_back(pick);
        for (auto [s, t] : q.arrows())
            if (t == pick && !used[s]) --outdeg[s];
    }
    return order;
}

// #directed paths from -> to (including the trivial path), for dim P / dim I.
long long path_count(const Quiver& q, int from, int to) {
    if (from == to) return 1;
    long long c = 0;
    for (auto [s, t] : q.arrows())
        if (s == from) c += path_count(q, t, to);
    return c;
}

bool all_nonneg_some_pos(const IntVec& v) {
    bool pos = false;
    for (long long x : v) {
        if (x < 0) return false;
        if (x > 0) pos = true;
    }
    return pos;
}

} // namespace

Catalog Catalog::build(const Quiver& q) {
    if (!q.is_dynkin()) throw NotFiniteTypeError("catalog requires a Dynkin quiver");
    Catalog cat(q);
    const int n = q.n();
    std::vector<IntVec> roots = positive_roots(q);
    if (roots.size() > 64) throw ScaleError("catalog larger than 64 modules is unsupported");

    // Symmetrized Cartan for simple reflections (orientation independent).
    std::vector<IntVec> cartan(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) cartan[i][i] = 2;
    for (auto [s, t] : q.arrows()) {
        cartan[s - 1][t - 1] -= 1;
        cartan[t - 1][s - 1] -= 1;
    }
    auto reflect_vec = [&](const IntVec& x, int v) {
        long long pairing = 0;
        for (int j = 0; j < n; ++j) pairing += cartan[v - 1][j] * x[j];
        IntVec y = x;
        y[v - 1] -= pairing;
        return y;
    };

    std::vector<int> order = admissible_sink_order(q);

    // Build one representation per root by reflecting down to a simple and
    // unwinding with C^- functors.
    for (const IntVec& root : roots) {
        IntVec d = root;
        Quiver cur = q;
        std::vector<std::pair<Quiver, int>> unwind; // (quiver the C^- result lives over, vertex)
        int steps = 0;
        int stop_vertex = 0;
        while (true) {
            int v = order[static_cast<std::size_t>(steps % n)];
            IntVec ev(n, 0);
            ev[v - 1] = 1;
            if (d == ev) {
                stop_vertex = v;
                break;
            }
            IntVec d2 = reflect_vec(d, v);
            if (!all_nonneg_some_pos(d2))
                throw IntegrityError("reflection left the positive cone before reaching a simple root");
            unwind.emplace_back(cur, v);
            cur = reflect_quiver(cur, v);
            d = d2;
            if (++steps > 64 * n) throw IntegrityError("reflection sequence did not terminate");
        }
        Rep rep = simple_rep(cur, stop_vertex);
        for (auto it = unwind.rbegin(); it != unwind.rend(); ++it) {
            Quiver reflected = reflect_quiver(it->first, it->second);
            rep = reflect_minus(reflected, rep, it->second);
        }
        if (rep.dims != root) throw IntegrityError("BGP construction produced wrong dimension vector");
        cat.reps_.push_back(std::move(rep));
        cat.id_by_dim_[root] = static_cast<int>(cat.reps_.size()) - 1;
    }

    const int count = cat.size();

    // Exact Hom table; Ext from the hereditary Euler characteristic.
    cat.hom_.assign(static_cast<std::size_t>(count), std::vector<long long>(static_cast<std::size_t>(count), 0));
    cat.ext_ = cat.hom_;
    for (int a = 0; a < count; ++a)
        for (int b = 0; b < count; ++b) {
            long long h = hom_dim(q, cat.reps_[static_cast<std::size_t>(a)], cat.reps_[static_cast<std::size_t>(b)]);
            long long e = h - euler_form(q, cat.dim(a), cat.dim(b));
            if (e < 0) throw IntegrityError("negative Ext dimension");
            cat.hom_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = h;
            cat.ext_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = e;
        }
    for (int a = 0; a < count; ++a) {
        if (cat.hom(a, a) != 1) throw IntegrityError("catalog entry is not a brick");
        if (cat.ext(a, a) != 0) throw IntegrityError("catalog entry is not rigid");
    }

    // Supports, simple tops, distinguished modules.
    cat.support_.resize(static_cast<std::size_t>(count));
    cat.top_vertex_.assign(static_cast<std::size_t>(count), 0);
    for (int a = 0; a < count; ++a) {
        std::uint32_t s = 0;
        for (int v = 1; v <= n; ++v)
            if (cat.dim(a)[static_cast<std::size_t>(v - 1)] > 0) s |= 1u << (v - 1);
        cat.support_[static_cast<std::size_t>(a)] = s;
        IntVec top = top_vector(q, cat.reps_[static_cast<std::size_t>(a)]);
        int tv = 0;
        bool is_simple_top = true;
        for (int v = 1; v <= n; ++v) {
            long long c = top[static_cast<std::size_t>(v - 1)];
            if (c == 1 && tv == 0)
                tv = v;
            else if (c != 0)
                is_simple_top = false;
        }
        cat.top_vertex_[static_cast<std::size_t>(a)] = is_simple_top && tv != 0 ? tv : 0;
    }

    cat.proj_vertex_.assign(static_cast<std::size_t>(count), 0);
    cat.inj_vertex_.assign(static_cast<std::size_t>(count), 0);
    cat.simple_vertex_.assign(static_cast<std::size_t>(count), 0);
    cat.proj_of_.assign(static_cast<std::size_t>(n), -1);
    cat.inj_of_.assign(static_cast<std::size_t>(n), -1);
    cat.simple_of_.assign(static_cast<std::size_t>(n), -1);
    for (int v = 1; v <= n; ++v) {
        IntVec dp(n, 0), di(n, 0), ds(n, 0);
        for (int w = 1; w <= n; ++w) {
            dp[w - 1] = path_count(q, v, w);
            di[w - 1] = path_count(q, w, v);
        }
        ds[v - 1] = 1;
        int pid = cat.id_of(dp), iid = cat.id_of(di), sid = cat.id_of(ds);
        cat.proj_vertex_[static_cast<std::size_t>(pid)] = v;
        cat.inj_vertex_[static_cast<std::size_t>(iid)] = v;
        cat.simple_vertex_[static_cast<std::size_t>(sid)] = v;
        cat.proj_of_[static_cast<std::size_t>(v - 1)] = pid;
        cat.inj_of_[static_cast<std::size_t>(v - 1)] = iid;
        cat.simple_of_[static_cast<std::size_t>(v - 1)] = sid;
    }

    // AR quiver strip: tau^{-1}-orbits from each projective, at dimension
    // level via the inverse Coxeter transform.
    QMat phi_inv = coxeter_matrix_inverse(q);
    cat.slice_.assign(static_cast<std::size_t>(count), {0, 0});
    int placed = 0;
    for (int v = 1; v <= n; ++v) {
        IntVec x = cat.dim(cat.projective_of(v));
        int t = 0;
        while (true) {
            int id = cat.id_of(x);
            cat.slice_[static_cast<std::size_t>(id)] = {v, t};
            cat.slice_id_[{v, t}] = id;
            ++placed;
            if (cat.injective(id)) break;
            IntVec next = mat_apply_int(phi_inv, x);
            if (!all_nonneg_some_pos(next))
                throw IntegrityError("tau-inverse orbit left the positive cone before an injective");
            x = next;
            ++t;
        }
    }
    if (placed != count) throw IntegrityError("AR strip does not cover the catalog exactly once");

    // AR duality spot checks, once per catalog.
    for (int a = 0; a < count; ++a) {
        auto tr = cat.ar_translate(a);
        if (!tr) continue;
        if (cat.hom(a, *tr) != 0 || cat.ext(a, *tr) != 1)
            throw IntegrityError("hom/ext against the AR translate violates AR duality");
    }
    return cat;
}

std::string Catalog::key(int id) const {
    const IntVec& d = dim(id);
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(d[i]);
    }
    return s;
}

int Catalog::id_of(const IntVec& dim_vec) const {
    auto it = id_by_dim_.find(dim_vec);
    if (it == id_by_dim_.end()) throw CatalogError("no catalog module with the given dimension vector");
    return it->second;
}

std::optional<int> Catalog::try_id(const IntVec& dim_vec) const {
    auto it = id_by_dim_.find(dim_vec);
    if (it == id_by_dim_.end()) return std::nullopt;
    return it->second;
}

IntVec Catalog::parse_key(const std::string& key_str) {
    IntVec d;
    std::stringstream ss(key_str);
    std::string tok;
    while (std::getline(ss, tok, '.')) {
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(c) || c == '-'; }))
            throw CatalogError("malformed module key '" + key_str + "'");
        d.push_back(std::stoll(tok));
    }
    if (d.empty()) throw CatalogError("malformed module key '" + key_str + "'");
    return d;
}

int Catalog::id_of_key(const std::string& key_str) const {
    IntVec d = parse_key(key_str);
    if (static_cast<int>(d.size()) != quiver_.n())
        throw CatalogError("module key '" + key_str + "' has wrong length");
    auto it = id_by_dim_.find(d);
    if (it == id_by_dim_.end()) throw CatalogError("unknown module key '" + key_str + "'");
    return it->second;
}

std::optional<int> Catalog::ar_translate(int id) const {
    if (projective(id)) return std::nullopt;
    auto [v, t] = slice_[static_cast<std::size_t>(id)];
    return slice_id_.at({v, t - 1});
}

std::optional<int> Catalog::ar_translate_inverse(int id) const {
    if (injective(id)) return std::nullopt;
    auto [v, t] = slice_[static_cast<std::size_t>(id)];
    return slice_id_.at({v, t + 1});
}

std::vector<int> Catalog::ar_middle(int id) const {
    if (projective(id)) throw DomainError("ar_middle: module is projective");
    auto [v, t] = slice_[static_cast<std::size_t>(id)];
    std::vector<int> middle;
    for (auto [s, w] : quiver_.arrows()) {
        if (s == v) { // same-slice predecessor (t, w)
            auto it = slice_id_.find({w, t});
            if (it != slice_id_.end()) middle.push_back(it->second);
        }
        if (w == v) { // previous-slice predecessor (t-1, s)
            auto it = slice_id_.find({s, t - 1});
            if (it != slice_id_.end()) middle.push_back(it->second);
        }
    }
    // Mesh additivity pins the knit: dim B = dim C + dim tau C.
    IntVec sum(static_cast<std::size_t>(quiver_.n()), 0);
    for (int m : middle)
        for (int i = 0; i < quiver_.n(); ++i) sum[static_cast<std::size_t>(i)] += dim(m)[static_cast<std::size_t>(i)];
    IntVec expect = dim(id);
    int tau = *ar_translate(id);
    for (int i = 0; i < quiver_.n(); ++i) expect[static_cast<std::size_t>(i)] += dim(tau)[static_cast<std::size_t>(i)];
    if (sum != expect) throw IntegrityError("mesh additivity failed while knitting");
    std::sort(middle.begin(), middle.end());
    return middle;
}

std::uint64_t Catalog::all_mask() const {
    return size() == 64 ? ~0ull : (1ull << size()) - 1;
}

std::uint64_t Catalog::right_perp_mask(int id, std::uint64_t within) const {
    std::uint64_t m = 0;
    for (int b = 0; b < size(); ++b)
        if ((within >> b) & 1)
            if (hom(id, b) == 0 && ext(id, b) == 0) m |= 1ull << b;
    return m;
}

std::uint64_t Catalog::left_perp_mask(int id, std::uint64_t within) const {
    std::uint64_t m = 0;
    for (int b = 0; b < size(); ++b)
        if ((within >> b) & 1)
            if (hom(b, id) == 0 && ext(b, id) == 0) m |= 1ull << b;
    return m;
}

bool Catalog::projective_in(int id, std::uint64_t mask) const {
    for (int b = 0; b < size(); ++b)
        if ((mask >> b) & 1)
            if (ext(id, b) != 0) return false;
    return true;
}

bool Catalog::injective_in(int id, std::uint64_t mask) const {
    for (int b = 0; b < size(); ++b)
        if ((mask >> b) & 1)
            if (ext(b, id) != 0) return false;
    return true;
}

} // namespace excseq
