#include "excseq/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <sstream>

#include "excseq/errors.hpp"

namespace excseq {

namespace {

bool is_acyclic(int n, const std::vector<std::pair<int, int>>& arrows) {
    std::vector<int> indeg(n + 1, 0);
    std::vector<std::vector<int>> out(n + 1);
    for (auto [s, t] : arrows) {
        out[s].push_back(t);
        ++indeg[t];
    }
    std::queue<int> q;
    for (int v = 1; v <= n; ++v)
        if (indeg[v] == 0) q.push(v);
    int seen = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        ++seen;
        for (int w : out[v])
            if (--indeg[w] == 0) q.push(w);
    }
    return seen == n;
}

bool is_connected(int n, const std::vector<std::pair<int, int>>& arrows) {
    if (n <= 1) return true;
    std::vector<std::vector<int>> adj(n + 1);
    for (auto [s, t] : arrows) {
        adj[s].push_back(t);
        adj[t].push_back(s);
    }
    std::vector<bool> vis(n + 1, false);
    std::queue<int> q;
    q.push(1);
    vis[1] = true;
    int seen = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (!vis[w]) {
                vis[w] = true;
                ++seen;
                q.push(w);
            }
    }
    return seen == n;
}

// Sylvester criterion on the symmetrized form E + E^T.
bool positive_definite_symmetrization(const QMat& euler) {
    std::size_t n = euler.rows();
    QMat sym(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sym.at(i, j) = euler.at(i, j) + euler.at(j, i);
    for (std::size_t k = 1; k <= n; ++k) {
        QMat minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor.at(i, j) = sym.at(i, j);
        Rat d = determinant(minor);
        if (!(Rat(0) < d)) return false;
    }
    return true;
}

} // namespace

Quiver::Quiver(int n, std::vector<std::pair<int, int>> arrows, std::string label)
    : n_(n), arrows_(std::move(arrows)), label_(std::move(label)), euler_(0, 0) {
    if (n_ < 1) throw IndexError("quiver needs at least one vertex");
    for (auto [s, t] : arrows_) {
        if (s < 1 || s > n_ || t < 1 || t > n_)
            throw IndexError("arrow endpoint " + std::to_string(s < 1 || s > n_ ? s : t) +
                             " outside 1.." + std::to_string(n_));
        if (s == t) throw CycleError("loop at vertex " + std::to_string(s));
    }
    if (!is_acyclic(n_, arrows_)) throw CycleError("quiver has an oriented cycle");

    euler_ = QMat::identity(static_cast<std::size_t>(n_));
    for (auto [s, t] : arrows_) euler_.at(s - 1, t - 1) -= Rat(1);
    dynkin_ = is_connected(n_, arrows_) && positive_definite_symmetrization(euler_);
}

int Quiver::arrow_count(int from, int to) const {
    int c = 0;
    for (auto [s, t] : arrows_)
        if (s == from && t == to) ++c;
    return c;
}

std::vector<int> Quiver::sinks() const {
    std::vector<bool> has_out(n_ + 1, false);
    for (auto [s, t] : arrows_) has_out[s] = true;
    std::vector<int> r;
    for (int v = 1; v <= n_; ++v)
        if (!has_out[v]) r.push_back(v);
    return r;
}

std::vector<int> Quiver::sources() const {
    std::vector<bool> has_in(n_ + 1, false);
    for (auto [s, t] : arrows_) has_in[t] = true;
    std::vector<int> r;
    for (int v = 1; v <= n_; ++v)
        if (!has_in[v]) r.push_back(v);
    return r;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

int parse_vertex(const std::string& tok) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(c); }))
        throw ValidationError("expected vertex index, got '" + tok + "'");
    int v = std::stoi(tok);
    if (v < 1) throw IndexError("vertex indices are 1-based, got " + tok);
    return v;
}

// Chain notation "1>2<3": vertices joined by orientation marks.
std::vector<std::pair<int, int>> parse_chain(const std::string& spec, std::vector<int>& verts) {
    std::vector<std::pair<int, int>> arrows;
    std::size_t i = 0;
    std::string num;
    int prev = -1;
    char pending = 0;
    auto flush = [&]() {
        if (num.empty()) throw ValidationError("malformed chain '" + spec + "'");
        int v = parse_vertex(num);
        num.clear();
        verts.push_back(v);
        if (prev != -1) {
            if (pending == '>')
                arrows.emplace_back(prev, v);
            else
                arrows.emplace_back(v, prev);
        }
        prev = v;
    };
    for (; i < spec.size(); ++i) {
        char c = spec[i];
        if (std::isdigit(c)) {
            num += c;
        } else if (c == '>' || c == '<') {
            flush();
            pending = c;
        } else {
            throw ValidationError("unexpected character '" + std::string(1, c) + "' in chain");
        }
    }
    flush();
    return arrows;
}

std::vector<std::pair<int, int>> parse_arrow_list(const std::string& spec, std::vector<int>& verts) {
    std::vector<std::pair<int, int>> arrows;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        std::size_t gt = tok.find('>');
        std::size_t lt = tok.find('<');
        if (gt != std::string::npos && lt == std::string::npos) {
            int a = parse_vertex(trim(tok.substr(0, gt)));
            int b = parse_vertex(trim(tok.substr(gt + 1)));
            arrows.emplace_back(a, b);
            verts.push_back(a);
            verts.push_back(b);
        } else if (lt != std::string::npos && gt == std::string::npos) {
            int a = parse_vertex(trim(tok.substr(0, lt)));
            int b = parse_vertex(trim(tok.substr(lt + 1)));
            arrows.emplace_back(b, a);
            verts.push_back(a);
            verts.push_back(b);
        } else {
            throw ValidationError("expected 'i>j' or 'i<j', got '" + tok + "'");
        }
    }
    if (arrows.empty()) throw ValidationError("empty arrow list");
    return arrows;
}

void check_dense(const std::vector<int>& verts, int n) {
    std::vector<bool> seen(n + 1, false);
    for (int v : verts) {
        if (v > n) throw IndexError("vertex " + std::to_string(v) + " exceeds rank " + std::to_string(n));
        seen[v] = true;
    }
    for (int v = 1; v <= n; ++v)
        if (!seen[v]) throw IndexError("vertex " + std::to_string(v) + " never mentioned");
}

} // namespace

Quiver parse_quiver(const std::string& text) {
    std::string s = trim(text);
    if (s.empty()) throw ValidationError("empty quiver description");

    // Typed preset: letter + rank, optional ':' spec.
    if (std::isalpha(s[0])) {
        char type = static_cast<char>(std::toupper(s[0]));
        std::size_t colon = s.find(':');
        std::string head = colon == std::string::npos ? s : s.substr(0, colon);
        std::string spec = colon == std::string::npos ? "" : s.substr(colon + 1);
        std::string rank_str = head.substr(1);
        if (rank_str.empty() ||
            !std::all_of(rank_str.begin(), rank_str.end(), [](char c) { return std::isdigit(c); }))
            throw ValidationError("malformed quiver type '" + head + "'");
        int n = std::stoi(rank_str);

        if (type == 'A') {
            std::vector<std::pair<int, int>> arrows;
            std::vector<int> verts;
            if (spec.empty()) {
                for (int v = 1; v < n; ++v) arrows.emplace_back(v, v + 1); // linear default
            } else {
                arrows = parse_chain(spec, verts);
                if (static_cast<int>(verts.size()) != n)
                    throw ValidationError("chain lists " + std::to_string(verts.size()) +
                                          " vertices for rank " + std::to_string(n));
                std::vector<int> sorted = verts;
                std::sort(sorted.begin(), sorted.end());
                for (int v = 1; v <= n; ++v)
                    if (sorted[v - 1] != v) throw IndexError("chain vertices must be exactly 1.." + rank_str);
            }
            return Quiver(n, std::move(arrows), s);
        }
        if (type == 'D' && n == 4) {
            // Center vertex 2, outer vertices 1, 3, 4.
            std::vector<std::pair<int, int>> arrows;
            if (spec == "sym-source") {
                arrows = {{2, 1}, {2, 3}, {2, 4}};
            } else if (spec == "sym-sink") {
                arrows = {{1, 2}, {3, 2}, {4, 2}};
            } else {
                throw ValidationError("D4 presets are 'sym-source' and 'sym-sink'; got '" + spec + "'");
            }
            return Quiver(4, std::move(arrows), s);
        }
        throw ValidationError("unknown preset '" + head + "'; use An[:chain], D4:sym-source/sym-sink, "
                              "or an explicit arrow list");
    }

    std::vector<int> verts;
    std::vector<std::pair<int, int>> arrows = parse_arrow_list(s, verts);
    int n = *std::max_element(verts.begin(), verts.end());
    check_dense(verts, n);
    return Quiver(n, std::move(arrows), s);
}

long long euler_form(const Quiver& q, const IntVec& x, const IntVec& y) {
    if (static_cast<int>(x.size()) != q.n() || static_cast<int>(y.size()) != q.n())
        throw DimensionError("euler_form vector length mismatch");
    long long r = 0;
    for (int i = 0; i < q.n(); ++i) r += x[i] * y[i];
    for (auto [s, t] : q.arrows()) r -= x[s - 1] * y[t - 1];
    return r;
}

std::vector<IntVec> positive_roots(const Quiver& q) {
    if (!q.is_dynkin()) throw NotFiniteTypeError("positive roots require a Dynkin quiver");
    int n = q.n();
    // Symmetrized Cartan matrix C = E + E^T.
    std::vector<IntVec> cartan(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) cartan[i][i] = 2;
    for (auto [s, t] : q.arrows()) {
        cartan[s - 1][t - 1] -= 1;
        cartan[t - 1][s - 1] -= 1;
    }
    std::set<IntVec> seen;
    std::queue<IntVec> work;
    for (int i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        seen.insert(e);
        work.push(e);
    }
    while (!work.empty()) {
        IntVec x = work.front();
        work.pop();
        for (int i = 0; i < n; ++i) {
            long long pairing = 0;
            for (int j = 0; j < n; ++j) pairing += cartan[i][j] * x[j];
            IntVec y = x;
            y[i] -= pairing;
            if (seen.insert(y).second) work.push(y);
        }
    }
    std::vector<IntVec> roots;
    for (const IntVec& v : seen) {
        bool pos = false, ok = true;
        for (long long c : v) {
            if (c > 0) pos = true;
            if (c < 0) ok = false;
        }
        if (ok && pos) roots.push_back(v);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

int coxeter_number(const Quiver& q) {
    std::size_t count = positive_roots(q).size();
    long long h2 = 2 * static_cast<long long>(count);
    if (h2 % q.n() != 0) throw NotFiniteTypeError("2|Phi+| not divisible by n; quiver not irreducible");
    return static_cast<int>(h2 / q.n());
}

QMat coxeter_matrix(const Quiver& q) {
    const QMat& e = q.euler_matrix();
    QMat phi = inverse(e) * e.transposed();
    for (std::size_t i = 0; i < phi.rows(); ++i)
        for (std::size_t j = 0; j < phi.cols(); ++j) phi.at(i, j) = -phi.at(i, j);
    return phi;
}

QMat coxeter_matrix_inverse(const Quiver& q) {
    const QMat& e = q.euler_matrix();
    QMat phi = inverse(e.transposed()) * e;
    for (std::size_t i = 0; i < phi.rows(); ++i)
        for (std::size_t j = 0; j < phi.cols(); ++j) phi.at(i, j) = -phi.at(i, j);
    return phi;
}

IntVec coxeter_transform(const Quiver& q, const IntVec& x, CoxDirection dir) {
    if (static_cast<int>(x.size()) != q.n()) throw DimensionError("coxeter_transform length mismatch");
    QMat phi = dir == CoxDirection::forward ? coxeter_matrix(q) : coxeter_matrix_inverse(q);
    return mat_apply_int(phi, x);
}

} // namespace excseq
