#include "excseq/rep.hpp"

#include <numeric>

#include "excseq/errors.hpp"

namespace excseq {

Rep simple_rep(const Quiver& q, int v) {
    Rep r;
    r.dims.assign(q.n(), 0);
    r.dims[v - 1] = 1;
    for (auto [s, t] : q.arrows()) r.maps.emplace_back(r.dims[t - 1], r.dims[s - 1]);
    return r;
}

Quiver reflect_quiver(const Quiver& q, int v) {
    std::vector<std::pair<int, int>> arrows = q.arrows();
    for (auto& [s, t] : arrows)
        if (s == v || t == v) std::swap(s, t);
    return Quiver(q.n(), std::move(arrows), q.label() + "~s" + std::to_string(v));
}

Rep reflect_plus(const Quiver& q, const Rep& m, int v) {
    for (auto [s, t] : q.arrows())
        if (s == v) throw DomainError("reflect_plus requires a sink");

    std::vector<std::size_t> in_arrows;
    std::size_t total = 0;
    for (std::size_t a = 0; a < q.arrows().size(); ++a)
        if (q.arrows()[a].second == v) {
            in_arrows.push_back(a);
            total += static_cast<std::size_t>(m.dims[q.arrows()[a].first - 1]);
        }

    // Combined map  (+) M_u -> M_v,  columns grouped by incoming arrow.
    std::size_t dv = static_cast<std::size_t>(m.dims[v - 1]);
    QMat f(dv, total);
    std::size_t off = 0;
    for (std::size_t a : in_arrows) {
        const QMat& ma = m.maps[a];
        for (std::size_t i = 0; i < ma.rows(); ++i)
            for (std::size_t j = 0; j < ma.cols(); ++j) f.at(i, off + j) = ma.at(i, j);
        off += ma.cols();
    }
    std::vector<std::vector<Rat>> kernel = kernel_basis(f);
    std::size_t k = kernel.size();

    Rep r;
    r.dims = m.dims;
    r.dims[v - 1] = static_cast<long long>(k);
    r.maps.resize(q.arrows().size());
    off = 0;
    std::vector<std::size_t> arrow_offset(q.arrows().size(), 0);
    for (std::size_t a : in_arrows) {
        arrow_offset[a] = off;
        off += static_cast<std::size_t>(m.dims[q.arrows()[a].first - 1]);
    }
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        auto [s, t] = q.arrows()[a];
        if (t == v) {
            // Reversed arrow v -> s: project the kernel onto the s-block.
            std::size_t du = static_cast<std::size_t>(m.dims[s - 1]);
            QMat nm(du, k);
            for (std::size_t col = 0; col < k; ++col)
                for (std::size_t rrow = 0; rrow < du; ++rrow)
                    nm.at(rrow, col) = kernel[col][arrow_offset[a] + rrow];
            r.maps[a] = std::move(nm);
        } else {
            r.maps[a] = m.maps[a];
        }
    }
    return r;
}

Rep reflect_minus(const Quiver& q, const Rep& m, int v) {
    for (auto [s, t] : q.arrows())
        if (t == v) throw DomainError("reflect_minus requires a source");

    std::vector<std::size_t> out_arrows;
    std::size_t total = 0;
    for (std::size_t a = 0; a < q.arrows().size(); ++a)
        if (q.arrows()[a].first == v) {
            out_arrows.push_back(a);
            total += static_cast<std::size_t>(m.dims[q.arrows()[a].second - 1]);
        }

    // Combined map M_v -> (+) M_w, rows grouped by outgoing arrow.
    std::size_t dv = static_cast<std::size_t>(m.dims[v - 1]);
    QMat g(total, dv);
    std::size_t off = 0;
    std::vector<std::size_t> arrow_offset(q.arrows().size(), 0);
    for (std::size_t a : out_arrows) {
        const QMat& ma = m.maps[a];
        arrow_offset[a] = off;
        for (std::size_t i = 0; i < ma.rows(); ++i)
            for (std::size_t j = 0; j < ma.cols(); ++j) g.at(off + i, j) = ma.at(i, j);
        off += ma.rows();
    }
    // Rows of p span the left null space of g, so p g = 0 and ker p = im g:
    // p is a cokernel projection.
    std::vector<std::vector<Rat>> left_null = kernel_basis(g.transposed());
    std::size_t k = left_null.size();
    QMat p(k, total);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < total; ++j) p.at(i, j) = left_null[i][j];

    Rep r;
    r.dims = m.dims;
    r.dims[v - 1] = static_cast<long long>(k);
    r.maps.resize(q.arrows().size());
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        auto [s, t] = q.arrows()[a];
        if (s == v) {
            // Reversed arrow t -> v: include the t-block, then project.
            std::size_t dw = static_cast<std::size_t>(m.dims[t - 1]);
            QMat nm(k, dw);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < dw; ++j) nm.at(i, j) = p.at(i, arrow_offset[a] + j);
            r.maps[a] = std::move(nm);
        } else {
            r.maps[a] = m.maps[a];
        }
    }
    return r;
}

long long hom_dim(const Quiver& q, const Rep& m, const Rep& n) {
    if (static_cast<int>(m.dims.size()) != q.n() || static_cast<int>(n.dims.size()) != q.n() ||
        m.maps.size() != q.arrows().size() || n.maps.size() != q.arrows().size())
        throw CatalogError("hom_dim: representations do not match the quiver");

    std::vector<std::size_t> var_offset(q.n() + 1, 0);
    std::size_t vars = 0;
    for (int v = 1; v <= q.n(); ++v) {
        var_offset[v] = vars;
        vars += static_cast<std::size_t>(m.dims[v - 1] * n.dims[v - 1]);
    }
    std::size_t eqs = 0;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        auto [i, j] = q.arrows()[a];
        eqs += static_cast<std::size_t>(m.dims[i - 1] * n.dims[j - 1]);
    }
    if (vars == 0) return 0;

    // Unknown f_v is an (n_v x m_v) matrix; entry (r, c) has index
    // var_offset[v] + r * m_v + c. Equations: f_j M_a - N_a f_i = 0.
    QMat sys(eqs, vars);
    std::size_t row = 0;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        auto [i, j] = q.arrows()[a];
        long long mi = m.dims[i - 1], nj = n.dims[j - 1];
        long long mj = m.dims[j - 1], ni = n.dims[i - 1];
        const QMat& ma = m.maps[a];
        const QMat& na = n.maps[a];
        for (long long r = 0; r < nj; ++r)
            for (long long c = 0; c < mi; ++c) {
                for (long long t = 0; t < mj; ++t)
                    sys.at(row, var_offset[j] + static_cast<std::size_t>(r * mj + t)) +=
                        ma.at(static_cast<std::size_t>(t), static_cast<std::size_t>(c));
                for (long long t = 0; t < ni; ++t)
                    sys.at(row, var_offset[i] + static_cast<std::size_t>(t * mi + c)) -=
                        na.at(static_cast<std::size_t>(r), static_cast<std::size_t>(t));
                ++row;
            }
    }
    return static_cast<long long>(vars - rank(sys));
}

IntVec top_vector(const Quiver& q, const Rep& m) {
    IntVec top = m.dims;
    for (int v = 1; v <= q.n(); ++v) {
        std::size_t dv = static_cast<std::size_t>(m.dims[v - 1]);
        if (dv == 0) continue;
        std::size_t total = 0;
        for (std::size_t a = 0; a < q.arrows().size(); ++a)
            if (q.arrows()[a].second == v) total += m.maps[a].cols();
        if (total == 0) continue;
        QMat stacked(dv, total);
        std::size_t off = 0;
        for (std::size_t a = 0; a < q.arrows().size(); ++a) {
            if (q.arrows()[a].second != v) continue;
            const QMat& ma = m.maps[a];
            for (std::size_t i = 0; i < ma.rows(); ++i)
                for (std::size_t j = 0; j < ma.cols(); ++j) stacked.at(i, off + j) = ma.at(i, j);
            off += ma.cols();
        }
        top[v - 1] = static_cast<long long>(dv - rank(stacked));
    }
    return top;
}

} // namespace excseq
