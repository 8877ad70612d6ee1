#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "excseq/matrix.hpp"

namespace excseq {

// Finite acyclic quiver with vertices 1..n. Immutable after construction.
class Quiver {
public:
    // Arrows are ordered (source, target) pairs of 1-based vertex indices.
    Quiver(int n, std::vector<std::pair<int, int>> arrows, std::string label);

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
    const std::string& label() const { return label_; }

    // Euler matrix E with E[i][i] = 1 and E[i][j] -= #arrows i->j, so that
    // <x,y> = x^T E y computes hom - ext for the path algebra.
    const QMat& euler_matrix() const { return euler_; }

    int arrow_count(int from, int to) const;
    bool is_dynkin() const { return dynkin_; }

    // Vertices with no outgoing / no incoming arrows.
    std::vector<int> sinks() const;
    std::vector<int> sources() const;

private:
    int n_;
    std::vector<std::pair<int, int>> arrows_;
    std::string label_;
    QMat euler_;
    bool dynkin_;
};

// Parses a preset name ("A3:1>2<3", "A4", "D4:sym-source") or an explicit
// comma-separated arrow list ("1>2,3>2"). Throws CycleError / IndexError /
// ValidationError on malformed input.
Quiver parse_quiver(const std::string& text);

// <x,y> = sum_i x_i y_i - sum_{a:i->j} x_i y_j.
long long euler_form(const Quiver& q, const IntVec& x, const IntVec& y);

// All positive roots of the underlying diagram, generated by closing the
// simple roots under simple reflections of the symmetrized form. Sorted
// lexicographically. Requires Dynkin type.
std::vector<IntVec> positive_roots(const Quiver& q);

// h = 2|Phi+|/n. Requires Dynkin type.
int coxeter_number(const Quiver& q);

enum class CoxDirection { forward, inverse };

// Dimension-vector action of the AR translate: dim tau M = Phi dim M for
// non-projective indecomposable M, with Phi = -E^{-1} E^T.
IntVec coxeter_transform(const Quiver& q, const IntVec& x, CoxDirection dir);

// The matrices behind coxeter_transform, exposed for catalog construction.
QMat coxeter_matrix(const Quiver& q);
QMat coxeter_matrix_inverse(const Quiver& q);

} // namespace excseq
