// Copyright 2026 The qstwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSTWALK_WALK_HPP_
#define QSTWALK_WALK_HPP_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qstwalk/graph.hpp"
#include "qstwalk/linalg.hpp"

namespace qstwalk {

struct Arc {
    Vertex tail;
    Vertex head;
    friend bool operator==(const Arc&, const Arc&) = default;
};

/// Computational basis of the walk: one state per directed arc.
///
/// Arcs are ordered by (tail, head) ascending, so the arcs leaving vertex v
/// form the contiguous block [offset(v), offset(v) + d(v)). This is what
/// makes the coin block-diagonal in vertex order.
class ArcBasis {
  public:
    explicit ArcBasis(const Graph& g) : offsets_(g.num_vertices() + 1, 0) {
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            offsets_[v] = static_cast<int>(arcs_.size());
            for (Vertex w : g.neighbors(v)) arcs_.push_back({v, w});
        }
        offsets_[g.num_vertices()] = static_cast<int>(arcs_.size());
    }

    int dim() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const Arc& arc(int i) const { return arcs_.at(i); }

    /// Start of the block of arcs with the given tail.
    int offset(Vertex tail) const { return offsets_.at(tail); }
    int out_degree(Vertex tail) const { return offsets_.at(tail + 1) - offsets_.at(tail); }

    /// Basis position of (tail, head). Throws std::invalid_argument if the arc
    /// is not in the graph.
    int index(Vertex tail, Vertex head) const {
        if (tail < 0 || tail + 1 >= static_cast<int>(offsets_.size())) {
            throw std::invalid_argument("arc tail " + std::to_string(tail) + " out of range");
        }
        for (int i = offsets_[tail]; i < offsets_[tail + 1]; ++i) {
            if (arcs_[i].head == head) return i;
        }
        throw std::invalid_argument("(" + std::to_string(tail) + "," + std::to_string(head) + ") is not an arc");
    }

  private:
    std::vector<Arc> arcs_;
    std::vector<int> offsets_;
};

/// Which arcs carry the receiver's target state.
enum class ReceiverConvention {
    incoming,  // arcs (q, r)
    outgoing,  // arcs (r, q)
};

/// Grover diffusion coin 2|phi><phi| - I of size d.
template <typename Scalar = double>
Matrix<Scalar> grover_coin(int d) {
    if (d < 1) throw std::invalid_argument("grover_coin: degree must be >= 1");
    const Scalar off = Scalar(2.0 / d);
    Matrix<Scalar> c = Matrix<Scalar>::Constant(d, d, off);
    c.diagonal().array() -= Scalar(1);
    return c;
}

namespace detail {

inline void check_marked(const Graph& g, Vertex sender, Vertex receiver) {
    if (!g.contains(sender)) throw std::invalid_argument("sender " + std::to_string(sender) + " is not a vertex");
    if (!g.contains(receiver)) {
        throw std::invalid_argument("receiver " + std::to_string(receiver) + " is not a vertex");
    }
    if (sender == receiver) throw std::invalid_argument("sender and receiver must differ");
}

}  // namespace detail

/// Direct sum of Grover coins in vertex order; the sender and receiver blocks
/// are negated.
template <typename Scalar = Complex>
Matrix<Scalar> assemble_coin(const Graph& g, const ArcBasis& basis, Vertex sender, Vertex receiver) {
    detail::check_marked(g, sender, receiver);
    Matrix<Scalar> coin = Matrix<Scalar>::Zero(basis.dim(), basis.dim());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const int d = basis.out_degree(v);
        if (d == 0) continue;
        Matrix<Scalar> block = grover_coin<Scalar>(d);
        if (v == sender || v == receiver) block = -block;
        coin.block(basis.offset(v), basis.offset(v), d, d) = block;
    }
    return coin;
}

/// Flip-flop shift |(i,j)> -> |(j,i)>.
template <typename Scalar = Complex>
Matrix<Scalar> assemble_shift(const ArcBasis& basis) {
    Matrix<Scalar> shift = Matrix<Scalar>::Zero(basis.dim(), basis.dim());
    for (int col = 0; col < basis.dim(); ++col) {
        const Arc& a = basis.arc(col);
        shift(basis.index(a.head, a.tail), col) = Scalar(1);
    }
    return shift;
}

template <typename Scalar = Complex>
struct WalkOperator {
    Matrix<Scalar> coin;
    Matrix<Scalar> shift;
    Matrix<Scalar> evolution;  // shift * coin
    Vertex sender = 0;
    Vertex receiver = 0;

    int dim() const { return static_cast<int>(evolution.rows()); }
};

template <typename Scalar = Complex>
WalkOperator<Scalar> build_walk_operator(const Graph& g, const ArcBasis& basis, Vertex sender, Vertex receiver) {
    WalkOperator<Scalar> op;
    op.coin = assemble_coin<Scalar>(g, basis, sender, receiver);
    op.shift = assemble_shift<Scalar>(basis);
    op.evolution = op.shift * op.coin;
    op.sender = sender;
    op.receiver = receiver;
    return op;
}

/// Uniform superposition over the arcs leaving `s`.
template <typename Scalar = Complex>
Vector<Scalar> sender_state(const Graph& g, const ArcBasis& basis, Vertex s) {
    const int d = g.degree(s);
    if (d == 0) throw std::invalid_argument("sender " + std::to_string(s) + " is an isolated vertex");
    Vector<Scalar> psi = Vector<Scalar>::Zero(basis.dim());
    psi.segment(basis.offset(s), d).setConstant(Scalar(1.0 / std::sqrt(static_cast<double>(d))));
    return psi;
}

/// Uniform superposition over the arcs at `r`, oriented per `convention`.
template <typename Scalar = Complex>
Vector<Scalar> receiver_state(const Graph& g, const ArcBasis& basis, Vertex r,
                              ReceiverConvention convention = ReceiverConvention::incoming) {
    const int d = g.degree(r);
    if (d == 0) throw std::invalid_argument("receiver " + std::to_string(r) + " is an isolated vertex");
    const Scalar amp = Scalar(1.0 / std::sqrt(static_cast<double>(d)));
    Vector<Scalar> psi = Vector<Scalar>::Zero(basis.dim());
    for (Vertex q : g.neighbors(r)) {
        psi(convention == ReceiverConvention::incoming ? basis.index(q, r) : basis.index(r, q)) = amp;
    }
    return psi;
}

/// U^t psi0 by repeated matrix-vector products.
template <typename DerivedU, typename DerivedPsi>
Vector<typename DerivedU::Scalar> evolve(const Eigen::MatrixBase<DerivedU>& evolution,
                                         const Eigen::MatrixBase<DerivedPsi>& psi0, int steps) {
    if (steps < 0) throw std::invalid_argument("evolve: negative step count");
    if (evolution.cols() != psi0.size()) throw std::invalid_argument("evolve: dimension mismatch");
    Vector<typename DerivedU::Scalar> psi = psi0;
    for (int t = 0; t < steps; ++t) psi = evolution * psi;
    return psi;
}

template <typename Scalar, typename DerivedPsi>
Vector<Scalar> evolve(const WalkOperator<Scalar>& op, const Eigen::MatrixBase<DerivedPsi>& psi0, int steps) {
    return evolve(op.evolution, psi0, steps);
}

}  // namespace qstwalk

#endif  // QSTWALK_WALK_HPP_
