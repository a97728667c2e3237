"""Desk-scale max-sum diffusion on tiny pairwise graphical models.

Diffusion is block-coordinate ascent on the reparametrization dual of the
pairwise-energy relaxation: a pivot (node, incident edge) averages the
node's costs against the edge's min-marginals so that afterwards
theta_u(i) = min_j theta_uv(i, j) for every label i. The module certifies
that this update lands in the relative interior of the corresponding
block-minimizer set, by encoding the negated dual bound for the exact
engine (one epigraph variable per node/edge term, summed) and running the
relative-interior membership test on that encoding.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .descent import minimizer_set
from .epigraph import EpigraphProblem, PiecewiseAffine, lift, lift_direction
from .errors import ModelTooLargeError
from .geometry import Subspace
from .polyhedron import Polyhedron, ri_membership
from .rationals import Q, QVec, ZERO, unit, vdot

MAX_PHI_DIM = 24
MAX_LABELS = 3
MAX_NODES = 4


@dataclass(frozen=True)
class PairwiseModel:
    """Pairwise energy: unary costs per node label, pairwise costs per edge
    label pair. All costs exact rationals."""

    labels: Tuple[int, ...]  # label count per node
    unary: Tuple[Tuple, ...]  # unary[u][i]
    edges: Tuple[Tuple[int, int], ...]
    pairwise: Tuple[Tuple[Tuple, ...], ...]  # pairwise[e][i][j]

    @property
    def n_nodes(self) -> int:
        return len(self.labels)

    @property
    def phi_dim(self) -> int:
        return sum(self.labels[u] + self.labels[v] for u, v in self.edges)

    def phi_index(self, edge_idx: int, side: int, label: int) -> int:
        """Flat index of phi_{w,e}(label) with w = edges[edge_idx][side]."""
        off = 0
        for e in range(edge_idx):
            u, v = self.edges[e]
            off += self.labels[u] + self.labels[v]
        u, v = self.edges[edge_idx]
        if side == 1:
            off += self.labels[u]
        return off + label

    def incident(self, node: int) -> List[Tuple[int, int]]:
        """(edge index, side) pairs for edges touching the node."""
        out = []
        for e, (u, v) in enumerate(self.edges):
            if u == node:
                out.append((e, 0))
            if v == node:
                out.append((e, 1))
        return out


def check_desk_scale(m: PairwiseModel):
    if m.n_nodes > MAX_NODES or any(l > MAX_LABELS for l in m.labels):
        raise ModelTooLargeError("model exceeds node/label guard")
    if m.phi_dim > MAX_PHI_DIM:
        raise ModelTooLargeError("reparametrization dimension exceeds guard")


def zero_phi(m: PairwiseModel) -> QVec:
    return (ZERO,) * m.phi_dim


def node_costs(m: PairwiseModel, phi: QVec, u: int) -> Tuple:
    """theta^phi_u(i) = theta_u(i) + sum over incident edges of phi."""
    out = []
    for i in range(m.labels[u]):
        v = Q(m.unary[u][i])
        for e, side in m.incident(u):
            v += phi[m.phi_index(e, side, i)]
        out.append(v)
    return tuple(out)


def edge_costs(m: PairwiseModel, phi: QVec, e: int) -> Tuple[Tuple, ...]:
    """theta^phi_uv(i,j) = theta_uv(i,j) - phi_u(i) - phi_v(j)."""
    u, v = m.edges[e]
    out = []
    for i in range(m.labels[u]):
        row = []
        for j in range(m.labels[v]):
            row.append(
                Q(m.pairwise[e][i][j])
                - phi[m.phi_index(e, 0, i)]
                - phi[m.phi_index(e, 1, j)]
            )
        out.append(tuple(row))
    return tuple(out)


def dual_bound(m: PairwiseModel, phi: QVec):
    """Lower bound on the primal minimum: sum of node and edge minima of the
    reparametrized costs. Invariant under phi of the primal optimum."""
    total = ZERO
    for u in range(m.n_nodes):
        total += min(node_costs(m, phi, u))
    for e in range(len(m.edges)):
        total += min(c for row in edge_costs(m, phi, e) for c in row)
    return total


def primal_min(m: PairwiseModel):
    """Brute-force minimum energy over all labelings (test oracle)."""
    best = None
    for labeling in itertools.product(*(range(l) for l in m.labels)):
        val = sum((Q(m.unary[u][labeling[u]]) for u in range(m.n_nodes)), ZERO)
        for e, (u, v) in enumerate(m.edges):
            val += Q(m.pairwise[e][labeling[u]][labeling[v]])
        if best is None or val < best:
            best = val
    return best


def _pivot_delta(m: PairwiseModel, phi: QVec, node: int, edge_idx: int, factor):
    u, v = m.edges[edge_idx]
    side = 0 if node == u else 1
    if m.edges[edge_idx][side] != node:
        raise ValueError("pivot node is not an endpoint of the pivot edge")
    nc = node_costs(m, phi, node)
    ec = edge_costs(m, phi, edge_idx)
    deltas = []
    for i in range(m.labels[node]):
        if side == 0:
            edge_min = min(ec[i])
        else:
            edge_min = min(row[i] for row in ec)
        deltas.append(factor * (edge_min - nc[i]))
    new_phi = list(phi)
    for i, d in enumerate(deltas):
        new_phi[m.phi_index(edge_idx, side, i)] += d
    return tuple(new_phi)


def diffusion_step(m: PairwiseModel, phi: QVec, pivot: Tuple[int, int]) -> QVec:
    """Symmetric averaging update for pivot (node, edge): afterwards
    theta^phi_u(i) = min_j theta^phi_uv(i,j) exactly, and the dual bound
    does not decrease."""
    node, edge_idx = pivot
    return _pivot_delta(m, phi, node, edge_idx, Q(1, 2))


def one_sided_step(m: PairwiseModel, phi: QVec, pivot: Tuple[int, int]) -> QVec:
    """Adversarial variant that shifts the whole min-marginal difference
    onto the node; used to show the ri-property can fail."""
    node, edge_idx = pivot
    return _pivot_delta(m, phi, node, edge_idx, Q(1))


def all_pivots(m: PairwiseModel) -> List[Tuple[int, int]]:
    out = []
    for e, (u, v) in enumerate(m.edges):
        out.append((u, e))
        out.append((v, e))
    return out


# ---------------------------------------------------------------------------
# exact-engine encoding of the dual bound


def _term_offsets(m: PairwiseModel) -> Tuple[int, int]:
    """(ambient dim, offset of the first term variable)."""
    n_terms = m.n_nodes + len(m.edges)
    return m.phi_dim + n_terms, m.phi_dim


def base_polyhedron(m: PairwiseModel) -> Polyhedron:
    """Constraints making each term variable an upper bound on the negated
    node/edge minimum: s_w >= -theta^phi_w(i), s_e >= -theta^phi_e(i,j)."""
    D, t0 = _term_offsets(m)
    ineq_lhs = []
    ineq_rhs = []
    for w in range(m.n_nodes):
        for i in range(m.labels[w]):
            row = [ZERO] * D
            for e, side in m.incident(w):
                row[m.phi_index(e, side, i)] = Q(-1)
            row[t0 + w] = Q(-1)
            ineq_lhs.append(tuple(row))
            ineq_rhs.append(Q(m.unary[w][i]))
    for e, (u, v) in enumerate(m.edges):
        for i in range(m.labels[u]):
            for j in range(m.labels[v]):
                row = [ZERO] * D
                row[m.phi_index(e, 0, i)] = Q(1)
                row[m.phi_index(e, 1, j)] = Q(1)
                row[t0 + m.n_nodes + e] = Q(-1)
                ineq_lhs.append(tuple(row))
                ineq_rhs.append(Q(m.pairwise[e][i][j]))
    return Polyhedron(tuple(ineq_lhs), tuple(ineq_rhs), (), (), D)


def term_values(m: PairwiseModel, phi: QVec) -> Tuple:
    """Minimal feasible term-variable values at phi (negated term minima)."""
    vals = []
    for w in range(m.n_nodes):
        vals.append(-min(node_costs(m, phi, w)))
    for e in range(len(m.edges)):
        vals.append(-min(c for row in edge_costs(m, phi, e) for c in row))
    return tuple(vals)


def lifted_phi_point(m: PairwiseModel, phi: QVec) -> QVec:
    """(phi, term variables, their sum): the canonical lifted point; its
    final coordinate equals -dual_bound(m, phi)."""
    s = term_values(m, phi)
    return tuple(phi) + s + (sum(s, ZERO),)


def encode_dual_block(
    m: PairwiseModel, phi: QVec, pivot: Tuple[int, int]
) -> Tuple[EpigraphProblem, Subspace, QVec]:
    """Exact-engine encoding of one diffusion block subproblem.

    Minimizing -dual_bound over the pivot block equals minimizing the sum
    of term variables over the base polyhedron, with the block spanning the
    pivot's phi coordinates plus the two affected term variables."""
    check_desk_scale(m)
    node, edge_idx = pivot
    D, t0 = _term_offsets(m)
    X = base_polyhedron(m)
    sum_terms = [ZERO] * D
    for k in range(t0, D):
        sum_terms[k] = Q(1)
    ep = lift(X, PiecewiseAffine(((tuple(sum_terms), ZERO),)))
    side = 0 if m.edges[edge_idx][0] == node else 1
    basis = [
        unit(D, m.phi_index(edge_idx, side, i)) for i in range(m.labels[node])
    ]
    basis.append(unit(D, t0 + node))
    basis.append(unit(D, t0 + m.n_nodes + edge_idx))
    I = Subspace(tuple(basis), D)
    return ep, I, lifted_phi_point(m, phi)


def verify_ri_property(m: PairwiseModel, phi: QVec, pivot: Tuple[int, int]) -> bool:
    """Does the diffusion update select a relative-interior point of its
    block-minimizer set? Mechanized check on the exact encoding."""
    ep, I, pt = encode_dual_block(m, phi, pivot)
    M = minimizer_set(ep.lifted, ep.objective, pt, lift_direction(I))
    phi2 = diffusion_step(m, phi, pivot)
    return ri_membership(M, lifted_phi_point(m, phi2))


def verify_step_in_minimizer_set(
    m: PairwiseModel, phi: QVec, pivot: Tuple[int, int]
) -> bool:
    """Weaker cross-check: the lifted diffusion output is block-optimal."""
    from .polyhedron import contains

    ep, I, pt = encode_dual_block(m, phi, pivot)
    M = minimizer_set(ep.lifted, ep.objective, pt, lift_direction(I))
    phi2 = diffusion_step(m, phi, pivot)
    return contains(M, lifted_phi_point(m, phi2))
