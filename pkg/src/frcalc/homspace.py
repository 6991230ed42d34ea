"""Unital *-homomorphisms M_d -> M_N stored by their image frame.

A hom is determined by where it sends the matrix units of the source
algebra; that image collection is exactly a frame of degree d in M_N, so
the two notions are mutually convertible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import (
    DEFAULT_TOL,
    Tolerance,
    eye,
    kron,
    matrix_unit,
    max_abs,
    random_unitary,
)
from .frames import Frame, conjugate_frame, matrix_unit_frame, verify_frame


@dataclass(frozen=True)
class StarHom:
    """Unital *-homomorphism M_src -> M_dst; image_frame[i,j] = h(e_{i,j})."""

    src: int
    dst: int
    image_frame: Frame

    def __post_init__(self):
        if self.image_frame.d != self.src or self.image_frame.ambient != self.dst:
            raise ValueError("image frame shape does not match hom sizes")

    @property
    def mult(self) -> int:
        """Multiplicity l = dst / src of the embedding."""
        if self.dst % self.src != 0:
            raise ValueError("source size does not divide target size")
        return self.dst // self.src


def hom_from_frame(alpha: Frame, tol: Tolerance = DEFAULT_TOL) -> StarHom:
    report = verify_frame(alpha, tol)
    if not report.pass_:
        raise ValueError("frame fails its axioms; cannot define a *-homomorphism")
    return StarHom(alpha.d, alpha.ambient, alpha)


def frame_of_hom(h: StarHom) -> Frame:
    return h.image_frame


def identity_hom(n: int) -> StarHom:
    return StarHom(n, n, matrix_unit_frame(n, 1))


def basepoint_hom(src: int, l: int) -> StarHom:
    """The hom X -> X (x) E_l."""
    return StarHom(src, src * l, matrix_unit_frame(src, l))


def random_hom(src: int, l: int, seed: int) -> StarHom:
    """Seeded random unital embedding: X -> V (X (x) E_l) V*."""
    v = random_unitary(src * l, seed)
    return StarHom(src, src * l, conjugate_frame(v, matrix_unit_frame(src, l)))


def ev(h: StarHom, t: np.ndarray) -> np.ndarray:
    """h(T) = sum_{i,j} T[i,j] h(e_{i,j})."""
    t = np.asarray(t, dtype=complex)
    if t.shape != (h.src, h.src):
        raise ValueError(f"argument must be {h.src}x{h.src}")
    return np.einsum("ij,ijab->ab", t, h.image_frame.mats)


def iota(h: StarHom, l: int) -> StarHom:
    """Suspension h (x) id_{M_l}: M_{src*l} -> M_{dst*l}."""
    if l < 1:
        raise ValueError("l must be positive")
    src, dst = h.src * l, h.dst * l
    mats = np.zeros((src, src, dst, dst), dtype=complex)
    for i in range(h.src):
        for j in range(h.src):
            hij = h.image_frame.mats[i, j]
            for a in range(l):
                for b in range(l):
                    mats[i * l + a, j * l + b] = kron(hij, matrix_unit(l, a, b))
    return StarHom(src, dst, Frame(src, dst, mats))


def compose_plain(h2: StarHom, h1: StarHom) -> StarHom:
    """h2 after h1, sizes matching exactly."""
    if h1.dst != h2.src:
        raise ValueError("homs are not composable")
    mats = np.einsum("ijuv,uvab->ijab", h1.image_frame.mats, h2.image_frame.mats)
    return StarHom(h1.src, h2.dst, Frame(h1.src, h2.dst, mats))


def compose_phi(h2: StarHom, h1: StarHom) -> StarHom:
    """Monoid composition iota(h2, ratio) after h1, the ratio read off
    from the sizes (ratio 1 is plain composition)."""
    if h1.dst % h2.src != 0:
        raise ValueError("homs are not composable: sizes do not divide")
    ratio = h1.dst // h2.src
    return compose_plain(iota(h2, ratio), h1)


def tensor_hom(h1: StarHom, h2: StarHom) -> StarHom:
    """h1 (x) h2 with first-factor-major index conventions throughout."""
    from .frames import tensor_frame

    fr = tensor_frame(h1.image_frame, h2.image_frame)
    return StarHom(h1.src * h2.src, h1.dst * h2.dst, fr)


def push_frame(h: StarHom, alpha: Frame) -> Frame:
    """h_*(alpha): the image frame of a frame under a hom."""
    if alpha.ambient != h.src:
        raise ValueError("frame must live in the hom's source algebra")
    mats = np.einsum("uvij,ijab->uvab", alpha.mats, h.image_frame.mats)
    return Frame(alpha.d, h.dst, mats)


def intertwiner(h: StarHom, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Unitary U with h(X) = U (X (x) E_l) U* for all X.

    Construction: the h(e_{ii}) are rank-l projections; pick an
    orthonormal basis {v_s} of range h(e_{11}) and take columns
    u_{(i,s)} = h(e_{i,1}) v_s in first-index-major order.  Each v_s is
    phase-normalized (first significant entry of h(e_{11}) v_s real
    positive) so the output is deterministic.
    """
    k, n = h.src, h.dst
    if n % k != 0:
        raise ValueError("input not a unital *-homomorphism")
    l = n // k
    p1 = h.image_frame.mats[0, 0]
    w, s, _ = np.linalg.svd(p1)
    if int(np.sum(s > 0.5)) != l:
        raise ValueError("input not a unital *-homomorphism")
    vs = []
    for col in range(l):
        v = w[:, col]
        idx = int(np.argmax(np.abs(v) > 1e-6))
        phase = v[idx] / abs(v[idx])
        vs.append(v / phase)
    u = np.zeros((n, n), dtype=complex)
    for i in range(k):
        hi1 = h.image_frame.mats[i, 0]
        for s_ in range(l):
            u[:, i * l + s_] = hi1 @ vs[s_]
    residual = intertwiner_residual(h, u)
    if residual > 1e2 * tol.rank_cutoff or max_abs(u @ u.conj().T - eye(n)) > 1e3 * tol.abs_eps:
        raise ValueError("input not a unital *-homomorphism")
    return u


def intertwiner_residual(h: StarHom, u: np.ndarray) -> float:
    """max_{i,j} || h(e_{i,j}) - U (e_{i,j} (x) E_l) U* ||_max."""
    l = h.mult
    worst = 0.0
    el = eye(l)
    for i in range(h.src):
        for j in range(h.src):
            model = u @ kron(matrix_unit(h.src, i, j), el) @ u.conj().T
            worst = max(worst, max_abs(h.image_frame.mats[i, j] - model))
    return worst


def block_scalar_deviation(w: np.ndarray, k: int, l: int) -> float:
    """Distance of a kl x kl unitary from E_k (x) U(l): the off-diagonal
    k-blocks must vanish and the diagonal k-blocks must all coincide."""
    b = w.reshape(k, l, k, l)
    worst = 0.0
    ref = b[0, :, 0, :]
    for i in range(k):
        for j in range(k):
            blk = b[i, :, j, :]
            worst = max(worst, max_abs(blk - ref) if i == j else max_abs(blk))
    return worst


def same_stabilization(h1: StarHom, h2: StarHom, l: int) -> bool:
    """Whether h2 is the one-step filtration stabilization M_l(h1),
    compared entrywise."""
    if h2.src != h1.src * l or h2.dst != h1.dst * l:
        return False
    lifted = iota(h1, l)
    return max_abs(lifted.image_frame.mats - h2.image_frame.mats) <= DEFAULT_TOL.abs_eps
