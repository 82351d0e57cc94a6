"""The fundamental 4x4 R-matrix, Yang-Baxter and RTT residuals.

Composite indices flatten pairs (i,j) with i,j in {1,2} in the order
11, 12, 21, 22, so entries line up with the printed matrix (eq 2.6).
All arrays are plain tuples of Scalars; the products are explicit index
contractions.
"""

from __future__ import annotations

from .ncalg import Element, Presentation, normalize
from .qfield import ONE, Scalar, ZERO
from .reports import Check

__all__ = [
    "RMatrix",
    "standard_r",
    "perturbed_r",
    "ybe_residual",
    "rtt_residual",
    "forms_rtt_compat",
    "r_inverse_conventions",
]

_q = Scalar.q_power
_LAM = _q(1) - _q(-1)

RMatrix = tuple  # 4x4 tuple of tuples of Scalar


def _flat(i: int, j: int) -> int:
    return 2 * (i - 1) + (j - 1)


def standard_r() -> RMatrix:
    """R of eq 2.6: diag(q,1,1,q) plus a lambda in the (21),(12) slot."""
    m = [[ZERO] * 4 for _ in range(4)]
    m[_flat(1, 1)][_flat(1, 1)] = _q(1)
    m[_flat(1, 2)][_flat(1, 2)] = ONE
    m[_flat(2, 1)][_flat(1, 2)] = _LAM
    m[_flat(2, 1)][_flat(2, 1)] = ONE
    m[_flat(2, 2)][_flat(2, 2)] = _q(1)
    return tuple(tuple(row) for row in m)


def perturbed_r() -> RMatrix:
    """Negative control: the lambda entry replaced by the constant 1."""
    m = [list(row) for row in standard_r()]
    m[_flat(2, 1)][_flat(1, 2)] = ONE
    return tuple(tuple(row) for row in m)


def entry(r: RMatrix, i, j, k, l) -> Scalar:
    """R^{ij}_{kl} (upper pair = row, lower pair = column)."""
    return r[_flat(i, j)][_flat(k, l)]


def ybe_residual(r: RMatrix, swap_sides: bool = False) -> tuple:
    """Componentwise difference of the two sides of the Yang-Baxter
    equation (eq 2.5); an 8x8 array indexed by index triples.

    ``swap_sides`` exchanges the roles of the two sides, negating the
    residual (an invariant the tests assert).
    """
    rng = (1, 2)
    out = []
    for i1 in rng:
        for j1 in rng:
            for k1 in rng:
                row = []
                for i3 in rng:
                    for j3 in rng:
                        for k3 in rng:
                            lhs = ZERO
                            rhs = ZERO
                            for i2 in rng:
                                for j2 in rng:
                                    for k2 in rng:
                                        lhs = lhs + (entry(r, i1, j1, i2, j2)
                                                     * entry(r, i2, k1, i3, k2)
                                                     * entry(r, j2, k2, j3, k3))
                                        rhs = rhs + (entry(r, j1, k1, j2, k2)
                                                     * entry(r, i1, k2, i2, k3)
                                                     * entry(r, i2, j2, i3, j3))
                            row.append(rhs - lhs if swap_sides else lhs - rhs)
                out.append(tuple(row))
    return tuple(out)


def ybe_holds(r: RMatrix) -> bool:
    return all(c.is_zero for row in ybe_residual(r) for c in row)


_T = {(1, 1): "a", (1, 2): "b", (2, 1): "c", (2, 2): "d"}


def rtt_components(r: RMatrix) -> dict:
    """The 16 free-algebra elements R T1 T2 - T2 T1 R (eq 2.4), keyed by
    the free indices (i, j, m, n)."""
    rng = (1, 2)
    comps = {}
    for i in rng:
        for j in rng:
            for m in rng:
                for n in rng:
                    acc = Element.zero()
                    for k in rng:
                        for l in rng:
                            acc = acc + entry(r, i, j, k, l) * (
                                Element.word(_T[(k, m)]) * Element.word(_T[(l, n)]))
                            acc = acc - entry(r, k, l, m, n) * (
                                Element.word(_T[(j, l)]) * Element.word(_T[(i, k)]))
                    comps[(i, j, m, n)] = acc
    return comps


def rtt_residual(r: RMatrix, p: Presentation) -> dict:
    """Each RTT component normalized under ``p``; all zero iff the RTT
    relation holds modulo the presentation's relations."""
    return {idx: normalize(comp, p) for idx, comp in rtt_components(r).items()}


def forms_rtt_compat(r: RMatrix, p: Presentation) -> list:
    """Forms times the RTT relations must still rewrite to zero
    (eq 3.2 for the left calculus, its section-5 mirror on the right)."""
    if p.form_position not in ("left", "right"):
        raise ValueError(f"{p.name} is not a calculus presentation")
    forms = [g.name for g in p.generators if g.parity == 1]
    comps = rtt_components(r)
    checks = []
    tag = "eq-3.2" if p.form_position == "right" else "sec-5"
    for f in forms:
        for idx, comp in comps.items():
            if p.form_position == "right":
                x = Element.word(f) * comp
            else:
                x = comp * Element.word(f)
            res = normalize(x, p)
            checks.append(Check.of(
                res.is_zero, f"forms-rtt[{f},{''.join(map(str, idx))}]", tag,
                residual=str(res)))
    return checks


def format_r(r: RMatrix) -> list:
    """The matrix as a 4x4 table of canonical scalar strings (for reports)."""
    return [[str(c) for c in row] for row in r]


def r_inverse_conventions() -> dict:
    """Which convention realizes R_q as the inverse of R_{1/q}.

    Returns {"plain": bool, "transposed": bool}: ``plain`` multiplies
    R(q).R(1/q) directly; ``transposed`` flips both composite indices of
    R(1/q) first.
    """
    r = standard_r()
    rinv = tuple(tuple(c.invert_q() for c in row) for row in r)
    rinv_t = tuple(tuple(rinv[j][i] for j in range(4)) for i in range(4))
    out = {}
    for label, cand in (("plain", rinv), ("transposed", rinv_t)):
        ok = True
        for i in range(4):
            for j in range(4):
                s = ZERO
                for k in range(4):
                    s = s + r[i][k] * cand[k][j]
                want = ONE if i == j else ZERO
                if s != want:
                    ok = False
        out[label] = ok
    return out
