"""Exact self-intersection numbers from the block form of a class.

The count splits into two parts.  A closed-form term depends only on the
block exponents: n*L - 2*n^2 - sum over block pairs of |i_k - i_l| +
|j_k - j_l|.  The remainder H is a finite count of "corner" crossing
classes, obtained by linking tests between distinguished lifts (one per
run start) filtered by letter/exponent side conditions; see
:func:`compute_H`.  Proper powers scale by the square of the
multiplicity, so H is only ever evaluated on primitive roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from selfint import _kernel
from selfint.errors import NonPrimitiveInputError
from selfint.order import GeodesicLift, linked
from selfint.words import (
    BlockForm,
    CyclicWord,
    SimplePower,
    block_form,
    canonical_rotation,
    cyclically_reduce,
    encode,
    parse_word,
    primitive_root,
)


def _run_starts(bf: BlockForm) -> tuple[list[int], list[int]]:
    s_pos = []
    r_pos = []
    pos = 0
    for b in bf.blocks:
        s_pos.append(pos)
        pos += b.i
        r_pos.append(pos)
        pos += b.j
    return s_pos, r_pos


def lifts(bf: BlockForm) -> list[GeodesicLift]:
    """The L lifts of the class crossing the fundamental domain.

    One per letter position: alpha lifts start inside a-type runs (block
    k, offset m gives the rotation beginning m letters into run k), beta
    lifts inside b-type runs.  Alphas are listed first, then betas, both
    in (block, offset) order.
    """
    w = bf.word
    double = w + w
    L = len(w)
    s_pos, r_pos = _run_starts(bf)
    out: list[GeodesicLift] = []
    for k, b in enumerate(bf.blocks):
        for m in range(b.i):
            start = s_pos[k] + m
            out.append(GeodesicLift.from_period(
                double[start:start + L], kind="alpha", block=k + 1, offset=m))
    for k, b in enumerate(bf.blocks):
        for p in range(b.j):
            start = r_pos[k] + p
            out.append(GeodesicLift.from_period(
                double[start:start + L], kind="beta", block=k + 1, offset=p))
    return out


def closed_form_term(bf: BlockForm) -> int:
    """n*L - 2*n^2 - sum_{k<l} (|i_k - i_l| + |j_k - j_l|)."""
    ie = [b.i for b in bf.blocks]
    je = [b.j for b in bf.blocks]
    return _kernel.closed_form(ie, je)


def compute_H(bf: BlockForm) -> tuple[int, dict[str, int]]:
    """Corner-class count H and its per-set breakdown.

    Only defined for primitive words (proper powers route through the
    multiplicity-squared law instead; NonPrimitiveInputError otherwise).
    The sets, for blocks k < l (k <= l for D2), pair the run-start lifts
    and require both a crossing (linking) and a side condition:

      C1_k: (alpha_k, alpha_l) with s_k^{i_k} != s_l^{i_l}
      C2_k: (beta_k, alpha_l) with s_k^{i_k} != inverse(s_l)^{i_l}
      D1_k: (beta_k, beta_l) with r_k^{j_k} != r_l^{j_l}
      D2_1: (alpha_1, beta_l), 1 <= l <= n, unconditionally
      D2_k: (alpha_k, beta_l), k <= l, with r_{k-1}^{j_{k-1}} != inverse(r_l)^{j_l}

    where a power inequality means the letters or the exponents differ.
    """
    raw = encode(bf.word)
    p = _kernel.smallest_period(raw)
    if p != len(raw):
        root = bf.word[:p]
        raise NonPrimitiveInputError(bf.word, root, len(raw) // p)
    H, C1, C2, D1, D2 = _kernel.h_counts(raw)
    counts: dict[str, int] = {}
    for label, per_block in (("C1", C1), ("C2", C2), ("D1", D1), ("D2", D2)):
        for k, c in enumerate(per_block):
            counts[f"{label}_{k + 1}"] = c
    return H, counts


@dataclass(frozen=True)
class Bounds:
    """Block-count bounds and the weaker parity bounds for one length."""

    lower: int
    upper: int
    parity_lower: int
    parity_upper: int


def bounds(block_count: int, length: int) -> Bounds:
    """Bounds L-n-1 <= i <= nL-n^2 plus the length-only parity bounds."""
    n, L = block_count, length
    if L % 2 == 0:
        p_lo, p_hi = L // 2 - 1, L * L // 4
    else:
        p_lo, p_hi = (L - 1) // 2, (L * L - 1) // 4
    return Bounds(lower=L - n - 1, upper=n * L - n * n,
                  parity_lower=p_lo, parity_upper=p_hi)


@dataclass(frozen=True)
class IntersectionReport:
    """Self-intersection number of a class with its full breakdown.

    ``n``, ``H``, ``closed_form`` and ``set_counts`` describe the
    primitive root; ``i = multiplicity^2 * (H + closed_form)``, and the
    bounds are the root bounds scaled the same way.  Simple classes
    (powers of one letter, or roots whose formula value is 0) have i = 0.
    """

    word: str
    root: str
    multiplicity: int
    n: int
    L: int
    H: int
    closed_form: int
    set_counts: Mapping[str, int]
    i: int
    lower_bound: int
    upper_bound: int

    def to_dict(self) -> dict:
        return {
            "word": self.word,
            "root": self.root,
            "multiplicity": self.multiplicity,
            "n": self.n,
            "L": self.L,
            "H": self.H,
            "set_counts": dict(self.set_counts),
            "closed_form": self.closed_form,
            "i": self.i,
            "bounds": {"lower": self.lower_bound, "upper": self.upper_bound},
        }


def self_intersection(word: str | CyclicWord) -> IntersectionReport:
    """Exact self-intersection number of the class of ``word``.

    The input is cyclically reduced and canonicalized, the primitive
    root extracted, the root's corner count and closed-form term added,
    and the result scaled by multiplicity squared.
    """
    if isinstance(word, CyclicWord):
        cw = word
    else:
        cw = canonical_rotation(cyclically_reduce(parse_word(word)))
    dec = primitive_root(cw)
    root = dec.root
    m = dec.multiplicity
    bf = block_form(root)
    if isinstance(bf, SimplePower):
        return IntersectionReport(
            word=cw.letters, root=root.letters, multiplicity=m,
            n=0, L=len(cw), H=0, closed_form=0, set_counts={},
            i=0, lower_bound=0, upper_bound=0,
        )
    H, counts = compute_H(bf)
    cf = closed_form_term(bf)
    i0 = H + cf
    root_bounds = bounds(bf.n, bf.length)
    return IntersectionReport(
        word=cw.letters, root=root.letters, multiplicity=m,
        n=bf.n, L=len(cw), H=H, closed_form=cf, set_counts=counts,
        i=m * m * i0,
        lower_bound=m * m * root_bounds.lower,
        upper_bound=m * m * root_bounds.upper,
    )
