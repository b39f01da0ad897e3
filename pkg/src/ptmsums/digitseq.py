"""Base-k digit functions and sequences defined by a digit recurrence.

A :class:`SeqSpec` describes a vector-valued sequence with

    u(k*i + j) = P u(i) + j q,   0 <= j < k,   u(0) = 0.
"""

import json
from dataclasses import dataclass, field
from functools import cached_property

from .algebra import as_matrix, as_vector, block_diag, matvec, normalize


def digits(i, k):
    """Base-``k`` digits of ``i``, least significant first; ``digits(0, k) == []``."""
    if k < 2:
        raise ValueError(f"base must be at least 2, got {k}")
    if i < 0:
        raise ValueError("digits of a negative integer")
    out = []
    while i:
        i, r = divmod(i, k)
        out.append(r)
    return out


def digit_sum(i, k):
    return sum(digits(i, k))


def count_digit(k, l, i):
    """N_k(l, i): occurrences of digit ``l`` in the base-``k`` expansion of ``i``."""
    if not 0 <= l < k:
        raise ValueError(f"digit {l} out of range for base {k}")
    return digits(i, k).count(l)


def nkv(k, v, i):
    """Total number of base-``k`` digits of ``i`` that belong to the digit set ``v``.

    ``v`` may be a :class:`~ptmsums.prouhet.DigitTuple` or any iterable of digits;
    in the latter case it is validated against ``k = 2b``.
    """
    from .prouhet import DigitTuple

    if not isinstance(v, DigitTuple):
        v = DigitTuple(tuple(v))
    if v.k != k:
        raise ValueError(f"digit tuple of length {v.b} needs base {v.k}, got {k}")
    ds = v.digit_set
    return sum(1 for d in digits(i, k) if d in ds)


def ptm_sign(i):
    """Thue-Morse sign (-1)**s_2(i)."""
    return -1 if bin(i).count("1") & 1 else 1


@dataclass(frozen=True)
class SeqSpec:
    """Recurrence data (k, P, q).  ``P`` is a dim x dim rational matrix."""

    k: int
    P: tuple
    q: tuple
    _powers: list = field(default_factory=list, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "P", as_matrix(self.P))
        object.__setattr__(self, "q", as_vector(self.q))
        if not isinstance(self.k, int) or self.k < 2:
            raise ValueError(f"base k must be an integer >= 2, got {self.k!r}")
        n = len(self.q)
        if n < 1:
            raise ValueError("q must have at least one coordinate")
        if len(self.P) != n or any(len(row) != n for row in self.P):
            raise ValueError(f"P must be {n}x{n} to match q")

    @property
    def dim(self):
        return len(self.q)

    def Pjq(self, j):
        """P^j(q) as a coordinate vector (memoized)."""
        pw = self._powers
        if not pw:
            pw.append(self.q)
        while len(pw) <= j:
            pw.append(matvec(self.P, pw[-1]))
        return pw[j]

    @cached_property
    def variables(self):
        return tuple(f"v{i + 1}" for i in range(self.dim))

    def to_dict(self):
        return {
            "k": self.k,
            "dim": self.dim,
            "P": [[str(x) for x in row] for row in self.P],
            "q": [str(x) for x in self.q],
        }

    @classmethod
    def from_dict(cls, data):
        spec = cls(int(data["k"]), data["P"], data["q"])
        if "dim" in data and int(data["dim"]) != spec.dim:
            raise ValueError(f"dim {data['dim']} does not match q of length {spec.dim}")
        return spec

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


def eval_u(spec, i):
    """u(i) = sum_j d_j P^j(q) over the base-k digits d_j of i."""
    if i < 0:
        raise ValueError("index must be nonnegative")
    acc = [0] * spec.dim
    for j, d in enumerate(digits(i, spec.k)):
        if d:
            for c, x in enumerate(spec.Pjq(j)):
                acc[c] += d * x
    return tuple(normalize(x) for x in acc)


def as_poly(spec, i, ring):
    """u(i) as the linear form sum_c u(i)_c * v_c in ``ring``."""
    return ring.linear_form(eval_u(spec, i), spec.variables)


def sequence_table(spec, n):
    """Lists ``(u(i), s_k(i))`` for all ``0 <= i < k**n``, built level by level."""
    k, P, q = spec.k, spec.P, spec.q
    us = [(0,) * spec.dim]
    ss = [0]
    for _ in range(n):
        new_u, new_s = [], []
        for u, s in zip(us, ss):
            pu = matvec(P, u)
            for j in range(k):
                new_u.append(pu if j == 0 else tuple(normalize(a + j * b) for a, b in zip(pu, q)))
                new_s.append(s + j)
        us, ss = new_u, new_s
    return us, ss


def direct_sum(*specs):
    """Spec of the tuple sequence (u_1, ..., u_r); all parts must share the base."""
    if not specs:
        raise ValueError("direct_sum needs at least one spec")
    k = specs[0].k
    if any(s.k != k for s in specs):
        raise ValueError("direct sum needs a common base k")
    P, q = specs[0].P, specs[0].q
    for s in specs[1:]:
        P = block_diag(P, s.P)
        q = q + s.q
    return SeqSpec(k, P, q)


PRESETS = ("n", "s2", "s2+n")


def preset(name, k=2):
    """Named specs: ``n`` (u(i) = i), ``s2`` (digit sum), ``s2+n`` (their direct sum)."""
    if name == "n":
        return SeqSpec(k, [[k]], [1])
    if name == "s2":
        return SeqSpec(k, [[1]], [1])
    if name == "s2+n":
        return direct_sum(preset("s2", k), preset("n", k))
    raise ValueError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")
