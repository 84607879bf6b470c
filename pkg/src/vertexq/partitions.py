"""Partitions, Young-diagram combinatorics, ribbons, Maya diagrams, characters.

A partition is represented as a tuple of weakly decreasing positive integers;
the empty partition is ``()``.  Tuples are hashable and cheap, so they double
as dictionary keys throughout the package.  All functions here are pure and
memoized results are immutable, so concurrent use is safe.
"""

from functools import cache, lru_cache

from .errors import WeightMismatchError
from . import mutations

Partition = tuple  # alias for readability in signatures


def as_partition(seq) -> tuple:
    """Validate and normalize ``seq`` into a partition tuple.

    Trailing zeros are stripped; anything not weakly decreasing or containing
    a negative part is rejected.
    """
    parts = [int(x) for x in seq]
    while parts and parts[-1] == 0:
        parts.pop()
    mu = tuple(parts)
    if any(p <= 0 for p in mu):
        raise ValueError(f"partition parts must be positive: {seq!r}")
    if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {seq!r}")
    return mu


def weight(mu: tuple) -> int:
    return sum(mu)


def conjugate(mu: tuple) -> tuple:
    """Transpose of the Young diagram."""
    if not mu:
        return ()
    return tuple(sum(1 for p in mu if p >= j) for j in range(1, mu[0] + 1))


def kappa(mu: tuple) -> int:
    """Second Casimir invariant sum mu_i (mu_i - 2i + 1); kappa(t(mu)) = -kappa(mu)."""
    return sum(p * (p - 2 * i - 1) for i, p in enumerate(mu))


def multiplicities(mu: tuple) -> dict:
    m = {}
    for p in mu:
        m[p] = m.get(p, 0) + 1
    return m


def z_mu(mu: tuple) -> int:
    """Order of the centralizer of a permutation of cycle type mu."""
    z = 1
    for i, m in multiplicities(mu).items():
        z *= _factorial(m) * i**m
    return z


def aut_size(mu: tuple) -> int:
    a = 1
    for m in multiplicities(mu).values():
        a *= _factorial(m)
    return a


@cache
def _factorial(n: int) -> int:
    return 1 if n <= 1 else n * _factorial(n - 1)


def union(mu: tuple, nu: tuple) -> tuple:
    """Multiset union of the parts, re-sorted descending."""
    return tuple(sorted(mu + nu, reverse=True))


def double(xi: tuple) -> tuple:
    """(xi_i) -> (2 xi_i)."""
    return tuple(2 * p for p in xi)


def contains(mu: tuple, nu: tuple) -> bool:
    """True iff nu is contained in mu as Young diagrams."""
    if len(nu) > len(mu):
        return False
    return all(mu[i] >= nu[i] for i in range(len(nu)))


@cache
def partitions_of(n: int) -> tuple:
    """All partitions of weight n, in descending lexicographic order."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(maxpart, remaining), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


def partitions_up_to(n: int) -> tuple:
    """All partitions of weight <= n, weight-major then descending lex."""
    out = []
    for w in range(n + 1):
        out.extend(partitions_of(w))
    return tuple(out)


@cache
def subpartitions(mu: tuple) -> tuple:
    """All partitions contained in mu, descending lex within each weight."""
    found = set()

    def rec(i, row_max, prefix):
        found.add(tuple(prefix))
        if i >= len(mu):
            return
        for p in range(min(mu[i], row_max), 0, -1):
            prefix.append(p)
            rec(i + 1, p, prefix)
            prefix.pop()

    rec(0, mu[0] if mu else 0, [])
    return tuple(sorted(found, key=lambda la: (sum(la), tuple(-p for p in la))))


@lru_cache(maxsize=None)
def superpartitions(mu: tuple, max_weight: int) -> tuple:
    """All partitions containing mu with weight <= max_weight."""
    out = []
    for w in range(weight(mu), max_weight + 1):
        out.extend(la for la in partitions_of(w) if contains(la, mu))
    return tuple(out)


# ---------------------------------------------------------------------------
# Maya diagrams


class MayaDiagram:
    """The bead set {mu_i - i : i >= 1}, stored as its deviation from the vacuum.

    The vacuum (empty partition) occupies every negative position.  ``added``
    holds occupied positions >= 0 and ``removed`` the vacated negative ones;
    both sets always have equal size (charge zero).
    """

    __slots__ = ("added", "removed")

    def __init__(self, added, removed):
        self.added = frozenset(added)
        self.removed = frozenset(removed)
        if len(self.added) != len(self.removed):
            raise ValueError("charge-0 Maya diagram needs |added| == |removed|")

    @classmethod
    def from_partition(cls, mu: tuple) -> "MayaDiagram":
        beads = {mu[i] - (i + 1) for i in range(len(mu))}
        added = {b for b in beads if b >= 0}
        # positions -1..-len(mu) not hit by a bead were vacated
        removed = {-(i + 1) for i in range(len(mu))} - beads
        return cls(added, removed)

    def occupied(self, pos: int) -> bool:
        if pos >= 0:
            return pos in self.added
        return pos not in self.removed

    def to_partition(self) -> tuple:
        """Inverse of ``from_partition``; round trip is the identity."""
        positions = sorted(self.added | {p for p in range(-1, min(self.removed, default=0) - 1, -1) if self.occupied(p)}, reverse=True)
        parts = [pos + i + 1 for i, pos in enumerate(positions)]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p < 0 for p in parts):
            raise ValueError("inconsistent Maya diagram")
        return tuple(parts)

    def __eq__(self, other):
        return self.added == other.added and self.removed == other.removed

    def __hash__(self):
        return hash((self.added, self.removed))

    def __repr__(self):
        return f"MayaDiagram(added={sorted(self.added)}, removed={sorted(self.removed)})"


def _bead_window(alpha: tuple, k: int):
    """Occupied flags for Maya positions lo..hi covering every possible k-move."""
    l = len(alpha)
    lo = -(l + k + 2)
    hi = (alpha[0] if alpha else 0) + k + 2
    beads = {alpha[i] - (i + 1) for i in range(l)}
    occ = {}
    for pos in range(lo, hi + 1):
        if pos >= -l:
            occ[pos] = pos in beads
        else:
            occ[pos] = True  # deep sea
    return occ, lo, hi


def _move_bead(alpha: tuple, src: int, dst: int) -> tuple:
    """Partition obtained by moving the Maya bead at src to the free slot dst."""
    l = len(alpha)
    n = max(l + abs(src - dst) + 2, abs(dst) + 2, l + 2)
    beads = [alpha[i] - (i + 1) if i < l else -(i + 1) for i in range(n)]
    i = beads.index(src)
    beads[i] = dst
    beads.sort(reverse=True)
    parts = [b + i + 1 for i, b in enumerate(beads)]
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def ribbons_removable(alpha: tuple, k: int) -> tuple:
    """All (beta, sign) with alpha/beta a ribbon of length k.

    Implemented as Maya bead moves by -k; the sign is (-1)^{height} where the
    height counts the beads jumped over.
    """
    if k < 1:
        raise ValueError("ribbon length must be >= 1")
    occ, lo, hi = _bead_window(alpha, k)
    out = []
    for src in range(lo + k, hi + 1):
        if occ[src] and not occ[src - k]:
            height = sum(1 for p in range(src - k + 1, src) if occ[p])
            sign = 1 if mutations.is_active("drop-sign") else (-1) ** height
            out.append((_move_bead(alpha, src, src - k), sign))
    out.sort(key=lambda bs: tuple(-p for p in bs[0]))
    return tuple(out)


def ribbons_addable(alpha: tuple, k: int) -> tuple:
    """All (beta, sign) with beta/alpha a ribbon of length k (Maya moves by +k)."""
    if k < 1:
        raise ValueError("ribbon length must be >= 1")
    occ, lo, hi = _bead_window(alpha, k)
    out = []
    for src in range(lo, hi - k + 1):
        if occ[src] and not occ[src + k]:
            height = sum(1 for p in range(src + 1, src + k) if occ[p])
            sign = 1 if mutations.is_active("drop-sign") else (-1) ** height
            out.append((_move_bead(alpha, src, src + k), sign))
    out.sort(key=lambda bs: tuple(-p for p in bs[0]))
    return tuple(out)


def ribbon_set(alpha: tuple, k: int) -> tuple:
    """R_{k,alpha}: removals of length k for k >= 1, additions of length -k for k <= -1."""
    if k == 0:
        raise ValueError("k must be nonzero")
    return ribbons_removable(alpha, k) if k >= 1 else ribbons_addable(alpha, -k)


def ribbon_height(outer: tuple, inner: tuple) -> int:
    """Height of the ribbon outer/inner: occupied rows minus one."""
    rows = [i for i in range(len(outer)) if outer[i] > (inner[i] if i < len(inner) else 0)]
    if not rows:
        raise ValueError("empty skew shape is not a ribbon")
    return rows[-1] - rows[0]


def hooks(l: int) -> tuple:
    """The hook partitions (1^{l-j} j) of weight l, j = 1..l."""
    return tuple((j,) + (1,) * (l - j) for j in range(1, l + 1))


# ---------------------------------------------------------------------------
# Symmetric-group characters (Murnaghan-Nakayama)


@lru_cache(maxsize=None)
def character(mu: tuple, nu: tuple) -> int:
    """chi_mu(nu) by ribbon-removal recursion on the largest part of nu."""
    if weight(mu) != weight(nu):
        raise WeightMismatchError(
            f"|mu|={weight(mu)} but |nu|={weight(nu)}: not a conjugacy class of the same group"
        )
    if not mu:
        return 1
    r = nu[0]
    rest = nu[1:]
    total = 0
    for beta, sign in ribbons_removable(mu, r):
        if mutations.is_active("mn-off-by-one"):
            sign = -sign
        total += sign * character(beta, rest)
    return total


mutations.register_cache(character.cache_clear)
