"""Truncated multivariate polynomials in power-sum-style variable families.

A :class:`SeriesPoly` carries one or more families of commuting variables
(t_k, or p^{(a)}_k).  Since the variables within a family commute, a monomial
is just a partition recording which indices occur; a term key is one
partition per family.  The weighted degree of a monomial is the weight of its
partition (the variable with index k has weight k), and every family has a
weighted-degree cutoff beyond which terms are dropped.
"""

from fractions import Fraction

from .partitions import multiplicities, union, weight
from .qscalar import QRing, QScalar


class SeriesPoly:
    """Sparse truncated polynomial with QScalar coefficients."""

    __slots__ = ("ring", "families", "cutoffs", "terms")

    def __init__(self, ring: QRing, families, cutoffs, terms=None):
        self.ring = ring
        self.families = tuple(families)
        self.cutoffs = tuple(cutoffs)
        if len(self.families) != len(self.cutoffs):
            raise ValueError("one cutoff per family")
        self.terms: dict = {}
        if terms:
            for key, coeff in terms.items():
                self._accumulate(key, coeff)

    def _within(self, key) -> bool:
        return all(weight(p) <= c for p, c in zip(key, self.cutoffs))

    def _accumulate(self, key, coeff):
        key = tuple(tuple(p) for p in key)
        if not self._within(key):
            return
        if key in self.terms:
            coeff = self.terms[key] + coeff
        if isinstance(coeff, (int, Fraction)):
            coeff = self.ring.from_fraction(coeff)
        if coeff.exact and coeff.is_zero_on_window():
            self.terms.pop(key, None)
        else:
            self.terms[key] = coeff

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, ring, families, cutoffs):
        return cls(ring, families, cutoffs, {})

    @classmethod
    def one(cls, ring, families, cutoffs):
        key = tuple(() for _ in families)
        return cls(ring, families, cutoffs, {key: ring.one()})

    @classmethod
    def variable(cls, ring, families, cutoffs, family_index: int, k: int, coeff=1):
        key = tuple((k,) if i == family_index else () for i in range(len(families)))
        return cls(ring, families, cutoffs, {key: ring.from_fraction(coeff)})

    def _like(self, terms=None):
        return SeriesPoly(self.ring, self.families, self.cutoffs, terms)

    # -- arithmetic -------------------------------------------------------------

    def _check(self, other):
        if self.families != other.families or self.cutoffs != other.cutoffs:
            raise ValueError("SeriesPoly shape mismatch")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, QScalar)):
            other = self._like({tuple(() for _ in self.families): other})
        self._check(other)
        out = self._like(self.terms)
        for key, coeff in other.terms.items():
            out._accumulate(key, coeff)
        return out

    __radd__ = __add__

    def __neg__(self):
        return self._like({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, QScalar)):
            other = self._like({tuple(() for _ in self.families): other})
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QScalar)):
            out = self._like()
            for key, coeff in self.terms.items():
                out._accumulate(key, coeff * other)
            return out
        self._check(other)
        out = self._like()
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                key = tuple(union(pa, pb) for pa, pb in zip(ka, kb))
                if out._within(key):
                    out._accumulate(key, ca * cb)
        return out

    __rmul__ = __mul__

    def constant_term(self) -> QScalar:
        return self.terms.get(tuple(() for _ in self.families), self.ring.zero())

    def min_weight_nonconstant(self) -> int:
        w = None
        for key in self.terms:
            tw = sum(weight(p) for p in key)
            if tw > 0 and (w is None or tw < w):
                w = tw
        return w if w is not None else 10**9

    def exp(self) -> "SeriesPoly":
        """exp of a series with zero constant term, truncated by the cutoffs."""
        const = self.constant_term()
        if not (const.exact and const.is_zero_on_window()):
            raise ValueError("exp needs zero constant term")
        bound = sum(self.cutoffs)
        step = self.min_weight_nonconstant()
        out = SeriesPoly.one(self.ring, self.families, self.cutoffs)
        power = SeriesPoly.one(self.ring, self.families, self.cutoffs)
        fact = 1
        j = 1
        while j * step <= bound:
            power = power * self
            fact *= j
            if not power.terms:
                break
            out = out + power * Fraction(1, fact)
            j += 1
        return out

    def log(self) -> "SeriesPoly":
        """log of a series with constant term 1."""
        const = self.constant_term()
        if const.compare(self.ring.one()).status != "pass":
            raise ValueError("log needs constant term 1")
        u = self - self.ring.one()
        bound = sum(self.cutoffs)
        step = u.min_weight_nonconstant()
        out = SeriesPoly.zero(self.ring, self.families, self.cutoffs)
        power = SeriesPoly.one(self.ring, self.families, self.cutoffs)
        j = 1
        while j * step <= bound:
            power = power * u
            if not power.terms:
                break
            out = out + power * Fraction((-1) ** (j + 1), j)
            j += 1
        return out

    def diff(self, family_index: int, k: int) -> "SeriesPoly":
        """Partial derivative in variable k of the given family."""
        out = self._like()
        for key, coeff in self.terms.items():
            p = key[family_index]
            mult = multiplicities(p).get(k, 0)
            if not mult:
                continue
            rest = list(p)
            rest.remove(k)
            new_key = tuple(tuple(rest) if i == family_index else kp for i, kp in enumerate(key))
            out._accumulate(new_key, coeff * mult)
        return out

    def coefficient(self, key) -> QScalar:
        return self.terms.get(tuple(tuple(p) for p in key), self.ring.zero())

    def map_keys(self, fn, families=None, cutoffs=None) -> "SeriesPoly":
        """Rebuild with ``fn(key, coeff) -> iterable of (new_key, new_coeff)``."""
        out = SeriesPoly(
            self.ring,
            families if families is not None else self.families,
            cutoffs if cutoffs is not None else self.cutoffs,
        )
        for key, coeff in self.terms.items():
            for new_key, new_coeff in fn(key, coeff):
                out._accumulate(new_key, new_coeff)
        return out

    def compare(self, other, min_width=None):
        """Worst window comparison across the union of term keys."""
        from .qscalar import WindowComparison

        self._check(other)
        worst = WindowComparison("pass", None, None, False)
        for key in sorted(set(self.terms) | set(other.terms)):
            cmp = self.coefficient(key).compare(other.coefficient(key), min_width)
            if cmp.status == "fail":
                return cmp
            if cmp.status == "inconclusive":
                worst = cmp
        return worst

    # -- presentation ---------------------------------------------------------

    def sorted_terms(self):
        return sorted(
            self.terms.items(),
            key=lambda kv: (sum(weight(p) for p in kv[0]), kv[0]),
        )

    def to_json(self) -> dict:
        terms = []
        for key, coeff in self.sorted_terms():
            exps = [{str(k): m for k, m in sorted(multiplicities(p).items())} for p in key]
            entry = {"exps": exps[0] if len(self.families) == 1 else exps, "coeff": coeff.to_json()}
            terms.append(entry)
        out = {
            "family" if len(self.families) == 1 else "families": (
                self.families[0] if len(self.families) == 1 else list(self.families)
            ),
            "cutoff" if len(self.families) == 1 else "cutoffs": (
                self.cutoffs[0] if len(self.families) == 1 else list(self.cutoffs)
            ),
            "terms": terms,
        }
        return out

    def __repr__(self):
        parts = []
        for key, coeff in self.sorted_terms()[:6]:
            mono = " ".join(
                f"{fam}_{p}" for fam, p in zip(self.families, key) if p
            ) or "1"
            parts.append(f"({coeff!r})*{mono}")
        more = " + ..." if len(self.terms) > 6 else ""
        return " + ".join(parts) + more if parts else "0"
