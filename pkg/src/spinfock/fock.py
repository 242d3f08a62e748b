"""The q-deformed Fock space: wedge words, straightening, generator actions.

A basis vector is labelled by a DP_h partition; a generic vector is a finite
map from such labels to Laurent polynomials.  The lowering/raising action is
positional over the finite part of the word plus one explicit vacuum slot;
the infinite tail of u_0's only contributes through the vacuum rules.
"""

from __future__ import annotations

from .laurent import LaurentPoly, ZERO, ONE, q_factorial
from . import partitions as pt


class UncoveredDisorderError(RuntimeError):
    """A wedge word needed a commutation rule that is not available.

    The two straightening rules cover every word produced by generator
    actions; hitting this means an internal invariant broke.
    """

    def __init__(self, word):
        self.word = tuple(word)
        super().__init__(f"no straightening rule applies inside {self.word}")


class MixedWeightError(ValueError):
    """A vector whose labels carry different residue contents has no weight."""


class FockVector:
    """Finitely supported map {DP_h partition: LaurentPoly}."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for lam, poly in terms.items():
                if poly:
                    t[tuple(lam)] = poly
        self._terms = t

    @classmethod
    def zero(cls) -> "FockVector":
        return cls()

    @classmethod
    def basis(cls, lam, coeff: LaurentPoly = ONE) -> "FockVector":
        return cls({pt.check_partition(lam): coeff})

    def terms(self):
        return self._terms.items()

    def sorted_terms(self):
        """(label, coefficient) pairs in decreasing lex order of labels."""
        return [(lam, self._terms[lam]) for lam in sorted(self._terms, reverse=True)]

    def support(self) -> list:
        return sorted(self._terms, reverse=True)

    def coefficient(self, lam) -> LaurentPoly:
        return self._terms.get(tuple(lam), ZERO)

    def degree(self):
        """Common degree of the labels; None for the zero vector."""
        degs = {sum(lam) for lam in self._terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError(f"inhomogeneous vector, degrees {sorted(degs)}")
        return degs.pop()

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        return isinstance(other, FockVector) and self._terms == other._terms

    def __add__(self, other):
        t = dict(self._terms)
        for lam, poly in other._terms.items():
            s = t.get(lam, ZERO) + poly
            if s:
                t[lam] = s
            elif lam in t:
                del t[lam]
        out = FockVector.__new__(FockVector)
        out._terms = t
        return out

    def __sub__(self, other):
        return self + other.scaled(-ONE)

    def __neg__(self):
        return self.scaled(-ONE)

    def scaled(self, poly) -> "FockVector":
        if isinstance(poly, int):
            poly = LaurentPoly.const(poly)
        if not poly:
            return FockVector()
        out = FockVector.__new__(FockVector)
        out._terms = {lam: c * poly for lam, c in self._terms.items()}
        return out

    def at_one(self) -> dict:
        """Specialize q = 1; returns {label: nonzero int}."""
        out = {}
        for lam, poly in self._terms.items():
            v = poly.at_one()
            if v:
                out[lam] = v
        return out

    def to_json(self) -> dict:
        return {
            "degree": self.degree(),
            "terms": [
                {"partition": list(lam), "poly": poly.to_json()}
                for lam, poly in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "FockVector":
        return cls({
            tuple(t["partition"]): LaurentPoly.from_json(t["poly"])
            for t in obj["terms"]
        })

    def __repr__(self):
        body = " + ".join(f"({poly})|{','.join(map(str, lam))}>"
                          for lam, poly in self.sorted_terms())
        return body or "0"


# Letter-wise action tables.  j is a letter of the word, r its class mod h.
# Return codes for f/e: 0 dead, 1 unit coefficient, 2 the (q + 1/q) case.

def _f_code(h, n, i, j):
    r = j % h
    if i == n:
        if r == h - 1:
            return 1
        if r == 0:
            return 2
        return 0
    return 1 if r in ((n - i) % h, (n + i) % h) else 0


def _e_code(h, n, i, j):
    r = j % h
    if i == n:
        if r == 1:
            return 1
        if r == 0:
            return 2
        return 0
    return 1 if r in ((n + 1 - i) % h, (n + 1 + i) % h) else 0


def _t_exp(h, n, i, j):
    r = j % h
    if i == n:
        if r == h - 1:
            return 2
        if r == 1:
            return -2
        return 0
    if i == 0:
        if r == n % h:
            return 4
        if r == (n + 1) % h:
            return -4
        return 0
    if r in ((n - i) % h, (n + i) % h):
        return 2
    if r in ((n + 1 - i) % h, (n + 1 + i) % h):
        return -2
    return 0


_Q_PLUS_QINV = LaurentPoly({1: 1, -1: 1})


def straighten(word, h, rng=None):
    """Reduce a wedge word to canonical form.

    Returns (partition, swap_count) where each swap contributed a factor
    -q^2, or None when the word vanishes.  The two rules: an adjacent equal
    pair dies unless the letter is a multiple of h; an adjacent ascending
    pair (j, j+1) with j = 0 or -1 mod h swaps with the -q^2 factor.  Any
    other disorder raises UncoveredDisorderError.  `rng` randomizes which
    violation is fixed first (the result is order-independent).
    """
    w = list(word)
    swaps = 0
    while True:
        bad = [k for k in range(len(w) - 1)
               if w[k] < w[k + 1] or (w[k] == w[k + 1] and w[k] % h != 0)]
        if not bad:
            break
        k = bad[0] if rng is None else bad[rng.randrange(len(bad))]
        a, b = w[k], w[k + 1]
        if a == b:
            return None
        if b == a + 1 and a % h in (0, h - 1):
            w[k], w[k + 1] = b, a
            swaps += 1
        else:
            raise UncoveredDisorderError(word)
    while w and w[-1] == 0:
        w.pop()
    return tuple(w), swaps


def normal_order(word, h, rng=None) -> FockVector:
    """Straighten a word into a single signed term (or the zero vector)."""
    res = straighten(word, h, rng=rng)
    if res is None:
        return FockVector()
    key, swaps = res
    sign = -1 if swaps % 2 else 1
    return FockVector({key: LaurentPoly({2 * swaps: sign})})


def _accumulate(out, key, poly):
    s = out.get(key, ZERO) + poly
    if s:
        out[key] = s
    elif key in out:
        del out[key]


def apply_f(h: int, i: int, v: FockVector) -> FockVector:
    """Lowering operator f_i.

    Term k of the action raises letter k by one and twists every later
    letter (and the vacuum) by t_i; for i = n an extra term appends a part 1
    coming from the vacuum.
    """
    n = pt.rank(h)
    if not 0 <= i <= n:
        raise ValueError(f"color {i} out of range 0..{n}")
    out = {}
    for lam, c in v.terms():
        r = len(lam)
        texp = [_t_exp(h, n, i, j) for j in lam]
        # suffix[k] = t-exponent collected strictly right of position k
        suffix = [0] * (r + 1)
        suffix[r] = 1 if i == n else 0
        for k in range(r - 1, -1, -1):
            suffix[k] = suffix[k + 1] + texp[k]
        for k in range(r):
            code = _f_code(h, n, i, lam[k])
            if not code:
                continue
            res = straighten(lam[:k] + (lam[k] + 1,) + lam[k + 1:], h)
            if res is None:
                continue
            key, swaps = res
            poly = c.shifted(suffix[k + 1] + 2 * swaps)
            if swaps % 2:
                poly = -poly
            if code == 2:
                poly = poly * _Q_PLUS_QINV
            _accumulate(out, key, poly)
        if i == n:
            res = straighten(lam + (1,), h)
            if res is not None:
                key, swaps = res
                poly = c.shifted(2 * swaps)
                if swaps % 2:
                    poly = -poly
                _accumulate(out, key, poly)
    return FockVector(out)


def apply_e(h: int, i: int, v: FockVector) -> FockVector:
    """Raising operator e_i; letters left of the acted one pick up 1/t_i."""
    n = pt.rank(h)
    if not 0 <= i <= n:
        raise ValueError(f"color {i} out of range 0..{n}")
    out = {}
    for lam, c in v.terms():
        prefix = 0
        for k in range(len(lam)):
            code = _e_code(h, n, i, lam[k])
            if code:
                res = straighten(lam[:k] + (lam[k] - 1,) + lam[k + 1:], h)
                if res is not None:
                    key, swaps = res
                    poly = c.shifted(prefix + 2 * swaps)
                    if swaps % 2:
                        poly = -poly
                    if code == 2:
                        poly = poly * _Q_PLUS_QINV
                    _accumulate(out, key, poly)
            prefix -= _t_exp(h, n, i, lam[k])
    return FockVector(out)


def apply_t(h: int, i: int, v: FockVector, inverse: bool = False) -> FockVector:
    """Torus element t_i (or its inverse): scales each label by a q power."""
    n = pt.rank(h)
    if not 0 <= i <= n:
        raise ValueError(f"color {i} out of range 0..{n}")
    out = {}
    for lam, c in v.terms():
        e = sum(_t_exp(h, n, i, j) for j in lam) + (1 if i == n else 0)
        out[lam] = c.shifted(-e if inverse else e)
    return FockVector(out)


def apply_t_inv(h: int, i: int, v: FockVector) -> FockVector:
    return apply_t(h, i, v, inverse=True)


def apply_f_divided(h: int, i: int, k: int, v: FockVector) -> FockVector:
    """Divided power f_i^(k): iterate f_i then divide by [k]_i! exactly.

    Non-divisibility raises ExactDivisionError; that always indicates a bug
    upstream, never legitimate data.
    """
    if k < 1:
        raise ValueError("divided power needs k >= 1")
    n = pt.rank(h)
    for _ in range(k):
        v = apply_f(h, i, v)
    if k == 1:
        return v
    fact = q_factorial(k, i, n)
    return FockVector({lam: c.exact_div(fact) for lam, c in v.terms()})


def weight(h: int, v: FockVector) -> tuple:
    """Common residue content of the labels of a nonzero vector."""
    if not v:
        raise ValueError("the zero vector has no weight")
    contents = {pt.residue_content(h, lam) for lam, _ in v.terms()}
    if len(contents) > 1:
        raise MixedWeightError(f"labels carry {len(contents)} distinct contents")
    return contents.pop()


def norm_squared(h: int, lam) -> LaurentPoly:
    """Diagonal value of the natural bilinear form on a basis vector.

    Product over part values divisible by h of prod_{i<=mult} (1 - (-q^2)^i);
    vanishes at q = 1 exactly for labels with a repeated part.
    """
    lam = pt.check_partition(lam)
    if not pt.in_dp_h(h, lam):
        raise ValueError(f"{lam} is not a DP_{h} partition")
    out = ONE
    mult = {}
    for p in lam:
        if p % h == 0:
            mult[p] = mult.get(p, 0) + 1
    for _, m in sorted(mult.items()):
        for i in range(1, m + 1):
            sign = -1 if i % 2 == 0 else 1
            out = out * LaurentPoly({0: 1, 2 * i: sign})
    return out
