"""Specialization at q = 1 and the spin-character bookkeeping.

Basis vectors with a repeated part span the null space of the natural form
at q = 1 ("ghosts") and are dropped by the quotient map; a surviving strict
label lam contributes on the self-associate character basis with the
power-of-two scale 2^(b(lam) - a_p(lam)).  Character vectors are plain dicts
{strict partition: coefficient}.  The classical part-replacement action is
kept alongside as an independent cross-check of the q = 1 quotient.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .fock import FockVector
from .canonical import CanonicalBasis, a_vector
from . import partitions as pt
from . import crystal


def is_ghost(lam) -> bool:
    """Labels with a repeated part die in the q = 1 quotient."""
    return not pt.is_strict(lam)


def dp_sign(lam) -> int:
    """+1 when the number of even parts is even (self-associate class)."""
    return -1 if sum(1 for p in lam if p % 2 == 0) % 2 else 1


def character_image(p: int, vec: FockVector) -> dict:
    """Push a Fock vector to the character space at q = 1.

    Ghost labels are dropped; a strict label lam with coefficient c(q) maps
    to 2^(b(lam) - a_p(lam)) * c(1) on the self-associate character of lam.
    """
    pt.check_h(p)
    out = {}
    for lam, value in vec.at_one().items():
        if is_ghost(lam):
            continue
        e = pt.b_exponent(lam) - pt.a_h(p, lam)
        if e < 0:
            raise ValueError(f"negative two-power exponent at {lam}")
        out[lam] = (2 ** e) * value
    return out


def strip_two_power(cv: dict) -> dict:
    """Divide out the largest power of 2 dividing all coefficients."""
    if not cv:
        raise ValueError("cannot normalize the zero character vector")

    def val2(x):
        x = abs(x)
        k = 0
        while x % 2 == 0:
            x //= 2
            k += 1
        return k

    k = min(val2(v) for v in cv.values())
    return {lam: v // (2 ** k) for lam, v in cv.items()}


@dataclass(frozen=True)
class ReducedMatrix:
    """Columns over DPR_p(m), rows over all strict partitions of m."""

    p: int
    m: int
    labels: tuple
    columns: dict

    def row_labels(self) -> list:
        return pt.enumerate_dp(self.m)

    def entry(self, lam, mu) -> int:
        return self.columns[tuple(mu)].get(tuple(lam), 0)

    def __eq__(self, other):
        return (isinstance(other, ReducedMatrix)
                and (self.p, self.m, self.labels) == (other.p, other.m, other.labels)
                and self.columns == other.columns)

    def negative_entries(self) -> list:
        """Witnesses against the projective-character interpretation."""
        return [(lam, mu) for mu in self.labels
                for lam, v in self.columns[mu].items() if v < 0]

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "columns": [
                {
                    "label": list(mu),
                    "entries": [
                        {"row": list(lam), "value": self.columns[mu][lam]}
                        for lam in sorted(self.columns[mu], reverse=True)
                    ],
                }
                for mu in self.labels
            ],
        }

    def render_table(self) -> str:
        rows = self.row_labels()
        heads = [pt.format_partition(mu) for mu in self.labels]
        cells = [[str(self.entry(lam, mu)) for mu in self.labels] for lam in rows]
        name_w = max((len(f"<{pt.format_partition(r)[1:-1]}>") for r in rows), default=2)
        widths = [max([len(heads[j])] + [len(row[j]) for row in cells])
                  for j in range(len(heads))]
        lines = [" " * name_w + "  " +
                 "  ".join(hd.ljust(w) for hd, w in zip(heads, widths))]
        for lam, row in zip(rows, cells):
            label = f"<{pt.format_partition(lam)[1:-1]}>"
            lines.append(label.ljust(name_w) + "  " +
                         "  ".join(c.ljust(w) for c, w in zip(row, widths)))
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([""] + [pt.format_partition(mu) for mu in self.labels])
        for lam in self.row_labels():
            w.writerow([pt.format_partition(lam)] +
                       [str(self.entry(lam, mu)) for mu in self.labels])
        return buf.getvalue()


def reduced_matrix(p: int, m: int, solver: CanonicalBasis = None) -> ReducedMatrix:
    """Conjectural reduced decomposition matrix: normalized q = 1 columns.

    p is only required to be odd; the representation-theoretic reading needs
    p prime, but the computation is uniform.
    """
    solver = solver or CanonicalBasis(p)
    M = solver.matrix(m)
    cols = {}
    for mu in M.labels:
        cv = character_image(p, M.columns[mu])
        cols[mu] = strip_two_power(cv) if cv else {}
    return ReducedMatrix(p, m, M.labels, cols)


# -- external decomposition-matrix fixtures ---------------------------------

@dataclass(frozen=True)
class ExternalMatrix:
    """Raw decomposition matrix with possibly paired rows and columns.

    Labels are (partition, primed) pairs; primed marks the associate twin.
    """

    row_labels: tuple
    col_labels: tuple
    entries: tuple          # tuple of row tuples of ints


def parse_external_csv(text: str) -> ExternalMatrix:
    """Read the CSV fixture format: primes marked by a trailing apostrophe."""

    def parse_label(s):
        s = s.strip()
        primed = s.endswith("'")
        return pt.parse_partition(s.rstrip("'")), primed

    rows = [r for r in csv.reader(io.StringIO(text)) if any(c.strip() for c in r)]
    col_labels = tuple(parse_label(c) for c in rows[0][1:])
    row_labels = []
    entries = []
    for r in rows[1:]:
        row_labels.append(parse_label(r[0]))
        entries.append(tuple(int(x) for x in r[1:]))
    return ExternalMatrix(tuple(row_labels), col_labels, tuple(entries))


def reduce_external_matrix(ext: ExternalMatrix, p: int) -> ReducedMatrix:
    """Sum associate column pairs and merge associate row pairs.

    A merged row pair must carry equal entries in every summed column; a
    mismatch, a pairing that contradicts the parity class of the row label,
    or a dangling prime is reported as inconsistent data.
    """
    pt.check_h(p)
    degrees = {sum(lam) for lam, _ in ext.row_labels}
    if len(degrees) != 1:
        raise ValueError("fixture rows must share one degree")
    m = degrees.pop()

    col_index = {}
    for j, (mu, _) in enumerate(ext.col_labels):
        col_index.setdefault(mu, []).append(j)
    col_bases = sorted(col_index, reverse=True)

    row_index = {}
    for i, (lam, primed) in enumerate(ext.row_labels):
        row_index.setdefault(lam, {})[primed] = i
    for lam, versions in row_index.items():
        if not pt.is_strict(lam):
            raise ValueError(f"row label {lam} is not strict")
        paired = len(versions) == 2
        if paired != (dp_sign(lam) < 0):
            raise ValueError(f"row {lam}: pairing contradicts its parity class")

    columns = {}
    for mu in col_bases:
        col = {}
        for lam, versions in row_index.items():
            summed = {primed: sum(ext.entries[i][j] for j in col_index[mu])
                      for primed, i in versions.items()}
            if len(summed) == 2:
                plain, primed = summed[False], summed[True]
                if plain != primed:
                    raise ValueError(
                        f"row pair {lam}: unequal merged entries {plain} != {primed}")
                value = plain
            else:
                value = next(iter(summed.values()))
            if value:
                col[lam] = value
        columns[mu] = col
    return ReducedMatrix(p, m, tuple(col_bases), columns)


# -- classical part-replacement action ---------------------------------------

def f_infinity(j: int, v: dict) -> dict:
    """Replace a part j by j+1 in each label (j = 0 appends a part 1).

    Labels acquiring a repeated part die.  Coefficients pass through
    unchanged, so ints and Fractions both work.
    """
    if j < 0:
        raise ValueError("letter index must be >= 0")
    out = {}
    for lam, c in v.items():
        if j == 0:
            if 1 in lam:
                continue
            mu = tuple(sorted(lam + (1,), reverse=True))
        else:
            if j not in lam or j + 1 in lam:
                continue
            mu = tuple(sorted([p + 1 if p == j else p for p in lam], reverse=True))
        out[mu] = out.get(mu, 0) + c
        if not out[mu]:
            del out[mu]
    return out


def e_infinity(j: int, v: dict) -> dict:
    """Replace a part j+1 by j in each label (j = 0 deletes a part 1)."""
    if j < 0:
        raise ValueError("letter index must be >= 0")
    out = {}
    for lam, c in v.items():
        if j + 1 not in lam:
            continue
        if j > 0 and j in lam:
            continue
        mu = tuple(sorted([p for p in lam if p != j + 1] + ([j] if j else []),
                          reverse=True))
        out[mu] = out.get(mu, 0) + c
        if not out[mu]:
            del out[mu]
    return out


def classical_f(p: int, i: int, v: dict) -> dict:
    """Affine lowering on the classical side: sum of f_infinity over the class."""
    n = pt.rank(p)
    if not 0 <= i <= n:
        raise ValueError(f"color {i} out of range 0..{n}")
    targets = {(n - i) % p, (n + i) % p}
    out = {}
    for lam, c in v.items():
        for j in set(lam) | {0}:
            if j % p in targets:
                for mu, a in f_infinity(j, {lam: c}).items():
                    out[mu] = out.get(mu, 0) + a
                    if not out[mu]:
                        del out[mu]
    return out


def classical_e(p: int, i: int, v: dict) -> dict:
    """Affine raising on the classical side.

    For i < n the sum runs over indices j = n-i, n+i mod p (each replacing a
    part j+1 by j); for i = n the index j = 0 enters once and every positive
    j = 0, -1 mod p enters with multiplicity 2.
    """
    n = pt.rank(p)
    if not 0 <= i <= n:
        raise ValueError(f"color {i} out of range 0..{n}")
    out = {}
    for lam, c in v.items():
        for x in lam:
            j = x - 1
            if i == n:
                if j == 0:
                    mult = 1
                elif j % p in (0, p - 1):
                    mult = 2
                else:
                    continue
            else:
                if j % p in ((n - i) % p, (n + i) % p):
                    mult = 1
                else:
                    continue
            for mu, a in e_infinity(j, {lam: c}).items():
                out[mu] = out.get(mu, 0) + mult * a
                if not out[mu]:
                    del out[mu]
    return out


def induce(v: dict) -> dict:
    """Degree-raising induction: the sum of all f_infinity."""
    out = {}
    for lam, c in v.items():
        for j in set(lam) | {0}:
            for mu, a in f_infinity(j, {lam: c}).items():
                out[mu] = out.get(mu, 0) + a
                if not out[mu]:
                    del out[mu]
    return out


def restrict(v: dict) -> dict:
    """Degree-lowering restriction: e_infinity(0) + 2 * sum_{j>0} e_infinity(j)."""
    out = {}
    for lam, c in v.items():
        for x in lam:
            j = x - 1
            mult = 1 if j == 0 else 2
            for mu, a in e_infinity(j, {lam: c}).items():
                out[mu] = out.get(mu, 0) + mult * a
                if not out[mu]:
                    del out[mu]
    return out


def classical_image(p: int, vec: FockVector) -> dict:
    """Quotient map at q = 1 onto the classical P-basis.

    A strict label lam maps to 2^(-a_p(lam)) P_lam; ghosts map to zero.
    Coefficients are exact Fractions.
    """
    pt.check_h(p)
    out = {}
    for lam, value in vec.at_one().items():
        if is_ghost(lam):
            continue
        out[lam] = Fraction(value, 2 ** pt.a_h(p, lam))
    return out


# -- counting and rank reports ------------------------------------------------

def odd_series_coefficients(p: int, max_m: int) -> list:
    """Coefficients of prod over odd i not divisible by p of 1/(1 - t^i)."""
    pt.check_h(p)
    coeffs = [0] * (max_m + 1)
    coeffs[0] = 1
    for i in range(1, max_m + 1, 2):
        if i % p == 0:
            continue
        for m in range(i, max_m + 1):
            coeffs[m] += coeffs[m - i]
    return coeffs


@dataclass(frozen=True)
class CountReport:
    p: int
    max_m: int
    regular_counts: tuple
    series_coefficients: tuple
    crystal_counts: tuple
    ok: bool


def count_consistency_report(p: int, max_m: int) -> CountReport:
    """Compare |DPR_p(m)|, the odd-part series, and crystal layer sizes."""
    reg = tuple(len(pt.enumerate_dpr_h(p, m)) for m in range(max_m + 1))
    ser = tuple(odd_series_coefficients(p, max_m))
    graph = crystal.component(p, (), max_m)
    counts = graph.degree_counts()
    cry = tuple(counts.get(m, 0) for m in range(max_m + 1))
    return CountReport(p, max_m, reg, ser, cry, reg == ser == cry)


def _rational_rank(rows: list) -> int:
    mat = [[Fraction(x) for x in row] for row in rows]
    rank_ = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank_, len(mat)) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank_], mat[pivot] = mat[pivot], mat[rank_]
        inv = 1 / mat[rank_][col]
        mat[rank_] = [x * inv for x in mat[rank_]]
        for r in range(len(mat)):
            if r != rank_ and mat[r][col]:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank_])]
        rank_ += 1
    return rank_


@dataclass(frozen=True)
class IndependenceReport:
    p: int
    m: int
    rank: int
    expected: int
    ok: bool


def independence_report(p: int, m: int) -> IndependenceReport:
    """Rank of the intermediate vectors pushed to the character space.

    The columns character_image(A(mu)) over mu in DPR_p(m) must be linearly
    independent over the rationals.
    """
    labels = pt.enumerate_dpr_h(p, m)
    rows = pt.enumerate_dp(m)
    idx = {lam: i for i, lam in enumerate(rows)}
    cols = []
    for mu in labels:
        cv = character_image(p, a_vector(p, mu))
        col = [0] * len(rows)
        for lam, v in cv.items():
            col[idx[lam]] = v
        cols.append(col)
    rank_ = _rational_rank(cols)
    return IndependenceReport(p, m, rank_, len(labels), rank_ == len(labels))
