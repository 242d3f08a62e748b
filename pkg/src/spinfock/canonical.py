"""Canonical basis of the vacuum component, by triangular reduction.

For each h-regular label mu an intermediate bar-invariant vector A(mu) is
built by applying the divided powers read off the ladders of mu (either to
the vacuum, or, faster, the outermost ladder to the already-known canonical
vector of the stripped label).  Labels of one degree are then processed in
decreasing lex order: from the current vector subtract, for every
lex-greater canonical label s in the same residue-content block and in
increasing lex order, symmetrize_tail(coefficient at s) times G(s).  Each
coefficient at a canonical label is touched exactly once, and the final
column must be unitriangular with every off-diagonal entry in qZ[q].
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .laurent import LaurentPoly, symmetrize_tail
from .fock import FockVector, apply_f_divided
from . import partitions as pt


class CanonicalBasisError(RuntimeError):
    """A computed column violated triangularity, integrality or block purity."""


def ladder_monomial(h: int, mu) -> tuple:
    """(residue, count) word of the ladders of mu, first ladder first."""
    return pt.ladders(h, mu).monomial()


def a_vector(h: int, mu) -> FockVector:
    """Intermediate vector: the full ladder monomial applied to the vacuum."""
    mu = pt.check_partition(mu)
    if not pt.in_dpr_h(h, mu):
        raise ValueError(f"{mu} is not {h}-regular")
    v = FockVector.basis(())
    for res, cnt in ladder_monomial(h, mu):
        v = apply_f_divided(h, res, cnt, v)
    return v


def a_vector_fast(h: int, mu, lower_columns) -> FockVector:
    """Intermediate vector from one divided power on a known lower column.

    `lower_columns` maps labels to canonical vectors and must contain the
    label obtained from mu by removing its outer ladder.
    """
    mu = pt.check_partition(mu)
    if not mu:
        return FockVector.basis(())
    nu, res, cnt = pt.remove_outer_ladder(h, mu)
    if nu not in lower_columns:
        raise KeyError(f"canonical vector for stripped label {nu} not available")
    return apply_f_divided(h, res, cnt, lower_columns[nu])


@dataclass(frozen=True)
class BasisMatrix:
    """Columns of the canonical basis at one degree, decreasing lex order."""

    h: int
    m: int
    labels: tuple                       # DPR_h(m), decreasing lex
    columns: dict = field(compare=False)

    def __post_init__(self):
        assert set(self.labels) == set(self.columns)

    def row_labels(self) -> list:
        return pt.enumerate_dp_h(self.h, self.m)

    def column(self, mu) -> FockVector:
        return self.columns[tuple(mu)]

    def entry(self, lam, mu) -> LaurentPoly:
        return self.columns[tuple(mu)].coefficient(lam)

    def bottom_label(self, mu) -> tuple:
        """Lex-greatest support row of a column (its lowest printed entry)."""
        return max(self.columns[tuple(mu)].support())

    def __eq__(self, other):
        return (isinstance(other, BasisMatrix)
                and (self.h, self.m, self.labels) == (other.h, other.m, other.labels)
                and self.columns == other.columns)

    def to_json(self) -> dict:
        return {
            "h": self.h,
            "m": self.m,
            "columns": [
                {
                    "label": list(mu),
                    "bottom": list(self.bottom_label(mu)),
                    "entries": [
                        {"row": list(lam), "poly": poly.to_json()}
                        for lam, poly in self.columns[mu].sorted_terms()
                    ],
                }
                for mu in self.labels
            ],
        }

    def render_table(self) -> str:
        """Aligned text table: rows DP_h(m), columns DPR_h(m), decreasing lex."""
        rows = self.row_labels()
        heads = [pt.format_partition(mu) for mu in self.labels]
        cells = [[str(self.entry(lam, mu)) for mu in self.labels] for lam in rows]
        name_w = max((len(pt.format_partition(r)) for r in rows), default=2)
        widths = [max([len(heads[j])] + [len(row[j]) for row in cells])
                  for j in range(len(heads))]
        lines = [" " * name_w + "  " +
                 "  ".join(h.ljust(w) for h, w in zip(heads, widths))]
        for lam, row in zip(rows, cells):
            lines.append(pt.format_partition(lam).ljust(name_w) + "  " +
                         "  ".join(c.ljust(w) for c, w in zip(row, widths)))
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        import csv
        import io
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([""] + [pt.format_partition(mu) for mu in self.labels])
        for lam in self.row_labels():
            w.writerow([pt.format_partition(lam)] +
                       [str(self.entry(lam, mu)) for mu in self.labels])
        return buf.getvalue()


class CanonicalBasis:
    """Degree-by-degree solver with a column cache.

    The fast intermediate basis is the default; slow=True rebuilds every
    intermediate vector from the vacuum, which is the independent route used
    for cross-validation.
    """

    def __init__(self, h: int, fast: bool = True):
        pt.check_h(h)
        self.h = h
        self.fast = fast
        self._columns = {(): FockVector.basis(())}
        self._matrices = {0: BasisMatrix(h, 0, ((),), {(): FockVector.basis(())})}

    def column(self, mu) -> FockVector:
        mu = pt.check_partition(mu)
        if mu not in self._columns:
            self.matrix(sum(mu))
            if mu not in self._columns:
                raise ValueError(f"{mu} is not {self.h}-regular")
        return self._columns[mu]

    def matrix(self, m: int) -> BasisMatrix:
        if m < 0:
            raise ValueError("degree must be nonnegative")
        if m not in self._matrices:
            for d in range(1, m + 1):
                if d not in self._matrices:
                    self._matrices[d] = self._solve_degree(d)
        return self._matrices[m]

    def _intermediate(self, mu) -> FockVector:
        if self.fast:
            nu, res, cnt = pt.remove_outer_ladder(self.h, mu)
            return apply_f_divided(self.h, res, cnt, self.column(nu))
        return a_vector(self.h, mu)

    def _solve_degree(self, m: int) -> BasisMatrix:
        h = self.h
        labels = tuple(pt.enumerate_dpr_h(h, m))
        content = {mu: pt.residue_content(h, mu) for mu in labels}
        done = {}
        for mu in labels:                       # decreasing lex
            vec = self._intermediate(mu)
            higher = [s for s in reversed(labels)
                      if s > mu and content[s] == content[mu]]
            for s in higher:                    # increasing lex
                gamma = symmetrize_tail(vec.coefficient(s))
                if gamma:
                    vec = vec - done[s].scaled(gamma)
            self._validate_column(mu, vec, content[mu])
            done[mu] = vec
            self._columns[mu] = vec
        return BasisMatrix(h, m, labels, done)

    def _validate_column(self, mu, vec, mu_content):
        h = self.h
        diag = vec.coefficient(mu)
        if diag != LaurentPoly.one():
            raise CanonicalBasisError(f"column {mu}: diagonal entry is {diag}")
        for lam, poly in vec.terms():
            if not poly.in_z_of_q():
                raise CanonicalBasisError(
                    f"column {mu}: entry at {lam} leaves Z[q]: {poly}")
            if lam != mu and not poly.in_q_z_of_q():
                raise CanonicalBasisError(
                    f"column {mu}: off-diagonal entry at {lam} not in qZ[q]: {poly}")
            if not pt.dominance_leq(mu, lam):
                raise CanonicalBasisError(
                    f"column {mu}: support label {lam} does not dominate it")
            if pt.residue_content(h, lam) != mu_content:
                raise CanonicalBasisError(
                    f"column {mu}: support label {lam} lies in another block")


def canonical_basis(h: int, m: int, fast: bool = True) -> BasisMatrix:
    """Canonical basis matrix at degree m (convenience wrapper)."""
    return CanonicalBasis(h, fast=fast).matrix(m)


@dataclass(frozen=True)
class BasisCheck:
    column: tuple
    condition: str
    witness: str


@dataclass(frozen=True)
class BasisMatrixReport:
    h: int
    m: int
    ok: bool
    failures: tuple

    def __str__(self):
        if self.ok:
            return f"basis matrix h={self.h} m={self.m}: all checks pass"
        body = "; ".join(f"{c.column} {c.condition} ({c.witness})"
                         for c in self.failures)
        return f"basis matrix h={self.h} m={self.m}: FAIL {body}"


def check_basis_matrix(M: BasisMatrix) -> BasisMatrixReport:
    """Re-verify integrality, unitriangularity and block purity of a matrix."""
    failures = []

    def fail(mu, cond, witness):
        failures.append(BasisCheck(mu, cond, witness))

    expected = tuple(pt.enumerate_dpr_h(M.h, M.m))
    if M.labels != expected:
        fail((), "label-set", f"{M.labels} != DPR_{M.h}({M.m})")
    for mu in M.labels:
        col = M.columns[mu]
        mu_content = pt.residue_content(M.h, mu)
        if col.coefficient(mu) != LaurentPoly.one():
            fail(mu, "unit-diagonal", str(col.coefficient(mu)))
        for lam, poly in col.terms():
            if not poly.in_z_of_q():
                fail(mu, "integral", f"{lam}: {poly}")
            if lam != mu and not poly.in_q_z_of_q():
                fail(mu, "lattice-congruence", f"{lam}: {poly}")
            if sum(lam) != M.m or not pt.dominance_leq(mu, lam):
                fail(mu, "triangular", f"{lam}")
            if pt.residue_content(M.h, lam) != mu_content:
                fail(mu, "block-purity", f"{lam}")
    return BasisMatrixReport(M.h, M.m, not failures, tuple(failures))


def change_of_basis(h: int, m: int, fast: bool = True) -> dict:
    """Coefficients b[(nu, mu)] with A(mu) = sum_nu b * G(nu).

    Peels canonical labels in increasing lex order: dominance triangularity
    makes the coefficient at the least remaining label pure.  Raises if the
    expansion is not unitriangular with b[(mu, mu)] = 1.
    """
    solver = CanonicalBasis(h, fast=fast)
    M = solver.matrix(m)
    out = {}
    for mu in M.labels:
        rem = a_vector(h, mu)
        for nu in reversed(M.labels):           # increasing lex
            c = rem.coefficient(nu)
            if c:
                if nu < mu:
                    raise CanonicalBasisError(
                        f"A({mu}) uses G({nu}) below it in lex order")
                out[(nu, mu)] = c
                rem = rem - M.columns[nu].scaled(c)
        if rem:
            raise CanonicalBasisError(f"A({mu}) not in the canonical span")
        if out.get((mu, mu)) != LaurentPoly.one():
            raise CanonicalBasisError(f"A({mu}) has no unit diagonal")
    return out
