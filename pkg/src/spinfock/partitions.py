"""Partition combinatorics underlying the twisted Fock machinery.

Partitions are plain tuples of weakly decreasing positive ints; () is the
empty partition.  Enumerations always list partitions in decreasing
lexicographic order, the package-wide output convention.  Columns of Young
diagrams are 0-indexed, rows 1-indexed from the longest part.
"""

from __future__ import annotations

from dataclasses import dataclass


def check_h(h: int) -> int:
    if h < 3 or h % 2 == 0:
        raise ValueError(f"modulus h must be odd and >= 3, got {h}")
    return h


def rank(h: int) -> int:
    """The index n with h = 2n+1."""
    check_h(h)
    return (h - 1) // 2


def check_partition(parts) -> tuple:
    """Canonicalize to a tuple, dropping trailing zeros; reject bad shapes."""
    ps = tuple(int(p) for p in parts)
    while ps and ps[-1] == 0:
        ps = ps[:-1]
    if any(p <= 0 for p in ps):
        raise ValueError(f"parts must be positive: {parts}")
    if any(ps[i] < ps[i + 1] for i in range(len(ps) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {parts}")
    return ps


def is_strict(lam) -> bool:
    """All parts distinct."""
    return len(set(lam)) == len(lam)


def in_dp_h(h: int, lam) -> bool:
    """Repeated parts only among multiples of h."""
    check_h(h)
    for i in range(len(lam) - 1):
        if lam[i] == lam[i + 1] and lam[i] % h != 0:
            return False
    return True


def in_dpr_h(h: int, lam) -> bool:
    """The h-regularity condition on consecutive gaps (last part against 0)."""
    check_h(h)
    padded = tuple(lam) + (0,)
    for i in range(len(lam)):
        gap = padded[i] - padded[i + 1]
        if padded[i] % h == 0:
            if not 0 <= gap < h:
                return False
        elif not 0 < gap <= h:
            return False
    return True


def partitions(m: int, max_part=None):
    """All partitions of m, decreasing lex order."""
    if m < 0:
        return
    if max_part is None or max_part > m:
        max_part = m
    if m == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        for rest in partitions(m - first, first):
            yield (first,) + rest


def _dp_h_gen(h, rem, bound):
    if rem == 0:
        yield ()
        return
    for v in range(min(rem, bound), 0, -1):
        nxt = v if v % h == 0 else v - 1
        for rest in _dp_h_gen(h, rem - v, nxt):
            yield (v,) + rest


def enumerate_dp(m: int) -> list:
    """Strict partitions of m, decreasing lex order."""
    if m < 0:
        raise ValueError("degree must be nonnegative")
    if m == 0:
        return [()]
    return [(first,) + rest
            for first in range(m, 0, -1)
            for rest in _strict_gen(m - first, first - 1)]


def _strict_gen(rem, bound):
    if rem == 0:
        yield ()
        return
    for v in range(min(rem, bound), 0, -1):
        for rest in _strict_gen(rem - v, v - 1):
            yield (v,) + rest


def enumerate_dp_h(h: int, m: int) -> list:
    """Partitions of m with repeats only at multiples of h, decreasing lex."""
    check_h(h)
    if m < 0:
        raise ValueError("degree must be nonnegative")
    return list(_dp_h_gen(h, m, m if m else 0)) if m else [()]


def _dpr_gen(h, rem, prev):
    if rem == 0:
        if prev is None or (prev % h != 0 and prev <= h):
            yield ()
        return
    if prev is None:
        hi, lo = rem, 1
    elif prev % h == 0:
        hi, lo = min(rem, prev), prev - h + 1
    else:
        hi, lo = min(rem, prev - 1), prev - h
    for v in range(hi, max(lo, 1) - 1, -1):
        for rest in _dpr_gen(h, rem - v, v):
            yield (v,) + rest


def enumerate_dpr_h(h: int, m: int) -> list:
    """h-regular partitions of m, decreasing lex order."""
    check_h(h)
    if m < 0:
        raise ValueError("degree must be nonnegative")
    return list(_dpr_gen(h, m, None))


def residue(h: int, column: int) -> int:
    """Color i in 0..n of a (0-indexed) column: column = n+i or n-i mod h."""
    n = rank(h)
    r = column % h
    return n - r if r <= n else r - n


def residue_content(h: int, lam) -> tuple:
    """Vector (n_0, ..., n_n) counting cells of each residue."""
    n = rank(h)
    counts = [0] * (n + 1)
    for part in lam:
        for c in range(part):
            counts[residue(h, c)] += 1
    return tuple(counts)


def ladder_index(h: int, row: int, column: int) -> int:
    """Index of the ladder through cell (row, column); rows count from 1.

    Within a row the index grows by one per column except across the
    boundary column c = kh, where the two adjacent n-cells share a ladder;
    dropping a row shifts the whole numbering by h-1.
    """
    g = column - column // h
    return g + (row - 1) * (h - 1) + 1


@dataclass(frozen=True)
class LadderDecomposition:
    """Occupied ladders of a partition, in peeling (increasing index) order."""

    h: int
    partition: tuple
    indices: tuple          # occupied ladder indices, increasing
    steps: tuple            # parallel (residue, cell_count) pairs

    def monomial(self) -> tuple:
        """The (residue, count) word, first ladder first."""
        return self.steps


def ladders(h: int, lam) -> LadderDecomposition:
    """Peel a DP_h partition into its ladders."""
    lam = check_partition(lam)
    if not in_dp_h(h, lam):
        raise ValueError(f"{lam} has a repeated part not divisible by {h}")
    found = {}
    for k, part in enumerate(lam, start=1):
        for c in range(part):
            idx = ladder_index(h, k, c)
            res = residue(h, c)
            if idx in found:
                prev_res, cnt = found[idx]
                assert prev_res == res, (lam, idx)
                found[idx] = (res, cnt + 1)
            else:
                found[idx] = (res, 1)
    indices = tuple(sorted(found))
    steps = tuple(found[i] for i in indices)
    return LadderDecomposition(h, lam, indices, steps)


def remove_outer_ladder(h: int, lam) -> tuple:
    """Strip the last ladder; returns (smaller partition, residue, count).

    The removed cells must form row suffixes, otherwise the input was not a
    valid DP_h shape for this operation.
    """
    lam = check_partition(lam)
    if not lam:
        raise ValueError("empty partition has no ladders")
    dec = ladders(h, lam)
    top = dec.indices[-1]
    res, _ = dec.steps[-1]
    removed = {}
    for k, part in enumerate(lam, start=1):
        cols = [c for c in range(part) if ladder_index(h, k, c) == top]
        if cols:
            removed[k] = cols
    count = sum(len(v) for v in removed.values())
    new_rows = []
    for k, part in enumerate(lam, start=1):
        cols = removed.get(k, [])
        if cols and set(cols) != set(range(part - len(cols), part)):
            raise ValueError(f"outer ladder of {lam} is not a row suffix")
        new_rows.append(part - len(cols))
    nu = check_partition(new_rows)
    return nu, res, count


def a_h(h: int, lam) -> int:
    """Sum of floor((part-1)/h) over the parts."""
    check_h(h)
    return sum((p - 1) // h for p in lam)


def b_exponent(lam) -> int:
    """floor((m - length)/2) for a partition of m."""
    return (sum(lam) - len(lam)) // 2


def bar_removals(h: int, lam) -> list:
    """All strict partitions reachable from strict lam by one bar removal.

    Moves: lower a part by h when the result is 0 (drop it) or unused;
    delete a pair of parts summing to h.
    """
    check_h(h)
    lam = check_partition(lam)
    if not is_strict(lam):
        raise ValueError(f"bar removal wants a strict partition, got {lam}")
    have = set(lam)
    out = []
    for x in lam:
        y = x - h
        if y == 0 or (y > 0 and y not in have):
            rest = [p for p in lam if p != x]
            if y > 0:
                rest.append(y)
            out.append(tuple(sorted(rest, reverse=True)))
    for j, x in enumerate(lam):
        for y in lam[j + 1:]:
            if x + y == h:
                rest = [p for p in lam if p != x and p != y]
                out.append(tuple(sorted(rest, reverse=True)))
    seen, uniq = set(), []
    for t in out:
        if t not in seen:
            seen.add(t)
            uniq.append(t)
    return uniq


def hbar_core(h: int, lam) -> tuple:
    """Bar core of a DP_h partition.

    Every part value occurring more than once is removed entirely (all
    copies); bar removals are then applied to the strict remainder until
    none is possible.  The result does not depend on the removal order.
    """
    lam = check_partition(lam)
    if not in_dp_h(h, lam):
        raise ValueError(f"{lam} is not a DP_{h} partition")
    counts = {}
    for p in lam:
        counts[p] = counts.get(p, 0) + 1
    cur = tuple(p for p in lam if counts[p] == 1)
    while True:
        nxt = bar_removals(h, cur)
        if not nxt:
            return cur
        cur = nxt[0]


def dominance_leq(lam, mu) -> bool:
    """Partial-sum order: lam <= mu in dominance.  Degrees must agree."""
    if sum(lam) != sum(mu):
        raise ValueError(f"dominance needs equal degree: {lam} vs {mu}")
    r = max(len(lam), len(mu))
    a = b = 0
    for i in range(r):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a > b:
            return False
    return True


def lex_cmp(lam, mu) -> int:
    """-1, 0 or 1 comparing in (zero-padded) lexicographic order."""
    lam, mu = tuple(lam), tuple(mu)
    if lam == mu:
        return 0
    return -1 if lam < mu else 1


def shift_by_multiple(h: int, lam, mu) -> tuple:
    """Componentwise lam_i + h*mu_i, zero-padding the shorter argument."""
    check_h(h)
    r = max(len(lam), len(mu))
    out = []
    for i in range(r):
        a = lam[i] if i < len(lam) else 0
        b = mu[i] if i < len(mu) else 0
        out.append(a + h * b)
    return check_partition(out)


def parse_partition(text: str) -> tuple:
    """Parse '5,4,1' or compact single-digit '541'; '' and '()' mean ()."""
    s = text.strip()
    if s in ("", "()", "0"):
        return ()
    if "," in s:
        return check_partition(int(x) for x in s.split(","))
    digits = [int(ch) for ch in s]
    if 0 in digits or any(digits[i] < digits[i + 1] for i in range(len(digits) - 1)):
        return check_partition([int(s)])
    return check_partition(digits)


def format_partition(lam, sep: str = " ") -> str:
    """Render like (5 4 1); the empty partition prints as ()."""
    return "(" + sep.join(str(p) for p in lam) + ")"
