"""Brute-force ground truth for Schur partition counts.

Everything here is computed straight from the gap conditions, with no
generating-function machinery, so it can serve as an independent oracle for
the series module.  Counting for large weights uses the same ascending-part
recursion as the enumerator, memoized; the two are cross-checked in tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .partitions import Partition, residue_stats

# A part q may follow a part p iff q >= p + 3, except q = p + 3 is forbidden
# when p is a multiple of 3 (consecutive multiples of 3).


def _schur_parts(n: int):
    """Yield the part tuples of all Schur partitions of ``n``, lexicographically."""
    if n == 0:
        yield ()
        return
    stack: list[int] = []

    def extend(remaining: int, lo: int, prev_mult3: bool):
        for q in range(lo, remaining + 1):
            if prev_mult3 and q == lo and q % 3 == 0:
                continue  # q == prev + 3 and both multiples of 3
            stack.append(q)
            rest = remaining - q
            if rest == 0:
                yield tuple(stack)
            elif rest >= q + 3:
                yield from extend(rest, q + 3, q % 3 == 0)
            stack.pop()

    yield from extend(n, 1, False)


def enumerate_schur(n: int) -> list[Partition]:
    """All Schur partitions of weight exactly ``n``, in lexicographic order."""
    if n < 0:
        raise ValueError("weight must be nonnegative")
    return [Partition(t) for t in _schur_parts(n)]


def iter_schur_upto(max_n: int):
    """Yield (weight, partition) for all Schur partitions of weight <= max_n."""
    for n in range(max_n + 1):
        for p in enumerate_schur(n):
            yield n, p


def count_schur(max_n: int) -> list[int]:
    """s(n) for n = 0..max_n: the number of Schur partitions of n.

    Tabulated version of the enumerator's recursion; agrees with
    ``len(enumerate_schur(n))`` but scales to weights where listing is
    impractical.  start[rem][q] counts partitions of rem with smallest part
    exactly q, at_least[rem][lo] those with all parts >= lo.
    """
    if max_n < 0:
        raise ValueError("weight must be nonnegative")
    start = [[0] * (max_n + 2) for _ in range(max_n + 1)]
    at_least = [[0] * (max_n + 3) for _ in range(max_n + 1)]
    at_least[0] = [1] * (max_n + 3)
    for rem in range(1, max_n + 1):
        for q in range(rem, 0, -1):
            total = 1 if rem == q else 0
            rest = rem - q
            if rest >= q + 3:
                total += at_least[rest][q + 3]
                if q % 3 == 0:
                    total -= start[rest][q + 3]
            start[rem][q] = total
            at_least[rem][q] = at_least[rem][q + 1] + total
    return [at_least[n][1] for n in range(max_n + 1)]


def count_by_length(max_n: int) -> dict[tuple[int, int], int]:
    """s(m, n) for n <= max_n: Schur partitions of n with exactly m parts.

    Same tabulated recursion as :func:`count_schur` carrying a length
    statistic, for weights where listing every partition is too slow.
    """
    if max_n < 0:
        raise ValueError("weight must be nonnegative")
    # start[rem][q] / at_least[rem][lo] hold per-length count vectors.
    zero: list[int] = []
    start = [[zero] * (max_n + 2) for _ in range(max_n + 1)]
    at_least = [[zero] * (max_n + 3) for _ in range(max_n + 1)]
    at_least[0] = [[1]] * (max_n + 3)
    for rem in range(1, max_n + 1):
        for q in range(rem, 0, -1):
            by_len = [0, 1] if rem == q else [0]
            rest = rem - q
            if rest >= q + 3:
                tail = list(at_least[rest][q + 3])
                if q % 3 == 0:
                    sub = start[rest][q + 3]
                    for m, c in enumerate(sub):
                        tail[m] -= c
                # prepend the part q: shift lengths by one
                for m, c in enumerate(tail):
                    while len(by_len) <= m + 1:
                        by_len.append(0)
                    by_len[m + 1] += c
            start[rem][q] = by_len
            acc = list(at_least[rem][q + 1])
            for m, c in enumerate(by_len):
                while len(acc) <= m:
                    acc.append(0)
                acc[m] += c
            at_least[rem][q] = acc
    table: dict[tuple[int, int], int] = {(0, 0): 1}
    for n in range(1, max_n + 1):
        for m, c in enumerate(at_least[n][1]):
            if c:
                table[(m, n)] = c
    return table


def count_product_side(max_n: int) -> list[int]:
    """Partitions of n into parts congruent to 1 or 5 mod 6, for n <= max_n.

    Computed by the standard unbounded-part recurrence, one allowed part
    value at a time; independent of the series engine.
    """
    if max_n < 0:
        raise ValueError("weight must be nonnegative")
    counts = [0] * (max_n + 1)
    counts[0] = 1
    for part in range(1, max_n + 1):
        if part % 6 in (1, 5):
            for v in range(part, max_n + 1):
                counts[v] += counts[v - part]
    return counts


@dataclass
class CountTable:
    """Exact Schur partition counts indexed by weight and part statistics.

    s:  weight n -> s(n)
    sm: (m, n) -> partitions counted by s(n) with m parts
    sp: (m1, m0, n) -> ... with m1 odd and m0 even parts
    st: (m1, m2, m0, n) -> ... with mi parts congruent to i mod 3
    """

    max_weight: int
    s: dict[int, int] = field(default_factory=dict)
    sm: dict[tuple[int, int], int] = field(default_factory=dict)
    sp: dict[tuple[int, int, int], int] = field(default_factory=dict)
    st: dict[tuple[int, int, int, int], int] = field(default_factory=dict)

    def check_marginals(self) -> None:
        """Verify the marginal sums tying the four tables together."""
        from collections import defaultdict

        sm_sum: dict[int, int] = defaultdict(int)
        for (_, n), c in self.sm.items():
            sm_sum[n] += c
        for n in range(self.max_weight + 1):
            if sm_sum.get(n, 0) != self.s.get(n, 0):
                raise AssertionError(f"sum_m s(m,{n}) != s({n})")
        sp_sum: dict[tuple[int, int], int] = defaultdict(int)
        for (m1, m0, n), c in self.sp.items():
            sp_sum[(m1 + m0, n)] += c
        st_sum: dict[tuple[int, int], int] = defaultdict(int)
        for (m1, m2, m0, n), c in self.st.items():
            st_sum[(m1 + m2 + m0, n)] += c
        for key, c in self.sm.items():
            if sp_sum.get(key, 0) != c:
                raise AssertionError(f"sp marginal mismatch at {key}")
            if st_sum.get(key, 0) != c:
                raise AssertionError(f"st marginal mismatch at {key}")
        if set(sp_sum) - set(self.sm) or set(st_sum) - set(self.sm):
            raise AssertionError("refined table has keys missing from s(m,n)")


def count_tables(max_n: int) -> CountTable:
    """Tabulate s, s(m,n), sp and st for all weights up to ``max_n``.

    Built by enumerating every Schur partition and reading off its part
    statistics (the statistics are inlined rather than going through
    :func:`residue_stats`, purely for speed on bulk runs).
    """
    table = CountTable(max_weight=max_n)
    s, sm, sp, st = table.s, table.sm, table.sp, table.st
    for n in range(max_n + 1):
        for parts in _schur_parts(n):
            m1 = m2 = modd = 0
            for part in parts:
                r = part % 3
                if r == 1:
                    m1 += 1
                elif r == 2:
                    m2 += 1
                modd += part & 1
            m = len(parts)
            s[n] = s.get(n, 0) + 1
            sm[(m, n)] = sm.get((m, n), 0) + 1
            kp = (modd, m - modd, n)
            sp[kp] = sp.get(kp, 0) + 1
            kt = (m1, m2, m - m1 - m2, n)
            st[kt] = st.get(kt, 0) + 1
    return table
