"""Truncated multivariate formal power series with exact integer coefficients.

Series are sparse in (q-exponent, marker exponents) with arbitrary-precision
integer coefficients; the q-degree is truncated at a fixed order N and marker
degrees are never truncated (every marker power carries at least linear
q-weight, so they are bounded automatically).  Marker-free products use a
dense single-variable fast path.

The module builds the package's generating functions: reciprocal Pochhammer
factors, the Schur product side 1/((q;q^6)_inf (q^5;q^6)_inf), the triple sum
over pair/singleton counts refined by part count, its parity and mod-3
refinements, and the product (-aq;q^3)_inf (-bq^2;q^3)_inf the mod-3 series
specializes to.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

MARKER_ORDER = ("x", "a", "b", "c")


class Series:
    """A q-series truncated at q-degree ``truncation``, with optional markers.

    Terms are stored as ``{(q_exp, *marker_exps): coefficient}``; zero
    coefficients and terms beyond the truncation are never kept.
    """

    __slots__ = ("truncation", "markers", "terms")

    def __init__(
        self,
        truncation: int,
        markers: tuple[str, ...] = (),
        terms: Mapping[tuple[int, ...], int] | None = None,
    ) -> None:
        if truncation < 0:
            raise ValueError("truncation must be nonnegative")
        if len(set(markers)) != len(markers) or not set(markers) <= set(MARKER_ORDER):
            raise ValueError(f"markers must be distinct names among {MARKER_ORDER}")
        self.truncation = truncation
        self.markers = tuple(markers)
        width = 1 + len(self.markers)
        clean: dict[tuple[int, ...], int] = {}
        if terms:
            for key, coeff in terms.items():
                if len(key) != width:
                    raise ValueError(f"exponent vector {key} has wrong arity")
                if key[0] > truncation or coeff == 0:
                    continue
                if key[0] < 0 or any(e < 0 for e in key[1:]):
                    raise ValueError(f"negative exponent in {key}")
                clean[tuple(key)] = coeff
        self.terms = clean

    @classmethod
    def one(cls, truncation: int, markers: tuple[str, ...] = ()) -> "Series":
        return cls(truncation, markers, {(0,) * (1 + len(markers)): 1})

    @classmethod
    def zero(cls, truncation: int, markers: tuple[str, ...] = ()) -> "Series":
        return cls(truncation, markers)

    def coeff(self, q: int, **marker_exps: int) -> int:
        """Coefficient of q^q times the given marker monomial (default 0)."""
        unknown = set(marker_exps) - set(self.markers)
        if unknown:
            raise ValueError(f"unknown markers {sorted(unknown)}")
        key = (q,) + tuple(marker_exps.get(m, 0) for m in self.markers)
        return self.terms.get(key, 0)

    def q_profile(self) -> dict[int, int]:
        """Marginal over markers: q-exponent -> summed coefficient."""
        out: dict[int, int] = {}
        for key, coeff in self.terms.items():
            out[key[0]] = out.get(key[0], 0) + coeff
        return {q: c for q, c in out.items() if c}

    def truncate(self, new_truncation: int) -> "Series":
        if new_truncation >= self.truncation:
            return Series(min(new_truncation, self.truncation), self.markers, self.terms)
        return Series(
            new_truncation,
            self.markers,
            {k: c for k, c in self.terms.items() if k[0] <= new_truncation},
        )

    def _check_compatible(self, other: "Series") -> None:
        if self.markers != other.markers:
            raise ValueError(f"marker mismatch: {self.markers} vs {other.markers}")

    def __add__(self, other: "Series") -> "Series":
        self._check_compatible(other)
        n = min(self.truncation, other.truncation)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms.get(key, 0) + coeff
        return Series(n, self.markers, terms)

    def __neg__(self) -> "Series":
        return Series(self.truncation, self.markers, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def __mul__(self, other: "Series") -> "Series":
        self._check_compatible(other)
        n = min(self.truncation, other.truncation)
        terms: dict[tuple[int, ...], int] = {}
        small, large = sorted((self.terms, other.terms), key=len)
        for k1, c1 in small.items():
            q1 = k1[0]
            for k2, c2 in large.items():
                q = q1 + k2[0]
                if q > n:
                    continue
                key = (q,) + tuple(e1 + e2 for e1, e2 in zip(k1[1:], k2[1:]))
                terms[key] = terms.get(key, 0) + c1 * c2
        return Series(n, self.markers, terms)

    def map_markers(
        self, mapping: dict[str, dict[str, int]], new_markers: tuple[str, ...]
    ) -> "Series":
        """Substitute each marker by a monomial in ``new_markers``.

        ``mapping`` sends every current marker to a dict of new-marker
        exponents; an empty dict sets that marker to 1.
        """
        if set(mapping) != set(self.markers):
            raise ValueError("mapping must cover exactly the current markers")
        terms: dict[tuple[int, ...], int] = {}
        idx = {m: i for i, m in enumerate(new_markers)}
        for key, coeff in self.terms.items():
            exps = [0] * len(new_markers)
            for m, old_exp in zip(self.markers, key[1:]):
                for new_m, mult in mapping[m].items():
                    exps[idx[new_m]] += mult * old_exp
            new_key = (key[0],) + tuple(exps)
            terms[new_key] = terms.get(new_key, 0) + coeff
        return Series(self.truncation, new_markers, terms)

    def at_one(self) -> "Series":
        """Set every marker to 1, leaving a pure q-series."""
        return self.map_markers({m: {} for m in self.markers}, ())

    def min_coefficient(self) -> int:
        return min(self.terms.values(), default=0)

    def to_json_rows(self) -> list[dict]:
        """Rows {"q": ..., markers..., "coeff": decimal string}, sorted."""
        rows = []
        for key in sorted(self.terms):
            row: dict = {"q": key[0]}
            for m, e in zip(self.markers, key[1:]):
                row[m] = e
            row["coeff"] = str(self.terms[key])
            rows.append(row)
        return rows

    @classmethod
    def from_json_rows(
        cls, rows: list[dict], truncation: int, markers: tuple[str, ...]
    ) -> "Series":
        terms: dict[tuple[int, ...], int] = {}
        for row in rows:
            key = (row["q"],) + tuple(row[m] for m in markers)
            terms[key] = int(row["coeff"])
        return cls(truncation, markers, terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return (
            self.truncation == other.truncation
            and self.markers == other.markers
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        return (
            f"Series(N={self.truncation}, markers={self.markers}, "
            f"{len(self.terms)} terms)"
        )


# ---------------------------------------------------------------------------
# dense single-variable helpers


@lru_cache(maxsize=None)
def _poch_inv_dense(a: int, step: int, count: int, n: int) -> tuple[int, ...]:
    """Coefficients of prod_{j=1..count} 1/(1 - q^{a+(j-1)step}) up to q^n."""
    if count == 0:
        return (1,) + (0,) * n
    prev = list(_poch_inv_dense(a, step, count - 1, n))
    d = a + (count - 1) * step
    for e in range(d, n + 1):
        prev[e] += prev[e - d]
    return tuple(prev)


def _mul_dense(a, b, n: int) -> list[int]:
    out = [0] * (n + 1)
    for i, ca in enumerate(a):
        if ca == 0 or i > n:
            continue
        top = n - i
        for j, cb in enumerate(b[: top + 1]):
            if cb:
                out[i + j] += ca * cb
    return out


def poch_inverse_factor(a_shift: int, step: int, count: int, truncation: int) -> Series:
    """1/(q^a_shift; q^step)_count as a truncated series.

    The empty product (count = 0) is the constant series 1.
    """
    if step < 1:
        raise ValueError("step must be positive")
    if count < 0:
        raise ValueError("count must be nonnegative")
    if a_shift < 1:
        raise ValueError("a_shift must be positive")
    dense = _poch_inv_dense(a_shift, step, count, truncation)
    return Series(truncation, (), {(e,): c for e, c in enumerate(dense) if c})


def product_schur(truncation: int) -> Series:
    """1/((q; q^6)_inf (q^5; q^6)_inf): partitions into parts = +-1 mod 6."""
    n = truncation
    dense = [1] + [0] * n
    for d in range(1, n + 1):
        if d % 6 in (1, 5):
            for e in range(d, n + 1):
                dense[e] += dense[e - d]
    return Series(n, (), {(e,): c for e, c in enumerate(dense) if c})


# ---------------------------------------------------------------------------
# term exponents of the multiple sums (also the base-partition weights)


def exponent_main(n21: int, n22: int, n1: int) -> int:
    return (
        6 * n21 * n21 - n21 + 6 * n22 * n22 + n22 + 2 * n1 * n1 - n1
        + 12 * n21 * n22 + 6 * (n21 + n22) * n1
    )


def exponent_mod2(n21: int, n22: int, n11: int, n10: int) -> int:
    return (
        6 * n21 * n21 - n21 + 6 * n22 * n22 + n22
        + 2 * n11 * n11 - n11 + 2 * n10 * n10
        + 12 * n21 * n22 + 6 * (n21 + n22) * (n11 + n10) + 4 * n11 * n10
    )


def exponent_mod3(n21: int, n22: int, n11: int, n12: int, n10: int) -> int:
    return (
        6 * n21 * n21 - n21 + 6 * n22 * n22 + n22
        + 3 * n11 * n11 - 2 * n11 + 3 * n12 * n12 - n12 + 3 * n10 * n10
        + 12 * n21 * n22 + 6 * (n21 + n22) * (n11 + n12 + n10)
        + 3 * (n11 * n12 + n11 * n10 + n12 * n10)
    )


def _diag_bound(n: int, quad: int, lin: int) -> int:
    """Largest i >= 0 with quad*i^2 + lin*i <= n."""
    i = 0
    while quad * (i + 1) * (i + 1) + lin * (i + 1) <= n:
        i += 1
    return i


@dataclass
class SummationBounds:
    """Per-index upper bounds for a multiple sum, derived from the truncation.

    An index tuple contributes iff its full quadratic exponent is <= N; all
    cross terms are nonnegative, so bounding each index by its own diagonal
    term is exact, not heuristic.
    """

    bounds: dict[str, int]

    def __getitem__(self, name: str) -> int:
        return self.bounds[name]

    @classmethod
    def main(cls, n: int) -> "SummationBounds":
        return cls(
            {
                "n1": _diag_bound(n, 2, -1),
                "n21": _diag_bound(n, 6, -1),
                "n22": _diag_bound(n, 6, 1),
            }
        )

    @classmethod
    def mod2(cls, n: int) -> "SummationBounds":
        return cls(
            {
                "n11": _diag_bound(n, 2, -1),
                "n10": _diag_bound(n, 2, 0),
                "n21": _diag_bound(n, 6, -1),
                "n22": _diag_bound(n, 6, 1),
            }
        )

    @classmethod
    def mod3(cls, n: int) -> "SummationBounds":
        return cls(
            {
                "n11": _diag_bound(n, 3, -2),
                "n12": _diag_bound(n, 3, -1),
                "n10": _diag_bound(n, 3, 0),
                "n21": _diag_bound(n, 6, -1),
                "n22": _diag_bound(n, 6, 1),
            }
        )


# ---------------------------------------------------------------------------
# the multiple sums


def sum_main(truncation: int) -> Series:
    """Triple sum generating s(m, n): marker x counts parts.

    Term (n1, n21, n22): q^E x^(2 n21 + 2 n22 + n1) over
    (q;q)_n1 (q^6;q^6)_n21 (q^6;q^6)_n22, with E = exponent_main.
    """
    n = truncation
    bounds = SummationBounds.main(n)
    terms: dict[tuple[int, int], int] = {}
    for n21 in range(bounds["n21"] + 1):
        for n22 in range(bounds["n22"] + 1):
            if exponent_main(n21, n22, 0) > n:
                break
            for n1 in range(bounds["n1"] + 1):
                e = exponent_main(n21, n22, n1)
                if e > n:
                    break
                room = n - e
                tail = _mul_dense(
                    _poch_inv_dense(6, 6, n21, room),
                    _poch_inv_dense(6, 6, n22, room),
                    room,
                )
                tail = _mul_dense(tail, _poch_inv_dense(1, 1, n1, room), room)
                x = 2 * n21 + 2 * n22 + n1
                for off, coeff in enumerate(tail):
                    if coeff:
                        key = (e + off, x)
                        terms[key] = terms.get(key, 0) + coeff
    return Series(n, ("x",), terms)


def sum_mod2(truncation: int) -> Series:
    """Quadruple sum refining the main sum by parity: a odd parts, b even."""
    n = truncation
    bounds = SummationBounds.mod2(n)
    terms: dict[tuple[int, int, int], int] = {}
    for n21 in range(bounds["n21"] + 1):
        for n22 in range(bounds["n22"] + 1):
            if exponent_mod2(n21, n22, 0, 0) > n:
                break
            for n11 in range(bounds["n11"] + 1):
                if exponent_mod2(n21, n22, n11, 0) > n:
                    break
                for n10 in range(bounds["n10"] + 1):
                    e = exponent_mod2(n21, n22, n11, n10)
                    if e > n:
                        break
                    room = n - e
                    tail = _mul_dense(
                        _poch_inv_dense(6, 6, n21, room),
                        _poch_inv_dense(6, 6, n22, room),
                        room,
                    )
                    tail = _mul_dense(tail, _poch_inv_dense(2, 2, n11, room), room)
                    tail = _mul_dense(tail, _poch_inv_dense(2, 2, n10, room), room)
                    a = n21 + n22 + n11
                    b = n21 + n22 + n10
                    for off, coeff in enumerate(tail):
                        if coeff:
                            key = (e + off, a, b)
                            terms[key] = terms.get(key, 0) + coeff
    return Series(n, ("a", "b"), terms)


def sum_mod3(truncation: int) -> Series:
    """Quintuple sum refining by residue mod 3: a, b, c count parts = 1, 2, 0."""
    n = truncation
    bounds = SummationBounds.mod3(n)
    terms: dict[tuple[int, int, int, int], int] = {}
    for n21 in range(bounds["n21"] + 1):
        for n22 in range(bounds["n22"] + 1):
            if exponent_mod3(n21, n22, 0, 0, 0) > n:
                break
            for n11 in range(bounds["n11"] + 1):
                if exponent_mod3(n21, n22, n11, 0, 0) > n:
                    break
                for n12 in range(bounds["n12"] + 1):
                    if exponent_mod3(n21, n22, n11, n12, 0) > n:
                        break
                    for n10 in range(bounds["n10"] + 1):
                        e = exponent_mod3(n21, n22, n11, n12, n10)
                        if e > n:
                            break
                        room = n - e
                        tail = _mul_dense(
                            _poch_inv_dense(6, 6, n21, room),
                            _poch_inv_dense(6, 6, n22, room),
                            room,
                        )
                        tail = _mul_dense(tail, _poch_inv_dense(3, 3, n11, room), room)
                        tail = _mul_dense(tail, _poch_inv_dense(3, 3, n12, room), room)
                        tail = _mul_dense(tail, _poch_inv_dense(3, 3, n10, room), room)
                        a = 2 * n21 + n11
                        b = 2 * n22 + n12
                        c = n10
                        for off, coeff in enumerate(tail):
                            if coeff:
                                key = (e + off, a, b, c)
                                terms[key] = terms.get(key, 0) + coeff
    return Series(n, ("a", "b", "c"), terms)


def product_alladi(truncation: int) -> Series:
    """(-aq; q^3)_inf (-bq^2; q^3)_inf truncated at q-degree N.

    Generates pairs of partitions into distinct parts = 1 mod 3 (marked a)
    and distinct parts = 2 mod 3 (marked b).
    """
    n = truncation
    result = Series.one(n, ("a", "b"))
    for j in range(1, n + 1, 3):
        factor = Series(n, ("a", "b"), {(0, 0, 0): 1, (j, 1, 0): 1})
        result = result * factor
    for j in range(2, n + 1, 3):
        factor = Series(n, ("a", "b"), {(0, 0, 0): 1, (j, 0, 1): 1})
        result = result * factor
    return result


# ---------------------------------------------------------------------------
# comparison


@dataclass(frozen=True)
class SeriesComparison:
    """Outcome of a coefficientwise comparison through a given q-degree."""

    equal: bool
    up_to: int
    first_discrepancy: tuple[tuple[int, ...], int, int] | None = None

    def describe(self, markers: tuple[str, ...]) -> str:
        if self.equal:
            return f"equal through q^{self.up_to}"
        key, lhs, rhs = self.first_discrepancy
        names = ("q",) + markers
        mono = " ".join(f"{m}^{e}" for m, e in zip(names, key))
        return f"first discrepancy at {mono}: lhs={lhs} rhs={rhs}"


def series_equal(s1: Series, s2: Series, up_to_n: int) -> SeriesComparison:
    """Compare coefficients through q-degree ``up_to_n``.

    Reports the smallest discrepant exponent vector (by q, then marker
    exponents) when the series differ.  Both series must be truncated at or
    beyond ``up_to_n`` and carry the same markers.
    """
    if s1.truncation < up_to_n or s2.truncation < up_to_n:
        raise ValueError(
            f"truncation too small: have {s1.truncation} and {s2.truncation}, "
            f"need {up_to_n}"
        )
    if s1.markers != s2.markers:
        raise ValueError(f"marker mismatch: {s1.markers} vs {s2.markers}")
    keys = {k for k in s1.terms if k[0] <= up_to_n}
    keys |= {k for k in s2.terms if k[0] <= up_to_n}
    for key in sorted(keys):
        c1 = s1.terms.get(key, 0)
        c2 = s2.terms.get(key, 0)
        if c1 != c2:
            return SeriesComparison(False, up_to_n, (key, c1, c2))
    return SeriesComparison(True, up_to_n)
