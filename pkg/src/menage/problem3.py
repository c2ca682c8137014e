"""For which n does the fixed-seat count not depend on the chosen chair?

If it does not, every chair gets U_n / (n - 2) seatings, so ``n - 2 | U_n``
is necessary but (n = 10 shows) not sufficient.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .menage import fixed_seat_count, touchard_u

SCAN_MAX_N = 18


@dataclass(frozen=True)
class Problem3Report:
    n: int
    counts: dict[int, int]
    is_constant: bool
    common_value: int | None
    divides: bool
    quotient: int | None
    u_n: int

    def __post_init__(self):
        if self.is_constant and not (self.divides and self.common_value == self.quotient):
            raise ValueError(f"constant counts without n-2 | U_n at n={self.n}")
        for r, c in self.counts.items():
            if self.counts[self.n - r + 3] != c:
                raise ValueError(f"chair symmetry broken at n={self.n}, r={r}")
        if sum(self.counts.values()) != self.u_n:
            raise ValueError(f"counts do not sum to U_{self.n}")


def chair_counts(n: int, full: bool = False) -> dict[int, int]:
    """Fixed-seat count for every chair r = 3..n.

    Only r <= (n + 3) // 2 is computed unless ``full``; the rest follows from
    the clockwise/counterclockwise symmetry r <-> n - r + 3.
    """
    last = n if full else (n + 3) // 2
    counts = {r: fixed_seat_count(n, r) for r in range(3, last + 1)}
    for r in range(last + 1, n + 1):
        counts[r] = counts[n - r + 3]
    return counts


def analyze(n: int, full: bool = False) -> Problem3Report:
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    counts = chair_counts(n, full)
    u = touchard_u(n)
    values = set(counts.values())
    is_constant = len(values) == 1
    q, rem = divmod(u, n - 2)
    return Problem3Report(
        n=n,
        counts=counts,
        is_constant=is_constant,
        common_value=values.pop() if is_constant else None,
        divides=rem == 0,
        quotient=q if rem == 0 else None,
        u_n=u,
    )


def scan(n_min: int, n_max: int, max_n: int = SCAN_MAX_N, workers: int | None = None) -> list[Problem3Report]:
    """Reports for n_min..n_max in ascending n.

    ``workers > 1`` fans the per-n analyses out to a process pool; ordering
    is unaffected.
    """
    if not 3 <= n_min <= n_max:
        raise ValueError(f"need 3 <= n_min <= n_max, got {n_min}..{n_max}")
    if n_max > max_n:
        raise ValueError(f"n_max = {n_max} exceeds the scan limit of {max_n}")
    ns = range(n_min, n_max + 1)
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(analyze, ns))
    return [analyze(n) for n in ns]


def constant_values(reports: list[Problem3Report]) -> list[int]:
    return [rep.n for rep in reports if rep.is_constant]
