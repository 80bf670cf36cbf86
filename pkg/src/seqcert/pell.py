"""Pell equations x^2 - d y^2 = 1 and x^2 - d y^2 = 4: fundamental solution
by minimal-B search, then all positive solutions by composition, in exact
arbitrary precision."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable, Iterator

from .ntkernel import factorize, is_perfect_square, isqrt


class Form(Enum):
    UNIT1 = 1  # norm 1
    UNIT4 = 4  # norm 4


class PellSearchError(Exception):
    """Fundamental-solution search exceeded its B cap."""


@dataclass(frozen=True)
class PellSolution:
    d: int
    form: Form
    index: int
    A: int
    B: int

    def __post_init__(self) -> None:
        if self.A * self.A - self.d * self.B * self.B != self.form.value:
            raise ValueError(f"norm invariant violated: {self}")


def _validate_d(d: int, form: Form) -> None:
    if d < 2:
        raise ValueError("d must be >= 2")
    fact = factorize(d)
    if not fact.complete:
        raise ValueError(f"cannot verify {d} squarefree")
    if any(e >= 2 for _, e in fact.factors):
        raise ValueError(f"{d} is not squarefree")
    if form is Form.UNIT4 and d % 4 != 1:
        raise ValueError("norm-4 form is only used with d = 1 (mod 4)")


@lru_cache(maxsize=None)
def fundamental_solution(d: int, form: Form, b_cap: int = 10**6) -> PellSolution:
    """Minimal-B positive solution of A^2 - d B^2 = norm."""
    _validate_d(d, form)
    norm = form.value
    for b in range(1, b_cap + 1):
        t = d * b * b + norm
        if is_perfect_square(t):
            return PellSolution(d, form, 1, isqrt(t), b)
    raise PellSearchError(f"no solution with B <= {b_cap} for d={d}, norm={norm}")


def next_solution(s: PellSolution) -> PellSolution:
    """Compose with the fundamental solution: index i -> i + 1."""
    f = fundamental_solution(s.d, s.form)
    a_num = s.A * f.A + s.d * s.B * f.B
    b_num = s.A * f.B + s.B * f.A
    if s.form is Form.UNIT4:
        assert a_num % 2 == 0 and b_num % 2 == 0, "norm-4 composition must halve exactly"
        a_num //= 2
        b_num //= 2
    return PellSolution(s.d, s.form, s.index + 1, a_num, b_num)


def solutions(d: int, form: Form = Form.UNIT1) -> Iterator[PellSolution]:
    """All positive solutions in increasing-B order, starting at index 1."""
    s = fundamental_solution(d, form)
    while True:
        yield s
        s = next_solution(s)


def enumerate_solutions(d: int, form: Form = Form.UNIT1, *,
                        max_index: int | None = None,
                        max_b: int | None = None,
                        stop: Callable[[PellSolution], bool] | None = None,
                        ) -> list[PellSolution]:
    """Solutions from index 1 up to the first one hitting a stop condition
    (that one excluded).  B is strictly increasing across the result."""
    if max_index is None and max_b is None and stop is None:
        raise ValueError("need max_index, max_b or stop")
    out: list[PellSolution] = []
    for s in solutions(d, form):
        if max_index is not None and s.index > max_index:
            break
        if max_b is not None and s.B > max_b:
            break
        if stop is not None and stop(s):
            break
        out.append(s)
    return out
