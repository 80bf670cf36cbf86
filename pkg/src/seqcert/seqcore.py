"""Binary periodic sequences, periodic autocorrelation, cyclic difference
sets, and the translation between the two pictures.

A +/-1 sequence of period n with all off-peak autocorrelation values equal to
a constant d corresponds to a cyclic difference set: the support of the +1
entries is an (n, k, lambda) difference set in Z_n with d = n - 4(k - lambda),
and the two admissible (k, lambda) pairs for given (n, d) are complements of
each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ntkernel import is_perfect_square, isqrt


@dataclass(frozen=True)
class BinarySequence:
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) < 1:
            raise ValueError("period must be >= 1")
        if any(v not in (-1, 1) for v in self.values):
            raise ValueError("entries must be +1 or -1")

    @property
    def n(self) -> int:
        return len(self.values)

    @classmethod
    def from_text(cls, text: str) -> "BinarySequence":
        """Parse a string over {+, -}, e.g. "-++++"."""
        if not text:
            raise ValueError("empty sequence text")
        vals = []
        for ch in text:
            if ch == "+":
                vals.append(1)
            elif ch == "-":
                vals.append(-1)
            else:
                raise ValueError(f"bad character {ch!r}; expected '+' or '-'")
        return cls(tuple(vals))

    def to_text(self) -> str:
        return "".join("+" if v == 1 else "-" for v in self.values)


@dataclass(frozen=True)
class AutocorrelationProfile:
    n: int
    c: tuple[int, ...]
    d: int | None  # present iff all off-peak values are equal

    @property
    def two_level(self) -> bool:
        return self.d is not None


def autocorrelation(seq: BinarySequence) -> AutocorrelationProfile:
    """C(t) = sum_i a_i a_{i+t} with indices mod n, for t = 0..n-1."""
    a = seq.values
    n = seq.n
    c = tuple(sum(a[i] * a[(i + t) % n] for i in range(n)) for t in range(n))
    d: int | None = None
    if n >= 2 and all(v == c[1] for v in c[2:]):
        d = c[1]
    return AutocorrelationProfile(n, c, d)


@dataclass(frozen=True)
class CdsParams:
    n: int
    k: int
    lam: int

    def __post_init__(self) -> None:
        if not (0 <= self.lam <= self.k <= self.n):
            raise ValueError(f"need 0 <= lambda <= k <= n, got {self}")
        if self.n >= 2 and self.k * (self.k - 1) != (self.n - 1) * self.lam:
            raise ValueError(f"k(k-1) = (n-1)*lambda fails for {self}")

    @property
    def order(self) -> int:
        return self.k - self.lam

    def complement(self) -> "CdsParams":
        return CdsParams(self.n, self.n - self.k, self.n - 2 * self.k + self.lam)

    @property
    def d(self) -> int:
        """Off-peak autocorrelation value of the associated sequences."""
        return self.n - 4 * self.order


@dataclass(frozen=True)
class CyclicDifferenceSet:
    params: CdsParams
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.elements) != self.params.k:
            raise ValueError("element count must equal k")
        if any(not 0 <= e < self.params.n for e in self.elements):
            raise ValueError("elements must be residues in [0, n)")
        if tuple(sorted(set(self.elements))) != self.elements:
            raise ValueError("elements must be strictly increasing")


@dataclass(frozen=True)
class DifferenceViolation:
    """A residue whose difference count deviates from the required lambda."""

    n: int
    k: int
    residue: int
    count: int
    expected: int | None  # None when no integral lambda is possible at all


def difference_counts(n: int, elements: tuple[int, ...]) -> list[int]:
    counts = [0] * n
    for x in elements:
        for y in elements:
            if x != y:
                counts[(x - y) % n] += 1
    return counts


def verify_cds(n: int, elements) -> CdsParams | DifferenceViolation:
    """Count every nonzero difference; return the parameters when each count
    equals lambda, else report a deviant residue."""
    elements = tuple(sorted(set(elements)))
    if any(not 0 <= e < n for e in elements):
        raise ValueError("elements must be residues in [0, n)")
    k = len(elements)
    counts = difference_counts(n, elements)
    if n == 1:
        return CdsParams(1, k, 0)
    total = k * (k - 1)
    expected = total // (n - 1) if total % (n - 1) == 0 else None
    if expected is not None and all(counts[g] == expected for g in range(1, n)):
        return CdsParams(n, k, expected)
    target = expected if expected is not None else 0
    for g in range(1, n):
        if counts[g] != target:
            return DifferenceViolation(n, k, g, counts[g], expected)
    raise AssertionError("unreachable")  # pragma: no cover


def support_set(seq: BinarySequence) -> tuple[int, ...]:
    """Positions carrying +1."""
    return tuple(j for j, v in enumerate(seq.values) if v == 1)


class NotDifferenceSetError(ValueError):
    """The +1 support of a sequence fails the difference-set property.

    Carries the support and the counting violation so callers can still
    inspect the set."""

    def __init__(self, elements: tuple[int, ...], violation: DifferenceViolation):
        self.elements = elements
        self.violation = violation
        super().__init__(
            f"support is not a difference set: residue {violation.residue} "
            f"occurs {violation.count} times, expected {violation.expected}")


def sequence_to_cds(seq: BinarySequence) -> CyclicDifferenceSet:
    """Map a sequence to the difference set supported by its +1 entries.

    Raises NotDifferenceSetError (with the support attached) when the
    sequence is not two-level."""
    elements = support_set(seq)
    res = verify_cds(seq.n, elements)
    if isinstance(res, DifferenceViolation):
        raise NotDifferenceSetError(elements, res)
    return CyclicDifferenceSet(res, elements)


def cds_to_sequence(cds: CyclicDifferenceSet) -> BinarySequence:
    """a_j = +1 iff j is in the set; inverse of sequence_to_cds."""
    members = set(cds.elements)
    return BinarySequence(tuple(1 if j in members else -1
                                for j in range(cds.params.n)))


def params_from_nd(n: int, d: int) -> list[CdsParams]:
    """The 0, 1 or 2 admissible (n, k, lambda) with d = n - 4(k - lambda).

    k = (n + eps*s)/2 and lambda = (n + d + 2*eps*s)/4 where s^2 = dn + n - d;
    the two eps branches are complementary parameter sets.  Smaller k first.
    """
    t = d * n + n - d
    if t < 0 or not is_perfect_square(t):
        return []
    s = isqrt(t)
    out = []
    for eps in (-1, 1):
        if (n + eps * s) % 2 or (n + d + 2 * eps * s) % 4:
            continue
        k = (n + eps * s) // 2
        lam = (n + d + 2 * eps * s) // 4
        if 0 <= lam <= k <= n:
            out.append(CdsParams(n, k, lam))
    uniq = sorted(set(out), key=lambda p: p.k)
    return uniq


def feasibility(n: int, d: int) -> tuple[bool, str]:
    """Necessary arithmetic conditions on (n, d) for a two-level sequence."""
    if n < 1:
        return False, "period must be >= 1"
    if d % 4 != n % 4:
        return False, f"congruence fails: d = {d % 4}, n = {n % 4} (mod 4)"
    t = d * n + n - d
    if t < 0:
        return False, f"dn + n - d = {t} < 0"
    if not is_perfect_square(t):
        return False, f"dn + n - d = {t} is not a perfect square"
    if not params_from_nd(n, d):
        return False, "no integral (k, lambda) pair"
    if d < -1 and (n, d) != (2, -2):
        return False, f"d = {d} < -1 is only possible for (n, d) = (2, -2)"
    return True, "admissible"


def canonical_params(n: int, d: int) -> CdsParams | None:
    """The smaller-k branch; nonexistence transfers to the complement."""
    branches = params_from_nd(n, d)
    return branches[0] if branches else None


def parse_element_set(text: str) -> tuple[int, ...]:
    """Comma-separated decimal residues."""
    try:
        return tuple(int(tok) for tok in text.split(",") if tok.strip() != "")
    except ValueError as exc:
        raise ValueError(f"bad element set {text!r}") from exc


def format_element_set(elements) -> str:
    return ",".join(str(e) for e in elements)
