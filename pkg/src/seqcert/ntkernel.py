"""Exact integer number theory: valuations, residues, orders, semiprimitivity,
modular square roots, factorization, integer square roots.

Everything here is pure integer arithmetic (no floating point) and every
function is deterministic given its arguments; the rho stage of ``factorize``
takes an explicit seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache


class IncompleteFactorizationError(Exception):
    """A computation needed a complete factorization but the budget ran out."""


# ---------------------------------------------------------------------------
# Primality


# Strong-pseudoprime test with this base set is deterministic below this bound
# (Sorenson & Webster).
MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_EXTRA_MR_ROUNDS = 64  # composite escape probability < 4^-64 = 2^-128


def _strong_probable_prime(n: int, base: int) -> bool:
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Deterministic below MR_DETERMINISTIC_BOUND; above it, 64 extra
    strong-pseudoprime rounds with bases derived from n (still a pure
    function of n)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    for base in _MR_BASES:
        if not _strong_probable_prime(n, base):
            return False
    if n < MR_DETERMINISTIC_BOUND:
        return True
    state = n
    for _ in range(_EXTRA_MR_ROUNDS):
        # splitmix64 step; any fixed injective scrambler would do
        state = (state + 0x9E3779B97F4A7C15) % (1 << 64)
        z = state
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 % (1 << 64)
        z = (z ^ (z >> 27)) * 0x94D049BB133111EB % (1 << 64)
        base = 2 + (z ^ (z >> 31)) % (n - 3)
        if not _strong_probable_prime(n, base):
            return False
    return True


def primality_is_deterministic(n: int) -> bool:
    """True when is_prime(n) ran within the deterministic base-set range."""
    return n < MR_DETERMINISTIC_BOUND


@lru_cache(maxsize=None)
def _sieve(limit: int) -> tuple[int, ...]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = b"\x00" * len(range(p * p, limit + 1, p))
    return tuple(i for i, f in enumerate(flags) if f)


_TRIAL_PRIMES_LIMIT = 100_000  # cached sieve used for trial division


# ---------------------------------------------------------------------------
# Integer square roots


def isqrt(m: int) -> int:
    """Floor square root by pure-integer Newton iteration."""
    if m < 0:
        raise ValueError("isqrt of a negative integer")
    if m < 2:
        return m
    x = 1 << ((m.bit_length() + 1) // 2)
    while True:
        y = (x + m // x) // 2
        if y >= x:
            return x
        x = y


def is_perfect_square(m: int) -> bool:
    if m < 0:
        return False
    r = isqrt(m)
    return r * r == m


# ---------------------------------------------------------------------------
# Valuations


class _InfiniteValuation:
    """Sentinel for v_p(0). Deliberately not an int: arithmetic on it raises,
    so an infinite valuation can never be absorbed silently."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITE_VALUATION"

    def __eq__(self, other) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("INFINITE_VALUATION")


INFINITE_VALUATION = _InfiniteValuation()


def padic_valuation(m: int, p: int) -> int:
    """Largest l with p^l | m.  Requires p prime and m nonzero."""
    if m == 0:
        raise ValueError("valuation of 0 is infinite; use padic_valuation_extended")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    m = abs(m)
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


def padic_valuation_extended(m: int, p: int) -> int | _InfiniteValuation:
    """Like padic_valuation but maps 0 to the INFINITE_VALUATION sentinel."""
    if m == 0:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        return INFINITE_VALUATION
    return padic_valuation(m, p)


# ---------------------------------------------------------------------------
# Quadratic residues


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a/p) in {-1, 0, 1} for odd prime p."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def sqrt_mod(a: int, e: int) -> int | None:
    """Square root of a mod an odd prime e, canonical representative in
    [0, (e-1)/2]; None when a is a nonresidue.  Tonelli-Shanks."""
    if e == 2 or not is_prime(e):
        raise ValueError(f"{e} is not an odd prime")
    a %= e
    if a == 0:
        return 0
    if legendre_symbol(a, e) == -1:
        return None
    if e % 4 == 3:
        s = pow(a, (e + 1) // 4, e)
        return min(s, e - s)
    # write e-1 = q * 2^t with q odd
    q, t = e - 1, 0
    while q % 2 == 0:
        q //= 2
        t += 1
    z = 2
    while legendre_symbol(z, e) != -1:
        z += 1
    c = pow(z, q, e)
    x = pow(a, (q + 1) // 2, e)
    b = pow(a, q, e)
    m = t
    while b != 1:
        # find least i with b^(2^i) = 1
        i, bb = 0, b
        while bb != 1:
            bb = bb * bb % e
            i += 1
        g = pow(c, 1 << (m - i - 1), e)
        x = x * g % e
        c = g * g % e
        b = b * c % e
        m = i
    return min(x, e - x)


# ---------------------------------------------------------------------------
# Factorization


@dataclass(frozen=True)
class Factorization:
    """Prime-power decomposition.  When complete is False the listed
    prime-powers divide value and cofactor holds the remaining composite
    (> 1) that the budget could not split."""

    value: int
    factors: tuple[tuple[int, int], ...]
    complete: bool
    cofactor: int | None = None
    probabilistic: bool = False  # some prime passed only probabilistic rounds

    def __post_init__(self) -> None:
        prev = 1
        prod = 1
        for p, e in self.factors:
            if p <= prev:
                raise ValueError("factor primes must be strictly increasing")
            if e <= 0:
                raise ValueError("exponents must be positive")
            prev = p
            prod *= p**e
        if self.complete:
            if prod != self.value or self.cofactor is not None:
                raise ValueError("complete factorization must reconstruct value")
        else:
            if self.cofactor is None or self.cofactor <= 1:
                raise ValueError("incomplete factorization needs a cofactor > 1")
            if prod * self.cofactor != self.value:
                raise ValueError("factors * cofactor must equal value")

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def valuation(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0


def _brent_rho(n: int, budget: int, seed: int) -> tuple[int | None, int]:
    """Budgeted deterministic Brent rho.  Returns (factor or None, iterations
    used).  n must be composite with no small prime factors."""
    used = 0
    attempt = 0
    while used < budget:
        attempt += 1
        if attempt > 64:
            break
        c = (seed + attempt) % n or 1
        y = (seed + 2 * attempt + 1) % n or 2
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1 and used < budget:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                steps = min(m, r - k)
                for _ in range(steps):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                used += steps
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:  # gcd collapsed; backtrack one step at a time
            g = 1
            back = 0
            while g == 1 and back <= 2 * m:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
                back += 1
        if 1 < g < n:
            return g, used
    return None, used


def _integer_kth_root(n: int, k: int) -> int:
    """Floor k-th root by binary search (integer-only)."""
    lo, hi = 1, 1 << (n.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**k <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo


def _perfect_power_root(n: int) -> tuple[int, int] | None:
    """(root, k) with root^k = n and k >= 2, or None."""
    for k in range(2, n.bit_length() + 1):
        r = _integer_kth_root(n, k)
        if r < 2:
            return None
        if r**k == n:
            return r, k
    return None


def factorize(m: int, *, trial_bound: int = 1_000_000,
              rho_budget: int = 10_000_000, seed: int = 0) -> Factorization:
    """Trial division up to trial_bound, then budgeted deterministic Brent
    rho.  Budget exhaustion is reported via complete=False, never a wrong
    factorization."""
    if m < 2:
        raise ValueError("factorize requires m >= 2")
    value = m
    found: dict[int, int] = {}
    probabilistic = False

    limit = min(trial_bound, _TRIAL_PRIMES_LIMIT)
    for p in _sieve(limit):
        if p * p > m:
            break
        while m % p == 0:
            found[p] = found.get(p, 0) + 1
            m //= p
    if m > limit * limit and limit < trial_bound:
        p = limit + 1
        if p % 2 == 0:
            p += 1
        while p <= trial_bound and p * p <= m:
            while m % p == 0:
                found[p] = found.get(p, 0) + 1
                m //= p
            p += 2

    budget = rho_budget
    stack = [m] if m > 1 else []
    cofactor = 1
    while stack:
        x = stack.pop()
        if x == 1:
            continue
        if is_prime(x):
            found[x] = found.get(x, 0) + 1
            if not primality_is_deterministic(x):
                probabilistic = True
            continue
        pk = _perfect_power_root(x)
        if pk is not None:
            root, k = pk
            stack.extend([root] * k)
            continue
        if budget <= 0:
            cofactor *= x
            continue
        f, used = _brent_rho(x, budget, seed)
        budget -= used
        if f is None:
            cofactor *= x
        else:
            stack.append(f)
            stack.append(x // f)

    factors = tuple(sorted(found.items()))
    if cofactor > 1:
        return Factorization(value, factors, False, cofactor, probabilistic)
    return Factorization(value, factors, True, None, probabilistic)


def divisors(fact: Factorization) -> tuple[int, ...]:
    """All divisors of a completely factored integer, ascending."""
    if not fact.complete:
        raise IncompleteFactorizationError(f"divisors of {fact.value}")
    ds = [1]
    for p, e in fact.factors:
        ds = [d * p**i for d in ds for i in range(e + 1)]
    return tuple(sorted(ds))


def square_part_prime_hit(fact: Factorization, residue: int, modulus: int) -> int | None:
    """First prime p = residue (mod modulus) with v_p >= 2, or None."""
    for p, e in fact.factors:
        if e >= 2 and p % modulus == residue:
            return p
    return None


def squarefree_part(fact: Factorization) -> int:
    """Product of primes with odd exponent (sign ignored)."""
    if not fact.complete:
        raise IncompleteFactorizationError(f"squarefree part of {fact.value}")
    r = 1
    for p, e in fact.factors:
        if e % 2:
            r *= p
    return r


# ---------------------------------------------------------------------------
# Multiplicative orders and semiprimitivity


def _carmichael(fact: Factorization) -> int:
    lam = 1
    for p, e in fact.factors:
        if p == 2:
            block = 1 if e == 1 else (2 if e == 2 else 1 << (e - 2))
        else:
            block = (p - 1) * p ** (e - 1)
        lam = lam * block // math.gcd(lam, block)
    return lam


def multiplicative_order(m: int, e: int, *, trial_bound: int = 1_000_000,
                         rho_budget: int = 10_000_000, seed: int = 0) -> int:
    """Least l >= 1 with m^l = 1 (mod e).  Requires gcd(m, e) = 1."""
    if e < 2:
        raise ValueError("modulus must be >= 2")
    if math.gcd(m, e) != 1:
        raise ValueError(f"gcd({m}, {e}) != 1")
    m %= e
    if m == 1 or e == 2:
        return 1
    ef = factorize(e, trial_bound=trial_bound, rho_budget=rho_budget, seed=seed)
    if not ef.complete:
        raise IncompleteFactorizationError(f"order mod {e}: modulus not factored")
    lam = _carmichael(ef)
    lf = factorize(lam, trial_bound=trial_bound, rho_budget=rho_budget, seed=seed)
    if not lf.complete:
        raise IncompleteFactorizationError(f"order mod {e}: group order not factored")
    t = lam
    for q, _ in lf.factors:
        while t % q == 0 and pow(m, t // q, e) == 1:
            t //= q
    return t


def semiprimitivity_exponent(a: int, b: int, **budget) -> int | None:
    """Least witness c with a^c = -1 (mod b) of the form ord/2, or None.

    -1 lies in the cyclic group generated by a mod b iff the order l of a is
    even and a^(l/2) = -1; then c = l/2.  For b = 2 every unit is trivially
    semiprimitive (-1 = 1) with witness 1.
    """
    if b < 2:
        raise ValueError("modulus must be >= 2")
    if math.gcd(a, b) != 1:
        raise ValueError(f"gcd({a}, {b}) != 1")
    if b == 2:
        return 1
    l = multiplicative_order(a, b, **budget)
    if l % 2 == 0 and pow(a, l // 2, b) == b - 1:
        return l // 2
    return None


def is_semiprimitive(a: int, b: int, **budget) -> bool:
    """True iff some power of a is = -1 (mod b)."""
    return semiprimitivity_exponent(a, b, **budget) is not None


# ---------------------------------------------------------------------------
# Witness primes for the valuation tests


def find_witness_prime(m: int, e: int, mode: str, *,
                       trial_bound: int = 1_000_000,
                       rho_budget: int = 10_000_000,
                       seed: int = 0) -> tuple[int, int] | None:
    """Smallest prime p | m with v_p(m) odd and the mode's side condition.

    mode "nonresidue_mod_e": requires e prime = 1 (mod 4), m odd, |m| >= 3 and
    m a quadratic nonresidue mod e; the witness prime is itself a nonresidue
    mod e (hence semiprimitive mod e).

    mode "two_mod_three": requires m = 2 (mod 3), m >= 2; the witness prime is
    p = 2 (mod 3).

    Returns None when the mode premises fail (a witness is guaranteed to
    exist when they hold).  Raises IncompleteFactorizationError when the
    factorization budget runs out: inconclusive, distinct from absent.
    """
    budget = dict(trial_bound=trial_bound, rho_budget=rho_budget, seed=seed)
    if mode == "nonresidue_mod_e":
        if not (is_prime(e) and e % 4 == 1):
            raise ValueError("mode nonresidue_mod_e needs a prime e = 1 (mod 4)")
        if abs(m) < 3 or m % 2 == 0 or legendre_symbol(m, e) != -1:
            return None
        fact = factorize(abs(m), **budget)
        if not fact.complete:
            raise IncompleteFactorizationError(f"witness search in {m}")
        for p, v in fact.factors:
            if v % 2 == 1 and legendre_symbol(p, e) == -1:
                return p, v
        raise AssertionError("nonresidue m must carry a nonresidue prime of odd valuation")
    if mode == "two_mod_three":
        if m < 2 or m % 3 != 2:
            return None
        fact = factorize(m, **budget)
        if not fact.complete:
            raise IncompleteFactorizationError(f"witness search in {m}")
        for p, v in fact.factors:
            if v % 2 == 1 and p % 3 == 2:
                return p, v
        raise AssertionError("m = 2 (mod 3) must carry a p = 2 (mod 3) of odd valuation")
    raise ValueError(f"unknown mode {mode!r}")
