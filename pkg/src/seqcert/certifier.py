"""Nonexistence test battery for cyclic difference sets and the re-checkable
certificates it emits.

Tests: Bruck-Ryser-Chowla (even and odd group order), the square-part test,
Mann's semiprimitivity/valuation test, Turyn's inequality, and the
size-bound (coset) test.  Every nonexistent verdict carries the witnesses an
independent checker needs to re-verify it.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from . import __version__ as TOOL_VERSION
from .config import DEFAULT_CONFIG, RunConfig
from .ntkernel import (
    Factorization,
    IncompleteFactorizationError,
    divisors,
    factorize,
    is_perfect_square,
    isqrt,
    semiprimitivity_exponent,
)
from .seqcore import (
    CdsParams,
    CyclicDifferenceSet,
    DifferenceViolation,
    canonical_params,
    feasibility,
    params_from_nd,
    verify_cds,
)

VERDICT_NONEXISTENT = "nonexistent"
VERDICT_EXISTS = "exists"
VERDICT_OPEN = "open"

RULE_BRC_EVEN = "BRC_EVEN"
RULE_BRC_ODD = "BRC_ODD"
RULE_DSC = "DSC"
RULE_MANN = "MANN"
RULE_TURYN = "TURYN"
RULE_SIZE_BOUND = "SIZE_BOUND"
RULE_ORACLE = "ORACLE"
RULE_WITNESS = "WITNESS"
RULE_FEASIBILITY = "FEASIBILITY"

_WITNESS_KEY_ORDER = ("e", "p", "c", "h", "m", "e_prime", "r",
                      "valuation", "lhs", "rhs", "semiprimitivity_exponent")


@dataclass(frozen=True)
class Certificate:
    params: CdsParams
    verdict: str
    rule: str | None = None
    witnesses: tuple[tuple[str, int], ...] = ()
    witness_set: tuple[int, ...] | None = None
    reason: str | None = None
    d: int | None = None

    def __post_init__(self) -> None:
        if self.verdict not in (VERDICT_NONEXISTENT, VERDICT_EXISTS, VERDICT_OPEN):
            raise ValueError(f"bad verdict {self.verdict!r}")
        if self.verdict == VERDICT_OPEN and self.rule is not None:
            raise ValueError("open certificates carry no rule")
        if self.verdict == VERDICT_OPEN and not self.reason:
            raise ValueError("open certificates need a reason")
        if self.verdict == VERDICT_EXISTS:
            if self.witness_set is None:
                raise ValueError("exists certificates need a witness set")
            res = verify_cds(self.params.n, self.witness_set)
            if isinstance(res, DifferenceViolation) or res != self.params:
                raise ValueError("witness set does not realize the parameters")

    def witness(self, key: str) -> int | None:
        for k, v in self.witnesses:
            if k == key:
                return v
        return None

    # -- JSON wire format: fixed key order, integers as decimal strings -----

    def to_json_dict(self) -> dict:
        return {
            "n": str(self.params.n),
            "k": str(self.params.k),
            "lambda": str(self.params.lam),
            "d": str(self.d) if self.d is not None else None,
            "verdict": self.verdict,
            "rule": self.rule,
            "witnesses": {k: str(v) for k, v in self.witnesses},
            "witness_set": ([str(e) for e in self.witness_set]
                            if self.witness_set is not None else None),
            "reason": self.reason,
            "tool_version": TOOL_VERSION,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(", ", ": "))

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        obj = json.loads(text)
        params = CdsParams(int(obj["n"]), int(obj["k"]), int(obj["lambda"]))
        witnesses = tuple((k, int(v)) for k, v in obj["witnesses"].items())
        ws = obj["witness_set"]
        return cls(
            params=params,
            verdict=obj["verdict"],
            rule=obj["rule"],
            witnesses=witnesses,
            witness_set=tuple(int(e) for e in ws) if ws is not None else None,
            reason=obj["reason"],
            d=int(obj["d"]) if obj["d"] is not None else None,
        )


def _ordered_witnesses(mapping: dict[str, int]) -> tuple[tuple[str, int], ...]:
    unknown = set(mapping) - set(_WITNESS_KEY_ORDER)
    if unknown:
        raise ValueError(f"unknown witness keys {unknown}")
    return tuple((k, mapping[k]) for k in _WITNESS_KEY_ORDER if k in mapping)


def _open(params: CdsParams, reason: str) -> Certificate:
    return Certificate(params, VERDICT_OPEN, reason=reason, d=params.d)


def _nonexistent(params: CdsParams, rule: str, witnesses: dict[str, int],
                 reason: str | None = None) -> Certificate:
    return Certificate(params, VERDICT_NONEXISTENT, rule=rule,
                       witnesses=_ordered_witnesses(witnesses),
                       reason=reason, d=params.d)


def _exists(params: CdsParams, witness_set, rule: str = RULE_WITNESS,
            reason: str | None = None) -> Certificate:
    return Certificate(params, VERDICT_EXISTS, rule=rule,
                       witness_set=tuple(witness_set), reason=reason,
                       d=params.d)


def _budget(config: RunConfig) -> dict:
    return dict(trial_bound=config.trial_bound, rho_budget=config.rho_budget,
                seed=config.seed)


def is_trivial(params: CdsParams) -> bool:
    return params.k <= 1 or params.k >= params.n - 1


def trivial_witness_set(params: CdsParams) -> tuple[int, ...]:
    n, k = params.n, params.k
    if k == 0:
        return ()
    if k == 1:
        return (0,)
    if k == n - 1:
        return tuple(range(1, n))
    if k == n:
        return tuple(range(n))
    raise ValueError(f"{params} is not trivial")


# ---------------------------------------------------------------------------
# Bruck-Ryser-Chowla


def brc_even(params: CdsParams, config: RunConfig = DEFAULT_CONFIG) -> Certificate:
    """Even n: the order k - lambda must be a perfect square."""
    if params.n % 2:
        raise ValueError("brc_even needs even n")
    order = params.order
    if is_perfect_square(order):
        return _open(params, f"order {order} is a perfect square")
    return _nonexistent(params, RULE_BRC_EVEN, {"valuation": order},
                        reason=f"order {order} is not a perfect square")


def _signed_squarefree(m: int, budget: dict) -> tuple[int, frozenset[int]] | None:
    """Signed squarefree kernel of m as (sign, prime set); None on budget."""
    if m == 0:
        return (0, frozenset())
    fact = factorize(abs(m), **budget) if abs(m) >= 2 else None
    if fact is not None and not fact.complete:
        return None
    primes = frozenset(p for p, e in fact.factors if e % 2) if fact else frozenset()
    return (1 if m > 0 else -1, primes)


def _reduce_ternary(b: int, c: int, budget: dict):
    """Reduce x^2 + b y^2 + c z^2 = 0 to pairwise coprime squarefree
    coefficients (solvability-equivalent).  Returns (a, b, c) ints or None
    when a coefficient cannot be factored within budget."""
    coeffs = []
    for m in (1, b, c):
        sf = _signed_squarefree(m, budget)
        if sf is None:
            return None
        coeffs.append([sf[0], set(sf[1])])
    # remove primes shared by a pair: divide both, toggle in the third
    changed = True
    while changed:
        changed = False
        for i, j in ((0, 1), (0, 2), (1, 2)):
            shared = coeffs[i][1] & coeffs[j][1]
            if shared:
                p = min(shared)
                w = 3 - i - j
                coeffs[i][1].discard(p)
                coeffs[j][1].discard(p)
                if p in coeffs[w][1]:
                    coeffs[w][1].discard(p)
                else:
                    coeffs[w][1].add(p)
                changed = True
                break
    out = []
    for sign, primes in coeffs:
        out.append(sign * math.prod(primes))
    return tuple(out)


def _ternary_has_nontrivial_zero(a: int, b: int, c: int) -> bool:
    """Decide a x^2 + b y^2 + c z^2 = 0 for pairwise coprime squarefree
    nonzero coefficients by exhausting the Holzer box: a nontrivial solution,
    if any, exists with |x| <= sqrt|bc|, |y| <= sqrt|ac|, |z| <= sqrt|ab|."""
    if (a > 0 and b > 0 and c > 0) or (a < 0 and b < 0 and c < 0):
        return False
    co = (a, b, c)
    bounds = (isqrt(abs(b * c)), isqrt(abs(a * c)), isqrt(abs(a * b)))
    i1, i2, i3 = sorted(range(3), key=lambda i: bounds[i])
    for v1 in range(bounds[i1] + 1):
        for v2 in range(bounds[i2] + 1):
            if v1 == 0 and v2 == 0:
                continue
            t = -(co[i1] * v1 * v1 + co[i2] * v2 * v2)
            if t % co[i3]:
                continue
            q = t // co[i3]
            if q >= 0 and is_perfect_square(q):
                return True
    return False


def brc_odd(params: CdsParams, config: RunConfig = DEFAULT_CONFIG) -> Certificate:
    """Odd n: x^2 = (k - lambda) y^2 + (-1)^((n-1)/2) lambda z^2 must have a
    nontrivial integer solution.  Decided by squarefree reduction followed by
    exhaustive search inside the Holzer bounds."""
    if params.n % 2 == 0:
        raise ValueError("brc_odd needs odd n")
    sign = -1 if ((params.n - 1) // 2) % 2 else 1
    b, c = -params.order, -sign * params.lam
    if c == 0:
        if is_perfect_square(params.order):
            return _open(params, "ternary form solvable (order is a square)")
        return _nonexistent(params, RULE_BRC_ODD, {},
                            reason="degenerate form x^2 = (k-lambda) y^2 unsolvable")
    reduced = _reduce_ternary(b, c, _budget(config))
    if reduced is None:
        return _open(params, "ternary form coefficients not factored within budget")
    if _ternary_has_nontrivial_zero(*reduced):
        return _open(params, f"ternary form solvable; reduced coefficients {reduced}")
    return _nonexistent(params, RULE_BRC_ODD, {},
                        reason=f"ternary form has only the trivial zero; "
                               f"reduced coefficients {reduced}")


# ---------------------------------------------------------------------------
# Square-part test (n = 1, 2 mod 4)


def dsc_test(params: CdsParams, config: RunConfig = DEFAULT_CONFIG) -> Certificate:
    """A prime p = 3 (mod 4) dividing the square part of n rules the design
    out when n = 1, 2 (mod 4)."""
    n = params.n
    if n % 4 not in (1, 2):
        raise ValueError("square-part test needs n = 1 or 2 (mod 4)")
    if is_trivial(params):
        return _open(params, "trivial parameters are outside the test's scope")
    fact = factorize(n, **_budget(config))
    hit = None
    for p, e in fact.factors:
        if e >= 2 and p % 4 == 3:
            hit = (p, e)
            break
    if hit is not None:
        return _nonexistent(params, RULE_DSC, {"p": hit[0], "valuation": hit[1]})
    if not fact.complete:
        return _open(params, f"square part unresolved: cofactor {fact.cofactor} not factored")
    return _open(params, "square part of n has no prime = 3 (mod 4)")


# ---------------------------------------------------------------------------
# Mann's test


def mann_test(params: CdsParams, config: RunConfig = DEFAULT_CONFIG,
              max_divisors: int | None = None) -> Certificate:
    """Search divisors e >= 2 of n (ascending) and primes p | k - lambda of
    odd valuation (ascending) for p semiprimitive mod e; such a pair rules
    the design out (the valuation of the order at a semiprimitive prime must
    be even)."""
    if params.k <= params.lam:
        raise ValueError("mann_test needs k > lambda")
    budget = _budget(config)
    order = params.order
    if order == 1:
        return _open(params, "order 1 has no prime divisor")
    of = factorize(order, **budget)
    odd_primes = [p for p, e in of.factors if e % 2 == 1]
    if not of.complete:
        return _open(params, f"order not factored within budget (cofactor {of.cofactor})")
    if not odd_primes:
        return _open(params, "no prime of odd valuation in the order")
    nf = factorize(params.n, **budget)
    if not nf.complete:
        return _open(params, f"n not factored within budget (cofactor {nf.cofactor})")
    ds = [e for e in divisors(nf) if e >= 2]
    if max_divisors is not None:
        ds = ds[:max_divisors]
    for e in ds:
        for p in odd_primes:
            if math.gcd(p, e) != 1:
                continue
            try:
                c = semiprimitivity_exponent(p, e, **budget)
            except IncompleteFactorizationError:
                continue
            if c is not None:
                return _nonexistent(params, RULE_MANN, {
                    "e": e, "p": p, "c": c,
                    "valuation": of.valuation(p)})
    return _open(params, "no semiprimitive prime of odd valuation found")


# ---------------------------------------------------------------------------
# Turyn's inequality


def _coprime_part(e: int, c: int) -> int:
    """Largest divisor of e coprime to c."""
    g = math.gcd(e, c)
    while g > 1:
        while e % g == 0:
            e //= g
        g = math.gcd(e, c)
    return e


def turyn_test(params: CdsParams, c: int, e: int,
               config: RunConfig = DEFAULT_CONFIG) -> Certificate:
    """Turyn's bound: with c^2 | k - lambda, e | n, e' the largest divisor of
    e coprime to c, and c semiprimitive mod e', existence forces
    c*e <= 2^(r-1) * n with r the number of distinct primes of gcd(e, c).

    gcd(e, c) = 1 gives r = 0; the bound is then applied with r = 1 (the
    r = 0 reading provably over-fires on realizable parameters) and the
    certificate notes the coprime case for review.
    """
    budget = _budget(config)
    order = params.order
    if c < 1 or order % (c * c) != 0:
        raise ValueError(f"need c^2 | k - lambda, got c={c}, order={order}")
    if e < 2 or params.n % e != 0:
        raise ValueError(f"e must be a divisor >= 2 of n, got e={e}")
    e_prime = _coprime_part(e, c)
    g = math.gcd(e, c)
    if g > 1:
        gf = factorize(g, **budget)
        if not gf.complete:
            return _open(params, f"gcd({e},{c}) not factored within budget")
        r = len(gf.factors)
    else:
        r = 0
    lhs = c * e
    rhs = (1 << (max(r, 1) - 1)) * params.n
    notes = []
    if r == 0:
        notes.append("gcd(e,c)=1: inequality applied with r=1; flagged for review")
    if e_prime == 1:
        notes.append("e'=1: semiprimitivity clause vacuous")
        exponent = 0
    else:
        try:
            exponent = semiprimitivity_exponent(c % e_prime or e_prime, e_prime, **budget) \
                if math.gcd(c, e_prime) == 1 else None
        except IncompleteFactorizationError:
            return _open(params, f"order of {c} mod {e_prime} not computable within budget")
        if exponent is None:
            return _open(params, f"{c} is not semiprimitive mod {e_prime}")
    if lhs <= rhs:
        return _open(params, f"inequality holds: {lhs} <= {rhs}")
    return _nonexistent(params, RULE_TURYN, {
        "c": c, "e": e, "e_prime": e_prime, "r": r,
        "lhs": lhs, "rhs": rhs,
        "semiprimitivity_exponent": exponent,
    }, reason="; ".join(notes) if notes else None)


def _turyn_candidate_divisors(params: CdsParams, config: RunConfig,
                              nf: Factorization) -> list[int]:
    """Candidate moduli e: proper divisors of n.  Full enumeration only for
    n up to the configured bound; above it, prime-power divisors plus the odd
    part of n (the shapes the large certified instances need)."""
    n = params.n
    if n <= config.turyn_full_divisor_max:
        return [e for e in divisors(nf) if 2 <= e <= n // 2]
    cands: set[int] = set()
    for p, e0 in nf.factors:
        pk = 1
        for _ in range(e0):
            pk *= p
            cands.add(pk)
    odd = n
    while odd % 2 == 0:
        odd //= 2
    cands.add(odd)
    return sorted(e for e in cands if 2 <= e <= n // 2)


def turyn_stage(params: CdsParams, config: RunConfig = DEFAULT_CONFIG) -> Certificate:
    """Heuristic candidate sweep for turyn_test: c ascending over square-root
    divisors of the order, e ascending over the candidate moduli."""
    budget = _budget(config)
    order = params.order
    nf = factorize(params.n, **budget)
    if not nf.complete:
        return _open(params, f"n not factored within budget (cofactor {nf.cofactor})")
    es = _turyn_candidate_divisors(params, config, nf)
    cs = [m for m in range(2, isqrt(order) + 1) if order % (m * m) == 0]
    for c in cs:
        for e in es:
            # cheap pre-filter: the inequality can only fail when lhs > n
            if c * e <= params.n:
                continue
            cert = turyn_test(params, c, e, config)
            if cert.verdict == VERDICT_NONEXISTENT:
                return cert
    return _open(params, "no Turyn candidate pair violates the bound")


# ---------------------------------------------------------------------------
# Size-bound (coset) test


def size_bound_test(params: CdsParams, h: int, m: int,
                    config: RunConfig = DEFAULT_CONFIG) -> Certificate:
    """With m^2 | k - lambda, h a proper factor of n and m semiprimitive mod
    e = n/h, existence forces h >= m."""
    budget = _budget(config)
    if m < 1 or params.order % (m * m) != 0:
        raise ValueError(f"need m^2 | k - lambda, got m={m}, order={params.order}")
    if h < 1 or h >= params.n or params.n % h != 0:
        raise ValueError(f"h must be a proper factor of n, got h={h}")
    e = params.n // h
    if math.gcd(m, e) != 1:
        return _open(params, f"gcd(m, n/h) = {math.gcd(m, e)} > 1")
    try:
        exponent = semiprimitivity_exponent(m % e or e, e, **budget) if e >= 2 else 1
    except IncompleteFactorizationError:
        return _open(params, f"order of {m} mod {e} not computable within budget")
    if exponent is None:
        return _open(params, f"{m} is not semiprimitive mod {e}")
    if h >= m:
        return _open(params, f"bound holds: h = {h} >= m = {m}")
    return _nonexistent(params, RULE_SIZE_BOUND, {
        "h": h, "m": m, "e": e,
        "semiprimitivity_exponent": exponent,
    })


def size_bound_stage(params: CdsParams, config: RunConfig = DEFAULT_CONFIG) -> Certificate:
    """Candidate sweep: m ascending over square-root divisors of the order,
    h over small divisors of n below m."""
    order = params.order
    ms = [m for m in range(2, isqrt(order) + 1) if order % (m * m) == 0]
    if not ms:
        return _open(params, "order admits no m >= 2 with m^2 | k - lambda")
    n = params.n
    hs = [h for h in range(2, min(config.size_bound_h_max, n - 1) + 1) if n % h == 0]
    for m in ms:
        for h in hs:
            if h >= m:
                continue
            cert = size_bound_test(params, h, m, config)
            if cert.verdict == VERDICT_NONEXISTENT:
                return cert
    return _open(params, "no size-bound candidate pair violates h >= m")


# ---------------------------------------------------------------------------
# Orchestrator


KNOWN_WITNESS_SETS: dict[tuple[int, int], tuple[int, ...]] = {
    # (n, d) -> canonical-branch difference set realizing a two-level sequence
    (2, -2): (1,),
    (4, 0): (3,),
    (5, 1): (0,),
    (6, 2): (0,),
    (7, 3): (0,),
    (8, 4): (0,),
    (13, 1): (5, 6, 9, 11),
    (40, 4): (1, 2, 3, 5, 6, 9, 14, 15, 18, 20, 25, 27, 35),
}


def battery(params: CdsParams, config: RunConfig = DEFAULT_CONFIG,
            collect_all: bool = False) -> list[Certificate]:
    """Run the test battery in fixed order; first nonexistent wins unless
    collect_all, in which case every applicable test's certificate is
    returned."""
    certs: list[Certificate] = []

    def stages():
        if params.n % 4 in (1, 2):
            yield dsc_test
        yield brc_even if params.n % 2 == 0 else brc_odd
        if params.k > params.lam:
            yield mann_test
        yield turyn_stage
        yield size_bound_stage

    for stage in stages():
        cert = stage(params, config)
        certs.append(cert)
        if cert.verdict == VERDICT_NONEXISTENT and not collect_all:
            break
    return certs


def certify_params(params: CdsParams, config: RunConfig = DEFAULT_CONFIG) -> Certificate:
    """Battery verdict for explicit parameters (no oracle stage)."""
    if is_trivial(params):
        return _exists(params, trivial_witness_set(params),
                       reason="trivial parameters")
    known = KNOWN_WITNESS_SETS.get((params.n, params.d))
    if known is not None and not isinstance(verify_cds(params.n, known), DifferenceViolation):
        res = verify_cds(params.n, known)
        if res == params:
            return _exists(params, known)
    certs = battery(params, config)
    for cert in certs:
        if cert.verdict == VERDICT_NONEXISTENT:
            return cert
    reasons = "; ".join(c.reason or "" for c in certs)
    return _open(params, f"battery exhausted: {reasons}")


def certify(n: int, d: int, config: RunConfig = DEFAULT_CONFIG,
            all_rules: bool = False) -> Certificate | list[Certificate]:
    """Feasibility gate, canonical parameters, known-witness lookup, then the
    battery.  With all_rules, returns every applicable certificate."""
    ok, why = feasibility(n, d)
    if not ok:
        # no integral parameters / congruence failure: no sequence can exist
        params = canonical_params(n, d) or CdsParams(n, 0, 0)
        cert = Certificate(params, VERDICT_NONEXISTENT, rule=RULE_FEASIBILITY,
                           reason=why, d=d)
        return [cert] if all_rules else cert
    params = canonical_params(n, d)
    assert params is not None
    if all_rules:
        out = []
        primary = certify_params(params, config)
        out.append(primary)
        if primary.verdict != VERDICT_EXISTS:
            for cert in battery(params, config, collect_all=True):
                if cert is not out[0]:
                    out.append(cert)
        return out
    return certify_params(params, config)
