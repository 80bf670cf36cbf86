"""Independent certificate verification.

Re-derives every claim of a nonexistence certificate from its witnesses and
the bare parameters, using only the number-theory kernel: divisibility,
valuation parities, semiprimitivity powers, and inequality sides are all
recomputed here, on a code path separate from the certifier's.

For the odd-n Bruck-Ryser-Chowla rule the checker intentionally uses a
different decision method than the certifier (quadratic-residue conditions
instead of bounded search), so the two sides of that verdict are independent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .certifier import (
    Certificate,
    RULE_BRC_EVEN,
    RULE_BRC_ODD,
    RULE_DSC,
    RULE_FEASIBILITY,
    RULE_MANN,
    RULE_ORACLE,
    RULE_SIZE_BOUND,
    RULE_TURYN,
    VERDICT_EXISTS,
    VERDICT_NONEXISTENT,
)
from .ntkernel import (
    factorize,
    is_perfect_square,
    is_prime,
    isqrt,
    legendre_symbol,
    padic_valuation,
)
from .seqcore import CdsParams, DifferenceViolation, params_from_nd, verify_cds


@dataclass(frozen=True)
class RecheckResult:
    accepted: bool
    detail: str

    def __bool__(self) -> bool:  # pragma: no cover - convenience
        return self.accepted


def _fail(detail: str) -> RecheckResult:
    return RecheckResult(False, detail)


def _ok(detail: str = "verified") -> RecheckResult:
    return RecheckResult(True, detail)


def _power_is_minus_one(a: int, c: int, b: int) -> bool:
    """a^c = -1 (mod b); the witness form of semiprimitivity."""
    if b == 1:
        return True
    if b == 2:
        return a % 2 == 1
    return pow(a, c, b) == b - 1


def _signed_squarefree_primes(m: int) -> tuple[int, frozenset[int]]:
    if m == 0:
        return 0, frozenset()
    sign = 1 if m > 0 else -1
    if abs(m) == 1:
        return sign, frozenset()
    fact = factorize(abs(m))
    if not fact.complete:
        raise ValueError(f"cannot factor {m} for recheck")
    return sign, frozenset(p for p, e in fact.factors if e % 2)


def _reduce_ternary_coeffs(b: int, c: int) -> tuple[int, int, int]:
    coeffs = []
    for m in (1, b, c):
        sign, primes = _signed_squarefree_primes(m)
        coeffs.append([sign, set(primes)])
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
    return tuple(s * math.prod(ps) for s, ps in coeffs)


def _is_square_mod_squarefree(t: int, m: int) -> bool:
    """x^2 = t (mod |m|) solvable, for squarefree m (0 counts as a square)."""
    m = abs(m)
    if m == 1:
        return True
    fact = factorize(m)
    for p, _ in fact.factors:
        if p == 2:
            continue
        if legendre_symbol(t, p) == -1:
            return False
    return True


def _ternary_solvable_by_residues(a: int, b: int, c: int) -> bool:
    """Legendre's criterion for a x^2 + b y^2 + c z^2 = 0 with pairwise
    coprime squarefree coefficients of mixed signs."""
    if (a > 0 and b > 0 and c > 0) or (a < 0 and b < 0 and c < 0):
        return False
    return (_is_square_mod_squarefree(-b * c, a)
            and _is_square_mod_squarefree(-a * c, b)
            and _is_square_mod_squarefree(-a * b, c))


def verify_certificate(cert: Certificate,
                       oracle_replay_cap: float | None = None) -> RecheckResult:
    """Accept a certificate only if every claim re-verifies from scratch.

    Witness-based rules are checked by pure arithmetic.  ORACLE verdicts have
    no arithmetic witnesses; they are accepted only by replaying the
    exhaustive search, which requires an explicit oracle_replay_cap."""
    params = cert.params
    n, k, lam = params.n, params.k, params.lam

    if cert.verdict == VERDICT_EXISTS:
        if cert.witness_set is None:
            return _fail("exists without witness set")
        res = verify_cds(n, cert.witness_set)
        if isinstance(res, DifferenceViolation):
            return _fail(f"witness set fails difference count at {res.residue}")
        if res != params:
            return _fail(f"witness set realizes {res}, not {params}")
        return _ok()

    if cert.verdict != VERDICT_NONEXISTENT:
        return _fail(f"nothing to verify for verdict {cert.verdict!r}")

    order = k - lam
    w = dict(cert.witnesses)

    if cert.rule == RULE_FEASIBILITY:
        if cert.d is None:
            return _fail("feasibility rule needs d")
        d = cert.d
        if d % 4 != n % 4:
            return _ok("congruence d = n (mod 4) fails")
        t = d * n + n - d
        if t < 0 or not is_perfect_square(t):
            return _ok("dn + n - d is not a perfect square")
        if not params_from_nd(n, d):
            return _ok("no integral parameter pair")
        if d < -1 and (n, d) != (2, -2):
            return _ok("d < -1 admissible only at (2, -2)")
        return _fail("feasibility conditions actually hold")

    if cert.rule == RULE_BRC_EVEN:
        if n % 2:
            return _fail("BRC_EVEN on odd n")
        if is_perfect_square(order):
            return _fail(f"order {order} is a square")
        return _ok()

    if cert.rule == RULE_BRC_ODD:
        if n % 2 == 0:
            return _fail("BRC_ODD on even n")
        sign = -1 if ((n - 1) // 2) % 2 else 1
        if lam == 0:
            return _ok() if not is_perfect_square(order) \
                else _fail("degenerate form is solvable")
        reduced = _reduce_ternary_coeffs(-order, -sign * lam)
        if _ternary_solvable_by_residues(*reduced):
            return _fail(f"ternary form {reduced} is solvable by residue criteria")
        return _ok()

    if cert.rule == RULE_DSC:
        if n % 4 not in (1, 2):
            return _fail("square-part rule needs n = 1, 2 (mod 4)")
        if k <= 1 or k >= n - 1:
            return _fail("square-part rule on trivial parameters")
        p = w.get("p")
        if p is None or not is_prime(p):
            return _fail("missing or composite witness prime")
        if p % 4 != 3:
            return _fail(f"witness prime {p} is not 3 (mod 4)")
        if padic_valuation(n, p) < 2:
            return _fail(f"{p}^2 does not divide n")
        return _ok()

    if cert.rule == RULE_MANN:
        e, p, c = w.get("e"), w.get("p"), w.get("c")
        if e is None or p is None or c is None:
            return _fail("missing Mann witnesses")
        if e < 2 or n % e:
            return _fail(f"e = {e} is not a divisor >= 2 of n")
        if not is_prime(p):
            return _fail(f"witness {p} is not prime")
        if order == 0 or padic_valuation(order, p) % 2 == 0:
            return _fail(f"v_{p}(k - lambda) is even")
        if not _power_is_minus_one(p, c, e):
            return _fail(f"{p}^{c} != -1 (mod {e})")
        return _ok()

    if cert.rule == RULE_TURYN:
        c, e = w.get("c"), w.get("e")
        e_prime, r = w.get("e_prime"), w.get("r")
        lhs, rhs, expo = w.get("lhs"), w.get("rhs"), w.get("semiprimitivity_exponent")
        if None in (c, e, e_prime, r, lhs, rhs, expo):
            return _fail("missing Turyn witnesses")
        if c < 1 or order % (c * c):
            return _fail(f"c^2 = {c * c} does not divide the order {order}")
        if e < 2 or n % e:
            return _fail(f"e = {e} is not a divisor >= 2 of n")
        g = math.gcd(e, c)
        ep = e
        while g > 1:
            while ep % g == 0:
                ep //= g
            g = math.gcd(ep, c)
        if ep != e_prime:
            return _fail(f"e' recomputes to {ep}, certificate says {e_prime}")
        gf = factorize(math.gcd(e, c)) if math.gcd(e, c) > 1 else None
        r2 = len(gf.factors) if gf else 0
        if gf is not None and not gf.complete:
            return _fail("cannot factor gcd(e, c)")
        if r2 != r:
            return _fail(f"r recomputes to {r2}, certificate says {r}")
        if lhs != c * e:
            return _fail("lhs != c*e")
        if rhs != (1 << (max(r, 1) - 1)) * n:
            return _fail("rhs != 2^(max(r,1)-1) * n")
        if lhs <= rhs:
            return _fail("inequality c*e > bound does not hold")
        if e_prime > 1 and not _power_is_minus_one(c, expo, e_prime):
            return _fail(f"{c}^{expo} != -1 (mod {e_prime})")
        return _ok()

    if cert.rule == RULE_SIZE_BOUND:
        h, m, e = w.get("h"), w.get("m"), w.get("e")
        expo = w.get("semiprimitivity_exponent")
        if None in (h, m, e, expo):
            return _fail("missing size-bound witnesses")
        if m < 1 or order % (m * m):
            return _fail(f"m^2 = {m * m} does not divide the order {order}")
        if h < 1 or h >= n or n % h or n // h != e:
            return _fail("h is not a proper factor of n with e = n/h")
        if h >= m:
            return _fail(f"h = {h} >= m = {m}: no contradiction")
        if not _power_is_minus_one(m, expo, e):
            return _fail(f"{m}^{expo} != -1 (mod {e})")
        return _ok()

    if cert.rule is not None and cert.rule.startswith("FAMILY:"):
        return _verify_family_rule(cert)

    if cert.rule == RULE_ORACLE:
        if oracle_replay_cap is None:
            return _fail("oracle verdicts need a search replay "
                         "(pass oracle_replay_cap)")
        from .oracle import exhaustive_cds_search

        res = exhaustive_cds_search(n, k, lam, time_cap=oracle_replay_cap)
        if not res.complete:
            return _fail("replay hit its time cap before exhausting the space")
        if res.sets:
            return _fail("replay found a set; nonexistence verdict is wrong")
        return _ok("search replay exhausted the space and found nothing")

    return _fail(f"unknown rule {cert.rule!r}")


def _verify_family_rule(cert: Certificate) -> RecheckResult:
    """Residue-class family rules all reduce to a Mann-type claim: the
    witness prime has odd valuation in the order and some power of it is
    -1 modulo the witness modulus e, with e | n."""
    params = cert.params
    n, order = params.n, params.order
    w = dict(cert.witnesses)
    e, p = w.get("e"), w.get("p")
    val, expo = w.get("valuation"), w.get("semiprimitivity_exponent")
    if None in (e, p, val, expo):
        return _fail("missing family-rule witnesses")
    if e < 2 or n % e:
        return _fail(f"e = {e} does not divide n")
    if not is_prime(p):
        return _fail(f"{p} is not prime")
    if padic_valuation(order, p) != val or val % 2 == 0:
        return _fail(f"v_{p}({order}) != {val} or even")
    if not _power_is_minus_one(p, expo, e):
        return _fail(f"{p}^{expo} != -1 (mod {e})")
    return _ok()
