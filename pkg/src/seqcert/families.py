"""The four residue-class parameter families (one per admissible off-peak
value d in {1, 2, 3, 4}), their family-specific nonexistence checks, the
residue-class generators behind them, and scans that certify whole parameter
tables row by row.

Family by off-peak value d:
  d=1: n = (u^2+1)/2 for odd u            (modulus-5 and general-e checks)
  d=2: n = 2u, u = 2B^2+1, A^2-3B^2 = 1   (Pell-driven rows)
  d=3: n = (A^2+3)/4, A = +-3 (mod 8)     (modulus-3 and general-e checks)
  d=4: n = 4u, u = B^2+1, A^2-5B^2 = 4    (Pell-driven rows, size bound)
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .certifier import (
    Certificate,
    KNOWN_WITNESS_SETS,
    RULE_ORACLE,
    VERDICT_NONEXISTENT,
    VERDICT_OPEN,
    _exists,
    _nonexistent,
    _open,
    certify_params,
    dsc_test,
    size_bound_test,
    turyn_stage,
)
from .config import DEFAULT_CONFIG, RunConfig
from .ntkernel import (
    IncompleteFactorizationError,
    factorize,
    find_witness_prime,
    is_prime,
    legendre_symbol,
    padic_valuation,
    semiprimitivity_exponent,
    sqrt_mod,
)
from .pell import Form, enumerate_solutions
from .seqcore import CdsParams

RULE_T4137 = "FAMILY:T4137"
RULE_T41NE2 = "FAMILY:T41NE2"
RULE_T43NE = "FAMILY:T43NE"
RULE_T43NEE = "FAMILY:T43NEE"


# ---------------------------------------------------------------------------
# Residue classes


@dataclass(frozen=True)
class ResidueClasses:
    modulus: int
    residues: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(set(r % self.modulus for r in self.residues)) != list(self.residues):
            raise ValueError("residues must be sorted, distinct, reduced")

    def __contains__(self, value: int) -> bool:
        return value % self.modulus in self.residues

    def members(self, lo: int, hi: int) -> list[int]:
        """All members in [lo, hi]."""
        out = []
        base = lo - lo % self.modulus
        while base <= hi:
            for r in self.residues:
                v = base + r
                if lo <= v <= hi:
                    out.append(v)
            base += self.modulus
        return sorted(out)


# ---------------------------------------------------------------------------
# Family parameter constructors


def family1_params(u: int) -> CdsParams:
    """d = 1 family: n = (u^2+1)/2 for odd u >= 3."""
    if u < 3 or u % 2 == 0:
        raise ValueError("need odd u >= 3")
    return CdsParams((u * u + 1) // 2, (u - 1) ** 2 // 4, (u - 1) * (u - 3) // 8)


def family2_member(index: int, a: int, b: int) -> tuple[int, CdsParams]:
    """d = 2 family row from the Pell solution (A_i, B_i) with A^2-3B^2=1."""
    if a * a - 3 * b * b != 1:
        raise ValueError("need A^2 - 3 B^2 = 1")
    u = 2 * b * b + 1
    return u, CdsParams(2 * u, u - a, b * b + 1 - a)


def family3_params(a: int) -> CdsParams:
    """d = 3 family: n = (A^2+3)/4 for A = +-3 (mod 8), A >= 5."""
    if a < 5 or a % 8 not in (3, 5):
        raise ValueError("need A >= 5 with A = +-3 (mod 8)")
    return CdsParams((a * a + 3) // 4, (a - 1) * (a - 3) // 8, (a - 3) * (a - 5) // 16)


def family0_member(index: int, a: int, b: int) -> tuple[int, CdsParams]:
    """d = 4 family row from the Pell solution (A_i, B_i) with A^2-5B^2=4."""
    if a * a - 5 * b * b != 4:
        raise ValueError("need A^2 - 5 B^2 = 4")
    u = b * b + 1
    return u, CdsParams(4 * u, 2 * u - a, u + 1 - a)


def _budget(config: RunConfig) -> dict:
    return dict(trial_bound=config.trial_bound, rho_budget=config.rho_budget,
                seed=config.seed)


# ---------------------------------------------------------------------------
# d = 1 family checks (modulus 5)


def t4137_check(u: int, config: RunConfig = DEFAULT_CONFIG) -> Certificate:
    """Modulus-5 valuation test for the d=1 family, u = 3, 7 (mod 10).

    Fires when v_2(u^2-1) is even (witness p=2, e=5) or when some odd prime
    p = 2, 3, 4 (mod 5) has odd valuation in u-1 or u+1 (witness p, e=5).
    """
    if u % 10 not in (3, 7):
        raise ValueError("need u = 3 or 7 (mod 10)")
    params = family1_params(u)
    budget = _budget(config)
    v2 = padic_valuation(u * u - 1, 2)
    if v2 % 2 == 0:
        return _nonexistent(params, RULE_T4137, {
            "e": 5, "p": 2,
            "valuation": padic_valuation(params.order, 2),
            "semiprimitivity_exponent": semiprimitivity_exponent(2, 5)})
    try:
        candidates: list[int] = []
        for side in (u - 1, u + 1):
            fact = factorize(side, **budget)
            if not fact.complete:
                raise IncompleteFactorizationError(str(side))
            for p, e in fact.factors:
                if p != 2 and p % 5 in (2, 3, 4) and e % 2 == 1:
                    candidates.append(p)
    except IncompleteFactorizationError as exc:
        return _open(params, f"factorization budget exhausted on {exc}")
    if candidates:
        p = min(candidates)
        return _nonexistent(params, RULE_T4137, {
            "e": 5, "p": p,
            "valuation": padic_valuation(params.order, p),
            "semiprimitivity_exponent": semiprimitivity_exponent(p, 5)})
    return _open(params, "neither modulus-5 valuation condition holds")


def t41ne_classes(variant: int, l: int, p: int | None = None,
                  sign: int | None = None) -> ResidueClasses:
    """Residue classes of u on which the modulus-5 test provably fires.

    variant 1 (l >= 1): classes where v_2(u^2-1) is even,
        u = +-(2^(2l+1) + (-1)^l), +-(3*2^(2l+1) + (-1)^l)  (mod 5*2^(2l+2)).
    variant 2 (l >= 0, odd prime p = 2, 3, 4 (mod 5)): classes where
        v_p(u - sign) is odd, u = 2*b*p^(2l+1) + sign with the admissible b
        residues (both signs merged when sign is None).
    """
    if variant == 1:
        if l < 1:
            raise ValueError("variant 1 needs l >= 1")
        m = 5 << (2 * l + 2)
        s = 1 << (2 * l + 1)
        eps = (-1) ** l
        base = (s + eps, 3 * s + eps)
        residues = sorted({r % m for b in base for r in (b, -b)})
        return ResidueClasses(m, tuple(residues))
    if variant == 2:
        if p is None or p == 2 or not is_prime(p) or p % 5 not in (2, 3, 4):
            raise ValueError("variant 2 needs an odd prime p = 2, 3, 4 (mod 5)")
        if l < 0:
            raise ValueError("variant 2 needs l >= 0")
        sgn = (-1) ** l
        if p % 5 == 4:
            b_plus, b_minus = (2, 4), (1, 3)
        elif p % 5 == 3:
            b_plus = (sgn % 5, (sgn * 2) % 5)
            b_minus = ((sgn * 3) % 5, (sgn * 4) % 5)
        else:  # p % 5 == 2
            b_plus = ((sgn * 3) % 5, (sgn * 4) % 5)
            b_minus = (sgn % 5, (sgn * 2) % 5)
        pk = p ** (2 * l + 1)
        m = 10 * pk * p
        branches = ((1, b_plus), (-1, b_minus)) if sign is None else \
            ((1, b_plus),) if sign == 1 else ((-1, b_minus),)
        residues = set()
        for sg, b5s in branches:
            for b5 in b5s:
                for b in range(5 * p):
                    if b % 5 == b5 % 5 and b % p != 0:
                        residues.add((2 * b * pk + sg) % m)
        return ResidueClasses(m, tuple(sorted(residues)))
    raise ValueError("variant must be 1 or 2")


def t41ne2_classes(e: int, l: int, c: int) -> ResidueClasses:
    """u classes mod 2^(l+1) c^2 e on which the general modulus-e test fires:
    u = 2^l c^2 r +- 1 for odd nonresidues r mod e, filtered by the family
    premise u^2 = -1 (mod e)."""
    if not (is_prime(e) and e % 4 == 1):
        raise ValueError("need a prime e = 1 (mod 4)")
    if (1 << l) * c % 2:
        raise ValueError("need 2 | 2^l * c")
    scale = (1 << l) * c * c
    m = 2 * scale * e
    residues = set()
    for r in range(1, 2 * e, 2):
        if legendre_symbol(r, e) != -1:
            continue
        for sign in (1, -1):
            for t in range(m // (2 * e)):
                u = (scale * (r + 2 * e * t) + sign) % m
                if pow(u, 2, e) == e - 1:
                    residues.add(u)
    return ResidueClasses(m, tuple(sorted(residues)))


def t41ne2_check(u: int, e: int, l: int, c: int, r: int,
                 config: RunConfig = DEFAULT_CONFIG) -> Certificate:
    """General modulus-e test for the d=1 family.

    Premises: e prime = 1 (mod 4); u odd with u^2 = -1 (mod e); 2 | 2^l c;
    r an odd quadratic nonresidue mod e; and u = 2^l c^2 r +- 1 modulo
    2^(l+1) c^2 e.  Then u -+ 1 carries an odd-valuation prime that is a
    nonresidue (hence semiprimitive) mod e.
    """
    params = family1_params(u)
    if not (is_prime(e) and e % 4 == 1):
        return _open(params, f"e = {e} is not a prime = 1 (mod 4)")
    if u % 2 == 0 or pow(u, 2, e) != e - 1:
        return _open(params, f"premise u^2 = -1 (mod {e}) fails")
    if (1 << l) * c % 2:
        return _open(params, "premise 2 | 2^l c fails")
    if r % 2 == 0 or legendre_symbol(r, e) != -1:
        return _open(params, f"r = {r} is not an odd nonresidue mod {e}")
    scale = (1 << l) * c * c
    m = 2 * scale * e
    sign = None
    for s in (1, -1):
        if (u - s) % m == (scale * r) % m:
            sign = s
            break
    if sign is None:
        return _open(params, f"u is not = 2^l c^2 r +- 1 (mod {m})")
    witness_target = (u - sign) // scale
    try:
        found = find_witness_prime(witness_target, e, "nonresidue_mod_e",
                                   **_budget(config))
    except IncompleteFactorizationError as exc:
        return _open(params, f"factorization budget exhausted on {exc}")
    if found is None:
        return _open(params, "witness-prime premises failed unexpectedly")
    p, _ = found
    return _nonexistent(params, RULE_T41NE2, {
        "e": e, "p": p,
        "valuation": padic_valuation(params.order, p),
        "semiprimitivity_exponent": semiprimitivity_exponent(p, e, **_budget(config))})


def t41ne2_search(u: int, config: RunConfig = DEFAULT_CONFIG) -> Certificate | None:
    """Look for (e, l, c, r) making t41ne2_check fire, within the configured
    bounds.  Returns None when nothing is found."""
    params = family1_params(u)
    budget = _budget(config)
    nf = factorize(params.n, **budget)
    for e, _ in nf.factors:
        if e > config.witness_e_max or e % 4 != 1 or not is_prime(e):
            continue
        if pow(u, 2, e) != e - 1:
            continue
        for l in range(config.witness_l_max + 1):
            for c in range(1, config.witness_c_max + 1):
                if ((1 << l) * c) % 2:
                    continue
                scale = (1 << l) * c * c
                for sign in (1, -1):
                    if (u - sign) % scale:
                        continue
                    m = (u - sign) // scale
                    r = m % (2 * e)
                    if r % 2 == 0 or legendre_symbol(r, e) != -1:
                        continue
                    cert = t41ne2_check(u, e, l, c, r, config)
                    if cert.verdict == VERDICT_NONEXISTENT:
                        return cert
    return None


# ---------------------------------------------------------------------------
# d = 3 family checks


#: A (mod 72) classes on which the modulus-3 route below is guaranteed to
#: fire (quadratic-in-l factorizations stay = 2 mod 3).
T43_GUARANTEED_CLASSES = ResidueClasses(72, (27, 45, 51, 69))


def t43ne_check(a: int, config: RunConfig = DEFAULT_CONFIG) -> Certificate:
    """Modulus-3 valuation test for the d=3 family, A = +-3 (mod 24).

    Fires when some prime p = 2 (mod 3) has odd valuation in A^2 - 9.
    """
    if a % 24 not in (3, 21):
        raise ValueError("need A = +-3 (mod 24)")
    if a < 5:
        raise ValueError("need A >= 5")
    params = family3_params(a)
    budget = _budget(config)
    try:
        candidates = []
        for side in (a - 3, a + 3):
            fact = factorize(side, **budget)
            if not fact.complete:
                raise IncompleteFactorizationError(str(side))
            for p, _ in fact.factors:
                if p % 3 == 2 and padic_valuation(a * a - 9, p) % 2 == 1:
                    candidates.append(p)
    except IncompleteFactorizationError as exc:
        return _open(params, f"factorization budget exhausted on {exc}")
    if candidates:
        p = min(candidates)
        return _nonexistent(params, RULE_T43NE, {
            "e": 3, "p": p,
            "valuation": padic_valuation(params.order, p),
            "semiprimitivity_exponent": semiprimitivity_exponent(p, 3)})
    return _open(params, "no prime = 2 (mod 3) of odd valuation in A^2 - 9")


def t43nee_check(a: int, e: int, p: int,
                 config: RunConfig = DEFAULT_CONFIG) -> Certificate:
    """General modulus-e valuation test for the d=3 family.

    Premises: e prime = 1 (mod 6), p prime semiprimitive mod e,
    A = +-3 (mod 8), A^2 = -3 (mod e).  Fires when
      p = 2  and v_2(A^2-9) is odd,
      p = 3, 3 | A, and v_3(A/3 - 1) or v_3(A/3 + 1) is odd, or
      p >= 5 and v_p(A+3) or v_p(A-3) is odd.
    """
    params = family3_params(a)
    budget = _budget(config)
    if not (is_prime(e) and e % 6 == 1):
        return _open(params, f"e = {e} is not a prime = 1 (mod 6)")
    if (a * a + 3) % e != 0:
        return _open(params, f"premise A^2 = -3 (mod {e}) fails")
    if not is_prime(p):
        return _open(params, f"p = {p} is not prime")
    if math.gcd(p, e) != 1:
        return _open(params, f"p = {p} divides e = {e}")
    exponent = semiprimitivity_exponent(p, e, **budget)
    if exponent is None:
        return _open(params, f"{p} is not semiprimitive mod {e}")
    if p == 2:
        fires = padic_valuation(a * a - 9, 2) % 2 == 1
    elif p == 3:
        if a % 3 != 0:
            return _open(params, "p = 3 route needs 3 | A")
        ap = a // 3
        fires = (padic_valuation(ap - 1, 3) % 2 == 1
                 or padic_valuation(ap + 1, 3) % 2 == 1)
    else:
        fires = (padic_valuation(a + 3, p) % 2 == 1
                 or padic_valuation(a - 3, p) % 2 == 1)
    if not fires:
        return _open(params, f"valuation condition fails for p = {p}")
    return _nonexistent(params, RULE_T43NEE, {
        "e": e, "p": p,
        "valuation": padic_valuation(params.order, p),
        "semiprimitivity_exponent": exponent})


def t43nee_witness_search(a: int, config: RunConfig = DEFAULT_CONFIG) -> Certificate:
    """Try every odd prime e | n with e = 1 (mod 6) and the applicable p
    routes; first firing pair wins."""
    params = family3_params(a)
    budget = _budget(config)
    nf = factorize(params.n, **budget)
    if not nf.complete:
        return _open(params, f"n not factored within budget (cofactor {nf.cofactor})")
    for e, _ in nf.factors:
        if e < 7 or e % 6 != 1:
            continue
        candidates = [2]
        if a % 3 == 0:
            candidates.append(3)
        for side in (a - 3, a + 3):
            if side >= 2:
                sf = factorize(side, **budget)
                candidates.extend(p for p, v in sf.factors if p >= 5 and v % 2 == 1)
        for p in sorted(set(candidates)):
            cert = t43nee_check(a, e, p, config)
            if cert.verdict == VERDICT_NONEXISTENT:
                return cert
    return _open(params, "no modulus-e route fires")


def t43_class_generators(kind: str, *, e: int, h: int | None = None,
                         l: int | None = None, p: int | None = None) -> ResidueClasses:
    """A-classes on which t43nee_check(A, e, p') provably fires, built from
    square roots of -3 mod e.

    kind "two_adic"  (p'=2):  A = 2^(2h) r + 3s, h >= 2, r odd
    kind "three_adic" (p'=3): A = 3^(2l+2) r + 3s, 3 does not divide r
    kind "odd_prime" (p'=p):  A = p^(2l+1) r + 3s, p >= 5 prime, p ∤ r
    with s in {+1,-1} and the base power coupled to a residue condition
    mod e; results are merged with A = +-3 (mod 8).
    """
    if not (is_prime(e) and e % 6 == 1):
        raise ValueError(f"e = {e} must be a prime = 1 (mod 6)")
    s = sqrt_mod(-3, e)
    if s is None:
        raise ValueError(f"-3 is not a square mod {e}")
    if kind == "two_adic":
        if h is None or h < 2:
            raise ValueError("two_adic needs h >= 2")
        base = 1 << (2 * h)
        r_mod, r_excl = 2 * e, 2
        witness = 2
        if semiprimitivity_exponent(2, e) is None:
            raise ValueError(f"2 is not semiprimitive mod {e}")
    elif kind == "three_adic":
        if l is None or l < 0:
            raise ValueError("three_adic needs l >= 0")
        base = 3 ** (2 * l + 2)
        r_mod, r_excl = 3 * e, 3
        witness = 3
        if semiprimitivity_exponent(3, e) is None:
            raise ValueError(f"3 is not semiprimitive mod {e}")
    elif kind == "odd_prime":
        if l is None or l < 0 or p is None or p < 5 or not is_prime(p):
            raise ValueError("odd_prime needs l >= 0 and a prime p >= 5")
        base = p ** (2 * l + 1)
        r_mod, r_excl = p * e, p
        witness = p
        if semiprimitivity_exponent(p, e) is None:
            raise ValueError(f"{p} is not semiprimitive mod {e}")
    else:
        raise ValueError(f"unknown kind {kind!r}")
    del witness
    m = 8 * base * r_mod
    residues = set()
    for sigma in (1, -1):
        targets = {(-3 * sigma + s) % e, (-3 * sigma - s) % e}
        for r in range(r_mod):
            if r % r_excl == 0:
                continue
            if kind == "two_adic" and r % 2 == 0:
                continue
            if (base * r) % e not in targets:
                continue
            a0 = base * r + 3 * sigma
            # merge with A = +-3 (mod 8): lift r's class mod r_mod to mod 8*r_mod
            for t in range(8):
                a = a0 + base * r_mod * t
                if a % 8 in (3, 5):
                    residues.add(a % m)
    return ResidueClasses(m, tuple(sorted(residues)))


# ---------------------------------------------------------------------------
# Family scans


@dataclass(frozen=True)
class ScanRow:
    family: int
    index: int  # Pell index for d in {2, 4}; u or A otherwise
    pell: tuple[int, int] | None
    params: CdsParams
    certificate: Certificate


#: d=3 rows settled by exhaustive search; caps are per-row seconds.
ORACLE_ROWS: dict[CdsParams, float] = {
    CdsParams(31, 10, 3): 300.0,
    CdsParams(43, 15, 5): 600.0,
    CdsParams(91, 36, 14): 10.0,
    CdsParams(111, 45, 18): 10.0,
}


def _known_witness(params: CdsParams) -> Certificate | None:
    known = KNOWN_WITNESS_SETS.get((params.n, params.d))
    if known is not None and len(known) == params.k:
        return _exists(params, known)
    return None


def _oracle_row(params: CdsParams, cap: float | None) -> Certificate | None:
    """Try to settle a row by exhaustive search; None when the cap is hit."""
    from .oracle import exhaustive_cds_search

    result = exhaustive_cds_search(params.n, params.k, params.lam,
                                   time_cap=cap)
    if not result.complete:
        return None
    if result.sets:
        return _exists(params, result.sets[0], rule=RULE_ORACLE,
                       reason="exhaustive search found a set")
    return Certificate(params, VERDICT_NONEXISTENT, rule=RULE_ORACLE,
                       reason=f"exhaustive search: no set (nodes={result.nodes})",
                       d=params.d)


def family_scan(family: int, bound: int, config: RunConfig = DEFAULT_CONFIG,
                oracle_caps: dict[CdsParams, float] | None = None) -> list[ScanRow]:
    """Certify every family member up to the bound.

    family 1: odd u <= bound.            family 2: Pell index i <= bound.
    family 3: A <= bound, both branches. family 0: Pell index i <= bound.
    """
    if family == 1:
        rows = []
        for u in range(3, bound + 1, 2):
            params = family1_params(u)
            cert = None
            if u % 10 in (3, 7):
                cert = t4137_check(u, config)
            if cert is None or cert.verdict == VERDICT_OPEN:
                fallback = certify_params(params, config)
                if cert is None or fallback.verdict != VERDICT_OPEN:
                    cert = fallback
            rows.append(ScanRow(1, u, None, params, cert))
        return rows

    if family == 2:
        rows = []
        for sol in enumerate_solutions(3, Form.UNIT1, max_index=bound):
            u, params = family2_member(sol.index, sol.A, sol.B)
            cert = _known_witness(params)
            if cert is None and params.n % 4 in (1, 2):
                cert = dsc_test(params, config)
                if cert.verdict == VERDICT_OPEN:
                    cert = None
            if cert is None:
                cert = turyn_stage(params, config)
            rows.append(ScanRow(2, sol.index, (sol.A, sol.B), params, cert))
        return rows

    if family == 3:
        caps = dict(ORACLE_ROWS)
        if oracle_caps:
            caps.update(oracle_caps)
        rows = []
        a_values = sorted(a for a in range(5, bound + 1) if a % 8 in (3, 5))
        for a in a_values:
            params = family3_params(a)
            cert = _known_witness(params)
            if cert is None and params in caps:
                cert = _oracle_row(params, caps[params])
            if cert is None and a in T43_GUARANTEED_CLASSES:
                t = t43ne_check(a, config)
                cert = t if t.verdict == VERDICT_NONEXISTENT else None
            if cert is None:
                t = t43nee_witness_search(a, config)
                cert = t if t.verdict == VERDICT_NONEXISTENT else None
            if cert is None:
                cert = certify_params(params, config)
            rows.append(ScanRow(3, a, None, params, cert))
        return rows

    if family == 0:
        rows = []
        for sol in enumerate_solutions(5, Form.UNIT4, max_index=bound):
            u, params = family0_member(sol.index, sol.A, sol.B)
            cert = _known_witness(params)
            if cert is None:
                if sol.B <= 4:
                    cert = certify_params(params, config)
                else:
                    cert = size_bound_test(params, 4, sol.B, config)
                    if cert.verdict == VERDICT_OPEN:
                        cert = certify_params(params, config)
            rows.append(ScanRow(0, sol.index, (sol.A, sol.B), params, cert))
        return rows

    raise ValueError("family must be one of 1, 2, 3, 0")


# ---------------------------------------------------------------------------
# Table rendering


def _verdict_mark(cert: Certificate) -> str:
    return {"exists": "yes", "nonexistent": "no", "open": "?"}[cert.verdict]


def format_scan_table(rows: list[ScanRow]) -> str:
    """Aligned text table; Pell families transposed (one column per index)."""
    if not rows:
        return "(no rows)"
    family = rows[0].family
    if family in (2, 0):
        labels = ["i", "A_i", "B_i", "n", "k", "lambda", "k-lambda", "existence"]
        cols = [[str(r.index), str(r.pell[0]), str(r.pell[1]),
                 str(r.params.n), str(r.params.k), str(r.params.lam),
                 str(r.params.order), _verdict_mark(r.certificate)] for r in rows]
        col_w = [max(len(cell) for cell in col) for col in cols]
        label_w = max(len(x) for x in labels)
        lines = []
        for i, name in enumerate(labels):
            cells = [col[i].rjust(col_w[j]) for j, col in enumerate(cols)]
            lines.append(name.ljust(label_w) + "  " + "  ".join(cells))
        return "\n".join(lines)
    label = {1: "u", 3: "A"}[family]
    headers = [label, "n", "k", "lambda", "k-lambda", "existence", "rule"]
    table = [[str(r.index), str(r.params.n), str(r.params.k),
              str(r.params.lam), str(r.params.order),
              _verdict_mark(r.certificate), r.certificate.rule or ""] for r in rows]
    widths = [max(len(h), *(len(row[i]) for row in table)) for i, h in enumerate(headers)]
    out = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(headers))]
    for row in table:
        out.append("  ".join(row[i].ljust(widths[i]) for i in range(len(headers))))
    return "\n".join(out)


def scan_json_lines(rows: list[ScanRow]) -> str:
    return "\n".join(r.certificate.to_json() for r in rows)
