"""Registry of quantitative claims about ramifiers, checked at desk scale.

Thirteen statements (C1..C13) make up the registry: four propositions,
six theorems, one corollary, one conjecture, and the threshold
consequence of playing the two counting bounds against each other.  Each
claim runs as an exhaustive finite check or as an exact main-term
comparison and yields a ClaimReport.

Verdict policy: a claim with an unwritten O(.) term is never judged
true or false from finite data; it is INDETERMINATE_ASYMPTOTIC and only
the signed discrepancy between the exact value and the claimed main
term is published (conflicts, such as a claimed floor exceeding the
exact count, go to the notes).  Exhaustive finite checks are
HOLDS_AT_SCALE, or FAILS_WITH_COUNTEREXAMPLE exactly when the
counterexample list is non-empty.  Every recorded counterexample can be
replayed through the core predicates via replay_counterexample.

Sweeps iterate ascending (m, then n, then r), so reports are
byte-reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable

from .arith import gcd, prime_table
from .counting import (
    build_sieve,
    count_ramifiers,
    lower_main_term,
    multi_modulus_ramifiers,
    ramifier_counts,
    threshold,
    upper_main_term,
)
from .ramification import (
    admits_ramifier,
    admits_strong_ramifier,
    character,
    goldbach_partitions,
    ramifier_witnesses,
)

LOG_NOTE = "log convention: natural logarithm in every bound formula"


class Verdict(str, Enum):
    HOLDS_AT_SCALE = "HOLDS_AT_SCALE"
    FAILS_WITH_COUNTEREXAMPLE = "FAILS_WITH_COUNTEREXAMPLE"
    INDETERMINATE_ASYMPTOTIC = "INDETERMINATE_ASYMPTOTIC"


@dataclass
class ClaimReport:
    """Evaluation of one claim: parameters, claimed vs exact values, the
    signed discrepancy, a verdict, and replayable counterexamples."""

    claim_id: str
    params: dict[str, Any]
    claimed: Any
    actual: Any
    discrepancy: Any
    verdict: Verdict
    counterexamples: list[dict] = field(default_factory=list)
    notes: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "claim_id": self.claim_id,
            "params": self.params,
            "claimed": self.claimed,
            "actual": self.actual,
            "discrepancy": self.discrepancy,
            "verdict": self.verdict.value,
            "counterexamples": self.counterexamples,
            "notes": self.notes,
        }


def _finish(
    claim_id: str,
    params: dict,
    claimed: Any,
    actual: Any,
    discrepancy: Any,
    counterexamples: list[dict],
    notes: list[str],
    asymptotic: bool,
) -> ClaimReport:
    if counterexamples:
        verdict = Verdict.FAILS_WITH_COUNTEREXAMPLE
    elif asymptotic:
        verdict = Verdict.INDETERMINATE_ASYMPTOTIC
    else:
        verdict = Verdict.HOLDS_AT_SCALE
    return ClaimReport(
        claim_id=claim_id,
        params=params,
        claimed=claimed,
        actual=actual,
        discrepancy=discrepancy,
        verdict=verdict,
        counterexamples=counterexamples,
        notes="; ".join([*notes, LOG_NOTE]),
    )


# --- exhaustive finite claims ----------------------------------------------


def claim_existence(m_max: int = 10) -> ClaimReport:
    """C1: every m >= 2 has some modulus t in (1, m] that admits a ramifier."""
    if m_max < 2:
        raise ValueError("m_max must be >= 2")
    counterexamples = []
    some_t_admits = False
    for m in range(2, m_max + 1):
        some_t_admits = some_t_admits or admits_ramifier(m) is not None
        if not some_t_admits:
            counterexamples.append({"m": m})
    notes = []
    if counterexamples:
        notes.append(
            "m = 2 admits no ramifier: a residue split 1 + 1 = 2 would need an "
            "inner modulus strictly between 1 and 2"
        )
    return _finish(
        "C1",
        {"m_max": m_max},
        0,
        len(counterexamples),
        len(counterexamples),
        counterexamples,
        notes,
        asymptotic=False,
    )


def claim_zero_class(m_max: int = 50, x: int = 5000) -> ClaimReport:
    """C2: no multiple of m ramifies in modulus m."""
    counterexamples = []
    checked = 0
    for m in range(2, m_max + 1):
        for n in range(m, x + 1, m):
            if n < 2:
                continue
            checked += 1
            if character(n, m) == 1:
                counterexamples.append({"m": m, "n": n})
    return _finish(
        "C2",
        {"m_max": m_max, "x": x, "checked": checked},
        0,
        len(counterexamples),
        len(counterexamples),
        counterexamples,
        [f"{checked} multiples checked exhaustively"],
        asymptotic=False,
    )


def claim_quadratic_residues(p_max: int = 50) -> ClaimReport:
    """C3: for an odd prime p and a quadratic residue a coprime to p, the
    power sequence a, a^2, ..., a^(p-1) holds at least two non-ramifiers
    modulo p, sitting at exponents (p-1)/2 and p-1."""
    primes = prime_table(max(p_max, 3))
    counterexamples = []
    pairs_checked = 0
    for p in primes.primes:
        if p > p_max or p == 2:
            continue
        for a in range(1, p):
            if pow(a, (p - 1) // 2, p) != 1:
                continue
            pairs_checked += 1
            for exponent in ((p - 1) // 2, p - 1):
                e = a**exponent
                # e = 1 (only for a = 1) sits below the predicate domain
                # n >= 2 and is a non-ramifier outright.
                if e >= 2 and character(e, p) == 1:
                    counterexamples.append(
                        {"p": p, "a": a, "exponent": exponent, "element": e}
                    )
    notes = [
        f"{pairs_checked} (p, a) pairs checked at the two pinned exponents",
        "powers are taken as plain integers, not reduced residues",
        "a = 1 yields the element 1, below the n >= 2 domain and counted as a non-ramifier",
    ]
    return _finish(
        "C3",
        {"p_max": p_max, "pairs_checked": pairs_checked},
        0,
        len(counterexamples),
        len(counterexamples),
        counterexamples,
        notes,
        asymptotic=False,
    )


def claim_goldbach_equivalence(m_max: int = 1000) -> ClaimReport:
    """C5: an even m >= 4 admits a strong ramifier iff m splits into a
    prime pair.  Forward is definitional; backward is checked by running
    the actual search."""
    if m_max < 4:
        raise ValueError("m_max must be >= 4")
    primes = prime_table(m_max)
    counterexamples = []
    checked = 0
    certified = 0
    for m in range(4, m_max + 1, 2):
        checked += 1
        partitions = goldbach_partitions(m, primes)
        cert = admits_strong_ramifier(m, primes)
        if bool(partitions) != (cert is not None):
            counterexamples.append(
                {
                    "m": m,
                    "partitions": len(partitions),
                    "certificate_found": cert is not None,
                }
            )
        elif cert is not None:
            cert.validate(primes)
            certified += 1
    notes = [
        f"{checked} even moduli swept, {certified} certificates found and re-validated",
        "read under canonical residues with the ramifying integer free to differ "
        "from the modulus; the literal self-modulus reading would force residue 0",
    ]
    return _finish(
        "C5",
        {"m_max": m_max, "checked": checked},
        0,
        len(counterexamples),
        len(counterexamples),
        counterexamples,
        notes,
        asymptotic=False,
    )


def claim_pigeonhole(x: int = 100) -> ClaimReport:
    """C8: some n <= x ramifies in at least two moduli m <= x."""
    found = multi_modulus_ramifiers(x)
    counterexamples = []
    notes = []
    if found:
        n0, ms = found[0]
        notes.append(f"smallest instance: n = {n0} ramifies in moduli {ms}")
    elif x >= 7:
        counterexamples.append({"x": x})
    else:
        notes.append(f"x = {x} is below the scale where an instance is asserted")
    return _finish(
        "C8",
        {"x": x},
        None,
        len(found),
        None,
        counterexamples,
        notes,
        asymptotic=False,
    )


def claim_magnification(m_max: int = 30, x: int = 2000) -> ClaimReport:
    """C9: for a ramifier n in modulus m with gcd(|n - m|, a1) = 1, every
    witnessing inner modulus r satisfies a1 | r or gcd(r, a1) = 1."""
    counterexamples = []
    instances = 0
    for m in range(2, m_max + 1):
        for n in build_sieve(m, x).ramifiers():
            a1 = n % m
            if gcd(abs(n - m), a1) != 1:
                continue
            for w in ramifier_witnesses(n, m):
                instances += 1
                if w.r % a1 == 0 or gcd(w.r, a1) == 1:
                    continue
                counterexamples.append({"m": m, "n": n, "a1": a1, "r": w.r})
    notes = [
        f"{instances} witnessing moduli examined under the coprimality hypothesis",
        "the difference n - m enters the hypothesis as |n - m|",
    ]
    return _finish(
        "C9",
        {"m_max": m_max, "x": x, "instances": instances},
        0,
        len(counterexamples),
        len(counterexamples),
        counterexamples,
        notes,
        asymptotic=False,
    )


_SHIFT_CAP = 8  # factorial shifts grow too fast beyond 8!


def claim_character_properties(
    m_max: int = 10, n_max: int = 200, max_counterexamples: int = 25
) -> ClaimReport:
    """C11: the five stated character identities.
    (i) invariance under n -> n + 2m, (ii) invariance under n -> n + m!,
    (iii) vanishing at 1, (iv) vanishing on the residue classes 0 and 1,
    (v) multiplicativity against m!.

    max_counterexamples caps the recorded list per modulus, so every
    failing modulus stays represented in the report."""
    counterexamples: list[dict] = []
    total_i = 0
    for m in range(2, m_max + 1):
        recorded_for_m = 0
        for n in range(2, n_max + 1):
            lhs = character(n, m)
            rhs = character(n + 2 * m, m)
            if lhs != rhs:
                total_i += 1
                if recorded_for_m < max_counterexamples:
                    recorded_for_m += 1
                    counterexamples.append(
                        {
                            "property": "i",
                            "m": m,
                            "n": n,
                            "value_at_n": lhs,
                            "value_at_shift": rhs,
                        }
                    )
    fails_ii = fails_iv = fails_v = 0
    for m in range(2, min(m_max, _SHIFT_CAP) + 1):
        f = math.factorial(m)
        for n in range(2, n_max + 1):
            if character(n + f, m) != character(n, m):
                fails_ii += 1
                counterexamples.append({"property": "ii", "m": m, "n": n})
            if character(n * f, m) != character(n, m) * character(f, m):
                fails_v += 1
                counterexamples.append({"property": "v", "m": m, "n": n})
    for m in range(2, m_max + 1):
        for n in range(2, n_max + 1):
            if n % m <= 1 and character(n, m) != 0:
                fails_iv += 1
                counterexamples.append({"property": "iv", "m": m, "n": n})
    recorded_i = sum(1 for c in counterexamples if c["property"] == "i")
    notes = [
        f"(i) fails {total_i} times for m <= {m_max}, n <= {n_max}"
        f" ({recorded_i} recorded, at most {max_counterexamples} per modulus);"
        " whether a restricted domain was intended is left open",
        f"(ii) exhaustive for m <= {min(m_max, _SHIFT_CAP)}: {fails_ii} failures",
        "(iii) the value at 1 lies below the n >= 2 domain; vacuously consistent",
        f"(iv) exhaustive: {fails_iv} failures",
        f"(v) exhaustive for m <= {min(m_max, _SHIFT_CAP)}: {fails_v} failures",
    ]
    return _finish(
        "C11",
        {"m_max": m_max, "n_max": n_max, "max_counterexamples": max_counterexamples},
        0,
        total_i + fails_ii + fails_iv + fails_v,
        total_i + fails_ii + fails_iv + fails_v,
        counterexamples,
        notes,
        asymptotic=False,
    )


def claim_threshold_scale(x_values: tuple[int, ...] = (20,)) -> ClaimReport:
    """C13: no modulus below floor(x / sqrt(x - ln x)) + 1 admits a
    ramifier n <= x."""
    cells = []
    claimed = []
    actual = []
    discrepancy = []
    counterexamples = []
    for x in x_values:
        t = threshold(x)
        violations = 0
        for m in range(2, t):
            ns = build_sieve(m, x).ramifiers()
            if ns:
                violations += 1
                counterexamples.append({"x": x, "m": m, "n": ns[0]})
        cells.append({"x": x, "threshold": t})
        claimed.append(0)
        actual.append(violations)
        discrepancy.append(violations)
    return _finish(
        "C13",
        {"x_values": list(x_values), "cells": cells},
        claimed,
        actual,
        discrepancy,
        counterexamples,
        [],
        asymptotic=False,
    )


# --- main-term comparisons (claims carrying an O(.) term) -------------------


def claim_upper_bound(
    m_values: tuple[int, ...] = (3, 5, 10, 50),
    x_values: tuple[int, ...] = (100, 1000, 10000),
) -> ClaimReport:
    """C4: the count of ramifiers n <= x in modulus m stays below
    (1 - 1/m) x - log x / log m up to O(1)."""
    cells, claimed, actual, discrepancy, notes = [], [], [], [], []
    for m in m_values:
        for x in x_values:
            s = count_ramifiers(m, x)
            bound = upper_main_term(m, x)
            cells.append({"m": m, "x": x})
            claimed.append(bound)
            actual.append(s.count)
            discrepancy.append(s.count - bound)
            if s.count > bound:
                notes.append(
                    f"count exceeds the main term at (m={m}, x={x}): "
                    f"{s.count} > {bound:.2f}"
                )
    return _finish(
        "C4",
        {"m_values": list(m_values), "x_values": list(x_values), "cells": cells},
        claimed,
        actual,
        discrepancy,
        [],
        notes,
        asymptotic=True,
    )


def claim_lower_bound(
    m_values: tuple[int, ...] = (3, 5, 10, 50),
    x_values: tuple[int, ...] = (100, 1000, 10000),
) -> ClaimReport:
    """C6: the count of ramifiers n <= x in modulus m stays above
    (x^2 - x m) / m^2 up to O_m(1)."""
    cells, claimed, actual, discrepancy, notes = [], [], [], [], []
    for m in m_values:
        for x in x_values:
            s = count_ramifiers(m, x)
            bound = lower_main_term(m, x)
            cells.append({"m": m, "x": x})
            claimed.append(bound)
            actual.append(s.count)
            discrepancy.append(s.count - bound)
            if bound > s.count:
                notes.append(
                    f"main-term conflict at (m={m}, x={x}): claimed lower bound "
                    f"{bound:g} exceeds the exact count {s.count}"
                )
            if bound > x - 1:
                notes.append(
                    f"claimed lower bound {bound:g} exceeds the trivial ceiling "
                    f"{x - 1} at (m={m}, x={x})"
                )
    return _finish(
        "C6",
        {"m_values": list(m_values), "x_values": list(x_values), "cells": cells},
        claimed,
        actual,
        discrepancy,
        [],
        notes,
        asymptotic=True,
    )


def claim_double_sum(x_values: tuple[int, ...] = (100, 1000)) -> ClaimReport:
    """C7: the double count of (n, m) ramification pairs with n, m <= x is
    at least x log x / 2 up to O(x)."""
    cells, claimed, actual, discrepancy, notes = [], [], [], [], []
    for x in x_values:
        counts = ramifier_counts(x, 2, x)
        full = sum(counts)
        t = threshold(x)
        restricted = sum(counts[t - 2 :])
        main = x * math.log(x) / 2
        cells.append({"x": x})
        claimed.append(main)
        actual.append(full)
        discrepancy.append(full - main)
        notes.append(
            f"x={x}: moduli in [{t}, {x}] (the range the derivation actually "
            f"bounds) contribute {restricted} of {full}"
        )
    return _finish(
        "C7",
        {"x_values": list(x_values), "cells": cells},
        claimed,
        actual,
        discrepancy,
        [],
        notes,
        asymptotic=True,
    )


def claim_circle(
    m_max: int = 30, x_values: tuple[int, ...] = (100, 1000)
) -> ClaimReport:
    """C10: the circle radius max |n - m| over ramifiers n <= x stays below
    x (sqrt(x - log x) - 1) / sqrt(x - log x)."""
    cells, claimed, actual, discrepancy, notes = [], [], [], [], []
    empty = 0
    for m in range(2, m_max + 1):
        for x in x_values:
            s = count_ramifiers(m, x)
            root = math.sqrt(x - math.log(x))
            bound = x * (root - 1) / root
            cells.append({"m": m, "x": x})
            claimed.append(bound)
            actual.append(s.radius)
            discrepancy.append(s.radius - bound)
            if not s.has_ramifiers:
                empty += 1
            elif s.radius > bound:
                notes.append(
                    f"radius exceeds the bound at (m={m}, x={x}): "
                    f"{s.radius} > {bound:.2f}"
                )
    if empty:
        notes.append(f"{empty} cells have no ramifiers; radius reported as 0")
    return _finish(
        "C10",
        {"m_max": m_max, "x_values": list(x_values), "cells": cells},
        claimed,
        actual,
        discrepancy,
        [],
        notes,
        asymptotic=True,
    )


def claim_character_bounds(
    m_values: tuple[int, ...] = (3, 5, 10, 50),
    x_values: tuple[int, ...] = (100, 1000, 10000),
) -> ClaimReport:
    """C12: for m at or above the threshold scale, the character partial sum
    over n <= x sits between the two main terms."""
    cells, claimed, actual, discrepancy, notes = [], [], [], [], []
    for m in m_values:
        for x in x_values:
            s = count_ramifiers(m, x)
            t = threshold(x)
            applicable = m >= t
            low = lower_main_term(m, x)
            up = upper_main_term(m, x)
            for bound_name, bound in (("lower", low), ("upper", up)):
                cells.append(
                    {"m": m, "x": x, "bound": bound_name, "applicable": applicable}
                )
                claimed.append(bound)
                actual.append(s.count)
                discrepancy.append(s.count - bound)
            if not applicable:
                notes.append(
                    f"(m={m}, x={x}): below the stated modulus scale {t}; "
                    "evaluated anyway"
                )
            elif not low <= s.count <= up:
                notes.append(
                    f"partial sum outside the main-term band at (m={m}, x={x}): "
                    f"{low:.2f} <= {s.count} <= {up:.2f} is false"
                )
    return _finish(
        "C12",
        {"m_values": list(m_values), "x_values": list(x_values), "cells": cells},
        claimed,
        actual,
        discrepancy,
        [],
        notes,
        asymptotic=True,
    )


# --- registry ----------------------------------------------------------------


@dataclass(frozen=True)
class ClaimInfo:
    claim_id: str
    title: str
    kind: str  # proposition | theorem | corollary | conjecture | consequence
    asymptotic: bool
    affects_exit: bool
    statement: str
    runner: Callable[..., ClaimReport]


CLAIMS: dict[str, ClaimInfo] = {
    c.claim_id: c
    for c in (
        ClaimInfo(
            "C1",
            "existence",
            "proposition",
            False,
            True,
            "Every m >= 2 has some modulus t in (1, m] admitting a ramifier.",
            claim_existence,
        ),
        ClaimInfo(
            "C2",
            "zero-class",
            "proposition",
            False,
            True,
            "No multiple of m ramifies in modulus m.",
            claim_zero_class,
        ),
        ClaimInfo(
            "C3",
            "quadratic-residues",
            "theorem",
            False,
            True,
            "Powers of a quadratic residue mod an odd prime p contain at least "
            "two non-ramifiers, at exponents (p-1)/2 and p-1.",
            claim_quadratic_residues,
        ),
        ClaimInfo(
            "C4",
            "upper-bound",
            "theorem",
            True,
            False,
            "Count of ramifiers n <= x in modulus m is at most "
            "(1 - 1/m) x - log x / log m + O(1).",
            claim_upper_bound,
        ),
        ClaimInfo(
            "C5",
            "goldbach-equivalence",
            "conjecture",
            False,
            False,
            "An even m >= 4 admits a strong ramifier iff m is a sum of two primes.",
            claim_goldbach_equivalence,
        ),
        ClaimInfo(
            "C6",
            "lower-bound",
            "theorem",
            True,
            False,
            "Count of ramifiers n <= x in modulus m is at least "
            "(x^2 - x m) / m^2 + O_m(1).",
            claim_lower_bound,
        ),
        ClaimInfo(
            "C7",
            "double-sum",
            "theorem",
            True,
            False,
            "The double count of ramification pairs (n, m) with n, m <= x is "
            "at least x log x / 2 + O(x).",
            claim_double_sum,
        ),
        ClaimInfo(
            "C8",
            "pigeonhole",
            "corollary",
            False,
            True,
            "Some n <= x ramifies in at least two moduli m <= x.",
            claim_pigeonhole,
        ),
        ClaimInfo(
            "C9",
            "magnification",
            "theorem",
            False,
            True,
            "For a ramifier n mod m with gcd(|n - m|, a1) = 1, every witnessing "
            "inner modulus is a multiple of a1 or coprime to a1.",
            claim_magnification,
        ),
        ClaimInfo(
            "C10",
            "circle-radius",
            "proposition",
            True,
            False,
            "The circle radius max |n - m| over ramifiers n <= x is at most "
            "x (sqrt(x - log x) - 1) / sqrt(x - log x).",
            claim_circle,
        ),
        ClaimInfo(
            "C11",
            "character-properties",
            "proposition",
            False,
            True,
            "The character is invariant under shifts by 2m and by m!, vanishes "
            "at 1 and on residue classes 0 and 1, and is multiplicative "
            "against m!.",
            claim_character_properties,
        ),
        ClaimInfo(
            "C12",
            "character-partial-sums",
            "theorem",
            True,
            False,
            "For m at or above the threshold scale, the character partial sum "
            "lies between the two counting main terms.",
            claim_character_bounds,
        ),
        ClaimInfo(
            "C13",
            "threshold-scale",
            "consequence",
            False,
            True,
            "No modulus below floor(x / sqrt(x - log x)) + 1 admits a "
            "ramifier n <= x.",
            claim_threshold_scale,
        ),
    )
}

ALL_CLAIM_IDS: tuple[str, ...] = tuple(CLAIMS)


def run_claim(claim_id: str, **params: Any) -> ClaimReport:
    """Run one claim by id with explicit parameters."""
    if claim_id not in CLAIMS:
        raise KeyError(f"unknown claim id {claim_id!r}")
    return CLAIMS[claim_id].runner(**params)


def replay_counterexample(claim_id: str, cx: dict) -> bool:
    """Re-derive a recorded violation from the core predicates.

    Returns True when the counterexample still exhibits the violation it
    was recorded for, making reports self-certifying.
    """
    if claim_id == "C1":
        return all(admits_ramifier(t) is None for t in range(2, cx["m"] + 1))
    if claim_id == "C2":
        return character(cx["n"], cx["m"]) == 1
    if claim_id == "C3":
        return cx["element"] >= 2 and character(cx["element"], cx["p"]) == 1
    if claim_id == "C5":
        primes = prime_table(cx["m"])
        return bool(goldbach_partitions(cx["m"], primes)) != (
            admits_strong_ramifier(cx["m"], primes) is not None
        )
    if claim_id == "C8":
        return not multi_modulus_ramifiers(cx["x"])
    if claim_id == "C9":
        m, n, a1, r = cx["m"], cx["n"], cx["a1"], cx["r"]
        if n % m != a1 or gcd(abs(n - m), a1) != 1:
            return False
        if r not in [w.r for w in ramifier_witnesses(n, m)]:
            return False
        return r % a1 != 0 and gcd(r, a1) != 1
    if claim_id == "C11":
        m, n = cx["m"], cx["n"]
        prop = cx["property"]
        if prop == "i":
            return character(n, m) != character(n + 2 * m, m)
        if prop == "ii":
            return character(n + math.factorial(m), m) != character(n, m)
        if prop == "iv":
            return n % m <= 1 and character(n, m) != 0
        if prop == "v":
            f = math.factorial(m)
            return character(n * f, m) != character(n, m) * character(f, m)
        return False
    if claim_id == "C13":
        return (
            cx["m"] < threshold(cx["x"])
            and cx["n"] <= cx["x"]
            and character(cx["n"], cx["m"]) == 1
        )
    return False


def replay_report(report: ClaimReport) -> bool:
    """True when every counterexample in the report replays its violation."""
    return all(
        replay_counterexample(report.claim_id, cx) for cx in report.counterexamples
    )
