"""Verification suites shared by the CLI and the tests.

Each suite returns a list of :class:`Check` records; a suite passes when
every check does.  Progress goes to the ``fsbcat`` logger.
"""

from __future__ import annotations

import logging
import random
from dataclasses import asdict, dataclass
from fractions import Fraction

from .fsb_core import enumerate_hom, hom_count
from .kl_engine import KLEngine, default_engine
from .osb_words import (
    Word,
    enumerate_osb,
    ideal_series,
    iota,
    is_osb_morphism,
    lift_order,
    minimal_elements,
    morphism_leq,
    osb_compose,
    principal_ideal_automaton,
    word_leq,
    words_of_length,
)
from .rep_theory import projective_character, verify_length_bounds
from .series import FitError, LimitDiverges, fit_rational, pole_set, residue_at

log = logging.getLogger("fsbcat")

__all__ = ["Check", "SUITES", "run_suite", "dmod_terms", "projective_terms", "fit_dmod", "fit_projective"]


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        d = asdict(self)
        d["status"] = "pass" if self.passed else "fail"
        return d


def dmod_terms(i: int, count: int, engine: KLEngine | None = None) -> list[int]:
    """``dim D^i_B[-n, n]`` for ``n = 0 .. count - 1``."""
    engine = engine or default_engine()
    out = []
    for n in range(count):
        out.append(engine.dim_D(i, n))
        log.debug("D^%d at n=%d: %d", i, n, out[-1])
    return out


def projective_terms(d: int, count: int) -> list[int]:
    return [hom_count(n, d) for n in range(count)]


def fit_dmod(i: int, count: int | None = None, pole_bound: int | None = None,
             mult_bound: int | None = None, engine: KLEngine | None = None):
    """Fit ``H_B(D^i)`` with the pole set allowed for a ``(2i-1)``-smallish module."""
    count = count or {1: 13, 2: 24}.get(i, 12 * i)
    pole_bound = pole_bound or 4 * i - 1
    mult_bound = mult_bound or 2 * i + 1
    return fit_rational(dmod_terms(i, count, engine), pole_bound, mult_bound)


def fit_projective(d: int, count: int = 20, mult_bound: int = 2):
    return fit_rational(projective_terms(d, count), 2 * d + 1, mult_bound)


def _osb(max_n: int, d: int, seed: int = 0, triples: int = 10000) -> list[Check]:
    checks = []
    small = min(max_n, 3)
    bad = []
    for n in range(small + 1):
        for m in range(n + 1):
            for k in range(m + 1):
                for phi in enumerate_osb(n, m):
                    for psi in enumerate_osb(m, k):
                        try:
                            osb_compose(psi, phi)
                        except AssertionError:
                            bad.append((phi, psi))
    checks.append(Check(f"osb_compose closed for n <= {small}", not bad, f"{len(bad)} failures"))
    log.info("osb: composition done")

    rng = random.Random(seed)
    fails = 0
    for _ in range(triples):
        u, v, w = (Word(2, tuple(rng.choice((-2, -1, 0, 1, 2)) for _ in range(rng.randint(0, 6))))
                   for _ in range(3))
        if not word_leq(u, u):
            fails += 1
        if word_leq(u, v) and word_leq(v, u) and u != v:
            fails += 1
        if word_leq(u, v) and word_leq(v, w) and not word_leq(u, w):
            fails += 1
    checks.append(Check(f"word_leq partial order on {triples} random triples", fails == 0, f"{fails} failures"))

    bad_iota = 0
    for m in range(min(2, max_n) + 1):
        homs = [phi for n in range(m, max_n + 1) for phi in enumerate_osb(n, m)]
        for p1 in homs:
            for p2 in homs:
                if morphism_leq(p1, p2) != word_leq(iota(p1), iota(p2)):
                    bad_iota += 1
    checks.append(Check(f"iota order equivalence, m <= 2, n <= {max_n}", bad_iota == 0, f"{bad_iota} mismatches"))
    log.info("osb: iota done")

    bad_counts = 0
    for text, alpha in (("1", 1), ("1 2", 2), ("1 1", 1), ("2 -1", 2), ("", 1)):
        w = Word.parse(alpha, text)
        aut = principal_ideal_automaton(w)
        brute = [sum(1 for v in words_of_length(alpha, ell) if word_leq(w, v)) for ell in range(7)]
        if aut.count_by_length(6) != brute:
            bad_counts += 1
        series = ideal_series(aut)
        if [int(x) for x in series.series(7)] != brute or not pole_set(series) <= set(range(1, 2 * alpha + 2)):
            bad_counts += 1
    checks.append(Check("ideal automata match brute counts up to length 6", bad_counts == 0))
    return checks


def _groebner(max_n: int, d: int, seed: int = 0) -> list[Check]:
    checks = []
    bad = 0
    for n in range(max_n + 1):
        for dd in range(min(d, n) + 1):
            for phi in enumerate_hom(n, dd):
                _, lifted = lift_order(phi)
                if not is_osb_morphism(lifted):
                    bad += 1
    checks.append(Check(f"every surjection lifts to an ordered one (n <= {max_n})", bad == 0))

    bad = 0
    for m in range(min(d, 2) + 1):
        gen = Word(m, tuple(range(1, m + 1)))
        aut = principal_ideal_automaton(gen)
        for n in range(m, max_n + 1):
            images = {iota(phi).letters for phi in enumerate_osb(n, m)}
            ideal = {v.letters for v in words_of_length(m, n) if aut.accepts(v)}
            bad += images != ideal
    checks.append(Check("iota image equals the ideal of 1 2 ... m", bad == 0))

    rng = random.Random(seed)
    bad = 0
    for _ in range(20):
        gens = [Word(2, tuple(rng.choice((-2, -1, 0, 1, 2)) for _ in range(rng.randint(1, 4)))) for _ in range(6)]
        mins = minimal_elements(gens, 8)
        anti = all(not word_leq(a, b) for a in mins for b in mins if a != b)
        dominated = all(any(word_leq(m, g) for m in mins) for g in gens)
        bad += not (anti and dominated)
    checks.append(Check("minimal elements form a dominating antichain", bad == 0))
    return checks


def _b_small(max_n: int, d: int) -> list[Check]:
    checks = []
    for dd in range(d + 1):
        try:
            fit = fit_projective(dd)
            poles = pole_set(fit)
            r = residue_at(fit, 2 * dd + 1)
            ok = poles <= set(range(1, 2 * dd + 2)) and r == 1
            checks.append(Check(f"P[-{dd},{dd}]: poles in 1..{2 * dd + 1}, residue 1", ok,
                                f"{fit}; poles {sorted(poles)}; residue {r}"))
        except (FitError, LimitDiverges) as exc:
            checks.append(Check(f"P[-{dd},{dd}] series", False, str(exc)))
        bad = []
        for n in range(min(max_n, 6) + 1):
            if len(enumerate_hom(n, dd)) != hom_count(n, dd):
                bad.append(f"count n={n}")
            viol = verify_length_bounds(projective_character(n, dd), dd)
            if viol:
                bad.append(f"n={n}: " + ", ".join(map(str, viol)))
        checks.append(Check(f"P[-{dd},{dd}]: counts and constituent lengths, n <= {min(max_n, 6)}",
                            not bad, "; ".join(bad)))
    return checks


def _klb(max_n: int, d: int) -> list[Check]:
    engine = default_engine()
    checks = []
    wrong = [n for n in range(max_n + 1) if engine.dim_D(1, n) != (3 ** n - 1) // 2 - n * n]
    checks.append(Check(f"[t] P(B_n) = (3^n-1)/2 - n^2 for n <= {max_n}", not wrong, f"wrong at {wrong}"))
    nonvanish = [(n, i) for n in range(max_n + 1) for i in range(4)
                 if (n, i) != (0, 0) and n <= 2 * i and engine.dim_D(i, n) != 0]
    checks.append(Check("D^i vanishes unless n > 2i", not nonvanish, str(nonvanish)))
    fit = fit_dmod(1, engine=engine)
    expected = Fraction(1, 2)
    checks.append(Check("D^1 series: poles {1, 3}, residue 1/2",
                        pole_set(fit) == {1, 3} and residue_at(fit, 3) == expected, str(fit)))
    fit2 = fit_dmod(2, engine=engine)
    target = Fraction(engine.dim_D(1, 3), 48)
    checks.append(Check("D^2 series: poles within 1..7, residue at 7 = dim D^1[-3,3]/|W_3|",
                        pole_set(fit2) <= set(range(1, 8)) and residue_at(fit2, 7) == target,
                        f"{fit2}; target {target}"))
    return checks


SUITES = {"osb": _osb, "groebner": _groebner, "b-small": _b_small, "klb": _klb}


def run_suite(name: str, max_n: int = 4, d: int = 1) -> list[Check]:
    if name not in SUITES:
        raise KeyError(name)
    log.info("running suite %s (max_n=%d, d=%d)", name, max_n, d)
    return SUITES[name](max_n, d)
