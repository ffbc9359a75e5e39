"""
Named verification suites.

Each suite exhausts a family of identities up to the rank its profile
allows and reports how many checks ran and which failed.
"""

import random
import time
from collections import Counter
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from typing import Optional

from blobalg.core.config import get_config
from blobalg.core.models import SuiteName, SuiteResultModel
from blobalg.core.suites import SuiteProfile, get_suite_profile, resolve_suite
from blobalg.diagrams import (
    AlgebraElement,
    Diagram,
    RelationSet,
    abacus_concat,
    blob_product,
    check_generation,
    enumerate_basis,
    verify_presentation,
)
from blobalg.params.kpoly import KPolynomial, phi, psi
from blobalg.params.laurent import DL, DR, KL, KLR, KR
from blobalg.reptheory import (
    check_cellularity,
    dimension,
    filtration_ideals,
    gram_matrix,
    restrict_to_blob,
    standard_basis,
    weights,
)
from blobalg.symplectic import (
    bprime_product,
    compose_phi,
    enumerate_Bx,
    enumerate_Bx_prime,
    enumerate_phi,
    fold_blob_mu,
    fold_nu,
    globalise_insert,
    globalise_insert_right,
    localise,
    localise_element,
    localise_right,
    rectangular_reduce,
    swap_left,
    swap_right,
    unfold_mux,
)
from blobalg.symplectic.xdiagram import periodic_route, rectangular_route
from blobalg.utils.logging import get_logger

logger = get_logger(__name__)

# Bead budget of a random confluence sample, summed over both factors
MAX_DECORATIONS = 4


@dataclass
class Tally:
    """Running count of checks and failures inside a suite."""

    checks: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def check(self, ok: bool, message: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(message)

    def absorb(self, checks: int, failures: Iterable[str], prefix: str = "") -> None:
        self.checks += checks
        self.failures.extend(f"{prefix}{f}" for f in failures)


@dataclass
class SuiteResult:
    """Outcome of one suite run."""

    name: SuiteName
    checks: int
    failures: list[str]
    elapsed: float
    detail: Optional[str] = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_model(self) -> SuiteResultModel:
        return SuiteResultModel(
            name=self.name,
            passed=self.passed,
            checks=self.checks,
            failures=self.failures,
            elapsed=round(self.elapsed, 6),
            detail=self.detail,
        )


@dataclass
class SuiteContext:
    max_rank: int
    trials: int
    rng: random.Random


# =============================================================================
# Suites
# =============================================================================

def _presentation(ctx: SuiteContext, tally: Tally) -> None:
    for n in range(1, ctx.max_rank + 1):
        for relations in RelationSet:
            report = verify_presentation(relations, n)
            tally.absorb(len(report.results), report.failures, f"{relations.value} n={n}: ")


def _decorations(d: Diagram) -> int:
    return sum(len(p.word) for p in d.pairs) + sum(len(loop) for loop in d.loops)


def _confluence(ctx: SuiteContext, tally: Tally) -> None:
    for m in range(1, ctx.max_rank + 1):
        basis = enumerate_Bx(m)
        for a in basis:
            for b in basis:
                tally.check(
                    rectangular_route(a, b) == periodic_route(a, b),
                    f"m={m}: rewriting and periodic routes differ on {a} * {b}",
                )
    pool = [
        d for d in enumerate_Bx_prime(max(ctx.max_rank, 1)) if _decorations(d) <= MAX_DECORATIONS
    ]
    drawn = 0
    while drawn < ctx.trials:
        a, b = ctx.rng.choice(pool), ctx.rng.choice(pool)
        if _decorations(a) + _decorations(b) > MAX_DECORATIONS:
            continue
        drawn += 1
        pseudo = abacus_concat(a, b)
        normal = rectangular_reduce(pseudo)
        tally.check(
            rectangular_reduce(pseudo, ctx.rng) == normal,
            f"rewrite order changes the normal form of {pseudo}",
        )
        tally.check(
            normal == periodic_route(a, b),
            f"rewriting and periodic routes differ on the pseudodiagram {pseudo}",
        )
    tally.notes.append(f"{ctx.trials} random pseudodiagrams")



def _fold_roundtrip(ctx: SuiteContext, tally: Tally) -> None:
    for m in range(1, ctx.max_rank + 1):
        for d in enumerate_Bx(m):
            tally.check(fold_nu(unfold_mux(d)) == d, f"nu(mu(d)) != d for {d}")
        for p in enumerate_phi(m):
            tally.check(unfold_mux(fold_nu(p)) == p, f"mu(nu(p)) != p for {p}")
        blob = enumerate_basis("blob", m)
        for a in blob:
            for b in blob:
                scalar, c = blob_product(a, b)
                tally.check(
                    bprime_product(fold_blob_mu(a), fold_blob_mu(b)) == (scalar, fold_blob_mu(c)),
                    f"blob fold is not multiplicative on {a} * {b}",
                )


def _cellularity(ctx: SuiteContext, tally: Tally) -> None:
    for m in range(1, ctx.max_rank + 1):
        report = check_cellularity(m)
        missing = [f"no projectivity witness for weight {l}" for l, w in report.witnesses.items() if w is None]
        tally.absorb(report.checks, report.failures + missing, f"m={m}: ")
        chain = filtration_ideals(m)
        tally.absorb(chain.checks, chain.failures, f"m={m}: ")


def _dims(ctx: SuiteContext, tally: Tally) -> None:
    for m in range(0, ctx.max_rank + 1):
        for l in weights(m):
            count = len(standard_basis(m, l))
            tally.check(count == dimension(m, l), f"|S_{l}({2 * m})| = {count} != {dimension(m, l)}")
        if m <= 4:
            total = sum(dimension(m, l) ** 2 for l in weights(m))
            tally.check(total == len(enumerate_phi(m)), f"sum of squares {total} at m={m}")


def _gram_identities(ctx: SuiteContext, tally: Tally) -> None:
    k = {name: KPolynomial(name).expansion for name in ("K1", "K2", "K3", "K13")}
    expected = {
        -1: KL * KR * k["K3"],
        0: KLR**4 * k["K1"] ** 4 * phi(psi(k["K1"])) * psi(k["K2"]) * phi(k["K2"]) * k["K13"],
    }
    for l, value in expected.items():
        report = gram_matrix(3, l)
        tally.check(report.determinant == value, f"Gamma_6({l}) = {report.determinant}")
    for m in range(1, ctx.max_rank + 1):
        for l in weights(m):
            report = gram_matrix(m, l)
            tally.check(not report.determinant.is_zero(), f"Gamma_{2 * m}({l}) vanishes")
            tally.check(
                report.factorisation.product() == report.determinant,
                f"factorisation of Gamma_{2 * m}({l}) does not reassemble",
            )


def _homomorphism(
    tally: Tally,
    sub: list,
    rho: Callable[[AlgebraElement], AlgebraElement],
    swap: Callable,
    label: str,
) -> None:
    for a in sub:
        for b in sub:
            x, y = AlgebraElement.basis(a), AlgebraElement.basis(b)
            image = rho(x).multiply(rho(y), compose_phi, structure=swap)
            tally.check(rho(x.multiply(y, compose_phi)) == image, f"{label}: rho({a} * {b})")


def _localisation(ctx: SuiteContext, tally: Tally) -> None:
    for m in range(1, ctx.max_rank + 1):
        lower = enumerate_phi(m - 1)
        for d in lower:
            tally.check(localise(globalise_insert(d)) == (DL, d), f"left round trip on {d}")
            tally.check(
                localise_right(globalise_insert_right(d)) == (DR, d), f"right round trip on {d}"
            )
        _homomorphism(
            tally, [globalise_insert(d) for d in lower], localise_element, swap_left, "left"
        )
        _homomorphism(
            tally,
            [globalise_insert_right(d) for d in lower],
            lambda x: localise_element(x, right=True),
            swap_right,
            "right",
        )


def _restriction(ctx: SuiteContext, tally: Tally) -> None:
    for m in range(1, ctx.max_rank + 1):
        for l in weights(m):
            sections = restrict_to_blob(m, l)
            tally.check(
                sum(s.dimension for s in sections) == dimension(m, l),
                f"restriction of S_{l}({2 * m}) does not add up",
            )
            counts = Counter(t.ur for t in standard_basis(m, l))
            for s in sections:
                tally.check(counts[s.ur] == s.dimension, f"ur={s.ur} section of S_{l}({2 * m})")


def _generation(ctx: SuiteContext, tally: Tally) -> None:
    for n in range(1, ctx.max_rank + 1):
        tally.check(check_generation(n, 2, 0), f"contour({n}, 2, 0) not generated")
    tally.check(check_generation(3, 3, 1), "contour(3, 3, 1) not generated")


SUITES: dict[SuiteName, Callable[[SuiteContext, Tally], None]] = {
    SuiteName.PRESENTATION: _presentation,
    SuiteName.CONFLUENCE: _confluence,
    SuiteName.FOLD_ROUNDTRIP: _fold_roundtrip,
    SuiteName.CELLULARITY: _cellularity,
    SuiteName.DIMS: _dims,
    SuiteName.GRAM_IDENTITIES: _gram_identities,
    SuiteName.LOCALISATION: _localisation,
    SuiteName.RESTRICTION: _restriction,
    SuiteName.GENERATION: _generation,
}


# =============================================================================
# Runner
# =============================================================================

class SuiteRunner:
    """Runs suites under a profile with a seeded random source."""

    def __init__(self, profile: Optional[SuiteProfile] = None, seed: Optional[int] = None):
        config = get_config()
        self.profile = profile or get_suite_profile()
        self.seed = config.verify.seed if seed is None else seed
        self.default_trials = config.verify.random_trials

    def run(self, name: SuiteName | str, max_rank: Optional[int] = None) -> SuiteResult:
        suite = resolve_suite(name) if isinstance(name, str) else name
        ctx = SuiteContext(
            max_rank=self.profile.max_rank(suite) if max_rank is None else max_rank,
            trials=self.profile.trials(suite, self.default_trials),
            rng=random.Random(self.seed),
        )
        tally = Tally()
        start = time.perf_counter()
        SUITES[suite](ctx, tally)
        elapsed = time.perf_counter() - start

        notes = [f"max_rank={ctx.max_rank}", *tally.notes]
        result = SuiteResult(suite, tally.checks, tally.failures, elapsed, ", ".join(notes))
        if result.passed:
            logger.info(f"suite {suite.value}: {result.checks} checks passed in {elapsed:.2f}s")
        else:
            logger.warning(
                f"suite {suite.value}: {len(result.failures)} of {result.checks} checks failed"
            )
        return result

    def run_all(
        self, names: Optional[Iterable[SuiteName | str]] = None, max_rank: Optional[int] = None
    ) -> list[SuiteResult]:
        selected = list(names) if names else list(SuiteName)
        return [self.run(name, max_rank) for name in selected]
