"""Campaign runner: every law in the catalog against every (group, mu) instance.

A campaign names groups and membership-function sources; the runner builds
each instance once, feeds it to every selected law suite, and returns one
result row per (law, instance).  Identical configurations produce identical
result lists, and the serialized report is byte-stable so runs can be diffed.

The law catalog below is the traceability table: every suite the runner can
emit appears here with a one-line statement of what it checks.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import FuzzautError
from .groups import (
    FiniteGroup,
    builtin_group,
    center,
    crisp_automorphisms,
    all_subgroups,
    is_normal_subgroup,
    ElementSubset,
    normal_subgroups,
    quotient_group,
)
from .homs import check_theorem_2_1, check_theorem_2_2, is_fuzzy_homomorphism, lift_hom
from .maps import (
    FuzzyMap,
    MultipleUnitEntries,
    compose_maps,
    identity_map,
    inverse_map,
    is_one_one,
    is_onto,
    make_fuzzy_map,
    pointwise_equal,
)
from .subsets import (
    FuzzySubset,
    class_strategy,
    flat_mu,
    gen_mu_chain,
    is_normal_fuzzy_subgroup,
    is_pointed,
    mu_from_strategy,
)
from .induced import induced_family_raw, induced_grades, build_inn_group, theta, zeta
from .groups import class_index


class ConfigInvalid(FuzzautError):
    pass


class UnknownToken(FuzzautError):
    pass


STATEMENTS: dict[str, str] = {
    "Theorem 2.1": "fuzzy homomorphisms: images multiply, identities pair with grade 1, "
    "inverse images invert, unit entries close under inversion",
    "Theorem 2.2": "the kernel is a normal subgroup; one-one exactly when the kernel is trivial",
    "Lemma 3.1": "composition of fuzzy automorphisms is a fuzzy automorphism",
    "Lemma 3.2": "composition is associative up to fuzzy-image equality",
    "Lemma 3.3": "the crisp identity map is a two-sided identity up to fuzzy-image equality",
    "Lemma 3.4": "the transpose is a bijective map and a two-sided inverse up to fuzzy-image equality",
    "Lemma 3.5": "transpose composed with the map is a fuzzy homomorphism",
    "Lemma 3.6": "the transpose of a bijective fuzzy homomorphism is a fuzzy automorphism",
    "Lemma 3.7": "inner automorphisms compose to the inner automorphism of the reversed product",
    "Lemma 3.8": "the inverse of an inner automorphism is the inner automorphism of the inverse",
    "Lemma 3.9": "inner automorphisms are closed under conjugation by any fuzzy automorphism",
    "Theorem 3.1": "skeleton classes of fuzzy automorphisms form a group matching the crisp "
    "automorphism group over the generated samples",
    "Lemma 4.1": "every graded conjugation map is a fuzzy homomorphism",
    "Lemma 4.2": "graded conjugation maps are one-one, onto and class preserving",
    "Lemma 4.3": "graded conjugation maps compose by reversed label product with exact matrix equality",
    "Lemma 4.4": "triple compositions collapse to the reversed triple label product",
    "Lemma 4.5": "the identity-labeled map is a two-sided identity with exact matrix equality",
    "Lemma 4.6": "the inverse-labeled map is a two-sided inverse returning the identity matrix",
    "Theorem 4.1": "the labeled family forms a group under composition",
    "Theorem 4.2": "the quotient by the center is isomorphic to the class group of the labeled family",
    "Theorem 4.3": "the graded evaluation map is a bijective fuzzy homomorphism onto the labeled family",
}

STATEMENT_IDS: tuple[str, ...] = tuple(STATEMENTS)

SECTION_4_STATEMENTS = tuple(s for s in STATEMENT_IDS if s.split()[1].startswith("4"))

SUITE_GROUPS: dict[str, tuple[str, ...]] = {
    "all": STATEMENT_IDS,
    "hom": ("Theorem 2.1", "Theorem 2.2"),
    "aut": ("Lemma 3.1", "Lemma 3.2", "Lemma 3.3", "Lemma 3.4", "Lemma 3.5", "Lemma 3.6", "Theorem 3.1"),
    "inner": ("Lemma 3.7", "Lemma 3.8", "Lemma 3.9"),
    "induced": SECTION_4_STATEMENTS,
}

DEFAULT_GROUPS: tuple[str, ...] = (
    "Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "V4", "S3", "D4", "Q8",
)

ABLATION_TOKENS = ("pointed", "normal-mu")


@dataclass(frozen=True)
class Campaign:
    """Deterministic run configuration.

    ``seed`` is carried for reproducibility bookkeeping; the default suites
    are fully exhaustive and draw no random samples.
    """

    groups: tuple[str, ...] = DEFAULT_GROUPS
    mu_sources: tuple[str, ...] = ("chain", "class")
    suites: tuple[str, ...] = STATEMENT_IDS
    seed: int = 0


@dataclass(frozen=True)
class SuiteResult:
    statement: str
    instance: str
    verdict: bool
    witness: Optional[str]
    ms: int = field(compare=False, default=0)
    expected_failure: bool = False


def default_campaign() -> Campaign:
    return Campaign()


def resolve_group(token: str) -> FiniteGroup:
    if token.startswith("file:"):
        from .io import load_group

        return load_group(token[len("file:") :])
    return builtin_group(token)


def resolve_mu(token: str, group: FiniteGroup) -> FuzzySubset:
    if token.startswith("file:"):
        from .io import load_mu

        return load_mu(token[len("file:") :], group)
    return mu_from_strategy(group, token)


# -- per-instance context -----------------------------------------------------


class _Instance:
    """One (group, mu) cell of the campaign matrix, with cached sample sets."""

    def __init__(self, group_token: str, group: FiniteGroup, mu_token: str):
        self.group_token = group_token
        self.group = group
        self.mu_token = mu_token
        self.descriptor = f"{group.name}|mu={mu_token}"
        self.mu: Optional[FuzzySubset] = None
        self.mu_error: Optional[str] = None
        try:
            mu = resolve_mu(mu_token, group)
            ok, witness = is_normal_fuzzy_subgroup(mu)
            if not ok:
                self.mu_error = f"MuNotNormal: {witness}"
            elif not is_pointed(mu):
                self.mu_error = "MuNotPointed: grade 1 must be attained exactly at the identity"
            else:
                self.mu = mu
        except FuzzautError as exc:
            self.mu_error = f"{type(exc).__name__}: {exc}"
        self._cache: dict[str, object] = {}

    def _cached(self, key: str, build: Callable):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    @property
    def induced_raw(self) -> list[FuzzyMap]:
        return self._cached("induced_raw", lambda: induced_family_raw(self.group, self.mu))

    @property
    def induced_reps(self) -> list[int]:
        """Least label per distinct matrix; labels in one center coset coincide."""

        def build():
            seen: dict[tuple[int, ...], int] = {}
            for g, fmap in enumerate(self.induced_raw):
                seen.setdefault(fmap.images, g)
            return sorted(seen.values())

        return self._cached("induced_reps", build)

    @property
    def lift_samples(self) -> list[tuple[str, FuzzyMap]]:
        """Every crisp automorphism lifted through mu, in automorphism order."""

        def build():
            out = []
            for i, sigma in enumerate(crisp_automorphisms(self.group)):
                out.append((f"lift:aut{i}", lift_hom(sigma, self.mu, self.group)))
            return out

        return self._cached("lift_samples", build)

    @property
    def quotient_lifts(self) -> list[tuple[str, FuzzyMap]]:
        """Coset maps onto every proper quotient, graded canonically there."""

        def build():
            out = []
            for n_set in normal_subgroups(self.group):
                if len(n_set) == 1:
                    continue
                subset = ElementSubset.from_indices(self.group, sorted(n_set))
                quotient, coset_map = quotient_group(self.group, subset)
                mu_q = class_strategy(quotient)
                out.append(
                    (f"lift:quot|N|={len(n_set)}", lift_hom(coset_map, mu_q, self.group))
                )
            return out

        return self._cached("quotient_lifts", build)

    @property
    def hom_samples(self) -> list[tuple[str, FuzzyMap]]:
        def build():
            out = list(self.lift_samples) + list(self.quotient_lifts)
            out.extend((f"induced:g={g}", self.induced_raw[g]) for g in self.induced_reps)
            return out

        return self._cached("hom_samples", build)

    @property
    def aut_samples(self) -> list[tuple[str, FuzzyMap]]:
        """Deduplicated sample set: all lifted automorphisms plus the labeled family."""

        def build():
            seen: dict[tuple, str] = {}
            out = []
            for tag, fmap in self.lift_samples + [
                (f"induced:g={g}", self.induced_raw[g]) for g in self.group.elements
            ]:
                if fmap.grades not in seen:
                    seen[fmap.grades] = tag
                    out.append((tag, fmap))
            return out

        return self._cached("aut_samples", build)


# -- law suites ---------------------------------------------------------------


def _suite_thm_2_1(ctx: _Instance):
    names = ("images multiply", "identity pair has grade 1", "inverses map to inverses",
             "unit entries invert")
    for tag, fmap in ctx.hom_samples:
        props = check_theorem_2_1(fmap)
        if not all(props):
            failed = ", ".join(n for n, p in zip(names, props) if not p)
            return False, f"{tag}: failed {failed}"
    return True, None


def _suite_thm_2_2(ctx: _Instance):
    for tag, fmap in ctx.hom_samples:
        report = check_theorem_2_2(fmap)
        if not report.verdict:
            return False, (
                f"{tag}: kernel={report.kernel.indices} normal={report.kernel_is_normal} "
                f"one_one={report.one_one} trivial={report.kernel_trivial}"
            )
    return True, None


def _suite_lemma_3_1(ctx: _Instance):
    samples = ctx.aut_samples
    for tag_f, f in samples:
        for tag_g, g in samples:
            composed = compose_maps(f, g)
            report = is_fuzzy_homomorphism(composed)
            if not report:
                return False, f"({tag_f}) . ({tag_g}): not a homomorphism: {report.witness}"
            if not (is_one_one(composed) and is_onto(composed)):
                return False, f"({tag_f}) . ({tag_g}): not bijective"
    return True, None


def _suite_lemma_3_2(ctx: _Instance):
    samples = [fmap for _, fmap in ctx.aut_samples]
    tags = [tag for tag, _ in ctx.aut_samples]
    k = len(samples)
    pair: dict[tuple[int, int], FuzzyMap] = {}
    for i in range(k):
        for j in range(k):
            pair[i, j] = compose_maps(samples[i], samples[j])
    for i in range(k):
        for j in range(k):
            left_base = pair[i, j]
            for l in range(k):
                left = compose_maps(left_base, samples[l])
                right = compose_maps(samples[i], pair[j, l])
                if left.images != right.images:
                    return False, f"associativity fails at ({tags[i]}, {tags[j]}, {tags[l]})"
    return True, None


def _suite_lemma_3_3(ctx: _Instance):
    ident = identity_map(ctx.group)
    for tag, f in ctx.aut_samples:
        if compose_maps(f, ident).images != f.images:
            return False, f"{tag}: f . I differs from f"
        if compose_maps(ident, f).images != f.images:
            return False, f"{tag}: I . f differs from f"
    return True, None


def _suite_lemma_3_4(ctx: _Instance):
    ident = identity_map(ctx.group)
    for tag, f in ctx.aut_samples:
        g = inverse_map(f)
        if compose_maps(g, f).images != ident.images:
            return False, f"{tag}: g . f is not the identity skeleton"
        if compose_maps(f, g).images != ident.images:
            return False, f"{tag}: f . g is not the identity skeleton"
    return True, None


def _suite_lemma_3_5(ctx: _Instance):
    for tag, f in ctx.aut_samples:
        report = is_fuzzy_homomorphism(compose_maps(inverse_map(f), f))
        if not report:
            return False, f"{tag}: g . f not a homomorphism: {report.witness}"
    return True, None


def _suite_lemma_3_6(ctx: _Instance):
    for tag, f in ctx.aut_samples:
        g = inverse_map(f)
        report = is_fuzzy_homomorphism(g)
        if not report:
            return False, f"{tag}: transpose not a homomorphism: {report.witness}"
        if not (is_one_one(g) and is_onto(g)):
            return False, f"{tag}: transpose not bijective"
    return True, None


def _suite_lemma_3_7(ctx: _Instance):
    t = ctx.group.table
    family = ctx.induced_raw
    for g1 in ctx.induced_reps:
        for g2 in ctx.induced_reps:
            composed = compose_maps(family[g1], family[g2])
            if composed.images != family[t[g2][g1]].images:
                return False, f"labels ({g1}, {g2}): composite not equivalent to label {t[g2][g1]}"
    return True, None


def _suite_lemma_3_8(ctx: _Instance):
    inv = ctx.group.inverses
    family = ctx.induced_raw
    for g in ctx.induced_reps:
        if inverse_map(family[g]).images != family[inv[g]].images:
            return False, f"label {g}: transpose not equivalent to label {inv[g]}"
    return True, None


def _suite_lemma_3_9(ctx: _Instance):
    group = ctx.group
    family = ctx.induced_raw
    for tag, f in ctx.aut_samples:
        f_inv = inverse_map(f)
        for g in ctx.induced_reps:
            conj = compose_maps(f_inv, compose_maps(family[g], f))
            images = conj.images
            if not any(
                all(images[x] == group.conjugate(x, a) for x in group.elements)
                for a in group.elements
            ):
                return False, f"conjugate of label {g} by {tag} is not inner"
            report = is_fuzzy_homomorphism(conj)
            if not report:
                return False, f"conjugate of label {g} by {tag}: {report.witness}"
    return True, None


def _suite_thm_3_1(ctx: _Instance):
    from .automorphisms import FuzzyAutomorphism, build_aut_class_group

    autos = [FuzzyAutomorphism(f) for _, f in ctx.aut_samples]
    try:
        classes, table = build_aut_class_group(autos)
    except FuzzautError as exc:
        return False, f"class group construction failed: {exc}"
    skeletons = {c.skeleton for c in classes}
    crisp = set(crisp_automorphisms(ctx.group))
    if skeletons != crisp:
        return False, (
            f"sample skeletons ({len(skeletons)}) differ from the crisp automorphism "
            f"group ({len(crisp)})"
        )
    ident = tuple(ctx.group.elements)
    if ident not in skeletons:
        return False, "identity skeleton missing"
    return True, None


def _suite_lemma_4_1(ctx: _Instance):
    group = ctx.group
    for g, fmap in enumerate(ctx.induced_raw):
        conj = tuple(group.conjugate(x, g) for x in group.elements)
        if fmap.images != conj:
            return False, f"label {g}: skeleton is not conjugation"
        report = is_fuzzy_homomorphism(fmap)
        if not report:
            return False, f"label {g}: {report.witness}"
    return True, None


def _suite_lemma_4_2(ctx: _Instance):
    idx = class_index(ctx.group)
    for g, fmap in enumerate(ctx.induced_raw):
        if not is_one_one(fmap):
            return False, f"label {g}: not one-one"
        if not is_onto(fmap):
            return False, f"label {g}: not onto"
        if any(idx[fmap.images[x]] != idx[x] for x in ctx.group.elements):
            return False, f"label {g}: not class preserving"
    return True, None


def _find_4_3_counterexample(group: FiniteGroup, family: list[FuzzyMap]):
    """First (g1, g2, x, y) where label composition misses sup composition."""
    t = group.table
    for g1 in group.elements:
        for g2 in group.elements:
            expected = family[t[g2][g1]]
            composed = compose_maps(family[g1], family[g2])
            if composed.grades != expected.grades:
                for x in group.elements:
                    for y in group.elements:
                        if composed.grades[x][y] != expected.grades[x][y]:
                            return (
                                f"labels ({g1}, {g2}) at cell ({x}, {y}): "
                                f"composite={composed.grades[x][y]} "
                                f"label-{t[g2][g1]}={expected.grades[x][y]}"
                            )
    return None


def _suite_lemma_4_3(ctx: _Instance):
    witness = _find_4_3_counterexample(ctx.group, ctx.induced_raw)
    return (witness is None), witness


def _suite_lemma_4_4(ctx: _Instance):
    t = ctx.group.table
    family = ctx.induced_raw
    reps = ctx.induced_reps
    for g1 in reps:
        for g2 in reps:
            first = compose_maps(family[g1], family[g2])
            for g3 in reps:
                label = t[t[g3][g2]][g1]
                left = compose_maps(first, family[g3])
                right = compose_maps(family[g1], compose_maps(family[g2], family[g3]))
                if not (left.images == right.images == family[label].images):
                    return False, f"triple ({g1}, {g2}, {g3}) misses label {label}"
    return True, None


def _suite_lemma_4_5(ctx: _Instance):
    family = ctx.induced_raw
    ident = family[ctx.group.identity]
    mu = ctx.mu
    t, inv = ctx.group.table, ctx.group.inverses
    if any(
        ident.grades[x][y] != mu.grades[t[inv[x]][y]]
        for x in ctx.group.elements
        for y in ctx.group.elements
    ):
        return False, "identity-labeled matrix is not mu(x^-1 y)"
    for g in ctx.group.elements:
        if not pointwise_equal(compose_maps(family[g], ident), family[g]):
            return False, f"label {g}: f . I differs pointwise"
        if not pointwise_equal(compose_maps(ident, family[g]), family[g]):
            return False, f"label {g}: I . f differs pointwise"
    return True, None


def _suite_lemma_4_6(ctx: _Instance):
    group = ctx.group
    t, inv = group.table, group.inverses
    family = ctx.induced_raw
    ident = family[group.identity]
    for g in ctx.induced_reps:
        gi = inv[g]
        if not pointwise_equal(compose_maps(family[g], family[gi]), ident):
            return False, f"label {g}: f_g . f_g^-1 is not the identity matrix"
        if not pointwise_equal(compose_maps(family[gi], family[g]), ident):
            return False, f"label {g}: f_g^-1 . f_g is not the identity matrix"
        if inverse_map(family[g]).images != family[gi].images:
            return False, f"label {g}: transpose not equivalent to label {gi}"
    return True, None


def _suite_thm_4_1(ctx: _Instance):
    try:
        inn = build_inn_group(ctx.group, ctx.mu)
    except (FuzzautError, RuntimeError) as exc:
        return False, f"class table construction failed: {exc}"
    if len(inn.classes) * len(center(ctx.group)) != ctx.group.order:
        return False, f"{len(inn.classes)} classes do not index the center quotient"
    return True, None


def _suite_thm_4_2(ctx: _Instance):
    check = zeta(ctx.group, ctx.mu)
    if check.ok:
        return True, None
    parts = []
    if not check.multiplicative:
        parts.append("not multiplicative")
    if not check.surjective:
        parts.append("not surjective")
    if not check.kernel_is_center:
        parts.append(f"kernel {check.kernel.indices} is not the center")
    if not check.isomorphism:
        parts.append("induced map on center cosets is not an isomorphism")
    return False, "; ".join(parts)


def _suite_thm_4_3(ctx: _Instance):
    check = theta(ctx.group, ctx.mu)
    if check.ok:
        return True, None
    parts = []
    if not check.hom_report.verdict:
        parts.append(f"sup condition fails: {check.hom_report.witness}")
    if not check.images_are_inverses:
        parts.append("fuzzy image of a is not the label of a^-1")
    if not check.kernel_trivial:
        parts.append(f"kernel {check.kernel.indices} is not trivial")
    if not check.one_one:
        parts.append("not one-one")
    if not check.onto:
        parts.append("not onto")
    return False, "; ".join(parts)


_SUITES: dict[str, Callable[[_Instance], tuple[bool, Optional[str]]]] = {
    "Theorem 2.1": _suite_thm_2_1,
    "Theorem 2.2": _suite_thm_2_2,
    "Lemma 3.1": _suite_lemma_3_1,
    "Lemma 3.2": _suite_lemma_3_2,
    "Lemma 3.3": _suite_lemma_3_3,
    "Lemma 3.4": _suite_lemma_3_4,
    "Lemma 3.5": _suite_lemma_3_5,
    "Lemma 3.6": _suite_lemma_3_6,
    "Lemma 3.7": _suite_lemma_3_7,
    "Lemma 3.8": _suite_lemma_3_8,
    "Lemma 3.9": _suite_lemma_3_9,
    "Theorem 3.1": _suite_thm_3_1,
    "Lemma 4.1": _suite_lemma_4_1,
    "Lemma 4.2": _suite_lemma_4_2,
    "Lemma 4.3": _suite_lemma_4_3,
    "Lemma 4.4": _suite_lemma_4_4,
    "Lemma 4.5": _suite_lemma_4_5,
    "Lemma 4.6": _suite_lemma_4_6,
    "Theorem 4.1": _suite_thm_4_1,
    "Theorem 4.2": _suite_thm_4_2,
    "Theorem 4.3": _suite_thm_4_3,
}


def _run_one(statement: str, ctx: _Instance) -> SuiteResult:
    start = time.perf_counter()
    if ctx.mu_error is not None:
        # only reachable for the graded-conjugation suites; see run_campaign
        return SuiteResult(statement, ctx.descriptor, False, ctx.mu_error, 0)
    try:
        verdict, witness = _SUITES[statement](ctx)
    except (FuzzautError, RuntimeError) as exc:
        verdict, witness = False, f"{type(exc).__name__}: {exc}"
    ms = int((time.perf_counter() - start) * 1000)
    return SuiteResult(statement, ctx.descriptor, verdict, witness, ms)


def _worker_count() -> int:
    raw = os.environ.get("FUZZAUT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_campaign(campaign: Campaign) -> list[SuiteResult]:
    """Run every selected law suite over the campaign's instance matrix.

    Instances whose membership function fails validation produce failing rows
    for the graded-conjugation suites (which require it as a precondition)
    and are skipped by the other suites, whose sample sets cannot be built.
    """
    unknown = [s for s in campaign.suites if s not in _SUITES]
    if unknown:
        raise ConfigInvalid(f"unknown statement ids: {unknown}")
    contexts: list[_Instance] = []
    for token in campaign.groups:
        try:
            group = resolve_group(token)
        except FuzzautError as exc:
            raise ConfigInvalid(f"cannot resolve group {token!r}: {exc}") from exc
        for mu_token in campaign.mu_sources:
            contexts.append(_Instance(token, group, mu_token))
    jobs = [
        (statement, ctx)
        for statement in campaign.suites
        for ctx in contexts
        if ctx.mu_error is None or statement in SECTION_4_STATEMENTS
    ]
    workers = _worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda job: _run_one(*job), jobs))
    else:
        results = [_run_one(statement, ctx) for statement, ctx in jobs]
    results.sort(key=lambda r: (r.statement, r.instance))
    return results


# -- hypothesis ablation ------------------------------------------------------


def _ablate_pointed(group: FiniteGroup) -> SuiteResult:
    """Grade everything 1 and watch the unit-entry rule of the construction."""
    start = time.perf_counter()
    mu = flat_mu(group)
    witness = None
    verdict = False
    try:
        for g in group.elements:
            make_fuzzy_map(group, group, induced_grades(mu, g))
        witness = "construction stayed a fuzzy map; uniqueness cannot fail here"
    except MultipleUnitEntries as exc:
        verdict = True
        witness = f"MultipleUnitEntries: {exc} (expected failure)"
    ms = int((time.perf_counter() - start) * 1000)
    return SuiteResult(
        "Ablation(pointed)", f"{group.name}|mu=flat", verdict, witness, ms, expected_failure=True
    )


def _ablate_normality(group: FiniteGroup) -> Optional[SuiteResult]:
    """Chain mu over the least non-normal subgroup; expect the exact law 4.3 to break."""
    start = time.perf_counter()
    non_normal = next(
        (
            s
            for s in all_subgroups(group)
            if 1 < len(s) < group.order
            and not is_normal_subgroup(group, ElementSubset.from_indices(group, sorted(s)))
        ),
        None,
    )
    if non_normal is None:
        return None
    chain = [frozenset({group.identity}), non_normal, frozenset(group.elements)]
    mu = gen_mu_chain(group, chain, ("1", "1/2", "1/4"))
    ok, _ = is_normal_fuzzy_subgroup(mu)
    family = induced_family_raw(group, mu)
    counterexample = _find_4_3_counterexample(group, family)
    verdict = (not ok) and counterexample is not None
    witness = (
        f"mu graded over the non-normal subgroup {tuple(sorted(non_normal))}; "
        + (f"Lemma 4.3 counterexample: {counterexample} (expected failure)"
           if counterexample
           else "no counterexample found")
    )
    ms = int((time.perf_counter() - start) * 1000)
    return SuiteResult(
        "Ablation(normal-mu)",
        f"{group.name}|mu=chain-non-normal",
        verdict,
        witness,
        ms,
        expected_failure=True,
    )


def ablation(campaign: Campaign, drop: Optional[str]) -> list[SuiteResult]:
    """Re-run constructions with one hypothesis dropped.

    A row's verdict is True when the predicted violation actually occurred;
    rows carry ``expected_failure`` so recorded violations stay separate from
    defect failures.  Groups on which the hypothesis cannot be ablated at all
    (no non-normal subgroup exists) are skipped.
    """
    if drop is None:
        return run_campaign(campaign)
    if drop not in ABLATION_TOKENS:
        raise UnknownToken(f"unknown ablation token {drop!r}; expected one of {ABLATION_TOKENS}")
    results = []
    for token in campaign.groups:
        try:
            group = resolve_group(token)
        except FuzzautError as exc:
            raise ConfigInvalid(f"cannot resolve group {token!r}: {exc}") from exc
        if drop == "pointed":
            results.append(_ablate_pointed(group))
        else:
            row = _ablate_normality(group)
            if row is not None:
                results.append(row)
    results.sort(key=lambda r: (r.statement, r.instance))
    return results


# -- reports ------------------------------------------------------------------


def campaign_report(
    campaign: Campaign,
    results: list[SuiteResult],
    ablate: Optional[str] = None,
    stable_timings: bool = True,
) -> dict:
    """JSON-ready report; timings are zeroed by default so reports diff cleanly."""
    return {
        "campaign": {
            "groups": list(campaign.groups),
            "mu": list(campaign.mu_sources),
            "suites": list(campaign.suites),
            "seed": campaign.seed,
            "ablate": ablate,
        },
        "results": [
            {
                "statement": r.statement,
                "instance": r.instance,
                "verdict": r.verdict,
                "witness": r.witness,
                "ms": 0 if stable_timings else r.ms,
                "expected": r.expected_failure,
            }
            for r in results
        ],
        "summary": {
            "pass": sum(1 for r in results if r.verdict),
            "fail": sum(1 for r in results if not r.verdict),
        },
    }


def statements_covered(results: list[SuiteResult]) -> tuple[str, ...]:
    return tuple(sorted({r.statement for r in results}))
