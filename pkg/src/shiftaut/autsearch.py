"""Exhaustive search for finite-range endomorphisms and automorphisms.

The rule table of a radius-R code has one entry per word of length 2R+1,
so the raw candidate space is |A|^P(2R+1).  Candidates are explored by
backtracking over rule entries in canonical window order: whenever every
window of some table word has been assigned, the image of that word must
itself be a table word, and violations prune the whole subtree.

Invertibility is semi-decided by bounded search: an inverse of radius r,
if one exists, is forced entry-by-entry by the images of the words of
length 2(R+r)+1, so the only freedom is on windows the candidate code
never produces.  Codes that pass consistency but admit no inverse within
the budget are reported as unknown, never as automorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .blockcodes import (BlockCode, WindowNotInDomain, apply_to_word, codes_equal,
                         compose, identity_code, inflate, is_endomorphism,
                         shift_power_code, try_deflate)
from .words import DepthExceeded, LanguageTable, Word

DEFAULT_BUDGET = 10_000_000
_COMPLETION_CAP = 4096  # fallback enumeration for windows no image forces


class SearchBudgetExceeded(Exception):
    def __init__(self, bound: int, budget: int):
        self.bound = bound
        self.budget = budget
        super().__init__(f"candidate space {bound} exceeds budget {budget}")


@dataclass
class AutCertificate:
    """A code together with a verified two-sided inverse.

    ``exact`` is True only when both directions were certified as exact
    endomorphisms (finite-type tables); otherwise the certificate is
    stamped by its horizon.
    """

    code: BlockCode
    inverse: BlockCode
    horizon: int
    exact: bool


@dataclass
class AutReport:
    radius: int
    inv_radius: int
    horizon: int
    certified: list
    refuted_count: int
    unknown: list
    cosets: list  # partition of certified indices under shift-power equivalence
    growth_counts: list  # per r <= radius: certified codes invertible at radius r
    problems: list = field(default_factory=list)

    @property
    def coset_count(self) -> int:
        return len(self.cosets)

    @property
    def ok(self) -> bool:
        return not self.problems


def enumerate_endomorphisms(table: LanguageTable, radius: int, horizon: int,
                            budget: int = DEFAULT_BUDGET) -> list:
    """All radius-R rule tables not refuted at the horizon, canonical order."""
    width = 2 * radius + 1
    if not width <= horizon <= table.max_n:
        raise DepthExceeded(f"horizon {horizon} outside [{width}, {table.max_n}]")
    windows = table.level(width)
    syms = table.alphabet.symbols
    bound = len(syms) ** len(windows)
    if bound > budget:
        raise SearchBudgetExceeded(bound, budget)

    wid = {w: i for i, w in enumerate(windows)}
    # one constraint per table word of length width..horizon: once all of
    # its windows are assigned, its image must be in the language
    constraints = []
    per_window: list[list] = [[] for _ in windows]
    for n in range(width, horizon + 1):
        target = table.level_set(n - 2 * radius)
        for w in table.level(n):
            ids = [wid[w[i:i + width]] for i in range(n - width + 1)]
            ci = len(constraints)
            constraints.append((ids, target))
            counts: dict[int, int] = {}
            for i in ids:
                counts[i] = counts.get(i, 0) + 1
            for i, c in counts.items():
                per_window[i].append((ci, c))

    remaining = [len(ids) for ids, _ in constraints]
    assign: list = [None] * len(windows)
    found = []

    def dfs(i: int) -> None:
        if i == len(windows):
            found.append(dict(zip(windows, assign)))
            return
        touched = per_window[i]
        for sym in syms:
            assign[i] = sym
            for ci, cnt in touched:
                remaining[ci] -= cnt
            ok = True
            for ci, _ in touched:
                if remaining[ci] == 0:
                    ids, target = constraints[ci]
                    if tuple(assign[j] for j in ids) not in target:
                        ok = False
                        break
            if ok:
                dfs(i + 1)
            for ci, cnt in touched:
                remaining[ci] += cnt
        assign[i] = None

    dfs(0)
    return [BlockCode(radius, table.alphabet, table.alphabet, rule)
            for rule in found]


def certify_automorphism(code: BlockCode, table: LanguageTable, inv_radius: int,
                         horizon: int) -> Optional[AutCertificate]:
    """Search an inverse of radius <= inv_radius; None when none is found.

    The candidate inverse at radius r is forced: composing to the identity
    on every word of length 2(R+r)+1 pins the inverse's value on every
    window the code produces.  Leftover windows (only possible for codes
    that are not onto at this depth) get a small exhaustive completion.
    """
    R = code.radius
    if horizon < 2 * (R + inv_radius) + 1:
        raise DepthExceeded(
            f"horizon {horizon} < {2 * (R + inv_radius) + 1} needed for "
            f"inverse search at radius {inv_radius}")
    if horizon > table.max_n:
        raise DepthExceeded(f"horizon {horizon} beyond table depth {table.max_n}")
    ident = identity_code(table)
    syms = table.alphabet.symbols
    for r in range(inv_radius + 1):
        forced: dict[Word, str] = {}
        ok = True
        for w in table.level(2 * (R + r) + 1):
            u = apply_to_word(code, w)
            t = w[R + r]
            if forced.setdefault(u, t) != t:
                ok = False
                break
        if not ok:
            continue
        uncovered = [u for u in table.level(2 * r + 1) if u not in forced]
        if len(syms) ** len(uncovered) > _COMPLETION_CAP:
            continue
        for completion in _completions(uncovered, syms):
            rule = dict(forced)
            rule.update(completion)
            inverse = BlockCode(r, table.alphabet, table.alphabet, rule)
            try:
                if not codes_equal(compose(inverse, code, table), ident, table):
                    continue
                if not codes_equal(compose(code, inverse, table), ident, table):
                    continue
            except (WindowNotInDomain, DepthExceeded):
                continue
            exact = (is_endomorphism(code, table, horizon).status == "certified-exact"
                     and is_endomorphism(inverse, table, horizon).status
                     == "certified-exact")
            return AutCertificate(code, inverse, horizon, exact)
    return None


def _completions(uncovered, syms):
    if not uncovered:
        yield {}
        return
    head, tail = uncovered[0], uncovered[1:]
    for sym in syms:
        for rest in _completions(tail, syms):
            rest[head] = sym
            yield rest


def aut_group_mod_shift(table: LanguageTable, radius: int, inv_radius: int,
                        horizon: int, budget: int = DEFAULT_BUDGET) -> AutReport:
    """Enumerate, certify, and sort radius-R automorphisms into classes
    that differ by a shift power."""
    codes = enumerate_endomorphisms(table, radius, horizon, budget)
    certified: list[AutCertificate] = []
    unknown: list[BlockCode] = []
    for c in codes:
        cert = certify_automorphism(c, table, inv_radius, horizon)
        if cert is None:
            unknown.append(c)
        else:
            certified.append(cert)
    total = len(table.alphabet) ** table.count(2 * radius + 1)
    refuted_count = total - len(codes)

    max_j = radius + inv_radius
    shifts = {j: shift_power_code(j, table) for j in range(-max_j, max_j + 1)}

    def shift_class_of(delta: BlockCode) -> Optional[int]:
        for j in range(-max_j, max_j + 1):
            if codes_equal(delta, shifts[j], table):
                return j
        return None

    def same_coset(a: AutCertificate, b: AutCertificate) -> bool:
        return shift_class_of(compose(a.inverse, b.code, table)) is not None

    cosets: list[list[int]] = []
    for i in range(len(certified)):
        for cls in cosets:
            if same_coset(certified[cls[0]], certified[i]):
                cls.append(i)
                break
        else:
            cosets.append([i])

    growth_counts = []
    for r in range(radius + 1):
        n = sum(1 for cert in certified
                if try_deflate(cert.code, r, table) is not None
                and try_deflate(cert.inverse, r, table) is not None)
        growth_counts.append(n)

    report = AutReport(radius, inv_radius, horizon, certified, refuted_count,
                       unknown, cosets, growth_counts)
    report.problems = _recheck(report, table, shifts)
    return report


def _recheck(report: AutReport, table: LanguageTable, shifts: dict) -> list:
    """Independent re-verification of the report's invariants."""
    problems = []
    certified = report.certified
    ident = identity_code(table)

    # every certificate composes to the identity both ways
    for k, cert in enumerate(certified):
        try:
            if not codes_equal(compose(cert.inverse, cert.code, table), ident, table):
                problems.append(f"certificate {k}: left composition is not identity")
            if not codes_equal(compose(cert.code, cert.inverse, table), ident, table):
                problems.append(f"certificate {k}: right composition is not identity")
        except (WindowNotInDomain, DepthExceeded) as exc:
            problems.append(f"certificate {k}: recheck failed ({exc})")

    # shift powers up to min(R, R_inv) must have been certified
    for j in range(-min(report.radius, report.inv_radius),
                   min(report.radius, report.inv_radius) + 1):
        if not any(codes_equal(cert.code, shifts[j], table) for cert in certified):
            problems.append(f"shift power {j} missing from certified set")

    # certified codes commute with the shift
    if report.inv_radius >= 1 and certified:
        sigma = shifts[1]
        for k, cert in enumerate(certified):
            if not codes_equal(compose(sigma, cert.code, table),
                               compose(cert.code, sigma, table), table):
                problems.append(f"certificate {k} does not commute with the shift")

    # certified codes are onto each level deep enough to check
    for k, cert in enumerate(certified):
        for n in (1, 2):
            src = n + 2 * cert.code.radius
            if src > table.max_n:
                continue
            image = {apply_to_word(cert.code, w) for w in table.level(src)}
            if image != set(table.level(n)):
                problems.append(f"certificate {k} not onto level {n}")

    # cosets partition the certified set, and the partition agrees when
    # computed with post-composition instead
    seen = [i for cls in report.cosets for i in cls]
    if sorted(seen) != list(range(len(certified))):
        problems.append("cosets do not partition the certified set")
    max_j = report.radius + report.inv_radius

    def same_coset_post(a: AutCertificate, b: AutCertificate) -> bool:
        delta = compose(b.code, a.inverse, table)
        return any(codes_equal(delta, shifts[j], table)
                   for j in range(-max_j, max_j + 1))

    for cls in report.cosets:
        rep = certified[cls[0]]
        for i in cls[1:]:
            if not same_coset_post(rep, certified[i]):
                problems.append("pre/post coset identification disagrees")
    for a in range(len(report.cosets)):
        for b in range(a + 1, len(report.cosets)):
            if same_coset_post(certified[report.cosets[a][0]],
                               certified[report.cosets[b][0]]):
                problems.append("post-composition merges distinct cosets")

    if any(x > y for x, y in zip(report.growth_counts, report.growth_counts[1:])):
        problems.append("growth counts decrease with radius")
    return problems
