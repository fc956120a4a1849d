"""Sliding block codes over a language table.

A code of radius R maps each word of length 2R+1 of a fixed table to one
output symbol; applied to a longer word it slides the window and shortens
the word by 2R.  Codes built against one table refuse windows they have
never seen rather than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .words import Alphabet, DepthExceeded, LanguageError, LanguageTable, Word


class WindowNotInDomain(LanguageError):
    """The code has no rule entry for this window."""

    def __init__(self, window: Word):
        self.window = window
        super().__init__(f"window {window!r} not in code domain")


@dataclass(frozen=True, eq=False)
class BlockCode:
    radius: int
    domain: Alphabet
    codomain: Alphabet
    rule: Mapping[Word, str]  # total on L_{2R+1} of the table it was built on

    @property
    def window(self) -> int:
        return 2 * self.radius + 1

    def __repr__(self) -> str:
        return f"BlockCode(radius={self.radius}, entries={len(self.rule)})"


@dataclass(frozen=True)
class EndoVerdict:
    """Outcome of checking that a code maps the language into itself.

    ``certified-exact`` is only issued on finite-type tables once the
    checked depth covers one full forbidden-word window, where local
    consistency implies the image of every point stays in the shift;
    otherwise a clean run is only ``consistent-to-horizon`` and is never
    silently upgraded.
    """

    status: str  # "certified-exact" | "consistent-to-horizon" | "refuted"
    horizon: int
    witness: Optional[Word] = None

    @property
    def ok(self) -> bool:
        return self.status != "refuted"


def apply_to_word(code: BlockCode, w: Word) -> Word:
    """Slide the code along w; output has length |w| - 2R."""
    width = code.window
    if len(w) < width:
        raise ValueError(f"word of length {len(w)} shorter than window {width}")
    rule = code.rule
    out = []
    for i in range(len(w) - width + 1):
        win = w[i:i + width]
        try:
            out.append(rule[win])
        except KeyError:
            raise WindowNotInDomain(win) from None
    return tuple(out)


def shift_power_code(j: int, table: LanguageTable) -> BlockCode:
    """The code reading the symbol j places to the right of center."""
    r = abs(j)
    if 2 * r + 1 > table.max_n:
        raise DepthExceeded(f"shift power {j} needs depth {2 * r + 1}")
    rule = {w: w[r + j] for w in table.level(2 * r + 1)}
    return BlockCode(r, table.alphabet, table.alphabet, rule)


def identity_code(table: LanguageTable) -> BlockCode:
    return shift_power_code(0, table)


def inflate(code: BlockCode, r_target: int, table: LanguageTable) -> BlockCode:
    """Re-express the code at a larger radius without changing its action."""
    if r_target < code.radius:
        raise ValueError("target radius smaller than code radius")
    if r_target == code.radius:
        return code
    width = 2 * r_target + 1
    if width > table.max_n:
        raise DepthExceeded(f"inflation to radius {r_target} needs depth {width}")
    pad = r_target - code.radius
    rule = {}
    for w in table.level(width):
        central = w[pad:width - pad]
        try:
            rule[w] = code.rule[central]
        except KeyError:
            raise WindowNotInDomain(central) from None
    return BlockCode(r_target, code.domain, code.codomain, rule)


def try_deflate(code: BlockCode, r_target: int,
                table: LanguageTable) -> Optional[BlockCode]:
    """The radius-r_target code with the same action, if the rule only
    depends on the central window; None otherwise."""
    if r_target >= code.radius:
        return code
    pad = code.radius - r_target
    rule: dict[Word, str] = {}
    for w, out in code.rule.items():
        central = w[pad:len(w) - pad]
        if rule.setdefault(central, out) != out:
            return None
    return BlockCode(r_target, code.domain, code.codomain, rule)


def compose(outer: BlockCode, inner: BlockCode, table: LanguageTable) -> BlockCode:
    """The code acting as outer-after-inner; radius adds."""
    if inner.codomain != outer.domain:
        raise ValueError("alphabet mismatch: inner codomain != outer domain")
    if inner.domain != table.alphabet:
        raise ValueError("inner code not built over this table's alphabet")
    r = outer.radius + inner.radius
    width = 2 * r + 1
    if width > table.max_n:
        raise DepthExceeded(f"composition radius {r} needs depth {width}")
    rule = {}
    for w in table.level(width):
        mid = apply_to_word(inner, w)  # length 2*outer.radius + 1
        try:
            rule[w] = outer.rule[mid]
        except KeyError:
            raise WindowNotInDomain(mid) from None
    return BlockCode(r, inner.domain, outer.codomain, rule)


def codes_equal(c1: BlockCode, c2: BlockCode, table: LanguageTable) -> bool:
    """True iff both codes act identically on every word of the table."""
    if c1.domain != c2.domain or c1.codomain != c2.codomain:
        return False
    r = max(c1.radius, c2.radius)
    if 2 * r + 1 > table.max_n:
        raise DepthExceeded(f"comparison at radius {r} needs depth {2 * r + 1}")
    a = inflate(c1, r, table)
    b = inflate(c2, r, table)
    return a.rule == b.rule


def is_endomorphism(code: BlockCode, table: LanguageTable, horizon: int) -> EndoVerdict:
    """Check that images of all words up to the horizon stay in the language."""
    width = code.window
    if not width <= horizon <= table.max_n:
        raise DepthExceeded(
            f"horizon {horizon} outside [{width}, {table.max_n}]")
    exact_at = None
    if table.sft_window is not None:
        exact_at = 2 * code.radius + table.sft_window
    limit = horizon if exact_at is None else min(horizon, max(exact_at, width))
    for n in range(width, limit + 1):
        target = table.level_set(n - 2 * code.radius)
        for w in table.level(n):
            if apply_to_word(code, w) not in target:
                return EndoVerdict("refuted", horizon, witness=w)
    if exact_at is not None and horizon >= exact_at:
        return EndoVerdict("certified-exact", horizon)
    return EndoVerdict("consistent-to-horizon", horizon)


# ---------------------------------------------------------------------------
# serialization


def code_to_text(code: BlockCode) -> str:
    fmt = code.domain.format
    lines = ["range\t%d" % code.radius]
    for w in sorted(code.rule, key=code.domain.key):
        lines.append("%s\t%s" % (fmt(w), code.rule[w]))
    return "\n".join(lines) + "\n"


def code_from_text(text: str, domain: Alphabet,
                   codomain: Optional[Alphabet] = None) -> BlockCode:
    codomain = codomain or domain
    lines = [ln for ln in text.split("\n") if ln]
    if not lines or not lines[0].startswith("range\t"):
        raise ValueError("bad code file header")
    radius = int(lines[0].split("\t", 1)[1])
    rule = {}
    for ln in lines[1:]:
        win_text, sym = ln.split("\t", 1)
        if sym not in codomain:
            raise ValueError(f"output symbol {sym!r} not in codomain")
        rule[domain.word(win_text)] = sym
    for w in rule:
        if len(w) != 2 * radius + 1:
            raise ValueError(f"window {w!r} does not match radius {radius}")
    return BlockCode(radius, domain, codomain, rule)
