"""Shift-model constructors: declarative specs realized as language tables.

Supported models:

* ``Sft`` - finitely many forbidden words; generation is exact via the
  trimmed De Bruijn graph of order f-1 (f = longest forbidden word).
* ``Substitution`` - primitive symbol-to-word rules; factors are grown to
  a fixed point of factor-set expansion.
* ``Sturmian`` - slope given by a continued-fraction directive sequence,
  words built by the standard-word recursion s_{k+1} = s_k^{a_{k+1}} s_{k-1};
  no floating point anywhere.
* ``Periodic`` - finitely many primitive periodic orbits.
* ``DisjointUnion`` - union of parts over pairwise-disjoint alphabets.
* ``Marked`` - a base shift plus the orbit of one point with a fresh
  symbol planted at the origin (adds exactly n words per length n).
* ``Doubling`` - the spaced-ones family: orbits with a single marker every
  2^m positions for m = 1..n_max, together with the factors of the two
  limit points (a lone marker, and no marker at all).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Optional, Union

from .words import Alphabet, LanguageTable, Word

DEFAULT_MAX_WORDS = 2_000_000


class SpecError(Exception):
    """Invalid shift spec; ``location`` is a JSON-pointer-style path."""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location or '/'}: {message}" if location else message)


class DuplicateOrbit(SpecError):
    """Two periodic seeds describe the same orbit."""


class EmptyLanguage(SpecError):
    """The spec admits no bi-infinite sequence at all."""


# ---------------------------------------------------------------------------
# spec variants


@dataclass(frozen=True)
class Sft:
    alphabet: Alphabet
    forbidden: frozenset  # of Words

    model = "sft"


@dataclass(frozen=True)
class Substitution:
    alphabet: Alphabet
    rules: tuple  # ((symbol, image Word), ...) in alphabet order

    model = "substitution"

    def rule(self, symbol: str) -> Word:
        return dict(self.rules)[symbol]


@dataclass(frozen=True)
class Sturmian:
    cf_pre: tuple
    cf_period: tuple
    alphabet: Alphabet = field(default_factory=lambda: Alphabet(("0", "1")))

    model = "sturmian"


@dataclass(frozen=True)
class Periodic:
    alphabet: Alphabet
    orbits: tuple  # of seed Words

    model = "periodic"


@dataclass(frozen=True)
class DisjointUnion:
    parts: tuple  # of ShiftSpecs

    model = "union"


@dataclass(frozen=True)
class Marked:
    base: "ShiftSpec"
    mark: str

    model = "marked"


@dataclass(frozen=True)
class Doubling:
    n_max: int

    model = "doubling"


ShiftSpec = Union[Sft, Substitution, Sturmian, Periodic, DisjointUnion, Marked, Doubling]

_DOUBLING_ALPHABET = Alphabet(("0", "1"))


def alphabet_of(spec: ShiftSpec) -> Alphabet:
    if isinstance(spec, (Sft, Substitution, Sturmian, Periodic)):
        return spec.alphabet
    if isinstance(spec, DisjointUnion):
        syms = []
        for p in spec.parts:
            syms.extend(alphabet_of(p).symbols)
        return Alphabet(syms)
    if isinstance(spec, Marked):
        return Alphabet(alphabet_of(spec.base).symbols + (spec.mark,))
    if isinstance(spec, Doubling):
        return _DOUBLING_ALPHABET
    raise TypeError(f"not a shift spec: {spec!r}")


# ---------------------------------------------------------------------------
# word helpers


def minimal_period(w: Word) -> int:
    """Smallest p dividing |w| with w a power of its length-p prefix."""
    if not w:
        raise ValueError("empty word has no period")
    n = len(w)
    for p in range(1, n + 1):
        if n % p == 0 and w == w[:p] * (n // p):
            return p
    return n


def _rotations(w: Word):
    return {w[i:] + w[:i] for i in range(len(w))}


# ---------------------------------------------------------------------------
# validation


def validate_spec(spec: ShiftSpec, loc: str = "") -> None:
    """Semantic validation; structural checks happen at JSON parse time."""
    if isinstance(spec, Sft):
        for w in spec.forbidden:
            if len(w) == 0:
                raise SpecError("forbidden words must be nonempty", loc + "/forbidden")
            for s in w:
                if s not in spec.alphabet:
                    raise SpecError(f"forbidden word uses unknown symbol {s!r}",
                                    loc + "/forbidden")
    elif isinstance(spec, Substitution):
        rules = dict(spec.rules)
        for a in spec.alphabet:
            img = rules.get(a)
            if not img:
                raise SpecError(f"no rule for symbol {a!r}", loc + "/rules")
            for s in img:
                if s not in spec.alphabet:
                    raise SpecError(f"rule image uses unknown symbol {s!r}",
                                    loc + "/rules")
        _check_primitive(spec.alphabet, rules, loc)
    elif isinstance(spec, Sturmian):
        if len(spec.alphabet) != 2:
            raise SpecError("sturmian alphabet must have exactly two symbols",
                            loc + "/alphabet")
        if not spec.cf_period:
            raise SpecError("continued fraction period is empty", loc + "/cf/period")
        for part, name in ((spec.cf_pre, "pre"), (spec.cf_period, "period")):
            if any(not isinstance(a, int) or a < 1 for a in part):
                raise SpecError("coefficients must be integers >= 1",
                                f"{loc}/cf/{name}")
    elif isinstance(spec, Periodic):
        if not spec.orbits:
            raise SpecError("no orbits given", loc + "/orbits")
        for i, w in enumerate(spec.orbits):
            if not w:
                raise SpecError("empty seed", f"{loc}/orbits/{i}")
            for s in w:
                if s not in spec.alphabet:
                    raise SpecError(f"seed uses unknown symbol {s!r}",
                                    f"{loc}/orbits/{i}")
            if minimal_period(w) != len(w):
                raise SpecError(f"seed {spec.alphabet.format(w)!r} is not primitive",
                                f"{loc}/orbits/{i}")
        for i, w in enumerate(spec.orbits):
            for j in range(i + 1, len(spec.orbits)):
                v = spec.orbits[j]
                if len(v) == len(w) and v in _rotations(w):
                    raise DuplicateOrbit(
                        "seeds %r and %r are rotations of the same orbit"
                        % (spec.alphabet.format(w), spec.alphabet.format(v)),
                        f"{loc}/orbits/{j}")
    elif isinstance(spec, DisjointUnion):
        if not spec.parts:
            raise SpecError("union has no parts", loc + "/parts")
        seen: dict[str, int] = {}
        for i, p in enumerate(spec.parts):
            validate_spec(p, f"{loc}/parts/{i}")
            for s in alphabet_of(p).symbols:
                if s in seen:
                    raise SpecError(
                        f"symbol {s!r} appears in parts {seen[s]} and {i}",
                        f"{loc}/parts/{i}")
                seen[s] = i
    elif isinstance(spec, Marked):
        if not isinstance(spec.base, (Sturmian, Substitution)):
            raise SpecError("marked base must be a sturmian or substitution spec",
                            loc + "/base")
        validate_spec(spec.base, loc + "/base")
        if spec.mark in alphabet_of(spec.base):
            raise SpecError(f"mark {spec.mark!r} already in base alphabet",
                            loc + "/mark")
        Alphabet((spec.mark,))  # token sanity
    elif isinstance(spec, Doubling):
        if not isinstance(spec.n_max, int) or spec.n_max < 1:
            raise SpecError("n_max must be an integer >= 1", loc + "/n_max")
    else:
        raise SpecError(f"not a shift spec: {spec!r}", loc)


def _check_primitive(alphabet: Alphabet, rules: dict, loc: str) -> None:
    # boolean incidence-matrix powers; primitive iff some power is all-positive,
    # which must happen by the Wielandt bound (s-1)^2 + 1
    s = len(alphabet)
    occurs = {a: frozenset(rules[a]) for a in alphabet}
    full = frozenset(alphabet.symbols)
    cur = occurs
    for _ in range((s - 1) ** 2 + 1):
        if all(cur[a] == full for a in alphabet):
            return
        cur = {a: frozenset().union(*(occurs[b] for b in cur[a])) for a in alphabet}
    if all(cur[a] == full for a in alphabet):
        return
    raise SpecError("substitution is not primitive", loc + "/rules")


def finite_type_window(spec: ShiftSpec) -> Optional[int]:
    """Window length certifying membership by local inspection, when one exists."""
    if isinstance(spec, Sft):
        return max((len(w) for w in spec.forbidden), default=1)
    if isinstance(spec, Periodic):
        return max(2, 2 * max(len(w) for w in spec.orbits))
    if isinstance(spec, DisjointUnion):
        parts = [finite_type_window(p) for p in spec.parts]
        if any(w is None for w in parts):
            return None
        return max(2, *parts)
    return None


# ---------------------------------------------------------------------------
# generators


def generate_language(spec: ShiftSpec, max_n: int, *,
                      max_words: int = DEFAULT_MAX_WORDS) -> LanguageTable:
    """All words of length <= max_n of the subshift described by spec."""
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    validate_spec(spec)
    if isinstance(spec, Sft):
        levels = _sft_levels(spec, max_n, max_words)
    elif isinstance(spec, Substitution):
        levels = _substitution_levels(spec, max_n)
    elif isinstance(spec, Sturmian):
        levels = _sturmian_levels(spec, max_n)
    elif isinstance(spec, Periodic):
        levels = _periodic_levels(spec, max_n)
    elif isinstance(spec, DisjointUnion):
        levels = {n: set() for n in range(1, max_n + 1)}
        for part in spec.parts:
            sub = generate_language(part, max_n, max_words=max_words)
            for n in range(1, max_n + 1):
                levels[n].update(sub.level(n))
    elif isinstance(spec, Marked):
        levels = _marked_levels(spec, max_n, max_words)
    elif isinstance(spec, Doubling):
        levels = _doubling_levels(spec, max_n)
    else:
        raise TypeError(f"not a shift spec: {spec!r}")
    total = sum(len(levels[n]) for n in levels)
    if total > max_words:
        raise SpecError(f"language too large: {total} words exceeds cap {max_words}")
    return LanguageTable(alphabet_of(spec), levels,
                         sft_window=finite_type_window(spec))


def _has_forbidden_suffix(w: Word, forbidden) -> bool:
    return any(len(f) <= len(w) and w[-len(f):] == f for f in forbidden)


def _full_levels(symbols, max_n: int, max_words: int) -> dict:
    levels: dict[int, set] = {}
    total = 0
    cur = [(s,) for s in symbols]
    for n in range(1, max_n + 1):
        total += len(cur)
        if total > max_words:
            raise SpecError(f"language too large at depth {n} (cap {max_words})")
        levels[n] = set(cur)
        if n < max_n:
            cur = [w + (s,) for w in cur for s in symbols]
    return levels


def _sft_levels(spec: Sft, max_n: int, max_words: int) -> dict:
    forbidden = set(spec.forbidden)
    dead = {f[0] for f in forbidden if len(f) == 1}
    symbols = [a for a in spec.alphabet if a not in dead]
    if not symbols:
        raise EmptyLanguage("every symbol is forbidden")
    forbidden = {f for f in forbidden if len(f) > 1}
    f = max((len(w) for w in forbidden), default=1)
    if f == 1:
        return _full_levels(symbols, max_n, max_words)

    # vertices: allowed words of length f-1, grown incrementally
    verts = {(s,) for s in symbols}
    for _ in range(f - 2):
        verts = {w + (s,) for w in verts for s in symbols
                 if not _has_forbidden_suffix(w + (s,), forbidden)}
        if len(verts) > max_words:
            raise SpecError(f"too many graph vertices (cap {max_words})")
    edges = {v: [s for s in symbols
                 if not _has_forbidden_suffix(v + (s,), forbidden)]
             for v in verts}

    # trim vertices that cannot continue forever in both directions
    while True:
        indeg = {v: 0 for v in edges}
        for v, outs in edges.items():
            for s in outs:
                u = v[1:] + (s,)
                indeg[u] += 1
        drop = {v for v in edges if not edges[v] or indeg[v] == 0}
        if not drop:
            break
        edges = {v: [s for s in outs if v[1:] + (s,) not in drop]
                 for v, outs in edges.items() if v not in drop}
    if not edges:
        raise EmptyLanguage("no bi-infinite sequence avoids the forbidden words")

    levels: dict[int, set] = {}
    core = set(edges)
    levels[f - 1] = core
    for n in range(f - 2, 0, -1):
        levels[n] = {w[:-1] for w in levels[n + 1]} | {w[1:] for w in levels[n + 1]}
    total = sum(len(levels[n]) for n in levels)
    cur = core
    for n in range(f, max_n + 1):
        cur = {w + (s,) for w in cur for s in edges[w[-(f - 1):]]}
        total += len(cur)
        if total > max_words:
            raise SpecError(f"language too large at depth {n} (cap {max_words})")
        levels[n] = cur
    return {n: levels[n] for n in range(1, max_n + 1)}


def _substitution_levels(spec: Substitution, max_n: int) -> dict:
    rules = {a: tuple(img) for a, img in spec.rules}
    symbols = spec.alphabet.symbols
    if len(symbols) == 1:
        a = symbols[0]
        return {n: {(a,) * n} for n in range(1, max_n + 1)}

    # replace the rules by a power whose images all have length >= 2, so
    # that factor sets of bounded length close under one more application
    sub = dict(rules)
    for _ in range((len(symbols) - 1) ** 2 + 2):
        if min(len(sub[a]) for a in symbols) >= 2:
            break
        sub = {a: sum((rules[c] for c in sub[a]), ()) for a in symbols}
    else:
        raise SpecError("substitution images do not grow")

    cap = max(max_n, 4) + 2
    seen = {(a,) for a in symbols}
    queue = list(seen)
    while queue:
        w = queue.pop()
        img = sum((sub[c] for c in w), ())
        ln = len(img)
        for i in range(ln):
            top = min(cap, ln - i)
            for k in range(1, top + 1):
                u = img[i:i + k]
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    levels: dict[int, set] = {n: set() for n in range(1, max_n + 1)}
    for w in seen:
        if len(w) <= max_n:
            levels[len(w)].add(w)
    return levels


def _scan_levels(word: Word, max_n: int) -> dict:
    levels: dict[int, set] = {}
    for n in range(1, max_n + 1):
        levels[n] = {word[i:i + n] for i in range(len(word) - n + 1)}
    return levels


def _sturmian_levels(spec: Sturmian, max_n: int) -> dict:
    zero, one = spec.alphabet.symbols
    coeffs = itertools.chain(spec.cf_pre, itertools.cycle(spec.cf_period))
    s_prev: Word = (one,)
    s_cur: Word = (zero,)
    # grow the standard word until every level has its full complement of
    # n+1 words; factor counts of a prefix can only undershoot, never
    # overshoot, so this certifies completeness
    for _ in range(200):
        a = next(coeffs)
        s_prev, s_cur = s_cur, s_cur * a + s_prev
        if len(s_cur) > 5_000_000:
            raise SpecError("sturmian prefix grew unreasonably large")
        if len(s_cur) <= max_n:
            continue
        levels = _scan_levels(s_cur, max_n)
        if all(len(levels[n]) == n + 1 for n in range(1, max_n + 1)):
            return levels
    raise SpecError("sturmian word counts did not stabilize")


def _orbit_windows(seed: Word, n: int) -> set:
    p = len(seed)
    reps = seed * (n // p + 2)
    return {reps[i:i + n] for i in range(p)}


def _periodic_levels(spec: Periodic, max_n: int) -> dict:
    levels: dict[int, set] = {n: set() for n in range(1, max_n + 1)}
    for seed in spec.orbits:
        for n in range(1, max_n + 1):
            levels[n].update(_orbit_windows(seed, n))
    return levels


def _marked_levels(spec: Marked, max_n: int, max_words: int) -> dict:
    # context window of one point of the base shift, long enough to supply
    # the left and right halves of every marked factor
    base = generate_language(spec.base, max(2 * max_n - 1, 1), max_words=max_words)
    ctx = base.level(2 * max_n - 1)[0]
    c = max_n - 1  # the mark replaces the symbol at this offset
    levels: dict[int, set] = {}
    for n in range(1, max_n + 1):
        words = set(base.level(n))
        for j in range(n):  # j symbols to the left of the mark
            words.add(ctx[c - j:c] + (spec.mark,) + ctx[c + 1:c + n - j])
        levels[n] = words
    return levels


def _doubling_levels(spec: Doubling, max_n: int) -> dict:
    if max_n > 2 ** (spec.n_max + 1):
        raise SpecError(
            "depth %d exceeds the exact range %d of the n_max=%d truncation"
            % (max_n, 2 ** (spec.n_max + 1), spec.n_max), "/n_max")
    one, zero = "1", "0"
    levels: dict[int, set] = {n: set() for n in range(1, max_n + 1)}
    for m in range(1, spec.n_max + 1):
        seed = (one,) + (zero,) * (2 ** m - 1)
        for n in range(1, max_n + 1):
            levels[n].update(_orbit_windows(seed, n))
    for n in range(1, max_n + 1):
        levels[n].add((zero,) * n)
        for j in range(n):
            levels[n].add((zero,) * j + (one,) + (zero,) * (n - 1 - j))
    return levels


# ---------------------------------------------------------------------------
# built-in example constructions


def builtin_example(name: str, **params) -> ShiftSpec:
    """Named example constructions.

    * ``union-sturmian``: disjoint union of k Sturmian shifts with distinct
      slopes; params ``cfs`` (list of period lists, or {"pre","period"}
      dicts) and optional ``k`` (checked against len(cfs)).
    * ``marked-transitive``: params ``base`` (a Sturmian or Substitution
      spec) and optional ``mark`` token.
    * ``doubling-periodic``: param ``n_max``; orbits with one marker every
      2^m positions plus the limit-point factors.
    * ``doubling-pair``: param ``n_max``; two plain periodic copies of the
      spaced-ones family over disjoint alphabets {0,1} and {2,3}.
    """
    if name == "union-sturmian":
        cfs = params.pop("cfs", None)
        k = params.pop("k", None)
        _no_extra(name, params)
        if not cfs:
            raise SpecError("union-sturmian needs cfs", "/cfs")
        if k is not None and k != len(cfs):
            raise SpecError(f"k={k} but {len(cfs)} cf expansions given", "/k")
        norm = []
        for cf in cfs:
            if isinstance(cf, dict):
                norm.append((tuple(cf.get("pre", ())), tuple(cf["period"])))
            else:
                norm.append(((), tuple(cf)))
        expansions = [_cf_expand(pre, per, 64) for pre, per in norm]
        if len(set(expansions)) != len(expansions):
            raise SpecError("cf expansions must be pairwise distinct", "/cfs")
        parts = tuple(
            Sturmian(pre, per, Alphabet((f"0_{i + 1}", f"1_{i + 1}")))
            for i, (pre, per) in enumerate(norm))
        return DisjointUnion(parts)
    if name == "marked-transitive":
        base = params.pop("base", None)
        mark = params.pop("mark", None)
        _no_extra(name, params)
        if base is None:
            raise SpecError("marked-transitive needs base", "/base")
        if mark is None:
            mark = _fresh_mark(alphabet_of(base))
        return Marked(base, mark)
    if name == "doubling-periodic":
        n_max = params.pop("n_max", 4)
        _no_extra(name, params)
        return Doubling(n_max)
    if name == "doubling-pair":
        n_max = params.pop("n_max", 2)
        _no_extra(name, params)
        parts = []
        for one, zero in (("1", "0"), ("3", "2")):
            seeds = tuple((one,) + (zero,) * (2 ** m - 1)
                          for m in range(1, n_max + 1))
            parts.append(Periodic(Alphabet((zero, one)), seeds))
        return DisjointUnion(tuple(parts))
    raise SpecError(f"unknown builtin example {name!r}")


def _no_extra(name, params):
    if params:
        raise SpecError(f"unknown parameters for {name}: {sorted(params)}")


def _fresh_mark(alphabet: Alphabet) -> str:
    i = 0
    while str(i) in alphabet:
        i += 1
    return str(i)


def _cf_expand(pre, period, length):
    out = list(pre)
    while len(out) < length:
        out.extend(period)
    return tuple(out[:length])


# ---------------------------------------------------------------------------
# JSON interchange


_KNOWN_FIELDS = {
    "sft": {"model", "alphabet", "forbidden"},
    "substitution": {"model", "alphabet", "rules"},
    "sturmian": {"model", "cf", "alphabet"},
    "periodic": {"model", "alphabet", "orbits"},
    "union": {"model", "parts"},
    "marked": {"model", "base", "mark"},
    "doubling": {"model", "n_max"},
}


def _expect(cond: bool, message: str, loc: str) -> None:
    if not cond:
        raise SpecError(message, loc)


def _parse_alphabet(doc: dict, loc: str) -> Alphabet:
    syms = doc.get("alphabet")
    _expect(isinstance(syms, list) and syms, "alphabet must be a nonempty array",
            loc + "/alphabet")
    _expect(all(isinstance(s, str) for s in syms), "alphabet entries must be strings",
            loc + "/alphabet")
    try:
        return Alphabet(syms)
    except ValueError as exc:
        raise SpecError(str(exc), loc + "/alphabet") from None


def _parse_word(alphabet: Alphabet, text, loc: str) -> Word:
    _expect(isinstance(text, str), "word must be a string", loc)
    try:
        return alphabet.word(text)
    except ValueError as exc:
        raise SpecError(str(exc), loc) from None


def spec_from_json(doc, loc: str = "") -> ShiftSpec:
    """Parse and validate a spec document; rejects unknown fields."""
    _expect(isinstance(doc, dict), "spec must be a JSON object", loc)
    model = doc.get("model")
    _expect(model in _KNOWN_FIELDS,
            f"model must be one of {sorted(_KNOWN_FIELDS)}", loc + "/model")
    extra = set(doc) - _KNOWN_FIELDS[model]
    if extra:
        raise SpecError(f"unknown field {sorted(extra)[0]!r} for model {model}",
                        f"{loc}/{sorted(extra)[0]}")

    if model == "sft":
        alphabet = _parse_alphabet(doc, loc)
        forb = doc.get("forbidden", [])
        _expect(isinstance(forb, list), "forbidden must be an array", loc + "/forbidden")
        words = frozenset(_parse_word(alphabet, w, f"{loc}/forbidden/{i}")
                          for i, w in enumerate(forb))
        spec: ShiftSpec = Sft(alphabet, words)
    elif model == "substitution":
        alphabet = _parse_alphabet(doc, loc)
        rules_doc = doc.get("rules")
        _expect(isinstance(rules_doc, dict), "rules must be an object", loc + "/rules")
        _expect(set(rules_doc) == set(alphabet.symbols),
                "rules must cover exactly the alphabet", loc + "/rules")
        rules = tuple((a, _parse_word(alphabet, rules_doc[a], f"{loc}/rules/{a}"))
                      for a in alphabet.symbols)
        spec = Substitution(alphabet, rules)
    elif model == "sturmian":
        cf = doc.get("cf")
        _expect(isinstance(cf, dict), "cf must be an object", loc + "/cf")
        _expect(set(cf) <= {"pre", "period"}, "cf allows only pre and period",
                loc + "/cf")
        pre = cf.get("pre", [])
        period = cf.get("period")
        _expect(isinstance(pre, list), "cf.pre must be an array", loc + "/cf/pre")
        _expect(isinstance(period, list) and period,
                "cf.period must be a nonempty array", loc + "/cf/period")
        if "alphabet" in doc:
            alphabet = _parse_alphabet(doc, loc)
        else:
            alphabet = Alphabet(("0", "1"))
        spec = Sturmian(tuple(pre), tuple(period), alphabet)
    elif model == "periodic":
        alphabet = _parse_alphabet(doc, loc)
        orbits_doc = doc.get("orbits")
        _expect(isinstance(orbits_doc, list) and orbits_doc,
                "orbits must be a nonempty array", loc + "/orbits")
        orbits = tuple(_parse_word(alphabet, w, f"{loc}/orbits/{i}")
                       for i, w in enumerate(orbits_doc))
        spec = Periodic(alphabet, orbits)
    elif model == "union":
        parts_doc = doc.get("parts")
        _expect(isinstance(parts_doc, list) and parts_doc,
                "parts must be a nonempty array", loc + "/parts")
        parts = tuple(spec_from_json(p, f"{loc}/parts/{i}")
                      for i, p in enumerate(parts_doc))
        spec = DisjointUnion(parts)
    elif model == "marked":
        _expect("base" in doc, "marked needs a base spec", loc + "/base")
        base = spec_from_json(doc["base"], loc + "/base")
        mark = doc.get("mark")
        if mark is None:
            mark = _fresh_mark(alphabet_of(base))
        _expect(isinstance(mark, str), "mark must be a string", loc + "/mark")
        spec = Marked(base, mark)
    else:  # doubling
        n_max = doc.get("n_max")
        _expect(isinstance(n_max, int), "n_max must be an integer", loc + "/n_max")
        spec = Doubling(n_max)

    validate_spec(spec, loc)
    return spec


def spec_to_json(spec: ShiftSpec) -> dict:
    if isinstance(spec, Sft):
        fmt = spec.alphabet.format
        return {"model": "sft", "alphabet": list(spec.alphabet.symbols),
                "forbidden": sorted(fmt(w) for w in spec.forbidden)}
    if isinstance(spec, Substitution):
        fmt = spec.alphabet.format
        return {"model": "substitution", "alphabet": list(spec.alphabet.symbols),
                "rules": {a: fmt(w) for a, w in spec.rules}}
    if isinstance(spec, Sturmian):
        doc = {"model": "sturmian",
               "cf": {"pre": list(spec.cf_pre), "period": list(spec.cf_period)}}
        if spec.alphabet.symbols != ("0", "1"):
            doc["alphabet"] = list(spec.alphabet.symbols)
        return doc
    if isinstance(spec, Periodic):
        fmt = spec.alphabet.format
        return {"model": "periodic", "alphabet": list(spec.alphabet.symbols),
                "orbits": [fmt(w) for w in spec.orbits]}
    if isinstance(spec, DisjointUnion):
        return {"model": "union", "parts": [spec_to_json(p) for p in spec.parts]}
    if isinstance(spec, Marked):
        return {"model": "marked", "base": spec_to_json(spec.base), "mark": spec.mark}
    if isinstance(spec, Doubling):
        return {"model": "doubling", "n_max": spec.n_max}
    raise TypeError(f"not a shift spec: {spec!r}")


def load_spec(path) -> ShiftSpec:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SpecError(f"not valid JSON: {exc}") from None
    return spec_from_json(doc)
