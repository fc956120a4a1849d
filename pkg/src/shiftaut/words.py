"""Alphabets, finite words over them, and depth-limited language tables.

A word is a plain tuple of symbol tokens.  A LanguageTable holds, for one
subshift, the complete sets L_1..L_max_n of words of each length, in a
fixed canonical order, and answers extension queries against them.  All
tables are immutable once built; every query beyond the stored depth
raises instead of guessing.
"""

from __future__ import annotations

import bisect
from typing import Iterable, Iterator, Mapping, Optional

Word = tuple  # tuple of symbol tokens (strings)


class LanguageError(Exception):
    """Base class for language-table query errors."""


class DepthExceeded(LanguageError):
    """The query needs words longer than the table holds."""


class NotInLanguage(LanguageError):
    """The queried word does not occur in the table at its length."""


# characters that would collide with the table/spec file formats
_RESERVED_CHARS = set(".,\t\n\r ")


class Alphabet:
    """An ordered set of distinct symbol tokens.

    Construction order is the canonical order used everywhere: words sort
    by their tuples of symbol indices, never by raw string comparison.
    Tokens may be several characters wide (like "0_2"); words over such an
    alphabet render dotted ("0_2.1_2") while single-character alphabets
    render words by plain concatenation ("010").
    """

    __slots__ = ("symbols", "dotted", "_index")

    def __init__(self, symbols: Iterable[str]):
        syms = tuple(str(s) for s in symbols)
        if not syms:
            raise ValueError("alphabet is empty")
        if len(set(syms)) != len(syms):
            raise ValueError(f"alphabet has duplicate symbols: {syms}")
        for s in syms:
            if not s or _RESERVED_CHARS & set(s):
                raise ValueError(f"bad symbol token {s!r}")
        self.symbols = syms
        self.dotted = any(len(s) > 1 for s in syms)
        self._index = {s: i for i, s in enumerate(syms)}

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __contains__(self, token: object) -> bool:
        return token in self._index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __repr__(self) -> str:
        return "Alphabet(%s)" % ",".join(self.symbols)

    def index(self, token: str) -> int:
        try:
            return self._index[token]
        except KeyError:
            raise ValueError(f"symbol {token!r} not in alphabet {self.symbols}") from None

    def key(self, word: Word) -> tuple:
        """Canonical sort key of a word (tuple of symbol indices)."""
        idx = self._index
        return tuple(idx[s] for s in word)

    def word(self, text) -> Word:
        """Parse a word from a string (dotted or plain) or an iterable of tokens."""
        if isinstance(text, str):
            if text == "":
                return ()
            parts = text.split(".") if self.dotted else list(text)
        else:
            parts = list(text)
        w = tuple(parts)
        for s in w:
            if s not in self._index:
                raise ValueError(f"symbol {s!r} not in alphabet {self.symbols}")
        return w

    def format(self, word: Word) -> str:
        return ".".join(word) if self.dotted else "".join(word)


class LanguageTable:
    """The sets L_1..L_max_n of words occurring in a subshift.

    Construction checks factor closure (chopping a symbol off either end
    of a stored word lands in the level below), bi-extendability (every
    word below the top level extends by at least one symbol on each side),
    and that the per-level counts never decrease.

    ``sft_window`` is set by generators that know the language is finite
    type: a window length w such that a word belongs to the language
    exactly when all of its length-w windows do.  It enables exact (rather
    than horizon-stamped) endomorphism certification downstream.
    """

    def __init__(self, alphabet: Alphabet,
                 levels: Mapping[int, Iterable[Word]],
                 sft_window: Optional[int] = None):
        if not levels:
            raise ValueError("no levels given")
        max_n = max(levels)
        if min(levels) != 1 or set(levels) != set(range(1, max_n + 1)):
            raise ValueError("levels must cover 1..max_n without gaps")
        self.alphabet = alphabet
        self.max_n = max_n
        self.sft_window = sft_window
        key = alphabet.key
        self._levels: dict[int, tuple] = {}
        self._sets: dict[int, frozenset] = {}
        self._keys: dict[int, list] = {}
        for n in range(1, max_n + 1):
            words = sorted(set(levels[n]), key=key)
            if not words:
                raise ValueError(f"level {n} is empty")
            for w in words:
                if len(w) != n:
                    raise ValueError(f"word {w!r} has wrong length for level {n}")
                for s in w:
                    if s not in alphabet:
                        raise ValueError(f"word {w!r} uses symbol outside alphabet")
            self._levels[n] = tuple(words)
            self._sets[n] = frozenset(words)
            self._keys[n] = [key(w) for w in words]
        self._check_structure()

    def _check_structure(self) -> None:
        for n in range(2, self.max_n + 1):
            below = self._sets[n - 1]
            for w in self._levels[n]:
                if w[:-1] not in below or w[1:] not in below:
                    raise ValueError(f"level {n} not factor-closed at {w!r}")
        for n in range(1, self.max_n):
            above = self._sets[n + 1]
            for w in self._levels[n]:
                if not any(w + (a,) in above for a in self.alphabet):
                    raise ValueError(f"{w!r} has no right extension at level {n + 1}")
                if not any((a,) + w in above for a in self.alphabet):
                    raise ValueError(f"{w!r} has no left extension at level {n + 1}")
        counts = [len(self._levels[n]) for n in range(1, self.max_n + 1)]
        if any(a > b for a, b in zip(counts, counts[1:])):
            raise ValueError("word counts decrease with length")

    # -- queries ---------------------------------------------------------

    def level(self, n: int) -> tuple:
        """All words of length n, canonically ordered.  Level 0 is {epsilon}."""
        if n == 0:
            return ((),)
        if not 1 <= n <= self.max_n:
            raise DepthExceeded(f"level {n} beyond table depth {self.max_n}")
        return self._levels[n]

    def level_set(self, n: int) -> frozenset:
        if n == 0:
            return frozenset({()})
        if not 1 <= n <= self.max_n:
            raise DepthExceeded(f"level {n} beyond table depth {self.max_n}")
        return self._sets[n]

    def count(self, n: int) -> int:
        """P(n), the number of words of length n."""
        return len(self.level(n))

    def contains(self, w: Word) -> bool:
        if len(w) > self.max_n:
            raise DepthExceeded(f"word of length {len(w)} beyond table depth {self.max_n}")
        if len(w) == 0:
            return True
        return w in self._sets[len(w)]

    def require(self, w: Word) -> None:
        if not self.contains(w):
            raise NotInLanguage(f"{self.alphabet.format(w)!r} not in language")

    def right_extensions(self, w: Word) -> set:
        """Symbols a with w+a in the language."""
        if len(w) >= self.max_n:
            raise DepthExceeded(f"cannot extend length {len(w)} at depth {self.max_n}")
        self.require(w)
        above = self._sets[len(w) + 1]
        return {a for a in self.alphabet if w + (a,) in above}

    def left_extensions(self, w: Word) -> set:
        """Symbols a with a+w in the language."""
        if len(w) >= self.max_n:
            raise DepthExceeded(f"cannot extend length {len(w)} at depth {self.max_n}")
        self.require(w)
        above = self._sets[len(w) + 1]
        return {a for a in self.alphabet if (a,) + w in above}

    def right_extension_count(self, w: Word, m: int) -> int:
        """Number of words of length |w|+m having w as leftmost factor."""
        if m < 0:
            raise ValueError("m must be >= 0")
        if len(w) + m > self.max_n:
            raise DepthExceeded(f"length {len(w) + m} beyond table depth {self.max_n}")
        self.require(w)
        if m == 0:
            return 1
        keys = self._keys[len(w) + m]
        kw = self.alphabet.key(w)
        if not kw:  # the empty word prefixes everything
            return len(keys)
        lo = bisect.bisect_left(keys, kw)
        hi = bisect.bisect_left(keys, kw[:-1] + (kw[-1] + 1,))
        return hi - lo

    def extends_uniquely_right(self, w: Word, m: int) -> bool:
        """True iff exactly one word of length |w|+m extends w to the right."""
        return self.right_extension_count(w, m) == 1

    # -- serialization ---------------------------------------------------

    def to_text(self) -> str:
        """Render the table in the cache file format (bit-exact, sorted)."""
        fmt = self.alphabet.format
        lines = ["alphabet\t%s" % ",".join(self.alphabet.symbols),
                 "max_n\t%d" % self.max_n]
        for n in range(1, self.max_n + 1):
            for w in self._levels[n]:
                lines.append("%d\t%s" % (n, fmt(w)))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, sft_window: Optional[int] = None) -> "LanguageTable":
        lines = [ln for ln in text.split("\n") if ln]
        if len(lines) < 2 or not lines[0].startswith("alphabet\t") \
                or not lines[1].startswith("max_n\t"):
            raise ValueError("bad table file header")
        alphabet = Alphabet(lines[0].split("\t", 1)[1].split(","))
        max_n = int(lines[1].split("\t", 1)[1])
        levels: dict[int, list] = {n: [] for n in range(1, max_n + 1)}
        for ln in lines[2:]:
            n_text, word_text = ln.split("\t", 1)
            levels[int(n_text)].append(alphabet.word(word_text))
        return cls(alphabet, levels, sft_window=sft_window)

    def write(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_text())

    @classmethod
    def read(cls, path, sft_window: Optional[int] = None) -> "LanguageTable":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_text(fh.read(), sft_window=sft_window)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, LanguageTable)
                and self.alphabet == other.alphabet
                and self._levels == other._levels)

    def __repr__(self) -> str:
        return "LanguageTable(|A|=%d, max_n=%d, P=%s)" % (
            len(self.alphabet), self.max_n,
            [len(self._levels[n]) for n in range(1, self.max_n + 1)])
