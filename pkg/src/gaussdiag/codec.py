"""Gauss codes, chord diagrams and their dihedral equivalence.

A Gauss code is a double occurrence word: every symbol appears exactly twice.
Internally symbols are 0-based integers in first-occurrence order, so
``"12334124"`` is stored as ``(0, 1, 2, 2, 3, 0, 1, 3)``.  The original token
names are kept on the side (``labels``) for display only and never take part in
equality or hashing.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterator, Optional, Sequence, Tuple

Word = Tuple[int, ...]


class GaussCodeError(ValueError):
    """Raised for text or words that do not describe a Gauss code."""


class EmptyInput(GaussCodeError):
    pass


class NotDoubleOccurrence(GaussCodeError):
    pass


class OddLength(NotDoubleOccurrence):
    pass


def relabel(word: Sequence[Hashable]) -> Tuple[Word, list]:
    """Relabel ``word`` in first-occurrence order.

    Returns the relabeled word and the list of original symbols indexed by
    their new id.
    """
    ids: dict = {}
    out = []
    for s in word:
        if s not in ids:
            ids[s] = len(ids)
        out.append(ids[s])
    return tuple(out), list(ids)


def _check_double_occurrence(word: Sequence[Hashable]) -> None:
    counts = Counter(word)
    bad = sorted((str(s) for s, c in counts.items() if c != 2))
    if bad:
        cls = OddLength if len(word) % 2 else NotDoubleOccurrence
        raise cls(f"symbols not occurring exactly twice: {', '.join(bad)}")


@dataclass(frozen=True)
class GaussCode:
    """A canonical double occurrence word on symbols ``0..n-1``."""

    symbols: Word
    labels: Optional[Tuple[str, ...]] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        symbols = tuple(int(s) for s in self.symbols)
        object.__setattr__(self, "symbols", symbols)
        _check_double_occurrence(symbols)
        if relabel(symbols)[0] != symbols:
            raise GaussCodeError("symbols are not in first-occurrence order")
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != self.n:
                raise GaussCodeError("need exactly one label per symbol")
            object.__setattr__(self, "labels", labels)

    @classmethod
    def from_word(cls, word: Sequence[Hashable], labels=None) -> "GaussCode":
        """Build a code from an arbitrary double occurrence word.

        ``labels`` maps original symbols to display names; by default the
        original symbols are shown only when the word was not already made of
        canonical integers.
        """
        word = list(word)
        _check_double_occurrence(word)
        canon, originals = relabel(word)
        if labels is not None:
            shown = tuple(str(labels[s]) for s in originals)
        elif all(isinstance(s, int) for s in originals):
            shown = None if list(originals) == list(range(len(originals))) else tuple(
                str(s + 1) for s in originals)
        else:
            shown = tuple(str(s) for s in originals)
        return cls(canon, shown)

    @property
    def n(self) -> int:
        return len(self.symbols) // 2

    @property
    def display_labels(self) -> Tuple[str, ...]:
        if self.labels is not None:
            return self.labels
        return tuple(str(i + 1) for i in range(self.n))

    def positions(self) -> list:
        """``positions()[c] == (p, q)`` with ``p < q`` the two places of symbol ``c``."""
        pos = [[] for _ in range(self.n)]
        for i, s in enumerate(self.symbols):
            pos[s].append(i)
        return [tuple(p) for p in pos]

    def __len__(self):
        return len(self.symbols)

    def __str__(self):
        return format_code(self)

    def to_json(self) -> dict:
        return {"n": self.n, "code": list(self.symbols)}

    @classmethod
    def from_json(cls, obj) -> "GaussCode":
        if isinstance(obj, str):
            obj = json.loads(obj)
        code = cls(tuple(obj["code"]))
        if code.n != obj["n"]:
            raise GaussCodeError("'n' does not match the code length")
        return code


def label_order(code: GaussCode) -> list:
    """Symbol ids sorted by display label, numerically when every label is an integer."""
    names = code.display_labels
    try:
        keys = [int(x) for x in names]
    except ValueError:
        keys = list(names)
    return sorted(range(code.n), key=lambda i: (keys[i], i))


_SEPARATORS = re.compile(r"[\s,]+")


def tokenize(text: str) -> list:
    text = text.strip()
    if not text:
        return []
    if _SEPARATORS.search(text):
        return [t for t in _SEPARATORS.split(text) if t]
    return list(text)


def parse_code(text: str) -> GaussCode:
    """Parse ``"12334124"``, ``"a b a b"`` or ``"0,7,8,..."`` into a canonical code.

    A string without separators is read one character per symbol.

    >>> parse_code("12334124").symbols
    (0, 1, 2, 2, 3, 0, 1, 3)
    """
    tokens = tokenize(text)
    if not tokens:
        raise EmptyInput("empty Gauss code")
    return GaussCode.from_word(tokens)


def format_code(code: GaussCode, labels: bool = True) -> str:
    names = code.display_labels if labels else tuple(str(i) for i in range(code.n))
    tokens = [names[s] for s in code.symbols]
    if all(len(t) == 1 for t in names):
        return "".join(tokens)
    return " ".join(tokens)


@dataclass(frozen=True)
class ChordDiagram:
    """Chords on ``2n`` circle positions; ``endpoints[c] = (p, q)`` with ``p < q``."""

    endpoints: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        eps = tuple(tuple(sorted((int(p), int(q)))) for p, q in self.endpoints)
        object.__setattr__(self, "endpoints", eps)
        used = sorted(p for e in eps for p in e)
        if used != list(range(2 * len(eps))):
            raise GaussCodeError("endpoints are not a perfect matching of 0..2n-1")

    @property
    def n(self) -> int:
        return len(self.endpoints)

    def word(self) -> Word:
        w = [0] * (2 * self.n)
        for c, (p, q) in enumerate(self.endpoints):
            w[p] = w[q] = c
        return tuple(w)

    def to_code(self) -> GaussCode:
        return GaussCode.from_word(self.word())


def to_diagram(code: GaussCode) -> ChordDiagram:
    return ChordDiagram(tuple(code.positions()))


def apply_symmetry(d: ChordDiagram, rot: int, reflect: bool = False,
                   canonicalize: bool = False) -> ChordDiagram:
    """Move every position ``x`` to ``x - rot`` (mod 2n), then mirror if asked.

    Chord indices are preserved unless ``canonicalize`` is set, in which case
    chords are renumbered by their first endpoint.
    """
    size = 2 * d.n
    if size and not 0 <= rot < size:
        raise ValueError(f"rotation must lie in [0, {size})")

    def move(x):
        x = (x - rot) % size
        return size - 1 - x if reflect else x

    out = ChordDiagram(tuple((move(p), move(q)) for p, q in d.endpoints))
    if canonicalize:
        out = ChordDiagram(tuple(sorted(out.endpoints)))
    return out


def _compare_image(word: Word, start: int, step: int) -> int:
    """Sign of (relabeled dihedral image) - word, lexicographically."""
    size = len(word)
    ids: dict = {}
    pos = start
    for i in range(size):
        s = word[pos]
        c = ids.get(s)
        if c is None:
            c = ids[s] = len(ids)
        if c != word[i]:
            return c - word[i]
        pos = (pos + step) % size
    return 0


def _image(word: Word, start: int, step: int) -> Word:
    size = len(word)
    return relabel([word[(start + step * i) % size] for i in range(size)])[0]


def dihedral_images(word: Word) -> Iterator[Word]:
    """All ``4n`` rotations/reflections of a word, each relabeled canonically."""
    for start in range(len(word)):
        yield _image(word, start, 1)
        yield _image(word, start, -1)


def is_class_representative(word: Word) -> bool:
    """True if a canonical ``word`` is the minimum of its dihedral orbit."""
    for start in range(len(word)):
        if _compare_image(word, start, 1) < 0 or _compare_image(word, start, -1) < 0:
            return False
    return True


def canonical_key(d) -> GaussCode:
    """Lexicographically least relabeled code over all dihedral images.

    Accepts a ``ChordDiagram`` or a ``GaussCode``; two diagrams get equal keys
    exactly when they differ by rotation, reflection and relabeling.
    """
    word = d.word() if isinstance(d, ChordDiagram) else d.symbols
    if not word:
        return GaussCode(())
    return GaussCode(min(dihedral_images(tuple(word))))


def first_partner_choices(n: int, even_only: bool = False) -> list:
    """Positions chord 0 may pair with; each is an independent work unit."""
    return [q for q in range(1, 2 * n) if not even_only or q % 2 == 1]


def iter_canonical_words(n: int, even_only: bool = False,
                         first_partner: Optional[int] = None) -> Iterator[Word]:
    """Every canonical code on ``n`` chords, i.e. all ``(2n-1)!!`` matchings.

    With ``even_only`` only words where each chord spans an odd distance (so
    an even number of symbols sits between the two occurrences) are produced.
    """
    size = 2 * n
    word = [-1] * size

    def place(label, start):
        while start < size and word[start] != -1:
            start += 1
        if start == size:
            yield tuple(word)
            return
        word[start] = label
        if label == 0 and first_partner is not None:
            partners = [first_partner]
        else:
            partners = range(start + 1, size, 2 if even_only else 1)
        for q in partners:
            if word[q] == -1:
                word[q] = label
                yield from place(label + 1, start + 1)
                word[q] = -1
        word[start] = -1

    if n == 0:
        yield ()
        return
    yield from place(0, 0)


def enumerate_canonical(n: int,
                        visitor: Optional[Callable[[GaussCode], None]] = None,
                        prefilter: Optional[Callable[[Word], bool]] = None,
                        even_only: bool = False,
                        first_partner: Optional[int] = None) -> int:
    """Visit one representative (its canonical key) per equivalence class.

    ``prefilter`` sees the raw canonical word before the orbit-minimality test
    and must be constant on classes.  Returns the number of classes visited.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    count = 0
    for word in iter_canonical_words(n, even_only, first_partner):
        if prefilter is not None and not prefilter(word):
            continue
        if not is_class_representative(word):
            continue
        count += 1
        if visitor is not None:
            visitor(GaussCode(word))
    return count
