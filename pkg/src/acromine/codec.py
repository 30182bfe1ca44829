"""Encoding of acronyms against the initial letters of nearby words.

A code locates every letter of an acronym inside one context window: a
direction sign ('+' when the acronym precedes its definition, '-' when it
follows), the distance to the first definition word, offsets between the
following definition words (always moving forward through the text), and the
number of leading letters taken from each word (at most six).  Letters taken
from a word are always a prefix, words are used in document order, and a
definition never straddles the acronym.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tokens import CandidateSite, WINDOW_SIZE

MAX_LETTERS_PER_WORD = 6

ACRONYM_FIRST = "+"
DEFINITION_FIRST = "-"


class IllegalCode(ValueError):
    """A code that references outside its window or mismatches the words."""


@dataclass(frozen=True)
class AcronymCode:
    """Four-component location of an acronym's letters in its context.

    direction: '+' (acronym first) or '-' (definition first).
    first_distance: words from the acronym to the first definition word.
    word_offsets: forward offset of each later definition word from the
        previous one; empty for a one-word definition.
    letter_counts: leading letters taken from each definition word; their sum
        is the acronym length.
    """

    direction: str
    first_distance: int
    word_offsets: tuple[int, ...]
    letter_counts: tuple[int, ...]

    def __post_init__(self):
        if self.direction not in (ACRONYM_FIRST, DEFINITION_FIRST):
            raise IllegalCode(f"bad direction {self.direction!r}")
        if self.first_distance < 1:
            raise IllegalCode("first_distance must be >= 1")
        if len(self.letter_counts) != len(self.word_offsets) + 1:
            raise IllegalCode("need exactly one letter count per word")
        if any(o < 1 for o in self.word_offsets):
            raise IllegalCode("word offsets must be >= 1")
        if any(not 1 <= c <= MAX_LETTERS_PER_WORD for c in self.letter_counts):
            raise IllegalCode(f"letter counts must be 1..{MAX_LETTERS_PER_WORD}")
        if self.max_reach() > WINDOW_SIZE:
            raise IllegalCode("code references beyond the 16-word window")

    def num_words(self) -> int:
        return len(self.letter_counts)

    def distances(self) -> list[int]:
        """Window distance of each definition word, in document order.

        With the acronym first ('+') the words move away from the acronym, so
        distances increase; with the definition first ('-') they move toward
        it, so distances decrease (and must stay >= 1).
        """
        out = [self.first_distance]
        for off in self.word_offsets:
            step = off if self.direction == ACRONYM_FIRST else -off
            out.append(out[-1] + step)
        if out[-1] < 1:
            raise IllegalCode("offsets walk past the acronym")
        return out

    def max_reach(self) -> int:
        return max(self.distances())


@dataclass(frozen=True)
class DefinitionSpan:
    """The words a code references, as document token indices plus text."""

    word_indices: tuple[int, ...]
    text: str


def _window_in_document_order(site: CandidateSite, direction: str):
    """(distance, word) pairs of one window, ordered as they appear in text."""
    if direction == DEFINITION_FIRST:
        n = len(site.before)
        return [(n - i, site.before[n - 1 - i].text) for i in range(n)]
    return [(i + 1, tok.text) for i, tok in enumerate(site.after)]


def enumerate_codes(site: CandidateSite) -> list[AcronymCode]:
    """All legal codes for a site, both directions; empty when none exist.

    Depth-first search over (word, prefix length) choices, pruned as soon as
    a prefix letter mismatches the remaining acronym.
    """
    acronym = site.acronym_text.lower()
    out = []
    if not acronym:
        return out
    for direction in (DEFINITION_FIRST, ACRONYM_FIRST):
        words = _window_in_document_order(site, direction)
        texts = [w.lower() for _, w in words]
        dists = [d for d, _ in words]

        def walk(word_i, acro_i, used, direction=direction, texts=texts, dists=dists):
            if acro_i == len(acronym):
                distances = [dists[j] for j, _ in used]
                offs = tuple(abs(b - a) for a, b in zip(distances, distances[1:]))
                counts = tuple(k for _, k in used)
                out.append(AcronymCode(direction, distances[0], offs, counts))
                return
            for j in range(word_i, len(texts)):
                word = texts[j]
                limit = min(MAX_LETTERS_PER_WORD, len(word), len(acronym) - acro_i)
                for k in range(1, limit + 1):
                    if word[k - 1] != acronym[acro_i + k - 1]:
                        break
                    walk(j + 1, acro_i + k, used + [(j, k)])

        walk(0, 0, [])
    return out


def realize(code: AcronymCode, site: CandidateSite) -> DefinitionSpan:
    """Resolve a code back to the words it references.

    Raises IllegalCode when a reference leaves the window or the recovered
    letter prefixes do not spell the acronym (case-insensitively).
    """
    window = site.before if code.direction == DEFINITION_FIRST else site.after
    side = -1 if code.direction == DEFINITION_FIRST else 1
    tokens = []
    indices = []
    for dist in code.distances():
        if not 1 <= dist <= len(window):
            raise IllegalCode(
                f"code references word {dist} of a {len(window)}-word window"
            )
        tokens.append(window[dist - 1])
        indices.append(site.token_index + side * dist)
    recovered = "".join(
        tok.text[:k] for tok, k in zip(tokens, code.letter_counts)
    )
    if recovered.lower() != site.acronym_text.lower():
        raise IllegalCode(
            f"prefixes spell {recovered!r}, not {site.acronym_text!r}"
        )
    if any(len(tok.text) < k for tok, k in zip(tokens, code.letter_counts)):
        raise IllegalCode("letter count exceeds word length")
    return DefinitionSpan(tuple(indices), " ".join(t.text for t in tokens))


def code_to_display(code: AcronymCode) -> str:
    """Render a code in the canonical textual form, e.g. "- 4 <3> <4,3>".

    One-word definitions render their empty offset list as "<>".
    """
    offs = ",".join(str(o) for o in code.word_offsets)
    counts = ",".join(str(c) for c in code.letter_counts)
    return f"{code.direction} {code.first_distance} <{offs}> <{counts}>"


def parse_display(text: str) -> AcronymCode:
    """Inverse of code_to_display; raises IllegalCode on malformed input."""
    parts = text.split()
    if len(parts) != 4:
        raise IllegalCode(f"cannot parse code {text!r}")
    sign, dist, offs, counts = parts

    def numbers(chunk: str) -> tuple[int, ...]:
        if not (chunk.startswith("<") and chunk.endswith(">")):
            raise IllegalCode(f"cannot parse code {text!r}")
        inner = chunk[1:-1]
        return tuple(int(x) for x in inner.split(",")) if inner else ()

    try:
        return AcronymCode(sign, int(dist), numbers(offs), numbers(counts))
    except ValueError as exc:
        raise IllegalCode(f"cannot parse code {text!r}") from exc


def canonical_order_key(code: AcronymCode):
    """Deterministic tie-break order: '-' before '+', then nearer and shorter."""
    return (
        0 if code.direction == DEFINITION_FIRST else 1,
        code.first_distance,
        code.word_offsets,
        code.letter_counts,
    )
