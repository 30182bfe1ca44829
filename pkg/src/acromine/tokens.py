"""Word tokenization and candidate-acronym detection.

Words are maximal runs of ASCII letters; everything else (hyphens, slashes,
digits, punctuation, non-ASCII bytes) is a boundary and digit runs produce no
token.  Candidates are fully upper-case tokens of 2..10 letters, each carrying
its 16-word context windows on both sides.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

WINDOW_SIZE = 16
MIN_ACRONYM_LEN = 2
MAX_ACRONYM_LEN = 10

_WORD_RE = re.compile(r"[A-Za-z]+")


@dataclass(frozen=True)
class Token:
    """A run of letters with its (start, end) character span in the source."""

    text: str
    span: tuple[int, int]

    @property
    def start(self) -> int:
        return self.span[0]

    @property
    def end(self) -> int:
        return self.span[1]


class TokenStream:
    """Tokens of one document, in order, plus the raw text they came from."""

    def __init__(self, raw: str, tokens: list[Token]):
        self.raw = raw
        self.tokens = tokens

    def __len__(self) -> int:
        return len(self.tokens)

    def __getitem__(self, i):
        return self.tokens[i]

    def __iter__(self):
        return iter(self.tokens)


@dataclass
class CandidateSite:
    """An upper-case token with up to 16 context words on each side.

    ``before`` and ``after`` are nearest-first, so ``before[0]`` is the word
    immediately preceding the acronym and ``after[0]`` the one immediately
    following.  Windows are shorter than 16 only at document boundaries.
    """

    token_index: int
    acronym_text: str
    before: list[Token] = field(default_factory=list)
    after: list[Token] = field(default_factory=list)
    span: tuple[int, int] = (0, 0)


def tokenize(raw_text: str) -> TokenStream:
    """Split text into letter-run tokens, keeping source character spans."""
    tokens = [Token(m.group(), (m.start(), m.end())) for m in _WORD_RE.finditer(raw_text)]
    return TokenStream(raw_text, tokens)


def is_candidate_text(text: str) -> bool:
    return (
        MIN_ACRONYM_LEN <= len(text) <= MAX_ACRONYM_LEN
        and text.isalpha()
        and text == text.upper()
    )


def find_candidates(stream: TokenStream) -> list[CandidateSite]:
    """One site per fully upper-case token of 2..10 letters, in stream order.

    No reject list is applied: words like TABLE or FIGURE are candidates too
    and are left for the classifier to dismiss.
    """
    tokens = stream.tokens
    sites = []
    for i, tok in enumerate(tokens):
        if not is_candidate_text(tok.text):
            continue
        before = list(reversed(tokens[max(0, i - WINDOW_SIZE) : i]))
        after = tokens[i + 1 : i + 1 + WINDOW_SIZE]
        sites.append(CandidateSite(i, tok.text, before, after, tok.span))
    return sites


def window_words(site: CandidateSite, direction: str) -> list[str]:
    """Texts of one context window, nearest-first.  direction is '-' or '+'.

    '-' selects the preceding window (where a definition that comes before
    the acronym lives), '+' the following one.
    """
    if direction == "-":
        return [t.text for t in site.before]
    if direction == "+":
        return [t.text for t in site.after]
    raise ValueError(f"direction must be '-' or '+', got {direction!r}")
