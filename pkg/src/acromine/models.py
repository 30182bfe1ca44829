"""Zero-order frequency models and the bit costs of acronym codes.

Each code component (direction, first-word distance, later-word offsets,
letters per word, plus a definition word count so a decoder knows where the
word list ends) gets its own zero-order model with a method-D escape:

    P(s)   = (2 c(s) - 1) / (2 n)      for a symbol seen c(s) times
    P(esc) = d / (2 n)                 d = distinct symbols seen, n = total

A novel symbol costs the escape plus a uniform choice among the unseen part
of the domain.  Costs are in bits (base-2 information content).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .codec import ACRONYM_FIRST, AcronymCode

BitCost = float

# symbol domains: window distances, prefix letters, definition word count
DISTANCE_DOMAIN = (1, 16)
LETTERS_DOMAIN = (1, 6)
WORD_COUNT_DOMAIN = (1, 10)
DIRECTION_DOMAIN = (0, 1)

DIRECTION_SYMBOLS = {"-": 0, "+": 1}


class EmptyTraining(ValueError):
    """Raised when a model is asked to train on no codes at all."""


class OutOfDomain(ValueError):
    """Raised when a symbol lies outside a model's declared domain."""


@dataclass
class ZeroOrderModel:
    """Counts over a small integer domain, with escape for novel symbols."""

    domain: tuple[int, int]
    counts: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def distinct(self) -> int:
        return len(self.counts)

    def domain_size(self) -> int:
        lo, hi = self.domain
        return hi - lo + 1

    def observe(self, symbol: int, weight: int = 1) -> None:
        self._check(symbol)
        self.counts[symbol] = self.counts.get(symbol, 0) + weight

    def _check(self, symbol: int) -> None:
        lo, hi = self.domain
        if not lo <= symbol <= hi:
            raise OutOfDomain(f"symbol {symbol} outside domain {lo}..{hi}")

    def probability(self, symbol: int) -> float:
        """Coding probability of a domain symbol, escape fallback included."""
        self._check(symbol)
        n = self.total
        if n == 0:
            return 1.0 / self.domain_size()
        d = self.distinct
        c = self.counts.get(symbol, 0)
        if c:
            return (2 * c - 1) / (2 * n)
        unseen = self.domain_size() - d
        return d / (2 * n) / unseen

    def cost(self, symbol: int) -> BitCost:
        return -math.log2(self.probability(symbol))

    def escape_probability(self) -> float:
        n = self.total
        return self.distinct / (2 * n) if n else 1.0

    def coding_weights(self) -> tuple[list[tuple[int, int]], int]:
        """Integer weight layout realizing the probabilities above exactly.

        Returns (weights in ascending symbol order over the whole domain plus
        a trailing (None-escape) entry when no symbol is unseen, total).  Seen
        symbols weigh (2c-1)*U and unseen ones d, over a total of 2nU, so the
        layout is exact for both the seen and the escape-then-uniform cases.
        """
        lo, hi = self.domain
        n = self.total
        if n == 0:
            return [(s, 1) for s in range(lo, hi + 1)], self.domain_size()
        d = self.distinct
        unseen = self.domain_size() - d
        scale = unseen if unseen else 1
        weights = []
        for s in range(lo, hi + 1):
            c = self.counts.get(s, 0)
            weights.append((s, (2 * c - 1) * scale if c else d))
        total = 2 * n * scale
        if unseen == 0:
            # dead escape region keeps seen probabilities at (2c-1)/(2n)
            weights.append((None, d))
        return weights, total


def symbol_cost(model: ZeroOrderModel, symbol: int) -> BitCost:
    return model.cost(symbol)


@dataclass
class ComponentModels:
    """The trained per-component models used to cost an acronym code."""

    direction: ZeroOrderModel
    first_distance: ZeroOrderModel
    word_offset: ZeroOrderModel
    letter_count: ZeroOrderModel
    word_count: ZeroOrderModel

    @classmethod
    def empty(cls) -> "ComponentModels":
        return cls(
            direction=ZeroOrderModel(DIRECTION_DOMAIN),
            first_distance=ZeroOrderModel(DISTANCE_DOMAIN),
            word_offset=ZeroOrderModel(DISTANCE_DOMAIN),
            letter_count=ZeroOrderModel(LETTERS_DOMAIN),
            word_count=ZeroOrderModel(WORD_COUNT_DOMAIN),
        )

    def all_models(self):
        return [
            self.direction,
            self.first_distance,
            self.word_offset,
            self.letter_count,
            self.word_count,
        ]


def train_component_models(codes: list[AcronymCode]) -> ComponentModels:
    """Accumulate frequency counts from training codes (order-independent)."""
    if not codes:
        raise EmptyTraining("no training codes")
    models = ComponentModels.empty()
    for code in codes:
        models.direction.observe(DIRECTION_SYMBOLS[code.direction])
        models.first_distance.observe(code.first_distance)
        for off in code.word_offsets:
            models.word_offset.observe(off)
        for k in code.letter_counts:
            models.letter_count.observe(k)
        models.word_count.observe(code.num_words())
    return models


def code_cost(code: AcronymCode, models: ComponentModels) -> BitCost:
    """Total bits to code all components, each under its own model."""
    bits = models.direction.cost(DIRECTION_SYMBOLS[code.direction])
    bits += models.first_distance.cost(code.first_distance)
    bits += models.word_count.cost(code.num_words())
    for off in code.word_offsets:
        bits += models.word_offset.cost(off)
    for k in code.letter_counts:
        bits += models.letter_count.cost(k)
    return bits


def code_symbol_sequence(code: AcronymCode, models: ComponentModels):
    """(model, symbol) pairs in wire order, for arithmetic coding."""
    seq = [
        (models.direction, DIRECTION_SYMBOLS[code.direction]),
        (models.first_distance, code.first_distance),
        (models.word_count, code.num_words()),
    ]
    seq.extend((models.word_offset, off) for off in code.word_offsets)
    seq.extend((models.letter_count, k) for k in code.letter_counts)
    return seq


def sequence_to_code(symbols: list[int]) -> AcronymCode:
    """Rebuild a code from its wire-order symbols (inverse of the above)."""
    direction = ACRONYM_FIRST if symbols[0] else "-"
    first_distance = symbols[1]
    num_words = symbols[2]
    offsets = tuple(symbols[3 : 3 + num_words - 1])
    letters = tuple(symbols[3 + num_words - 1 :])
    return AcronymCode(direction, first_distance, offsets, letters)
