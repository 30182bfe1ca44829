"""Arithmetic coding over a per-position sequence of zero-order models.

The coder keeps the interval as exact integer fractions (numerators over the
running product of model totals), so the emitted length is provably at most
two bits above the ideal information content and never below it:

    len(bits) = ceil(-log2 P(message)) + 1

The bitstring is returned as a str of '0'/'1' characters; this path codes
short component sequences where exactness matters more than speed (the byte
compressor has its own renormalizing coder).
"""

from __future__ import annotations

from .models import ZeroOrderModel


class DecodeCorrupt(ValueError):
    """The bitstream does not decode consistently under the given models."""


def _layout(model: ZeroOrderModel, symbol: int):
    """(cum_low, weight, total) of one symbol in the model's exact layout."""
    weights, total = model.coding_weights()
    cum = 0
    for sym, w in weights:
        if sym == symbol:
            if w == 0:
                raise DecodeCorrupt(f"symbol {symbol} has zero coding weight")
            return cum, w, total
        cum += w
    raise DecodeCorrupt(f"symbol {symbol} not codable")


def arithmetic_encode(symbols: list[int], models: list[ZeroOrderModel]) -> str:
    """Encode symbols[i] under models[i]; returns a '0'/'1' bitstring."""
    if len(symbols) != len(models):
        raise ValueError("need exactly one model per symbol")
    low, width, den = 0, 1, 1
    for symbol, model in zip(symbols, models):
        cum, w, total = _layout(model, symbol)
        low = low * total + width * cum
        width *= w
        den *= total
    # smallest k with 2^(k-1) * width >= den, so the interval holds a
    # k-bit dyadic point and k <= ideal + 2
    k = 1
    while (width << (k - 1)) < den:
        k += 1
    code = -(-(low << k) // den)  # ceil(low * 2^k / den)
    return format(code, f"0{k}b")


def _expected_length(width: int, den: int) -> int:
    k = 1
    while (width << (k - 1)) < den:
        k += 1
    return k


def arithmetic_decode(bits: str, models: list[ZeroOrderModel]) -> list[int]:
    """Inverse of arithmetic_encode for the same model sequence.

    Raises DecodeCorrupt when the bitstring's length is inconsistent with the
    decoded path (which catches truncated or padded streams) or when the
    coded point falls in a dead escape region.
    """
    if bits and set(bits) - {"0", "1"}:
        raise DecodeCorrupt("bitstring must contain only 0 and 1")
    k = len(bits)
    point = int(bits, 2) if bits else 0
    # decoded invariant: point/2^k lies in [low, low+width)/den
    low, width, den = 0, 1, 1
    out = []
    for model in models:
        weights, total = model.coding_weights()
        # choose the symbol whose subinterval contains the point
        target_num = point * den - (low << k)  # (point/2^k - low/den) * den * 2^k
        cum = 0
        chosen = None
        for sym, w in weights:
            nxt = cum + w
            # point < (low*total + width*nxt) / (den*total) scaled by 2^k
            if target_num * total < width * nxt << k:
                chosen = (sym, cum, w)
                break
            cum = nxt
        if chosen is None or chosen[0] is None:
            raise DecodeCorrupt("coded point falls outside all symbol ranges")
        sym, cum, w = chosen
        out.append(sym)
        low = low * total + width * cum
        width *= w
        den *= total
    if k != _expected_length(width, den):
        raise DecodeCorrupt(
            f"bitstream length {k} does not match the decoded message"
        )
    if not (low << k) <= point * den < (low + width) << k:
        raise DecodeCorrupt("coded point left the decoding interval")
    return out
