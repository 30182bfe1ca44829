"""Compression-based extraction of acronyms and their definitions.

A candidate acronym is accepted when coding it against the initial letters
of nearby words (under small trained frequency models) is sufficiently
cheaper than coding its raw characters under an order-5 PPM text model.
Heuristic reference extractors and a recall/precision harness are included.
"""

from ._engine import BACKEND as PPM_BACKEND
from .codec import (
    ACRONYM_FIRST,
    DEFINITION_FIRST,
    AcronymCode,
    DefinitionSpan,
    IllegalCode,
    code_to_display,
    enumerate_codes,
    parse_display,
    realize,
)
from .models import (
    ComponentModels,
    EmptyTraining,
    OutOfDomain,
    ZeroOrderModel,
    code_cost,
    symbol_cost,
    train_component_models,
)
from .ppm import PpmModel, ppm_compress, ppm_decompress, ppm_span_cost
from .tokens import CandidateSite, Token, TokenStream, find_candidates, tokenize, window_words

__version__ = "0.1.0"

__all__ = [
    "ACRONYM_FIRST",
    "DEFINITION_FIRST",
    "AcronymCode",
    "CandidateSite",
    "ComponentModels",
    "DefinitionSpan",
    "EmptyTraining",
    "IllegalCode",
    "OutOfDomain",
    "PPM_BACKEND",
    "PpmModel",
    "Token",
    "TokenStream",
    "ZeroOrderModel",
    "code_cost",
    "code_to_display",
    "enumerate_codes",
    "find_candidates",
    "parse_display",
    "ppm_compress",
    "ppm_decompress",
    "ppm_span_cost",
    "realize",
    "symbol_cost",
    "tokenize",
    "train_component_models",
    "window_words",
]
