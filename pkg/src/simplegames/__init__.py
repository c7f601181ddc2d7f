"""Exact analysis of simple games: weights, rough weights and trading certificates."""

from simplegames.game_core import (
    GameClass,
    SimpleGame,
    classify,
    dual,
    find_special_players,
    is_winning,
    parse_game,
    format_game,
)
from simplegames.trade_algebra import (
    Certificate,
    ELSequence,
    TradingTransform,
    validate_transform,
    vector_of_pair,
    verify_certificate,
)
from simplegames.lp_solver import (
    FarkasWitness,
    Representation,
    check_rough,
    check_weighted,
    normalize_witness,
    verify_representation,
)
from simplegames.cert_search import (
    UNBOUNDED,
    compute_f,
    compute_g,
    coord_sum_lower_bound_g,
    is_k_trade_robust,
    taylor_zwicker_cap,
)

__all__ = [
    "GameClass",
    "SimpleGame",
    "classify",
    "dual",
    "find_special_players",
    "is_winning",
    "parse_game",
    "format_game",
    "Certificate",
    "ELSequence",
    "TradingTransform",
    "validate_transform",
    "vector_of_pair",
    "verify_certificate",
    "FarkasWitness",
    "Representation",
    "check_rough",
    "check_weighted",
    "normalize_witness",
    "verify_representation",
    "UNBOUNDED",
    "compute_f",
    "compute_g",
    "coord_sum_lower_bound_g",
    "is_k_trade_robust",
    "taylor_zwicker_cap",
]

__version__ = "0.1.0"
