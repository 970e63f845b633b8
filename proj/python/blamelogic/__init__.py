"""Python bindings for the blamelogic model checker and proof kernel."""

import json

from ._core import (
    Formula,
    Game,
    GameFormatError,
    InvalidGame,
    ParseError,
    ProofFormatError,
    StrategyOverflow,
    blame_witness,
    bundled_names,
    bundled_script,
    check_bundled,
    check_proof,
    evaluate_all,
    format,
    is_tautology,
    load_game,
    load_game_file,
    lopez_game,
    parse,
    random_game,
    satisfies,
    save_game,
    valid_in_game,
)
from . import _core


def blame_report(game, play, formula, max_size=None):
    """Blamable coalitions at a play, as a dict."""
    return json.loads(_core.blame_report_json(game, play, formula, max_size))


def soundness_sweep(seed, games, instances=20):
    """Run the soundness sweep and return the report as a dict."""
    return json.loads(_core.soundness_sweep_json(seed, games, instances))


__all__ = [
    "Formula",
    "Game",
    "GameFormatError",
    "InvalidGame",
    "ParseError",
    "ProofFormatError",
    "StrategyOverflow",
    "blame_report",
    "blame_witness",
    "bundled_names",
    "bundled_script",
    "check_bundled",
    "check_proof",
    "evaluate_all",
    "format",
    "is_tautology",
    "load_game",
    "load_game_file",
    "lopez_game",
    "parse",
    "random_game",
    "satisfies",
    "save_game",
    "soundness_sweep",
    "valid_in_game",
]
