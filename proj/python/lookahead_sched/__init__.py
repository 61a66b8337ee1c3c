"""Semi-online two- and three-machine scheduling with lookahead.

All processing times and ratios are exact ``fractions.Fraction`` values.
"""

from ._core import (
    LookaheadError,
    lookahead_window,
    named_instance,
    optimal_makespan,
    play_three_machine_game,
    play_two_machine_game,
    run_cli,
    simulate,
    verify_bound,
)

__all__ = [
    "LookaheadError",
    "lookahead_window",
    "named_instance",
    "optimal_makespan",
    "play_three_machine_game",
    "play_two_machine_game",
    "run_cli",
    "simulate",
    "verify_bound",
]
