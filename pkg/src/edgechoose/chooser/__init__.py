"""Constructive 2-set colorings from 7-lists on subcubic graphs."""

from .dispatch import ChooseResult, Route, choose_72, plan_route
from .gstar import choose_gstar
from .lemma import CycleFrame, even_cycle_choose, key_lemma_choose, key_lemma_positions
from .med import choose_med
from .threeec import choose_3ec

__all__ = [
    "ChooseResult",
    "CycleFrame",
    "Route",
    "choose_3ec",
    "choose_72",
    "choose_gstar",
    "choose_med",
    "even_cycle_choose",
    "key_lemma_choose",
    "key_lemma_positions",
    "plan_route",
]
