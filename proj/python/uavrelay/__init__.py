"""Capacity and placement analysis for UAV-swarm amplify-and-forward MIMO relays."""

import json

from ._core import *  # noqa: F401,F403
from ._core import Scenario, baseline_config

__all__ = [name for name in dir() if not name.startswith("_")]


def load_scenario(config):
    """Builds a Scenario from a dict, a JSON string, or a path to a JSON file."""
    if isinstance(config, dict):
        return Scenario.from_json(json.dumps(config))
    text = str(config)
    if text.lstrip().startswith("{"):
        return Scenario.from_json(text)
    with open(text, encoding="utf-8") as fh:
        return Scenario.from_json(fh.read())


def baseline(noise_figure_db=5.0, gain_rule="amplitude"):
    """The reference 1 km / 5 GHz scenario with 2x2 arrays on both ends."""
    return Scenario.from_json(baseline_config(noise_figure_db, gain_rule))
