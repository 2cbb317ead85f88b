"""Exact solver and audit engine for weighted fair division of indivisible
goods under matroid-rank valuations.

Instances, allocations, rules, and verdicts are plain dicts mirroring the
JSON formats of the ``fairdiv`` command-line tool.
"""

import json as _json

from . import _core
from ._core import (
    CapacityError,
    Error,
    InputError,
    PreconditionError,
    UnsupportedKindError,
    ValidationError,
    __version__,
)

__all__ = [
    "solve",
    "oracle",
    "mnw_oracle",
    "verify",
    "validate",
    "counterexamples",
    "check_resource_monotonicity",
    "check_population_monotonicity",
    "check_weight_monotonicity",
    "check_group_strategyproofness",
    "random_instance",
    "fixtures",
    "Error",
    "InputError",
    "ValidationError",
    "UnsupportedKindError",
    "CapacityError",
    "PreconditionError",
    "__version__",
]


def _rule_spec(rule):
    if isinstance(rule, str):
        return _json.dumps({"rule": rule})
    return _json.dumps(rule)


def solve(instance, rule="mwnw", with_trace=False):
    """Compute an allocation for a concave rule; returns the allocation,
    utility vector, any warnings, and optionally the per-good trace."""
    return _json.loads(_core.solve_json(_json.dumps(instance), _rule_spec(rule), with_trace))


def oracle(instance, rule="mwnw", budget=100_000_000):
    """Exhaustive optimum under the full preference order."""
    return _json.loads(_core.oracle_json(_json.dumps(instance), _rule_spec(rule), budget))


def mnw_oracle(instance, budget=100_000_000):
    """Unweighted Nash-welfare optimum with every optimal utility vector."""
    return _json.loads(_core.mnw_json(_json.dumps(instance), budget))


def verify(instance, rule="mwnw", budget=100_000_000):
    """Solver-versus-oracle utility vector comparison."""
    return _json.loads(_core.verify_json(_json.dumps(instance), _rule_spec(rule), budget))


def validate(instance):
    """Exhaustive matroid-axiom check per agent (up to 16 goods)."""
    return _json.loads(_core.validate_json(_json.dumps(instance)))


def counterexamples():
    """Replay the bundled counterexample propositions."""
    return _json.loads(_core.counterexamples_json())


def check_resource_monotonicity(instance, extra_good, rule="mwnw", engine="solver"):
    return _json.loads(
        _core.check_resource_json(_json.dumps(instance), extra_good, _rule_spec(rule), engine)
    )


def check_population_monotonicity(instance, removed_agent, rule="mwnw", engine="solver"):
    return _json.loads(
        _core.check_population_json(_json.dumps(instance), removed_agent, _rule_spec(rule), engine)
    )


def check_weight_monotonicity(instance, agent, new_weight, rule="mwnw", engine="solver"):
    return _json.loads(
        _core.check_weight_json(
            _json.dumps(instance), agent, str(new_weight), _rule_spec(rule), engine
        )
    )


def check_group_strategyproofness(instance, rule="mwnw", space="binary_additive_all",
                                  engine="solver"):
    return _json.loads(
        _core.check_gsp_json(_json.dumps(instance), _rule_spec(rule), space, engine)
    )


def random_instance(config):
    """Seeded reproducible matroid-rank instance from a generator config."""
    return _json.loads(_core.random_instance_json(_json.dumps(config)))


def fixtures():
    """All bundled instances by name."""
    return _json.loads(_core.fixtures_json())
