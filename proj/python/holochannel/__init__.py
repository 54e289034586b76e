"""Holographic channels, steady states and isoTNS transfer maps.

Thin Python layer over the C++ core. Dense matrices are numpy arrays of
complex128 with qubit q stored in bit q of the basis index.
"""

import json as _json

from ._holochannel import (  # noqa: F401
    PauliString,
    StabilizerGroup,
    deformed_tc_boundary_state,
    entropy,
    evolve_ring_circuit,
    fidelity,
    ising_steady_state,
    noise_to_deformation,
    overlap_check,
    ring_cmi,
    trace_distance,
    verify_appendix,
    w_boundary_state,
    w_channel_spectrum,
)
from ._holochannel import run_config as _run_config


def run_config(config, write=False):
    """Run an experiment config (dict or JSON text) and return the report as a dict."""
    text = config if isinstance(config, str) else _json.dumps(config)
    return _json.loads(_run_config(text, write))


__all__ = [
    "PauliString",
    "StabilizerGroup",
    "deformed_tc_boundary_state",
    "entropy",
    "evolve_ring_circuit",
    "fidelity",
    "ising_steady_state",
    "noise_to_deformation",
    "overlap_check",
    "ring_cmi",
    "run_config",
    "trace_distance",
    "verify_appendix",
    "w_boundary_state",
    "w_channel_spectrum",
]
