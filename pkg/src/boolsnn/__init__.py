"""Clockless Boolean spiking neurons: event-driven simulation, network
generation, hardware estimation, spike I/O, and a reservoir-computing
classification pipeline."""

from boolsnn.desim import (
    CLOCK_STEP_PS,
    GATE_DELAY_PS,
    TAU_P_PS,
    Engine,
    GateInstance,
    GateKind,
    Netlist,
    NetlistBuilder,
    WaveTrace,
)

__version__ = "0.1.0"

__all__ = [
    "CLOCK_STEP_PS",
    "GATE_DELAY_PS",
    "TAU_P_PS",
    "Engine",
    "GateInstance",
    "GateKind",
    "Netlist",
    "NetlistBuilder",
    "WaveTrace",
    "__version__",
]
