"""Verification laboratory and solver for the 2x2x2 Varikon Box.

The box's move structure is modeled exactly, every structural claim
about its group (center, kernel, decomposition, optimal depth) is
verified by exhaustive computation over the 20,160 reachable states,
and a setup + shortest-word heuristic solver is provided alongside the
optimal one. Supporting 15-puzzle machinery (wrap-around moves, parity
solvability, conjugated 3-cycle words) lives in `varikon.fifteen`.
"""

__version__ = "0.1.0"
