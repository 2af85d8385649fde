#!/usr/bin/env python3
"""
Named failures raised by the core modules.

Arithmetic failures subclass ArithmeticError, bad inputs subclass ValueError,
so callers that only know the builtin hierarchy still catch them sensibly.
"""

from __future__ import annotations


class ObstructionError(Exception):
    """Root of every error raised by src.obstruction."""


# polyring

class NotDivisible(ObstructionError, ArithmeticError):
    pass


class ZeroPolynomial(ObstructionError, ValueError):
    pass


class NotMonic(ObstructionError, ValueError):
    pass


class RepeatedRoot(ObstructionError, ArithmeticError):
    pass


# numthy

class WitnessNotFound(ObstructionError, LookupError):
    def __init__(self, bound: int):
        super().__init__(f"no irreducibility witness prime <= {bound}")
        self.bound = bound


# graphs

class NotConverged(ObstructionError, ArithmeticError):
    def __init__(self, max_iters: int, residual: float):
        super().__init__(f"power iteration not converged max_iters={max_iters} residual={residual:.3e}")
        self.max_iters = max_iters
        self.residual = residual


class DomainError(ObstructionError, ValueError):
    pass


class GraphSpecError(ObstructionError, ValueError):
    pass


# galois

class IrreducibilityRequired(ObstructionError, ValueError):
    pass


# cli / report

class FixtureError(ObstructionError, ValueError):
    pass


class ReportError(ObstructionError, ValueError):
    pass


class SettingsError(ObstructionError, ValueError):
    pass


class UsageError(ObstructionError, ValueError):
    pass
