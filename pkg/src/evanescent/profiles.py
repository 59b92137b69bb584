"""Amplitude profiles on the linear wavefronts.

In the shadow the profiles are evaluated at complex arguments
``x pm i c y``, so every profile declares the half-width of the strip
``|Im w| <= strip`` in which it may be continued.  Profiles without a
declared strip are refused there.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, StripViolationError


class WavefrontProfile:
    """Callable ``f(w)`` accepting real or complex scalars and arrays."""

    name = "profile"
    smoothness = "analytic"
    strip: float | None = math.inf

    def __call__(self, w):
        raise NotImplementedError

    def params(self) -> dict:
        return {}

    def describe(self) -> str:
        p = ",".join(f"{v:.17g}" for v in self.params().values())
        return f"{self.name}:{p}" if p else self.name

    def check_strip(self, imag_extent) -> None:
        """Refuse arguments whose imaginary part leaves the declared strip."""
        extent = float(np.max(np.abs(imag_extent))) if np.size(imag_extent) else 0.0
        if extent == 0.0:
            return
        if self.strip is None:
            raise StripViolationError(
                f"profile '{self.name}' declares no analyticity strip; complex arguments refused")
        if extent > self.strip:
            raise StripViolationError(
                f"|Im w| = {extent:.6g} exceeds the strip half-width {self.strip:.6g} "
                f"of profile '{self.name}'")


@dataclass(frozen=True, eq=False)
class ConstantProfile(WavefrontProfile):
    value: complex = 1.0
    name = "const"

    def __call__(self, w):
        if np.ndim(w):
            return np.full(np.shape(w), complex(self.value))
        return complex(self.value)

    def params(self) -> dict:
        return {} if self.value == 1.0 else {"value": complex(self.value).real}


@dataclass(frozen=True, eq=False)
class GaussianProfile(WavefrontProfile):
    """``amp * exp(-(w - x0)^2 / sigma^2)``; entire."""

    x0: float = 0.0
    sigma: float = 1.0
    amp: complex = 1.0
    name = "gaussian"

    def __post_init__(self):
        if not self.sigma > 0:
            raise DomainError("gaussian width must be positive")

    def __call__(self, w):
        d = np.asarray(w) - self.x0
        out = self.amp * np.exp(-(d * d) / self.sigma**2)
        return out if np.ndim(w) else complex(out)

    def params(self) -> dict:
        return {"x0": self.x0, "sigma": self.sigma}


@dataclass(frozen=True, eq=False)
class RaisedCosineProfile(WavefrontProfile):
    """``cos^2(pi (w - x0) / (2 width))`` on ``|Re(w - x0)| < width``, zero outside.

    The two pieces are analytic separately but the joins are only C^1,
    so complex continuation is allowed only inside a finite strip,
    ``width / 2`` unless given.
    """

    x0: float = 0.0
    width: float = 1.0
    strip_width: float | None = None
    name = "raised-cosine"
    smoothness = "C1"

    def __post_init__(self):
        if not self.width > 0:
            raise DomainError("raised-cosine width must be positive")

    @property
    def strip(self) -> float:
        return self.width / 2.0 if self.strip_width is None else self.strip_width

    def __call__(self, w):
        d = np.asarray(w, dtype=complex) - self.x0
        inside = np.abs(d.real) < self.width
        out = np.where(inside, np.cos(math.pi * d / (2.0 * self.width)) ** 2, 0.0)
        return out if np.ndim(w) else complex(out)

    def params(self) -> dict:
        return {"x0": self.x0, "width": self.width, "strip": self.strip}


@dataclass(frozen=True, eq=False)
class CustomProfile(WavefrontProfile):
    """Wrap a user callable; ``strip=None`` forbids complex arguments."""

    func: Callable = None
    strip: float | None = None
    smoothness: str = "unknown"
    name: str = "custom"

    def __call__(self, w):
        return self.func(w)


def parse_profile(spec: str) -> WavefrontProfile:
    """``const``, ``const:c``, ``gaussian:x0,sigma`` or ``raised-cosine:x0,width[,strip]``."""
    head, _, tail = spec.strip().partition(":")
    try:
        args = [float(a) for a in tail.split(",")] if tail else []
    except ValueError as exc:
        raise DomainError(f"bad profile parameters in '{spec}'") from exc
    if head == "const":
        if len(args) > 1:
            raise DomainError("const takes at most one parameter")
        return ConstantProfile(args[0]) if args else ConstantProfile()
    if head == "gaussian":
        if len(args) != 2:
            raise DomainError("gaussian needs x0,sigma")
        return GaussianProfile(args[0], args[1])
    if head == "raised-cosine":
        if len(args) not in (2, 3):
            raise DomainError("raised-cosine needs x0,width[,strip]")
        return RaisedCosineProfile(*args)
    raise DomainError(f"unknown profile '{head}'")
