"""Translation surfaces: curvature, linear Weingarten fits, exact identity checks."""

import json

from . import _core
from ._core import DomainError, NoAdmissibleSamples, ParseError, SpecError

__all__ = [
    "DomainError",
    "NoAdmissibleSamples",
    "ParseError",
    "SpecError",
    "audit",
    "curvature",
    "fit",
    "generate",
    "integrate_profile",
    "mesh",
    "run_cli",
    "sample",
    "verify",
]


def _surface(surface):
    if isinstance(surface, str):
        return surface
    return json.dumps(surface)


def curvature(surface, x, y):
    """H, K, W at one point. `surface` is a surface-JSON dict or string."""
    return _core.curvature(_surface(surface), x, y)


def sample(surface, grid):
    """Row-major samples on a "x0:x1:nx,y0:y1:ny" grid."""
    return _core.sample(_surface(surface), grid)


def fit(surface, grid):
    return json.loads(_core.fit(_surface(surface), grid))


def audit(seed=7, trials=100):
    return json.loads(_core.audit(seed, trials))


def verify(suite="all", seed=0):
    return json.loads(_core.verify(suite, seed))


def generate(family, lambda_=1.0, profile="t^2"):
    return json.loads(_core.generate(family, lambda_, profile))


def integrate_profile(lambda_, x_end, step=1e-3):
    return _core.integrate_profile(lambda_, x_end, step)


def mesh(surface, grid):
    """Wavefront OBJ text."""
    return _core.mesh(_surface(surface), grid)


def run_cli(*args):
    """Runs the command line in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
