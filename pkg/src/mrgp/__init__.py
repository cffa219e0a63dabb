"""Multi-resolution multi-task Gaussian-process evidence integration.

Shallow GP-regression-network mixtures with composite-likelihood weight
corrections, a tree-structured deep-GP fusion model, closed-form and MCMC
oracles, and a CLI for the synthetic experiments.
"""

import jax

# All model math runs in double precision; must be set before any jax op.
jax.config.update("jax_enable_x64", True)

from . import kernels, data, svgp, gprn, composite, training, dgp, mcmc  # noqa: E402
from .kernels import KernelSpec  # noqa: E402
from .data import MultiResDataset, ObservationProcess, SupportRegion  # noqa: E402
from .gprn import GprnModel  # noqa: E402
from .dgp import DgpTree  # noqa: E402

__version__ = "0.1.0"

__all__ = [
    "kernels",
    "data",
    "svgp",
    "gprn",
    "composite",
    "training",
    "dgp",
    "mcmc",
    "KernelSpec",
    "MultiResDataset",
    "ObservationProcess",
    "SupportRegion",
    "GprnModel",
    "DgpTree",
]
