"""Simulation endpoints over the same commands as the CLI."""
import logging

from fastapi import APIRouter, HTTPException

from photonic_tmm.cli import compute_profile, compute_spectrum, gap_decay_lengths
from photonic_tmm.errors import ConfigError, InvalidParameterError, PhotonicError
from photonic_tmm.models import RunConfig
from photonic_tmm.spectra.sweep import find_band_gaps

logger = logging.getLogger(__name__)
router = APIRouter(prefix="/api", tags=["simulations"])


def _fail(e: PhotonicError) -> HTTPException:
    if isinstance(e, (ConfigError, InvalidParameterError)):
        return HTTPException(status_code=422, detail=str(e))
    logger.error(f"Simulation failed: {e}")
    return HTTPException(status_code=500, detail=str(e))


@router.post("/spectrum")
def spectrum(config: RunConfig):
    """Quantum and classical transmissivity over the configured sweep."""
    try:
        result = compute_spectrum(config)
    except PhotonicError as e:
        raise _fail(e)
    return {
        "omega_rad_per_s": result.omega.tolist(),
        "omega_over_omega0": (result.omega / config.omega0).tolist(),
        "T": result.T.tolist(),
        "R": result.R.tolist(),
        "T_classical": result.T_classical.tolist(),
        "max_oracle_deviation": result.max_oracle_deviation(),
    }


@router.post("/profile")
def profile(config: RunConfig):
    """Density and current profile at the configured frequency."""
    try:
        result = compute_profile(config)
    except PhotonicError as e:
        raise _fail(e)
    return {
        "omega_rad_per_s": result.omega,
        "theta_rad": result.theta,
        "T": result.T,
        "x_nm": result.x.tolist(),
        "rho": result.rho.tolist(),
        "J_over_c": result.j_over_c.tolist(),
    }


@router.post("/bandgap")
def bandgap(config: RunConfig):
    """Gaps of the configured sweep with the decay length at each gap center."""
    try:
        stack = config.stack.build()
        gaps = find_band_gaps(compute_spectrum(config), config.sweep.gap_threshold)
        entries = gap_decay_lengths(config, stack, gaps)
    except PhotonicError as e:
        raise _fail(e)
    return {
        "count": len(entries),
        "gaps": [
            {
                "omega_lo": gap.omega_lo,
                "omega_hi": gap.omega_hi,
                "min_T": gap.min_T,
                "decay_length_nm": length,
            }
            for gap, length in entries
        ],
    }
