"""API routers."""
from photonic_tmm.routers.simulations import router as simulations_router

__all__ = ["simulations_router"]
