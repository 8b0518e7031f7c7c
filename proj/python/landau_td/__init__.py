from ._landau_td import *  # noqa: F401,F403
from ._landau_td import LandauError, Profile, make_profile, read_profile, solve_aux, uniform_grid

__all__ = [name for name in dir() if not name.startswith("_")]


def solve(profile: Profile, points: int = 801, **initial):
    """Profile plus its numerically integrated auxiliary amplitude on a uniform grid over the profile domain."""
    return solve_aux(profile, uniform_grid(profile.t0, profile.t1, points), **initial)
