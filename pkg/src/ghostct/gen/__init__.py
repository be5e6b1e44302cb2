"""Generators for example categories, the file format, and combinatorial oracles."""

from .arcs import arc_oracle, diagonals, triangulations
from .io import CategoryFileError, load, loads, save, dumps
from .mesh import MeshWindow, WindowTooSmall, gen_mesh
from .nakayama import gen_stable_nakayama
from .orbit import InadmissibleSpec, gen_orbit

SHIPPED = {
    "cc_a2": lambda: gen_orbit(2, 1, 1, name="cc_a2"),
    "cc_a3": lambda: gen_orbit(3, 1, 1, name="cc_a3"),
    "rc_a2_2": lambda: gen_orbit(2, 2, 2, name="rc_a2_2"),
    "stnak_2_4": lambda: gen_stable_nakayama(2, 4, name="stnak_2_4"),
    "stnak_3_4": lambda: gen_stable_nakayama(3, 4, name="stnak_3_4"),
}

_built = {}


def shipped(name: str):
    """A shipped example category, built once per process."""
    if name not in SHIPPED:
        raise KeyError(f"unknown example {name!r}; known: {', '.join(SHIPPED)}")
    if name not in _built:
        _built[name] = SHIPPED[name]()
    return _built[name]


def all_shipped() -> dict:
    return {name: shipped(name) for name in SHIPPED}


__all__ = [
    "CategoryFileError",
    "InadmissibleSpec",
    "MeshWindow",
    "SHIPPED",
    "WindowTooSmall",
    "all_shipped",
    "arc_oracle",
    "diagonals",
    "dumps",
    "gen_mesh",
    "gen_orbit",
    "gen_stable_nakayama",
    "load",
    "loads",
    "save",
    "shipped",
    "triangulations",
]
