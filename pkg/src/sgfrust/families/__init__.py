"""Deterministic generators for named families of critical signed graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..exceptions import PreconditionError
from .classic import (
    anti_complete,
    anti_wheel,
    neg_loops,
    octahedron_anti,
    petersen_sigma1,
    petersen_sigma2,
    plus_minus,
    projective_cube,
    projective_cube_disjoint_signatures,
)
from .walls import (
    WallCoordinates,
    generate_escher_wall,
    generate_even_wall,
    generate_odd_wall,
    generate_wall_prime,
)

__all__ = [
    "FamilySpec",
    "GeneratedFamily",
    "KINDS",
    "WallCoordinates",
    "anti_complete",
    "anti_wheel",
    "generate",
    "generate_escher_wall",
    "generate_even_wall",
    "generate_odd_wall",
    "generate_wall_prime",
    "neg_loops",
    "octahedron_anti",
    "petersen_sigma1",
    "petersen_sigma2",
    "plus_minus",
    "projective_cube",
    "projective_cube_disjoint_signatures",
]


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    parameter: Optional[int] = None


@dataclass(frozen=True)
class GeneratedFamily:
    graph: object
    signature: frozenset
    metadata: dict

    def __iter__(self):
        return iter((self.graph, self.signature, self.metadata))


def _walls(gen):
    def build(k):
        G, sig, coords = gen(k)
        return G, sig, {"coordinates": coords}
    return build


def _plain(gen):
    def build(k):
        G, sig = gen(k) if k is not None else gen()
        return G, sig, {}
    return build


# kind -> (builder, parameter check, expected index)
_KINDS = {
    "neg_loops": (_plain(neg_loops), lambda k: k >= 1, lambda k: k),
    "plus_minus": (_plain(plus_minus), lambda k: k >= 2, lambda k: k),
    "anti_complete": (_plain(anti_complete), lambda k: k >= 3, lambda k: (k - 1) ** 2 // 4),
    "anti_wheel": (_plain(anti_wheel), lambda k: k >= 1, lambda k: k + 1),
    "projective_cube": (_plain(projective_cube), lambda k: k >= 1, lambda k: 2 ** (k - 1)),
    "escher_wall": (_walls(generate_escher_wall), lambda k: k >= 3, lambda k: k),
    "escher_wall_prime": (_walls(generate_wall_prime), lambda k: k >= 3 and k % 2 == 1, lambda k: k),
    "petersen_sigma1": (_plain(petersen_sigma1), None, lambda k: 3),
    "petersen_sigma2": (_plain(petersen_sigma2), None, lambda k: 3),
    "octahedron_anti": (_plain(octahedron_anti), None, lambda k: 4),
}
KINDS = tuple(_KINDS)


def generate(spec: FamilySpec | str, parameter: Optional[int] = None) -> GeneratedFamily:
    """Build a family member.

    Parameters
    ----------
    spec : FamilySpec or str
        The family kind (and parameter).  A bare kind string may be combined
        with ``parameter``.

    Returns
    -------
    GeneratedFamily
        Graph, signature and metadata with ``kind``, ``parameter``,
        ``expected_index`` and ``expected_critical``; walls also carry
        ``coordinates``.
    """
    if isinstance(spec, str):
        spec = FamilySpec(spec, parameter)
    if spec.kind not in _KINDS:
        raise PreconditionError(f"unknown family {spec.kind!r}; choose from {', '.join(KINDS)}")
    build, check, expected = _KINDS[spec.kind]
    k = spec.parameter
    if check is None:
        if k is not None:
            raise PreconditionError(f"{spec.kind} takes no parameter")
    else:
        if k is None or isinstance(k, bool) or not isinstance(k, int) or not check(k):
            raise PreconditionError(f"parameter {k!r} out of range for {spec.kind}")
    G, sig, extra = build(k)
    meta = {
        "kind": spec.kind,
        "parameter": k,
        "expected_index": expected(k),
        "expected_critical": True,
        **extra,
    }
    return GeneratedFamily(G, sig, meta)
