"""Built-in algebras and module families used by the verification suites.

Every entry carries the window its computations run in.  The subalgebra
entry (generated by y and x*y inside the quadratic algebra with relation
yx - xy - x^2) is presented degreewise on construction and is therefore
windowed by design.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence, Tuple

from .freealg import GeneratorSet, NcPoly, generator_set, parse_poly
from .groebner import AlgebraPresentation, GroebnerData, compute_groebner
from .linalg import QQ
from .modules import (
    ModulePresentation,
    cyclic_quotient,
    free_module,
    shift_module,
    tensor_algebra,
    trivial_module,
    truncate_module,
)
from .subrings import AlgebraMap, SubalgebraResult, subalgebra_presentation


def make_algebra(gens_spec, rel_texts, label, field=QQ) -> AlgebraPresentation:
    gens = generator_set(gens_spec)
    rels = tuple(parse_poly(t, gens, field) for t in rel_texts)
    return AlgebraPresentation(gens, rels, label, field)


def polynomial_ring(names: Sequence[str], degrees: Sequence[int], label: str,
                    field=QQ) -> AlgebraPresentation:
    """Commutative polynomial ring: commutators between all generator pairs."""
    gens = generator_set(list(zip(names, degrees)))
    rels = []
    for a in range(len(names)):
        for b in range(a + 1, len(names)):
            rels.append(NcPoly({(a, b): field.one, (b, a): field.neg(field.one)}))
    return AlgebraPresentation(gens, tuple(rels), label, field)


def line(field=QQ) -> AlgebraPresentation:
    return make_algebra([("x", 1)], [], "kx", field)


def weighted_line(field=QQ) -> AlgebraPresentation:
    return make_algebra([("x", 2)], [], "kx_deg2", field)


def plane(field=QQ) -> AlgebraPresentation:
    return polynomial_ring(["x", "y"], [1, 1], "kxy", field)


def truncated_line(field=QQ) -> AlgebraPresentation:
    return make_algebra([("x", 1)], ["x*x*x"], "kx3", field)


def downup(field=QQ) -> AlgebraPresentation:
    return make_algebra([("x", 1), ("y", 1)],
                        ["x*x*y - y*x*x", "x*y*y - y*y*x"], "downup", field)


def jordan_quadric(field=QQ) -> AlgebraPresentation:
    return make_algebra([("x", 1), ("y", 1)], ["y*x - x*y - x*x"], "U", field)


def double_line(field=QQ) -> AlgebraPresentation:
    return make_algebra([("x", 1), ("y", 1)], ["x*y - y*x", "x*x"], "kxy_x2",
                        field)


def downup_times_line(field=QQ) -> AlgebraPresentation:
    kz = make_algebra([("z", 1)], [], "kz", field)
    return tensor_algebra(downup(field), kz)


def monomial_modules(a: AlgebraPresentation, word_lists: Sequence[Sequence[str]]
                     ) -> List[ModulePresentation]:
    out = []
    for words in word_lists:
        polys = [parse_poly(w, a.gens, a.field) for w in words]
        out.append(cyclic_quotient(a, polys, f"{a.label}/({','.join(words)})"))
    return out


@dataclass
class AlgebraEntry:
    """An algebra with its computation window and attached test modules."""

    algebra: AlgebraPresentation
    hmax: int
    dmax: int
    modules: Tuple[ModulePresentation, ...] = ()
    monomial_quotients: Tuple[ModulePresentation, ...] = ()

    @property
    def label(self) -> str:
        return self.algebra.label


PLANE_MONOMIALS = [["x"], ["y"], ["x*x"], ["x*y"], ["x*x", "y"],
                   ["x*x", "y*y"], ["x*x*x", "y"], ["x", "y*y"],
                   ["x*x*x", "y*y"]]
DOWNUP_MONOMIALS = [["x"], ["y"], ["x*x"], ["x*y"], ["x", "y*y"],
                    ["x*x", "x*y"]]


def default_corpus(field=QQ) -> List[AlgebraEntry]:
    """The built-in corpus: small regular algebras, a non-Koszul regular one,
    a non-Gorenstein truncation, a windowed subalgebra, and a tensor product,
    each with trivial, free, cyclic monomial, shifted and truncated modules."""
    entries: List[AlgebraEntry] = []

    kx = line(field)
    entries.append(AlgebraEntry(kx, hmax=6, dmax=12,
                                monomial_quotients=tuple(monomial_modules(
                                    kx, [["x*x"], ["x*x*x"]]))))

    kx2 = weighted_line(field)
    entries.append(AlgebraEntry(kx2, hmax=6, dmax=16,
                                monomial_quotients=tuple(monomial_modules(
                                    kx2, [["x*x"]]))))

    kxy = plane(field)
    plane_mods = tuple(monomial_modules(kxy, PLANE_MONOMIALS))
    extra = (
        free_module(kxy, (0,)),
        shift_module(plane_mods[0], -1),
        shift_module(trivial_module(kxy), -3),
    )
    entries.append(AlgebraEntry(kxy, hmax=8, dmax=16,
                                modules=extra,
                                monomial_quotients=plane_mods))

    kx3 = truncated_line(field)
    entries.append(AlgebraEntry(kx3, hmax=6, dmax=16))

    du = downup(field)
    du_mods = tuple(monomial_modules(du, DOWNUP_MONOMIALS))
    entries.append(AlgebraEntry(du, hmax=8, dmax=16,
                                modules=(free_module(du, (0,)),),
                                monomial_quotients=du_mods))

    dbl = double_line(field)
    entries.append(AlgebraEntry(dbl, hmax=8, dmax=16))

    u = jordan_quadric(field)
    entries.append(AlgebraEntry(u, hmax=6, dmax=15))

    tensor = downup_times_line(field)
    entries.append(AlgebraEntry(tensor, hmax=6, dmax=12))

    return entries


@dataclass
class SubalgebraCase:
    """The windowed subalgebra example: ambient algebra, chosen generators,
    and the windows the claims are verified in."""

    ambient: AlgebraPresentation
    generator_texts: Tuple[str, ...]
    hmax: int
    dmax: int
    label: str

    def build(self, g_ambient: GroebnerData) -> SubalgebraResult:
        gens = [parse_poly(t, self.ambient.gens, self.ambient.field)
                for t in self.generator_texts]
        return subalgebra_presentation(g_ambient, gens, self.hmax, self.dmax,
                                       names=["a", "b"], label=self.label)


def example_subalgebra(field=QQ) -> SubalgebraCase:
    return SubalgebraCase(jordan_quadric(field), ("y", "x*y"),
                          hmax=4, dmax=14, label="R")


@dataclass
class FiniteMapCase:
    """A finite map used for the restriction-of-scalars bound."""

    source: AlgebraPresentation
    target: AlgebraPresentation
    image_texts: Tuple[str, ...]
    label: str

    def build(self) -> AlgebraMap:
        images = tuple(parse_poly(t, self.target.gens, self.target.field)
                       for t in self.image_texts)
        return AlgebraMap(self.source, self.target, images)


def finite_map_cases(field=QQ) -> List[FiniteMapCase]:
    return [
        FiniteMapCase(line(field), truncated_line(field), ("x",),
                      "kx->kx3"),
        FiniteMapCase(plane(field), double_line(field), ("x", "y"),
                      "kxy->kxy_x2"),
    ]
