"""Exactness of sequences of linear maps, short exact sequences and splittings."""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import FiniteSemimodule, StructuralError, zero_module
from .morphisms import (
    DEFAULT_BUDGET,
    LinearMap,
    are_isomorphic,
    classify_normality,
    enumerate_hom,
    k_normal_witness,
    zero_map,
)
from .subquot import bourne_congruence, kernel_congruence, quotient, submodule, subtractive_closure


@dataclass(frozen=True)
class SequenceSpec:
    """``maps[0], maps[1], ...`` composable left to right.

    ``left_zero`` / ``right_zero`` put an implicit zero object before the
    first and after the last map, as in ``0 -> L -> M -> N -> 0``.
    """

    maps: tuple[LinearMap, ...]
    left_zero: bool = True
    right_zero: bool = True

    def __post_init__(self):
        object.__setattr__(self, "maps", tuple(self.maps))
        if not self.maps:
            raise StructuralError("a sequence needs at least one map")
        for i, (f, g) in enumerate(zip(self.maps, self.maps[1:])):
            if f.cod != g.dom:
                raise StructuralError(f"maps {i} and {i + 1} are not composable")

    def full_maps(self) -> list[LinearMap]:
        """The maps with the implicit zero ends made explicit."""
        out = list(self.maps)
        if self.left_zero:
            first = out[0].dom
            out.insert(0, zero_map(zero_module(first.scalars), first))
        if self.right_zero:
            last = out[-1].cod
            out.append(zero_map(last, zero_module(last.scalars)))
        return out


@dataclass(frozen=True)
class PositionReport:
    """Verdicts for ``L -f-> M -g-> N`` at ``M``."""

    index: int
    obj: str
    chain: bool
    proper_exact: bool
    semi_exact: bool
    quasi_exact: bool
    exact: bool
    witnesses: dict = field(default_factory=dict, compare=False)

    def as_dict(self) -> dict:
        return {
            "index": self.index,
            "object": self.obj,
            "chain": self.chain,
            "proper_exact": self.proper_exact,
            "semi_exact": self.semi_exact,
            "quasi_exact": self.quasi_exact,
            "exact": self.exact,
            "witnesses": {k: list(v) if isinstance(v, tuple) else v for k, v in self.witnesses.items()},
        }


@dataclass(frozen=True)
class ExactnessReport:
    positions: tuple[PositionReport, ...]

    def _all(self, attr: str) -> bool:
        return all(getattr(p, attr) for p in self.positions)

    @property
    def chain(self) -> bool:
        return self._all("chain")

    @property
    def proper_exact(self) -> bool:
        return self._all("proper_exact")

    @property
    def semi_exact(self) -> bool:
        return self._all("semi_exact")

    @property
    def quasi_exact(self) -> bool:
        return self._all("quasi_exact")

    @property
    def exact(self) -> bool:
        return self._all("exact")

    def as_dict(self) -> dict:
        return {
            "exact": self.exact,
            "quasi_exact": self.quasi_exact,
            "semi_exact": self.semi_exact,
            "proper_exact": self.proper_exact,
            "chain": self.chain,
            "positions": [p.as_dict() for p in self.positions],
        }


def _set_mismatch(expected: frozenset[int], actual: frozenset[int]):
    """Least element in the symmetric difference, tagged by side."""
    diff = sorted(expected ^ actual)
    if not diff:
        return None
    x = diff[0]
    return ("in Ker(g) only", x) if x in expected else ("in image only", x)


def classify_position(f: LinearMap, g: LinearMap, index: int = 0) -> PositionReport:
    if f.cod != g.dom:
        raise StructuralError("maps are not composable")
    image = f.image
    ker = g.kernel
    closure, _ = subtractive_closure(g.dom, image)
    w: dict = {}
    chain_w = next((l for l in f.dom.elements if g(f(l)) != 0), None)
    if chain_w is not None:
        w["chain"] = chain_w
    proper_w = _set_mismatch(ker, image)
    if proper_w is not None:
        w["proper_exact"] = proper_w
    semi_w = _set_mismatch(ker, closure)
    if semi_w is not None:
        w["semi_exact"] = semi_w
    k_w = k_normal_witness(g)
    if k_w is not None:
        w["k_normal"] = k_w
    semi = semi_w is None
    proper = proper_w is None
    return PositionReport(
        index=index,
        obj=g.dom.name,
        chain=chain_w is None,
        proper_exact=proper,
        semi_exact=semi,
        quasi_exact=semi and k_w is None,
        exact=proper and k_w is None,
        witnesses=w,
    )


def classify_exactness(seq: SequenceSpec) -> ExactnessReport:
    """Per-position verdicts; position ``j`` sits between full maps ``j`` and ``j+1``."""
    maps = seq.full_maps()
    return ExactnessReport(tuple(classify_position(f, g, j) for j, (f, g) in enumerate(zip(maps, maps[1:]))))


def kernel_iso_canonical(f: LinearMap, g: LinearMap) -> bool:
    """``f`` corestricts to an isomorphism ``L -> Ker(g)``."""
    return f.is_injective and f.image == g.kernel


def quotient_iso_canonical(f: LinearMap, g: LinearMap) -> bool:
    """``g`` induces an isomorphism ``M/f(L) -> N``.

    That holds exactly when ``g`` is surjective and its kernel congruence is
    the Bourne congruence of ``f(L)``.
    """
    if not g.is_surjective:
        return False
    return bourne_congruence(g.dom, f.image).classes == kernel_congruence(g).classes


@dataclass(frozen=True)
class ShortExactReport:
    short_exact: bool
    f_injective: bool
    image_is_kernel: bool
    g_surjective: bool
    g_k_normal: bool
    kernel_iso: bool
    quotient_iso: bool
    kernel_iso_abstract: bool
    quotient_iso_abstract: bool
    f_normal: bool
    g_normal: bool

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def is_short_exact(f: LinearMap, g: LinearMap, budget: int = DEFAULT_BUDGET) -> ShortExactReport:
    """``0 -> L -f-> M -g-> N -> 0``.

    The verdict is ``f`` injective, ``f(L) = Ker g``, ``g`` surjective and
    k-normal.  The report also carries the canonical isomorphism checks and
    the weaker abstract ones (``L ≅ Ker g``, ``N ≅ M/f(L)`` as objects).
    """
    if f.cod != g.dom:
        raise StructuralError("maps are not composable")
    nf, ng = classify_normality(f), classify_normality(g)
    image_is_kernel = f.image == g.kernel
    verdict = nf.injective and image_is_kernel and ng.surjective and ng.k_normal
    K, _ = submodule(g.dom, g.kernel)
    Q, _ = quotient(g.dom, f.image)
    return ShortExactReport(
        short_exact=verdict,
        f_injective=nf.injective,
        image_is_kernel=image_is_kernel,
        g_surjective=ng.surjective,
        g_k_normal=ng.k_normal,
        kernel_iso=kernel_iso_canonical(f, g),
        quotient_iso=quotient_iso_canonical(f, g),
        kernel_iso_abstract=are_isomorphic(f.dom, K, budget)[0],
        quotient_iso_abstract=are_isomorphic(g.cod, Q, budget)[0],
        f_normal=nf.normal,
        g_normal=ng.normal,
    )


@dataclass(frozen=True)
class Splittings:
    left: LinearMap | None
    right: LinearMap | None

    @property
    def splits(self) -> bool:
        return self.left is not None and self.right is not None


def left_inverses(f: LinearMap, budget: int = DEFAULT_BUDGET) -> list[LinearMap]:
    """All ``h`` with ``h o f = id``."""
    if not f.is_injective:
        return []
    return enumerate_hom(f.cod, f.dom, budget, allowed={f(a): {a} for a in f.dom.elements})


def right_inverses(g: LinearMap, budget: int = DEFAULT_BUDGET) -> list[LinearMap]:
    """All ``h`` with ``g o h = id``."""
    if not g.is_surjective:
        return []
    fibres: dict[int, set[int]] = {}
    for m, c in enumerate(g.table):
        fibres.setdefault(c, set()).add(m)
    return enumerate_hom(g.cod, g.dom, budget, allowed=fibres)


def find_splittings(f: LinearMap, g: LinearMap, budget: int = DEFAULT_BUDGET) -> Splittings:
    """First left inverse of ``f`` and first right inverse of ``g`` (lexicographic), if any."""
    if f.cod != g.dom:
        raise StructuralError("maps are not composable")
    left = left_inverses(f, budget)
    right = right_inverses(g, budget)
    return Splittings(left[0] if left else None, right[0] if right else None)


@dataclass(frozen=True)
class KerCoker:
    kernel: FiniteSemimodule
    cokernel: FiniteSemimodule
    sequence: SequenceSpec
    report: ExactnessReport
    gamma_normal: bool


def ker_coker_sequence(gamma: LinearMap) -> KerCoker:
    """``0 -> Ker γ -> X -γ-> Y -> Y/γ(X) -> 0`` with its classification.

    Semi-exactness everywhere and "exact iff γ normal" are asserted.
    """
    K, ker = submodule(gamma.dom, gamma.kernel, name=f"Ker({gamma.dom.name})")
    C, coker = quotient(gamma.cod, gamma.image, name=f"Coker({gamma.cod.name})")
    seq = SequenceSpec((ker, gamma, coker))
    report = classify_exactness(seq)
    normal = classify_normality(gamma).normal
    assert report.semi_exact, "kernel-cokernel sequence is not semi-exact"
    assert report.exact == normal, "kernel-cokernel sequence: exactness differs from normality"
    return KerCoker(K, C, seq, report, normal)

