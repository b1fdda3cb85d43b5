"""Bundled worked examples and their golden reports.

Each item computes a dictionary of facts and states what it expects of them.
An item passes when its expectations hold and its facts equal the stored
golden copy byte for byte (after canonical JSON encoding).
"""

from __future__ import annotations

import itertools
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from importlib import resources
from typing import Callable

from .category import direct_sum, is_direct_sum
from .core import (
    B31_LITERAL_PARTIAL,
    NATURALS,
    FiniteSemimodule,
    builtin_instance,
    semiring_violations,
)
from .exactness import SequenceSpec, classify_exactness, find_splittings, is_short_exact, right_inverses
from .model import Model, canonical_json, load_model
from .morphisms import LinearMap, are_isomorphic, enumerate_hom, k_normal_witness, make_linear_map
from .projectivity import relative_projectivity
from .rational import rational_witness_check
from .subquot import enumerate_subsemimodules, generated_congruence, is_subtractive, quotient, submodule

FIXTURES = ("b31.json",)
GOLDEN = "golden_corpus.json"


def fixture_text(name: str) -> str:
    return resources.files(__package__).joinpath("data").joinpath(name).read_text(encoding="utf-8")


def load_fixture(name: str = "b31.json") -> Model:
    return load_model(json.loads(fixture_text(name)))


def load_goldens() -> dict:
    try:
        return json.loads(fixture_text(GOLDEN))
    except FileNotFoundError:
        return {}


# ---------------------------------------------------------------------------
# items


def item_b31_block() -> tuple[dict, bool]:
    m = load_fixture()
    B31, Z2 = m.module("B31"), m.module("Z2")
    iota, pi, f = m.morphism("iota"), m.morphism("pi"), m.morphism("f")
    report = classify_exactness(m.sequence("ses"))
    split = find_splittings(iota, pi)
    homs = enumerate_hom(Z2, B31)
    Q, _ = quotient(B31, iota.image)
    iso, _ = are_isomorphic(Q, Z2)
    facts = {
        "exact_positions": [p.exact for p in report.positions],
        "exact": report.exact,
        "short_exact": is_short_exact(iota, pi).as_dict(),
        "left_splitting": list(split.left.table) if split.left else None,
        "left_splitting_as_B31_endomap": [iota(x) for x in split.left.table] if split.left else None,
        "split_f_is_left_inverse": split.left is not None and split.left.table == f.table,
        "right_inverses": len(right_inverses(pi)),
        "hom_Z2_B31": [list(h.table) for h in homs],
        "quotient_size": Q.size,
        "quotient_iso_Z2": iso,
    }
    ok = (report.exact and facts["left_splitting_as_B31_endomap"] == [0, 2, 2]
          and facts["right_inverses"] == 0 and len(homs) == 1 and iso)
    return facts, ok


def _tables_on_three():
    """Every commutative monoid table on {0,1,2} with identity 0, by its three free entries."""
    for a11, a12, a22 in itertools.product(range(3), repeat=3):
        yield ((0, 1, 2), (1, a11, a12), (2, a12, a22))


def _mul_tables_on_three():
    """Multiplications with 0 absorbing and 1 as identity; only 2*2 is free."""
    for m22 in range(3):
        yield ((0, 0, 0), (0, 1, 2), (0, 2, m22))


def _example_claims(add) -> dict:
    """The B(3,1) example's claims, evaluated on an additive table (naturals mode)."""
    M = FiniteSemimodule("T", NATURALS, add, None)
    Z2 = builtin_instance("Z2", "naturals")
    closed = add[2][2] in (0, 2)
    out = {"sub_0_2": closed}
    if not closed:
        return out
    split = make_linear_map(M, M, (0, 2, 2))
    Q, _ = quotient(M, {0, 2})
    out.update(
        split_additive=isinstance(split, LinearMap),
        quotient_iso_Z2=are_isomorphic(Q, Z2)[0],
        hom_Z2_count=len(enumerate_hom(Z2, M)),
    )
    if out["quotient_iso_Z2"]:
        K, iota = submodule(M, {0, 2})
        _, pi = quotient(M, {0, 2})
        out["ses_exact"] = classify_exactness(SequenceSpec((iota, pi))).exact
    return out


def _holds(claims: dict) -> bool:
    return (claims.get("sub_0_2") and claims.get("split_additive") and claims.get("quotient_iso_Z2")
            and claims.get("hom_Z2_count") == 1 and claims.get("ses_exact", False))


def b31_table_report() -> tuple[dict, bool]:
    """Exhaustive search of 3-element semirings against the literal B(3,1) values."""
    lit = B31_LITERAL_PARTIAL
    literal = []
    for add in _tables_on_three():
        if any(add[i][j] != v for (i, j), v in lit["add"].items()):
            continue
        for mul in _mul_tables_on_three():
            if any(mul[i][j] != v for (i, j), v in lit["mul"].items()):
                continue
            bad = semiring_violations(add, mul, 1)
            claims = _example_claims(add)
            literal.append({
                "add": [list(r) for r in add],
                "mul": [list(r) for r in mul],
                "semiring": not bad,
                "first_violation": str(bad[0]) if bad else None,
                "claims": claims,
                "claims_hold": bool(_holds(claims)),
            })
    consistent = []
    for add in _tables_on_three():
        if add[1][2] != lit["add"][(1, 2)]:
            continue
        for mul in _mul_tables_on_three():
            if semiring_violations(add, mul, 1):
                continue
            if _holds(_example_claims(add)):
                consistent.append({"add": [list(r) for r in add], "mul": [list(r) for r in mul]})
    B31 = builtin_instance("B31")
    corrected = {"add": [list(r) for r in B31.add], "mul": [list(r) for r in B31.mul]}
    facts = {
        "literal_completions": literal,
        "consistent_with_claims": consistent,
        "corrected_table": corrected,
        "note": ("the literal values 2+2=0 and 2*2=0 admit no completion that is a semiring "
                 "satisfying the example; the builtin B31 uses the corrected table"),
    }
    ok = not any(c["semiring"] and c["claims_hold"] for c in literal) and corrected in consistent
    return facts, ok


def item_not_direct() -> tuple[dict, bool]:
    facts = rational_witness_check()
    return facts, facts["passed"]


def item_reg_sub() -> tuple[dict, bool]:
    """Subtractive iff the canonical sequence is exact, on C(2,1) and B31."""
    rows = []
    for name in ("C(2,1)", "B31", "C(1,2)"):
        M = builtin_instance(name, "naturals")
        for L in enumerate_subsemimodules(M):
            _, iota = submodule(M, L.elements)
            _, pi = quotient(M, L)
            rows.append({
                "module": name,
                "sub": sorted(L.elements),
                "subtractive": is_subtractive(M, L.elements),
                "exact": classify_exactness(SequenceSpec((iota, pi))).exact,
                "semi_exact": classify_exactness(SequenceSpec((iota, pi))).semi_exact,
            })
    ok = (all(r["subtractive"] == r["exact"] and r["semi_exact"] for r in rows)
          and any(not r["subtractive"] for r in rows))
    return {"rows": rows}, ok


def item_d_iso() -> tuple[dict, bool]:
    Bm = builtin_instance("B", "B")
    S, (i1, i2), _ = direct_sum(Bm, Bm)
    K, L = i1.image, i2.image
    Q, _ = quotient(S, K)
    decomposition, *_ = is_direct_sum(S, K, L)
    facts = {
        "K": sorted(K),
        "L": sorted(L),
        "direct_sum": decomposition is True,
        "quotient_size": Q.size,
        "quotient_iso_B": are_isomorphic(Q, Bm)[0],
        "quotient_iso_L": are_isomorphic(Q, submodule(S, L)[0])[0],
    }
    return facts, facts["direct_sum"] and facts["quotient_iso_B"] and facts["quotient_iso_L"]


def item_k_normal_quotient() -> tuple[dict, bool]:
    """(B⊕B)/ρ with ρ collapsing (1,0) and (0,1): the projection is not k-normal."""
    S = builtin_instance("B⊕B", "B")
    rho = generated_congruence(S, [(1, 2)])
    _, pi = quotient(S, rho)
    w = k_normal_witness(pi)
    facts = {
        "blocks": [list(b) for b in rho.blocks],
        "kernel": sorted(pi.kernel),
        "k_normal_witness": [S.label(x) for x in w] if w else None,
    }
    return facts, w is not None


def item_z2_projectivity() -> tuple[dict, bool]:
    m = load_fixture()
    facts = {fl: relative_projectivity(m.module("Z2"), m.module("B31"), fl).as_dict()
             for fl in ("plain", "k", "normally", "e")}
    return facts, not any(r["verdict"] for r in facts.values())


ITEMS: dict[str, Callable[[], tuple[dict, bool]]] = {
    "b31-block": item_b31_block,
    "b31-table": b31_table_report,
    "not-direct": item_not_direct,
    "reg-sub": item_reg_sub,
    "d-iso": item_d_iso,
    "k-normal-quotient": item_k_normal_quotient,
    "z2-projectivity": item_z2_projectivity,
}


@dataclass
class CorpusItem:
    name: str
    facts: dict
    expectations: bool
    golden: str  # "match", "drift" or "missing"

    @property
    def passed(self) -> bool:
        return self.expectations and self.golden == "match"

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "expectations": self.expectations,
                "golden": self.golden, "facts": self.facts}


def _fixture_integrity() -> dict:
    out = {}
    for name in FIXTURES:
        text = fixture_text(name)
        out[name] = load_model(json.loads(text)).dumps() == text
    return out


def compute_items() -> dict[str, tuple[dict, bool]]:
    # items are independent; results are collected in corpus order
    with ThreadPoolExecutor(max_workers=4) as pool:
        results = list(pool.map(lambda fn: fn(), ITEMS.values()))
    return dict(zip(ITEMS, results))


def corpus_verify(goldens: dict | None = None) -> dict:
    """Run every item, compare with the goldens and return the report body."""
    goldens = load_goldens() if goldens is None else goldens
    items = []
    for name, (facts, ok) in compute_items().items():
        if name not in goldens:
            status = "missing"
        else:
            status = "match" if canonical_json(goldens[name]) == canonical_json(facts) else "drift"
        items.append(CorpusItem(name, facts, bool(ok), status))
    integrity = _fixture_integrity()
    return {
        "passed": all(i.passed for i in items) and all(integrity.values()),
        "fixtures_round_trip": integrity,
        "items": [i.as_dict() for i in items],
    }


def write_goldens(path) -> None:
    """Regenerate the golden file from the current implementation."""
    facts = {name: f for name, (f, _) in compute_items().items()}
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(canonical_json(facts))
