"""JSON model files: semirings, semimodules, morphisms and sequences.

Format 1::

    {"format": 1,
     "semirings":   {"S": {"add": [[...]], "mul": [[...]], "one": 1}},
     "semimodules": {"M": {"scalars": "naturals" | "<semiring>", "size": n,
                           "add": [[...]], "action": [[...]]}},
     "morphisms":   {"f": {"dom": "L", "cod": "M", "map": [...]}},
     "sequences":   {"ses": ["f", "g"]}}

Element 0 is always the zero.  A semiring name that is not defined in the
file may name a builtin (``B``, ``B31``, ``F2``).  A sequence given as a
list has zero objects at both ends; the object form
``{"maps": [...], "left_zero": false, "right_zero": true}`` controls them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .core import (
    NATURALS,
    FiniteSemiring,
    FiniteSemimodule,
    StructuralError,
    builtin_instance,
    validate_semimodule,
    validate_semiring,
)
from .exactness import SequenceSpec
from .morphisms import LinearMap, make_linear_map

FORMAT = 1


class ModelError(ValueError):
    """Aggregated problems, each tagged with a JSON pointer."""

    def __init__(self, problems: list[tuple[str, str]]):
        self.problems = problems
        super().__init__("; ".join(f"{p}: {m}" for p, m in problems))

    def as_list(self) -> list[dict]:
        return [{"pointer": p, "message": m} for p, m in self.problems]


def _ptr(*parts) -> str:
    return "".join("/" + str(p).replace("~", "~0").replace("/", "~1") for p in parts)


def canonical_json(obj) -> str:
    """Sorted keys, no insignificant whitespace, no trailing newline."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


@dataclass
class Model:
    semirings: dict[str, FiniteSemiring] = field(default_factory=dict)
    semimodules: dict[str, FiniteSemimodule] = field(default_factory=dict)
    morphisms: dict[str, LinearMap] = field(default_factory=dict)
    sequences: dict[str, SequenceSpec] = field(default_factory=dict)
    # semiring references as written, for re-serialisation
    scalar_refs: dict[str, str] = field(default_factory=dict)

    def module(self, name: str) -> FiniteSemimodule:
        """A semimodule defined in the file, else a builtin over the naturals."""
        if name in self.semimodules:
            return self.semimodules[name]
        try:
            M = builtin_instance(name, "naturals")
        except StructuralError:
            raise KeyError(f"unknown semimodule {name!r}") from None
        return M

    def morphism(self, name: str) -> LinearMap:
        if name not in self.morphisms:
            raise KeyError(f"unknown morphism {name!r}")
        return self.morphisms[name]

    def sequence(self, name: str) -> SequenceSpec:
        if name not in self.sequences:
            raise KeyError(f"unknown sequence {name!r}")
        return self.sequences[name]

    def to_obj(self) -> dict:
        out: dict = {"format": FORMAT}
        if self.semirings:
            out["semirings"] = {
                k: {"add": _lists(S.add), "mul": _lists(S.mul), "one": S.one} for k, S in self.semirings.items()
            }
        if self.semimodules:
            mods = {}
            for k, M in self.semimodules.items():
                d = {"scalars": self.scalar_refs.get(k, "naturals"), "size": M.size, "add": _lists(M.add)}
                if not M.naturals:
                    d["action"] = _lists(M.action)
                mods[k] = d
            out["semimodules"] = mods
        names = {id(M): k for k, M in self.semimodules.items()}
        if self.morphisms:
            out["morphisms"] = {
                k: {"dom": names[id(f.dom)], "cod": names[id(f.cod)], "map": list(f.table)}
                for k, f in self.morphisms.items()
            }
        if self.sequences:
            seqs = {}
            for k, s in self.sequences.items():
                maps = [self._map_name(f) for f in s.maps]
                if s.left_zero and s.right_zero:
                    seqs[k] = maps
                else:
                    seqs[k] = {"maps": maps, "left_zero": s.left_zero, "right_zero": s.right_zero}
            out["sequences"] = seqs
        return out

    def _map_name(self, f: LinearMap) -> str:
        for k, g in self.morphisms.items():
            if g is f:
                return k
        raise KeyError("sequence refers to a morphism outside the model")

    def dumps(self) -> str:
        return canonical_json(self.to_obj())


def _lists(table) -> list:
    return [list(row) for row in table]


def _semiring_ref(name: str, local: dict[str, FiniteSemiring]):
    if name == "naturals":
        return NATURALS
    if name in local:
        return local[name]
    S = builtin_instance(name)
    if not isinstance(S, FiniteSemiring):
        raise StructuralError(f"{name!r} is not a semiring")
    return S


def load_model(obj: dict) -> Model:
    """Build and validate a model from parsed JSON; raise :class:`ModelError`."""
    problems: list[tuple[str, str]] = []
    model = Model()
    if not isinstance(obj, dict):
        raise ModelError([("", "top level must be an object")])
    fmt = obj.get("format", FORMAT)
    if fmt != FORMAT:
        problems.append((_ptr("format"), f"unsupported format {fmt!r}"))
    for key in obj:
        if key not in ("format", "semirings", "semimodules", "morphisms", "sequences"):
            problems.append((_ptr(key), "unknown top-level key"))

    for name, spec in (obj.get("semirings") or {}).items():
        where = ("semirings", name)
        try:
            out = validate_semiring(spec["add"], spec["mul"], 0, spec.get("one", 1), name=name)
        except KeyError as e:
            problems.append((_ptr(*where, e.args[0]), "missing"))
            continue
        except (StructuralError, TypeError) as e:
            problems.append((_ptr(*where), str(e)))
            continue
        if isinstance(out, list):
            problems.extend((_ptr(*where), f"violates {v}") for v in out)
        else:
            model.semirings[name] = out

    for name, spec in (obj.get("semimodules") or {}).items():
        where = ("semimodules", name)
        try:
            ref = spec.get("scalars", "naturals")
            scalars = _semiring_ref(ref, model.semirings)
            add = spec["add"]
            if "size" in spec and spec["size"] != len(add):
                problems.append((_ptr(*where, "size"), f"size {spec['size']} but add has {len(add)} rows"))
                continue
            out = validate_semimodule(scalars, add, spec.get("action"), name=name)
        except KeyError as e:
            problems.append((_ptr(*where, e.args[0]), "missing"))
            continue
        except (StructuralError, TypeError) as e:
            problems.append((_ptr(*where), str(e)))
            continue
        if isinstance(out, list):
            problems.extend((_ptr(*where), f"violates {v}") for v in out)
        else:
            model.semimodules[name] = out
            model.scalar_refs[name] = ref

    for name, spec in (obj.get("morphisms") or {}).items():
        where = ("morphisms", name)
        ends = []
        for end in ("dom", "cod"):
            ref = spec.get(end)
            if ref not in model.semimodules:
                problems.append((_ptr(*where, end), f"dangling reference {ref!r}"))
            ends.append(model.semimodules.get(ref))
        if None in ends:
            continue
        dom, cod = ends
        table = spec.get("map")
        if not isinstance(table, list):
            problems.append((_ptr(*where, "map"), "missing"))
            continue
        if len(table) != dom.size:
            problems.append((_ptr(*where, "map"), f"length {len(table)}, expected {dom.size}"))
            continue
        bad = [i for i, y in enumerate(table)
               if isinstance(y, bool) or not isinstance(y, int) or not 0 <= y < cod.size]
        if bad:
            problems.append((_ptr(*where, "map", bad[0]), f"entry {table[bad[0]]!r} out of range for {cod.name}"))
            continue
        try:
            out = make_linear_map(dom, cod, table)
        except StructuralError as e:
            problems.append((_ptr(*where), str(e)))
            continue
        if isinstance(out, list):
            problems.extend((_ptr(*where), f"violates {v}") for v in out)
        else:
            model.morphisms[name] = out

    for name, spec in (obj.get("sequences") or {}).items():
        where = ("sequences", name)
        if isinstance(spec, list):
            refs, lz, rz = spec, True, True
        elif isinstance(spec, dict):
            refs, lz, rz = spec.get("maps", []), spec.get("left_zero", True), spec.get("right_zero", True)
        else:
            problems.append((_ptr(*where), "must be a list or an object"))
            continue
        missing = [i for i, r in enumerate(refs) if r not in model.morphisms]
        if missing:
            problems.append((_ptr(*where, missing[0]), f"dangling reference {refs[missing[0]]!r}"))
            continue
        try:
            model.sequences[name] = SequenceSpec(tuple(model.morphisms[r] for r in refs), lz, rz)
        except StructuralError as e:
            problems.append((_ptr(*where), str(e)))

    if problems:
        raise ModelError(problems)
    return model


def parse_model(path) -> Model:
    """Read, parse and validate a model file."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ModelError([("", f"parse error at line {e.lineno} column {e.colno}: {e.msg}")]) from None
    return load_model(obj)


def module_obj(M: FiniteSemimodule) -> dict:
    """Inline description of a semimodule for reports."""
    d = {"name": M.name, "scalars": "naturals" if M.naturals else M.scalars.name,
         "size": M.size, "add": _lists(M.add)}
    if not M.naturals:
        d["action"] = _lists(M.action)
    return d


def map_obj(f: LinearMap) -> dict:
    return {"dom": f.dom.name, "cod": f.cod.name, "map": list(f.table)}
