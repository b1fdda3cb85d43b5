"""Command-line front end.

Every command prints one canonical JSON report.  Exit status: 0 when the
computation completes (a false verdict is still 0), 1 when a law suite finds
a counterexample or the corpus drifts, 2 for usage and validation errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .category import c_pushout, cocone_catalog, pullback, pushout, verify_pushout_universal
from .core import BudgetExceeded, StructuralError, ValidationError, span
from .corpus import corpus_verify
from .exactness import SequenceSpec, classify_exactness, find_splittings, is_short_exact
from .laws import SUITES, law_suite
from .model import FORMAT, Model, ModelError, canonical_json, map_obj, module_obj, parse_model
from .morphisms import DEFAULT_BUDGET, classify_normality, enumerate_hom
from .projectivity import FLAVORS, relative_projectivity
from .subquot import bourne_congruence, quotient, subtractive_closure

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _subset(text: str) -> list[int]:
    try:
        return sorted({int(x) for x in text.split(",") if x.strip()})
    except ValueError:
        raise UsageError(f"--subset expects comma-separated integers, got {text!r}") from None


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} needs " + ", ".join("--" + n for n in missing))


def _model(args) -> Model:
    return parse_model(args.model) if args.model else Model()


def _two_maps(args, m: Model):
    """``--f``/``--g``, or the two maps of ``--seq``."""
    if args.seq is not None:
        seq = m.sequence(args.seq)
        if len(seq.maps) != 2:
            raise UsageError(f"sequence {args.seq!r} has {len(seq.maps)} maps, expected 2")
        return seq.maps
    _need(args, "f", "g")
    return m.morphism(args.f), m.morphism(args.g)


# ---------------------------------------------------------------------------
# commands; each returns (result, exit code)


def cmd_validate(args):
    _need(args, "model")
    m = parse_model(args.model)
    return {
        "valid": True,
        "semirings": sorted(m.semirings),
        "semimodules": {k: M.size for k, M in sorted(m.semimodules.items())},
        "morphisms": sorted(m.morphisms),
        "sequences": sorted(m.sequences),
        "canonical": m.dumps() == Path(args.model).read_text(encoding="utf-8"),
    }, EXIT_OK


def cmd_hom(args):
    _need(args, "P", "M")
    m = _model(args)
    P, M = m.module(args.P), m.module(args.M)
    maps = enumerate_hom(P, M, args.budget)
    return {"P": args.P, "M": args.M, "count": len(maps), "maps": [list(h.table) for h in maps]}, EXIT_OK


def cmd_kernel(args):
    _need(args, "map")
    f = _model(args).morphism(args.map)
    n = classify_normality(f)
    return {
        "map": map_obj(f),
        "kernel": sorted(f.kernel),
        "image": sorted(f.image),
        "injective": n.injective,
        "surjective": n.surjective,
        "k_normal": n.k_normal,
        "i_normal": n.i_normal,
        "normal": n.normal,
    }, EXIT_OK


def _module_and_subset(args):
    _need(args, "M", "subset")
    M = _model(args).module(args.M)
    elems = _subset(args.subset)
    if any(not 0 <= x < M.size for x in elems):
        raise UsageError(f"--subset entries must lie in 0..{M.size - 1}")
    return M, elems


def cmd_closure(args):
    M, elems = _module_and_subset(args)
    generated = sorted(span(M, elems))
    closure, subtractive = subtractive_closure(M, generated)
    return {"M": args.M, "subset": elems, "generated": generated, "closure": sorted(closure),
            "subtractive": subtractive, "was_subsemimodule": generated == elems}, EXIT_OK


def cmd_quotient(args):
    M, elems = _module_and_subset(args)
    L = sorted(span(M, elems))
    rho = bourne_congruence(M, L)
    Q, pi = quotient(M, rho)
    return {"M": args.M, "subsemimodule": L, "classes": [list(b) for b in rho.blocks],
            "quotient": module_obj(Q), "projection": list(pi.table)}, EXIT_OK


def cmd_pullback(args):
    m = _model(args)
    f, g = _two_maps(args, m)
    Q, pa, pb = pullback(f, g)
    members = [[pa(x), pb(x)] for x in Q.elements]
    return {"apex": module_obj(Q), "pairs": members, "leg_dom_f": list(pa.table),
            "leg_dom_g": list(pb.table)}, EXIT_OK


def _pushout_like(args, build):
    m = _model(args)
    f, g = _two_maps(args, m)
    res = build(f, g)
    targets = [M for M in m.semimodules.values() if M.size <= 4]
    cocones = cocone_catalog(f, g, targets, args.budget)
    check = verify_pushout_universal(f, g, res.cocone, cocones, args.budget)
    return {
        "apex": module_obj(res.apex),
        "classes": [list(b) for b in res.rho.blocks],
        "leg_cod_f": list(res.g_prime.table),
        "leg_cod_g": list(res.f_prime.table),
        "universal": {"passed": check.passed, "cocones": check.cocones,
                      "failure": None if check.failure is None else str(check.failure[0])},
    }, EXIT_OK


def cmd_pushout(args):
    return _pushout_like(args, pushout)


def cmd_c_pushout(args):
    return _pushout_like(args, c_pushout)


def cmd_check_exact(args):
    m = _model(args)
    if args.seq is not None:
        seq = m.sequence(args.seq)
    else:
        seq = SequenceSpec(_two_maps(args, m))
    out = classify_exactness(seq).as_dict()
    if len(seq.maps) == 2 and seq.left_zero and seq.right_zero:
        out["short_exact"] = is_short_exact(*seq.maps, budget=args.budget).as_dict()
    return out, EXIT_OK


def cmd_splittings(args):
    m = _model(args)
    f, g = _two_maps(args, m)
    s = find_splittings(f, g, args.budget)
    return {
        "left": list(s.left.table) if s.left else None,
        "left_found": s.left is not None,
        "right": list(s.right.table) if s.right else None,
        "right_found": s.right is not None,
        "splits": s.splits,
    }, EXIT_OK


def cmd_projective(args):
    _need(args, "P", "M")
    m = _model(args)
    rep = relative_projectivity(m.module(args.P), m.module(args.M), args.flavor, args.budget)
    return rep.as_dict(), EXIT_OK


def cmd_laws(args):
    names = sorted(SUITES) if args.suite in (None, "all") else [args.suite]
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite {unknown[0]!r}; known: all, {', '.join(sorted(SUITES))}")
    results = [law_suite(n, args.samples, args.seed).as_dict() for n in names]
    ok = all(r["passed"] for r in results)
    return {"passed": ok, "suites": results}, EXIT_OK if ok else EXIT_FAIL


def cmd_corpus(args):
    out = corpus_verify()
    return out, EXIT_OK if out["passed"] else EXIT_FAIL


COMMANDS = {
    "validate": (cmd_validate, "load and validate a model file"),
    "hom": (cmd_hom, "enumerate Hom(P, M)"),
    "kernel": (cmd_kernel, "kernel, image and normality of a morphism"),
    "closure": (cmd_closure, "subtractive closure of the span of a subset"),
    "quotient": (cmd_quotient, "Bourne quotient by the span of a subset"),
    "pullback": (cmd_pullback, "pullback of f: A -> C and g: B -> C"),
    "pushout": (cmd_pushout, "pushout of a span f: L -> M, g: L -> N"),
    "c-pushout": (cmd_c_pushout, "pushout via the explicit relation on M + N"),
    "check-exact": (cmd_check_exact, "exactness at every position of a sequence"),
    "splittings": (cmd_splittings, "left and right splittings of a two-map sequence"),
    "projective": (cmd_projective, "relative projectivity of P with respect to M"),
    "laws": (cmd_laws, "run property suites"),
    "corpus": (cmd_corpus, "verify the bundled examples against their goldens"),
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="semimod", description="Finite semimodule computations.")
    p.add_argument("--version", action="version", version=f"semimod {__version__}")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    for name, (_, help_) in COMMANDS.items():
        c = sub.add_parser(name, help=help_)
        c.add_argument("model", nargs="?", help="model JSON file")
        c.add_argument("--P")
        c.add_argument("--M")
        c.add_argument("--map")
        c.add_argument("--f")
        c.add_argument("--g")
        c.add_argument("--seq")
        c.add_argument("--subset", help="comma-separated element indices")
        c.add_argument("--flavor", choices=FLAVORS, default="e")
        c.add_argument("--suite")
        c.add_argument("--samples", type=int, default=100)
        c.add_argument("--seed", type=int, default=0)
        c.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        c.add_argument("--out")
    return p


def _envelope(args, result=None, error=None) -> dict:
    out = {
        "format": FORMAT,
        "tool": "semimod",
        "version": __version__,
        "command": getattr(args, "command", None),
        "seed": getattr(args, "seed", 0),
        "budgets": {"maps": getattr(args, "budget", DEFAULT_BUDGET),
                    "samples": getattr(args, "samples", 100)},
    }
    if error is not None:
        out["error"] = error
    else:
        out["result"] = result
    return out


def _emit(report: dict, out_path: str | None) -> None:
    text = canonical_json(report) + "\n"
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = argparse.Namespace()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required: " + " | ".join(COMMANDS))
        result, code = COMMANDS[args.command][0](args)
        _emit(_envelope(args, result), args.out)
        return code
    except ModelError as e:
        _emit(_envelope(args, error={"kind": "validation", "problems": e.as_list()}), getattr(args, "out", None))
    except (UsageError, KeyError) as e:
        msg = e.args[0] if e.args else str(e)
        _emit(_envelope(args, error={"kind": "usage", "message": msg}), getattr(args, "out", None))
    except (StructuralError, ValidationError, BudgetExceeded, FileNotFoundError) as e:
        _emit(_envelope(args, error={"kind": type(e).__name__, "message": str(e)}), getattr(args, "out", None))
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
