"""Command-line surface: construction summaries, homology queries, and the
bundled verification suites.

Exit codes: 0 all checks pass, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from .core import TwoCatError, identity_functor, validate, validate_diagram
from .comma import OVER, UNDER, comma
from .grothendieck import grothendieck
from .hocolim import hocolim
from .homology import homology, normalized_chain_complex
from .manifest import Manifest, ManifestError, parse
from .nerves import diag_nn, double_nerve, is_category, nerve_category, wbar_double_nerve
from .simplicial import BudgetError, set_simplex_budget
from .verify import SUITES, run_suite


def bundled_manifest_path():
    return resources.files("twocat").joinpath("data/corpus.manifest.json")


def load_manifest(args) -> Manifest:
    path = args.manifest or str(bundled_manifest_path())
    return parse(path)


def emit(args, report: dict) -> int:
    text = json.dumps(report, indent=1, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    print(text)
    return 0 if report.get("status", "pass") == "pass" else 1


def _require(m: Manifest, kind: str, name: str):
    pool = getattr(m, kind)
    if name not in pool:
        raise ManifestError([f"no {kind} entry named {name!r}"])
    return pool[name]


def cmd_validate(args):
    m = load_manifest(args)
    checks = []
    names = [args.name] if args.name else sorted(m.two_categories)
    for name in names:
        rep = validate(_require(m, "two_categories", name))
        checks.append({"name": f"validate[{name}]",
                       "status": "pass" if rep.ok else "fail",
                       "detail": "ok" if rep.ok else "; ".join(map(str, rep.violations[:5]))})
    for name in (sorted(m.diagrams) if not args.name else []):
        rep = validate_diagram(m.diagrams[name])
        checks.append({"name": f"diagram[{name}]",
                       "status": "pass" if rep.ok else "fail",
                       "detail": "ok" if rep.ok else "; ".join(map(str, rep.violations[:5]))})
    status = "pass" if all(c["status"] == "pass" for c in checks) else "fail"
    return emit(args, {"suite": "validate", "truncation": args.trunc,
                       "checks": checks, "status": status})


def _level_report(args, name, X):
    return emit(args, {"suite": name, "truncation": args.trunc,
                       "checks": [{"name": f"levels[{args.name}]",
                                   "status": "pass",
                                   "detail": str(X.sizes())}],
                       "status": "pass"})


def cmd_nerve(args):
    m = load_manifest(args)
    C = _require(m, "two_categories", args.name)
    if is_category(C):
        return _level_report(args, "nerve", nerve_category(C, args.trunc))
    return _level_report(args, "nerve", diag_nn(C, args.trunc))


def cmd_wbar(args):
    m = load_manifest(args)
    C = _require(m, "two_categories", args.name)
    return _level_report(args, "wbar", wbar_double_nerve(C, args.trunc))


def cmd_diag(args):
    m = load_manifest(args)
    C = _require(m, "two_categories", args.name)
    return _level_report(args, "diag", diag_nn(C, args.trunc))


def cmd_groth(args):
    m = load_manifest(args)
    D = _require(m, "diagrams", args.name)
    G = grothendieck(D)
    rep = validate(G)
    return emit(args, {"suite": "groth", "truncation": args.trunc,
                       "checks": [{"name": f"groth[{args.name}]",
                                   "status": "pass" if rep.ok else "fail",
                                   "detail": f"cells {G.counts()}" if rep.ok
                                   else "; ".join(map(str, rep.violations[:5]))}],
                       "status": "pass" if rep.ok else "fail"})


def cmd_hocolim(args):
    m = load_manifest(args)
    D = _require(m, "diagrams", args.name)
    S = hocolim(D, args.trunc)
    return emit(args, {"suite": "hocolim", "truncation": args.trunc,
                       "checks": [{"name": f"hocolim[{args.name}]",
                                   "status": "pass",
                                   "detail": str([L.counts() for L in S.levels])}],
                       "status": "pass"})


def cmd_comma(args):
    m = load_manifest(args)
    F = (identity_functor(_require(m, "two_categories", args.functor[3:]))
         if args.functor.startswith("id:")
         else _require(m, "two_functors", args.functor))
    K = comma(F, args.object, args.side)
    rep = validate(K)
    return emit(args, {"suite": "comma", "truncation": args.trunc,
                       "checks": [{"name": f"comma[{args.functor},{args.object},{args.side}]",
                                   "status": "pass" if rep.ok else "fail",
                                   "detail": f"cells {K.counts()}"}],
                       "status": "pass" if rep.ok else "fail"})


def cmd_homology(args):
    m = load_manifest(args)
    if args.comma:
        fname, obj, side = args.comma.rsplit(":", 2)
        F = (identity_functor(_require(m, "two_categories", fname[3:]))
             if fname.startswith("id:") else _require(m, "two_functors", fname))
        X = diag_nn(comma(F, obj, side), args.trunc)
        label = args.comma
    else:
        C = _require(m, "two_categories", args.name)
        X = diag_nn(C, args.trunc)
        label = args.name
    cc = normalized_chain_complex(X)
    degrees = [args.degree] if args.degree is not None else list(range(args.trunc))
    checks = [{"name": f"H_{i}[{label}]", "status": "pass",
               "detail": str(homology(cc, i))} for i in degrees]
    return emit(args, {"suite": "homology", "truncation": args.trunc,
                       "checks": checks, "status": "pass"})


def cmd_verify(args):
    m = load_manifest(args)
    suite = args.suite_name or args.suite or "all"
    report = run_suite(m, suite, args.trunc)
    return emit(args, report)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="twocat",
                                 description="Finite strict 2-category toolkit")
    ap.add_argument("--manifest", help="manifest path (default: bundled corpus)")
    ap.add_argument("--trunc", type=int, default=None,
                    help="truncation bound (suite defaults: 3 for isos, 4 for homology)")
    ap.add_argument("--out", help="write the JSON report to this path")
    ap.add_argument("--budget", type=int, default=None,
                    help="abort when any simplex level exceeds this size")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate named 2-categories and diagrams")
    p.add_argument("--name")
    p.set_defaults(fn=cmd_validate, default_trunc=3)

    for cname, fn in (("nerve", cmd_nerve), ("wbar", cmd_wbar), ("diag", cmd_diag)):
        p = sub.add_parser(cname, help=f"{cname} level sizes of a named 2-category")
        p.add_argument("--name", required=True)
        p.set_defaults(fn=fn, default_trunc=3)

    p = sub.add_parser("groth", help="assemble a named diagram and validate it")
    p.add_argument("--name", required=True)
    p.set_defaults(fn=cmd_groth, default_trunc=3)

    p = sub.add_parser("hocolim", help="level summaries of the colimit of a named diagram")
    p.add_argument("--name", required=True)
    p.set_defaults(fn=cmd_hocolim, default_trunc=3)

    p = sub.add_parser("comma", help="homotopy fibre of a named 2-functor")
    p.add_argument("--functor", required=True,
                   help="functor name, or id:CAT for an identity")
    p.add_argument("--object", required=True)
    p.add_argument("--side", choices=(OVER, UNDER), default=OVER)
    p.set_defaults(fn=cmd_comma, default_trunc=3)

    p = sub.add_parser("homology", help="truncated integral homology of a diagonal nerve")
    p.add_argument("--name", help="2-category name")
    p.add_argument("--comma", help="FUNCTOR:OBJECT:SIDE (FUNCTOR may be id:CAT)")
    p.add_argument("--degree", type=int)
    p.set_defaults(fn=cmd_homology, default_trunc=4)

    p = sub.add_parser("verify", help="run a bundled verification suite")
    p.add_argument("suite_name", nargs="?", choices=SUITES)
    p.add_argument("--suite", choices=SUITES)
    p.set_defaults(fn=cmd_verify, default_trunc=None)

    args = ap.parse_args(argv)
    if args.trunc is None:
        args.trunc = getattr(args, "default_trunc", 3)
    if args.budget is not None:
        set_simplex_budget(args.budget)
    try:
        return args.fn(args)
    except ManifestError as exc:
        print(json.dumps({"status": "input-error", "errors": exc.errors[:20]},
                         indent=1, sort_keys=True))
        return 2
    except BudgetError as exc:
        print(json.dumps({"status": "input-error", "errors": [str(exc)]}))
        return 2
    except FileNotFoundError as exc:
        print(json.dumps({"status": "input-error", "errors": [str(exc)]}))
        return 2
    except TwoCatError as exc:
        print(json.dumps({"status": "fail", "errors": [str(exc)]}))
        return 1


if __name__ == "__main__":
    sys.exit(main())
