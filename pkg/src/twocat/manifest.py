"""Manifest files: named 2-categories, 2-functors, transformations,
diagrams, and diagram morphisms in a single JSON document.

Composition tables are nested objects keyed by cell identifiers, so hcomp1
of g after f is found at hcomp1[g][f].  Diagrams reference 2-categories and
2-functors by name; identity transports may be omitted and are filled in.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .core import (COVARIANT, CONTRAVARIANT, TwoCategory, TwoDiagram,
                   TwoFunctor, TwoNaturalTransformation, DiagramMorphism,
                   identity_functor, identity_natural)


class ManifestError(Exception):
    def __init__(self, errors):
        self.errors = errors if isinstance(errors, list) else [errors]
        super().__init__("; ".join(self.errors))


@dataclass
class Manifest:
    truncation: int
    two_categories: dict = field(default_factory=dict)
    two_functors: dict = field(default_factory=dict)
    transformations: dict = field(default_factory=dict)
    diagrams: dict = field(default_factory=dict)
    diagram_morphisms: dict = field(default_factory=dict)
    suites: list = field(default_factory=list)


def _table_from_json(obj) -> dict:
    return {(g, f): v for g, row in obj.items() for f, v in row.items()}


def _table_to_json(table) -> dict:
    out = {}
    for (g, f), v in sorted(table.items(), key=repr):
        out.setdefault(g, {})[f] = v
    return out


def _category_from_json(name, doc, errors, where):
    try:
        C = TwoCategory(
            tuple(doc["objects"]),
            {f: tuple(st) for f, st in doc["one_cells"].items()},
            {a: tuple(st) for a, st in doc["two_cells"].items()},
            dict(doc["id1"]), dict(doc["id2"]),
            _table_from_json(doc.get("hcomp1", {})),
            _table_from_json(doc.get("vcomp2", {})),
            _table_from_json(doc.get("hcomp2", {})),
            name=name)
    except (KeyError, TypeError) as exc:
        errors.append(f"{where}: malformed 2-category ({exc})")
        return None
    # reference resolution and table totality
    objs = set(C.objects)
    for f, (s, t) in C.one_cells.items():
        if s not in objs or t not in objs:
            errors.append(f"{where}.one_cells.{f}: unknown identifier")
    for a, (s, t) in C.two_cells.items():
        if s not in C.one_cells or t not in C.one_cells:
            errors.append(f"{where}.two_cells.{a}: unknown identifier")
    from .core import composable1, vcomposable2, hcomposable2
    for g, f in composable1(C):
        if (g, f) not in C.hcomp1:
            errors.append(f"{where}.hcomp1: non-total table, missing ({g}, {f})")
    for b, a in vcomposable2(C):
        if (b, a) not in C.vcomp2:
            errors.append(f"{where}.vcomp2: non-total table, missing ({b}, {a})")
    for b, a in hcomposable2(C):
        if (b, a) not in C.hcomp2:
            errors.append(f"{where}.hcomp2: non-total table, missing ({b}, {a})")
    return C


def _category_to_json(C: TwoCategory) -> dict:
    return {"objects": list(C.objects),
            "one_cells": {f: list(st) for f, st in C.one_cells.items()},
            "two_cells": {a: list(st) for a, st in C.two_cells.items()},
            "id1": dict(C.id1), "id2": dict(C.id2),
            "hcomp1": _table_to_json(C.hcomp1),
            "vcomp2": _table_to_json(C.vcomp2),
            "hcomp2": _table_to_json(C.hcomp2)}


def resolve(doc: dict) -> Manifest:
    """Build a fully resolved Manifest from a JSON document, collecting all
    reference and totality errors."""
    errors = []
    m = Manifest(truncation=doc.get("truncation", 4),
                 suites=list(doc.get("suites", [])))

    for name, sub in doc.get("two_categories", {}).items():
        C = _category_from_json(name, sub, errors, f"two_categories.{name}")
        if C is not None:
            m.two_categories[name] = C

    def named_cat(name, where):
        if name not in m.two_categories:
            errors.append(f"{where}: unknown 2-category {name!r}")
            return None
        return m.two_categories[name]

    for name, sub in doc.get("two_functors", {}).items():
        src = named_cat(sub.get("source"), f"two_functors.{name}.source")
        tgt = named_cat(sub.get("target"), f"two_functors.{name}.target")
        if src is None or tgt is None:
            continue
        F = TwoFunctor(src, tgt, dict(sub.get("on_objects", {})),
                       dict(sub.get("on_one_cells", {})),
                       dict(sub.get("on_two_cells", {})), name=name)
        for c, v in F.on_obj.items():
            if c not in src.objects or v not in tgt.objects:
                errors.append(f"two_functors.{name}.on_objects.{c}: unknown identifier")
        for f, v in F.on_one.items():
            if f not in src.one_cells or v not in tgt.one_cells:
                errors.append(f"two_functors.{name}.on_one_cells.{f}: unknown identifier")
        for a, v in F.on_two.items():
            if a not in src.two_cells or v not in tgt.two_cells:
                errors.append(f"two_functors.{name}.on_two_cells.{a}: unknown identifier")
        m.two_functors[name] = F

    for name, sub in doc.get("transformations", {}).items():
        Fn, Gn = sub.get("source_functor"), sub.get("target_functor")
        if Fn not in m.two_functors or Gn not in m.two_functors:
            errors.append(f"transformations.{name}: unknown functor reference")
            continue
        m.transformations[name] = TwoNaturalTransformation(
            m.two_functors[Fn], m.two_functors[Gn],
            dict(sub.get("components", {})), name=name)

    for name, sub in doc.get("diagrams", {}).items():
        base = named_cat(sub.get("base"), f"diagrams.{name}.base")
        if base is None:
            continue
        variance = sub.get("variance", COVARIANT)
        if variance not in (COVARIANT, CONTRAVARIANT):
            errors.append(f"diagrams.{name}.variance: must be covariant or contravariant")
            continue
        ob = {}
        for c, catname in sub.get("fibres", {}).items():
            fib = named_cat(catname, f"diagrams.{name}.fibres.{c}")
            if fib is not None:
                ob[c] = fib
        if set(ob) != set(base.objects):
            errors.append(f"diagrams.{name}.fibres: must cover exactly the base objects")
            continue
        one = {}
        cov = variance == COVARIANT
        for f, (a, b) in base.one_cells.items():
            ref = sub.get("on_one_cells", {}).get(f)
            if ref is None:
                if f in base.id1.values():
                    c = base.dom1(f)
                    one[f] = identity_functor(ob[c])
                    continue
                errors.append(f"diagrams.{name}.on_one_cells.{f}: missing transport")
                continue
            if ref not in m.two_functors:
                errors.append(f"diagrams.{name}.on_one_cells.{f}: unknown functor {ref!r}")
                continue
            one[f] = m.two_functors[ref]
        two = {}
        for al, (f, g) in base.two_cells.items():
            ref = sub.get("on_two_cells", {}).get(al)
            if ref is None:
                if al in base.id2.values() and f in one:
                    two[al] = identity_natural(one[f])
                    continue
                errors.append(f"diagrams.{name}.on_two_cells.{al}: missing transport")
                continue
            if isinstance(ref, dict):
                if f in one and g in one:
                    two[al] = TwoNaturalTransformation(one[f], one[g],
                                                       dict(ref), name=f"{name}.{al}")
                else:
                    errors.append(f"diagrams.{name}.on_two_cells.{al}: "
                                  f"boundary transports unresolved")
                continue
            if ref not in m.transformations:
                errors.append(f"diagrams.{name}.on_two_cells.{al}: unknown transformation {ref!r}")
                continue
            two[al] = m.transformations[ref]
        if len(one) == len(base.one_cells) and len(two) == len(base.two_cells):
            m.diagrams[name] = TwoDiagram(base, variance, ob, one, two, name=name)
        else:
            errors.append(f"diagrams.{name}: unresolved transports")

    for name, sub in doc.get("diagram_morphisms", {}).items():
        Dn, En = sub.get("source"), sub.get("target")
        if Dn not in m.diagrams or En not in m.diagrams:
            errors.append(f"diagram_morphisms.{name}: unknown diagram reference")
            continue
        D, E = m.diagrams[Dn], m.diagrams[En]
        if D.variance != E.variance:
            errors.append(f"diagram_morphisms.{name}: variance mismatch")
            continue
        comp = {}
        ok = True
        for c, ref in sub.get("components", {}).items():
            if ref not in m.two_functors:
                errors.append(f"diagram_morphisms.{name}.components.{c}: "
                              f"unknown functor {ref!r}")
                ok = False
                continue
            comp[c] = m.two_functors[ref]
        if ok:
            m.diagram_morphisms[name] = DiagramMorphism(D, E, comp, name=name)

    if errors:
        raise ManifestError(errors)
    return m


def parse(path) -> Manifest:
    """Load and resolve a manifest (or .2cat / .2diag fragment) file."""
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ManifestError([f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}"]) from None
    p = str(path)
    if p.endswith(".2cat"):
        doc = {"two_categories": {doc.get("name", "main"): doc}}
    elif p.endswith(".2diag"):
        doc = {"truncation": doc.get("truncation", 4),
               "two_categories": doc.get("two_categories", {}),
               "two_functors": doc.get("two_functors", {}),
               "transformations": doc.get("transformations", {}),
               "diagrams": {doc.get("name", "main"): doc["diagram"]}}
    return resolve(doc)


def serialize(m: Manifest) -> dict:
    """Inverse of resolve(); parse(serialize(m)) reproduces the manifest."""
    doc = {"truncation": m.truncation, "suites": list(m.suites),
           "two_categories": {}, "two_functors": {}, "transformations": {},
           "diagrams": {}, "diagram_morphisms": {}}
    catnames = {}
    for name, C in m.two_categories.items():
        doc["two_categories"][name] = _category_to_json(C)
        catnames[id(C)] = name
    funnames = {}
    for name, F in m.two_functors.items():
        doc["two_functors"][name] = {
            "source": catnames[id(F.source)], "target": catnames[id(F.target)],
            "on_objects": dict(F.on_obj), "on_one_cells": dict(F.on_one),
            "on_two_cells": dict(F.on_two)}
        funnames[id(F)] = name
    for name, s in m.transformations.items():
        doc["transformations"][name] = {
            "source_functor": funnames[id(s.F)], "target_functor": funnames[id(s.G)],
            "components": dict(s.comp)}
    diagnames = {}
    for name, D in m.diagrams.items():
        doc["diagrams"][name] = {
            "base": catnames[id(D.base)], "variance": D.variance,
            "fibres": {c: catnames[id(fib)] for c, fib in D.ob.items()},
            "on_one_cells": {f: funnames[id(F)] for f, F in D.one.items()
                             if id(F) in funnames},
            "on_two_cells": {al: dict(s.comp) for al, s in D.two.items()
                             if not _is_identity_transport(D, al)}}
        diagnames[id(D)] = name
    for name, g in m.diagram_morphisms.items():
        doc["diagram_morphisms"][name] = {
            "source": diagnames[id(g.source)], "target": diagnames[id(g.target)],
            "components": {c: funnames[id(F)] for c, F in g.comp.items()}}
    return doc


def _is_identity_transport(D: TwoDiagram, al) -> bool:
    from .core import natural_equal
    if al not in set(D.base.id2.values()):
        return False
    f = D.base.dom2(al)
    return natural_equal(D.two[al], identity_natural(D.one[f]))


def dump(m: Manifest, path) -> None:
    with open(path, "w") as fh:
        json.dump(serialize(m), fh, indent=1, sort_keys=True)
        fh.write("\n")
