"""Truncated simplicial, bisimplicial and trisimplicial sets.

All structure maps are materialized as total dictionaries so that every
application is a lookup and fault injection in fixtures is direct.
Degenerate simplices are stored explicitly; the normalized chain complex
(homology module) quotients them later.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import TwoCatError, ValidationReport


class ShallowWindowError(TwoCatError):
    """A construction needed levels beyond the stored truncation window."""


class BudgetError(TwoCatError):
    """A level grew past the configured simplex budget."""


_SIMPLEX_BUDGET = 500_000


def set_simplex_budget(n: int) -> None:
    global _SIMPLEX_BUDGET
    _SIMPLEX_BUDGET = n


def _ordered(cells) -> tuple:
    seen = {}
    for c in cells:
        seen.setdefault(c, None)
    if len(seen) > _SIMPLEX_BUDGET:
        raise BudgetError(f"level size {len(seen)} exceeds the simplex budget "
                          f"{_SIMPLEX_BUDGET}; raise it or lower the truncation")
    return tuple(sorted(seen, key=repr))


# ---------------------------------------------------------------------------
# simplicial sets
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class TruncatedSimplicialSet:
    n_max: int
    cells: dict          # level -> tuple of simplices
    faces: dict          # (n, i) -> {simplex: simplex}
    degens: dict         # (n, i) -> {simplex: simplex}
    name: str = ""

    def level(self, n) -> tuple:
        return self.cells.get(n, ())

    def face(self, n, i, x):
        return self.faces[(n, i)][x]

    def degen(self, n, i, x):
        return self.degens[(n, i)][x]

    def sizes(self):
        return [len(self.level(n)) for n in range(self.n_max + 1)]

    def __repr__(self):
        return f"<sSet {self.name or ''} N={self.n_max} sizes={self.sizes()}>"


def build_simplicial(n_max, level_fn, face_fn, degen_fn, name="") -> TruncatedSimplicialSet:
    """Materialize a truncated simplicial set from enumeration and map rules."""
    cells = {n: _ordered(level_fn(n)) for n in range(n_max + 1)}
    faces, degens = {}, {}
    for n in range(1, n_max + 1):
        lower = set(cells[n - 1])
        for i in range(n + 1):
            table = {}
            for x in cells[n]:
                y = face_fn(n, i, x)
                if y not in lower:
                    raise TwoCatError(f"{name}: face d_{i} leaves level {n - 1} at {x!r}")
                table[x] = y
            faces[(n, i)] = table
    for n in range(n_max):
        upper = set(cells[n + 1])
        for i in range(n + 1):
            table = {}
            for x in cells[n]:
                y = degen_fn(n, i, x)
                if y not in upper:
                    raise TwoCatError(f"{name}: degeneracy s_{i} leaves level {n + 1} at {x!r}")
                table[x] = y
            degens[(n, i)] = table
    return TruncatedSimplicialSet(n_max, cells, faces, degens, name=name)


def check_simplicial_set(X: TruncatedSimplicialSet) -> ValidationReport:
    r = ValidationReport()
    N = X.n_max
    for n in range(1, N + 1):
        for i in range(n + 1):
            if (n, i) not in X.faces:
                r.add(f"missing face table d_{i} at level {n}")
    for n in range(N):
        for i in range(n + 1):
            if (n, i) not in X.degens:
                r.add(f"missing degeneracy table s_{i} at level {n}")
    if not r.ok:
        return r
    for n in range(2, N + 1):
        for j in range(n + 1):
            for i in range(j):
                for x in X.level(n):
                    if X.face(n - 1, i, X.face(n, j, x)) != X.face(n - 1, j - 1, X.face(n, i, x)):
                        r.add(f"d_{i} d_{j} identity fails at level {n} on {x!r}")
    for n in range(N - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                for x in X.level(n):
                    if X.degen(n + 1, i, X.degen(n, j, x)) != X.degen(n + 1, j + 1, X.degen(n, i, x)):
                        r.add(f"s_{i} s_{j} identity fails at level {n} on {x!r}")
    for n in range(N):
        for j in range(n + 1):
            for i in range(n + 2):
                for x in X.level(n):
                    y = X.degen(n, j, x)
                    got = X.face(n + 1, i, y)
                    if i < j:
                        want = X.degen(n - 1, j - 1, X.face(n, i, x)) if n >= 1 else None
                    elif i in (j, j + 1):
                        want = x
                    else:
                        want = X.degen(n - 1, j, X.face(n, i - 1, x)) if n >= 1 else None
                    if want is not None and got != want:
                        r.add(f"d_{i} s_{j} identity fails at level {n} on {x!r}")
    return r


@dataclass(eq=False)
class SimplicialMap:
    source: TruncatedSimplicialSet
    target: TruncatedSimplicialSet
    maps: dict  # level -> {simplex: simplex}
    name: str = ""

    def at(self, n, x):
        return self.maps[n][x]


def simplicial_map(source, target, fn, name="") -> SimplicialMap:
    if source.n_max != target.n_max:
        raise ShallowWindowError(f"{name}: source and target bounds differ")
    maps = {}
    for n in range(source.n_max + 1):
        tgt_level = set(target.level(n))
        table = {}
        for x in source.level(n):
            y = fn(n, x)
            if y not in tgt_level:
                raise TwoCatError(f"{name}: image of level-{n} simplex {x!r} not in target")
            table[x] = y
        maps[n] = table
    return SimplicialMap(source, target, maps, name=name)


def check_simplicial_map(f: SimplicialMap) -> ValidationReport:
    r = ValidationReport()
    X, Y = f.source, f.target
    for n in range(1, X.n_max + 1):
        for i in range(n + 1):
            for x in X.level(n):
                if f.at(n - 1, X.face(n, i, x)) != Y.face(n, i, f.at(n, x)):
                    r.add(f"map does not commute with d_{i} at level {n} on {x!r}")
    for n in range(X.n_max):
        for i in range(n + 1):
            for x in X.level(n):
                if f.at(n + 1, X.degen(n, i, x)) != Y.degen(n, i, f.at(n, x)):
                    r.add(f"map does not commute with s_{i} at level {n} on {x!r}")
    return r


def verify_iso(f: SimplicialMap) -> bool:
    """True iff the map is a levelwise bijection up to the truncation bound."""
    for n in range(f.source.n_max + 1):
        values = list(f.maps[n].values())
        if len(set(values)) != len(values):
            return False
        if set(values) != set(f.target.level(n)):
            return False
    return True


def compose_simplicial_maps(g: SimplicialMap, f: SimplicialMap) -> SimplicialMap:
    return SimplicialMap(f.source, g.target,
                         {n: {x: g.maps[n][y] for x, y in f.maps[n].items()}
                          for n in f.maps},
                         name=f"{g.name}o{f.name}")


# ---------------------------------------------------------------------------
# bisimplicial sets
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class TruncatedBisimplicialSet:
    p_max: int
    q_max: int
    cells: dict   # (p, q) -> tuple
    hfaces: dict  # (p, q, i) -> table, source (p, q), target (p-1, q)
    hdegens: dict
    vfaces: dict  # (p, q, j) -> table, target (p, q-1)
    vdegens: dict
    name: str = ""

    def level(self, p, q) -> tuple:
        return self.cells.get((p, q), ())

    def hface(self, p, q, i, x):
        return self.hfaces[(p, q, i)][x]

    def vface(self, p, q, j, x):
        return self.vfaces[(p, q, j)][x]

    def hdegen(self, p, q, i, x):
        return self.hdegens[(p, q, i)][x]

    def vdegen(self, p, q, j, x):
        return self.vdegens[(p, q, j)][x]


def build_bisimplicial(p_max, q_max, level_fn, hface_fn, hdegen_fn,
                       vface_fn, vdegen_fn, name="") -> TruncatedBisimplicialSet:
    cells = {(p, q): _ordered(level_fn(p, q))
             for p in range(p_max + 1) for q in range(q_max + 1)}
    B = TruncatedBisimplicialSet(p_max, q_max, cells, {}, {}, {}, {}, name=name)

    def fill(table, key, src, tgt, fn, i):
        out = {}
        allowed = set(cells[tgt])
        for x in cells[src]:
            y = fn(src[0], src[1], i, x)
            if y not in allowed:
                raise TwoCatError(f"{name}: map {key} leaves window at {x!r}")
            out[x] = y
        table[key] = out

    for p in range(p_max + 1):
        for q in range(q_max + 1):
            if p >= 1:
                for i in range(p + 1):
                    fill(B.hfaces, (p, q, i), (p, q), (p - 1, q), hface_fn, i)
            if p < p_max:
                for i in range(p + 1):
                    fill(B.hdegens, (p, q, i), (p, q), (p + 1, q), hdegen_fn, i)
            if q >= 1:
                for j in range(q + 1):
                    fill(B.vfaces, (p, q, j), (p, q), (p, q - 1), vface_fn, j)
            if q < q_max:
                for j in range(q + 1):
                    fill(B.vdegens, (p, q, j), (p, q), (p, q + 1), vdegen_fn, j)
    return B


def _row_as_simplicial(B: TruncatedBisimplicialSet, p) -> TruncatedSimplicialSet:
    cells = {q: B.level(p, q) for q in range(B.q_max + 1)}
    faces = {(q, j): B.vfaces[(p, q, j)] for q in range(1, B.q_max + 1) for j in range(q + 1)}
    degens = {(q, j): B.vdegens[(p, q, j)] for q in range(B.q_max) for j in range(q + 1)}
    return TruncatedSimplicialSet(B.q_max, cells, faces, degens, name=f"{B.name}[{p},*]")


def check_bisimplicial_set(B: TruncatedBisimplicialSet) -> ValidationReport:
    r = ValidationReport()
    # identities in each direction, via the simplicial checker on rows/columns
    for p in range(B.p_max + 1):
        row = _row_as_simplicial(B, p)
        rep = check_simplicial_set(row)
        for v in rep.violations:
            r.add(f"vertical (p={p}): {v}")
    T = transpose(B)
    for q in range(T.p_max + 1):
        row = _row_as_simplicial(T, q)
        rep = check_simplicial_set(row)
        for v in rep.violations:
            r.add(f"horizontal (q={q}): {v}")
    # horizontal/vertical commutation
    for (p, q), xs in B.cells.items():
        for i in range(p + 1):
            for j in range(q + 1):
                for x in xs:
                    if p >= 1 and q >= 1:
                        if B.vface(p - 1, q, j, B.hface(p, q, i, x)) != \
                           B.hface(p, q - 1, i, B.vface(p, q, j, x)):
                            r.add(f"dh_{i} dv_{j} do not commute at ({p},{q}) on {x!r}")
                    if p >= 1 and q < B.q_max:
                        if B.vdegen(p - 1, q, j, B.hface(p, q, i, x)) != \
                           B.hface(p, q + 1, i, B.vdegen(p, q, j, x)):
                            r.add(f"dh_{i} sv_{j} do not commute at ({p},{q}) on {x!r}")
                    if p < B.p_max and q >= 1:
                        if B.vface(p + 1, q, j, B.hdegen(p, q, i, x)) != \
                           B.hdegen(p, q - 1, i, B.vface(p, q, j, x)):
                            r.add(f"sh_{i} dv_{j} do not commute at ({p},{q}) on {x!r}")
                    if p < B.p_max and q < B.q_max:
                        if B.vdegen(p + 1, q, j, B.hdegen(p, q, i, x)) != \
                           B.hdegen(p, q + 1, i, B.vdegen(p, q, j, x)):
                            r.add(f"sh_{i} sv_{j} do not commute at ({p},{q}) on {x!r}")
    return r


def transpose(B: TruncatedBisimplicialSet) -> TruncatedBisimplicialSet:
    swap = lambda table: {(q, p, i): v for (p, q, i), v in table.items()}
    return TruncatedBisimplicialSet(B.q_max, B.p_max,
                                    {(q, p): v for (p, q), v in B.cells.items()},
                                    swap(B.vfaces), swap(B.vdegens),
                                    swap(B.hfaces), swap(B.hdegens),
                                    name=f"{B.name}^T")


def diag(B: TruncatedBisimplicialSet) -> TruncatedSimplicialSet:
    """Diagonal simplicial set: level n = B(n, n), maps applied in both
    directions simultaneously."""
    n_max = min(B.p_max, B.q_max)
    return build_simplicial(
        n_max,
        lambda n: B.level(n, n),
        lambda n, i, x: B.hface(n, n - 1, i, B.vface(n, n, i, x)),
        lambda n, i, x: B.hdegen(n, n + 1, i, B.vdegen(n, n, i, x)),
        name=f"Diag({B.name})")


# ---------------------------------------------------------------------------
# codiagonal (total complex)
# ---------------------------------------------------------------------------

def wbar(B: TruncatedBisimplicialSet, n_max=None) -> TruncatedSimplicialSet:
    """Codiagonal: level n is the set of staircase tuples (t_{n,0},...,t_{0,n})
    with dh_0 t_{p,q} = dv_{q+1} t_{p-1,q+1}; faces and degeneracies mix the
    two directions positionwise."""
    limit = min(B.p_max, B.q_max)
    if n_max is None:
        n_max = limit
    if n_max > limit:
        raise ShallowWindowError(f"wbar: bound {n_max} exceeds window {limit}")

    def level(n):
        if n == 0:
            return [(t,) for t in B.level(0, 0)]
        # index cells at (p-1, q+1) by their top vertical face
        out = []
        partial = [(t,) for t in B.level(n, 0)]
        for k in range(1, n + 1):
            p, q = n - k, k
            index = {}
            for t in B.level(p, q):
                index.setdefault(B.vface(p, q, q, t), []).append(t)
            nxt = []
            for tup in partial:
                prev = tup[-1]
                key = B.hface(n - k + 1, k - 1, 0, prev)
                for t in index.get(key, ()):
                    nxt.append(tup + (t,))
            partial = nxt
        return partial

    def face(n, i, tup):
        out = []
        for pos in range(n):
            p, q = n - pos, pos
            if pos < i:
                out.append(B.hface(p, q, i - pos, tup[pos]))
            else:
                out.append(B.vface(p - 1, q + 1, i, tup[pos + 1]))
        return tuple(out)

    def degen(n, i, tup):
        out = []
        for pos in range(n + 2):
            if pos <= i:
                p, q = n - pos, pos
                out.append(B.hdegen(p, q, i - pos, tup[pos]))
            else:
                p, q = n + 1 - pos, pos - 1
                out.append(B.vdegen(p, q, i, tup[pos - 1]))
        return tuple(out)

    return build_simplicial(n_max, level, face, degen, name=f"Wbar({B.name})")


def aw_map(B: TruncatedBisimplicialSet, n_max=None) -> SimplicialMap:
    """Alexander-Whitney-style comparison Diag B -> Wbar B, sending a diagonal
    simplex t to the tuple of its iterated extreme faces."""
    D = diag(B)
    W = wbar(B, n_max)
    if n_max is not None and n_max != D.n_max:
        D = truncate(D, n_max)

    def fn(n, t):
        # position q holds (dv_{q+1})^(n-q) (dh_0)^q t
        out = []
        for q in range(n + 1):
            x = t
            pp, qq = n, n
            for _ in range(q):
                x = B.hface(pp, qq, 0, x)
                pp -= 1
            for _ in range(n - q):
                x = B.vface(pp, qq, q + 1, x)
                qq -= 1
            out.append(x)
        return tuple(out)

    return simplicial_map(D, W, fn, name=f"aw({B.name})")


def truncate(X: TruncatedSimplicialSet, n_max) -> TruncatedSimplicialSet:
    if n_max > X.n_max:
        raise ShallowWindowError("truncate: cannot extend a simplicial set")
    return TruncatedSimplicialSet(
        n_max,
        {n: X.cells[n] for n in range(n_max + 1)},
        {(n, i): t for (n, i), t in X.faces.items() if n <= n_max},
        {(n, i): t for (n, i), t in X.degens.items() if n < n_max},
        name=X.name)


# ---------------------------------------------------------------------------
# trisimplicial sets
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class TruncatedTrisimplicialSet:
    """Three simplicial directions labelled 0, 1, 2, each with its own bound."""

    bounds: tuple  # (b0, b1, b2)
    cells: dict    # (i0, i1, i2) -> tuple
    faces: dict    # (axis, key, i) -> table
    degens: dict
    name: str = ""

    def level(self, key) -> tuple:
        return self.cells.get(tuple(key), ())

    def face(self, axis, key, i, x):
        return self.faces[(axis, tuple(key), i)][x]

    def degen(self, axis, key, i, x):
        return self.degens[(axis, tuple(key), i)][x]


def build_trisimplicial(bounds, level_fn, face_fn, degen_fn, name="") -> TruncatedTrisimplicialSet:
    b0, b1, b2 = bounds
    keys = [(i, j, k) for i in range(b0 + 1) for j in range(b1 + 1) for k in range(b2 + 1)]
    cells = {key: _ordered(level_fn(key)) for key in keys}
    T = TruncatedTrisimplicialSet(tuple(bounds), cells, {}, {}, name=name)
    for key in keys:
        for axis in range(3):
            deg = key[axis]
            lower = list(key)
            lower[axis] -= 1
            upper = list(key)
            upper[axis] += 1
            if deg >= 1:
                allowed = set(cells[tuple(lower)])
                for i in range(deg + 1):
                    table = {}
                    for x in cells[key]:
                        y = face_fn(axis, key, i, x)
                        if y not in allowed:
                            raise TwoCatError(f"{name}: face axis{axis} d_{i} leaves window at {key} {x!r}")
                        table[x] = y
                    T.faces[(axis, key, i)] = table
            if key[axis] < bounds[axis]:
                allowed = set(cells[tuple(upper)])
                for i in range(deg + 1):
                    table = {}
                    for x in cells[key]:
                        y = degen_fn(axis, key, i, x)
                        if y not in allowed:
                            raise TwoCatError(f"{name}: degeneracy axis{axis} s_{i} leaves window at {key} {x!r}")
                        table[x] = y
                    T.degens[(axis, key, i)] = table
    return T


def tri_slice(T: TruncatedTrisimplicialSet, axis, value) -> TruncatedBisimplicialSet:
    """Freeze one axis; the remaining two become (horizontal, vertical) in
    increasing axis order."""
    rest = [a for a in range(3) if a != axis]
    h, v = rest

    def key_of(p, q):
        key = [None, None, None]
        key[axis], key[h], key[v] = value, p, q
        return tuple(key)

    cells = {(p, q): T.level(key_of(p, q))
             for p in range(T.bounds[h] + 1) for q in range(T.bounds[v] + 1)}
    hf = {(p, q, i): T.faces[(h, key_of(p, q), i)]
          for (p, q) in cells if p >= 1 for i in range(p + 1)}
    hd = {(p, q, i): T.degens[(h, key_of(p, q), i)]
          for (p, q) in cells if p < T.bounds[h] for i in range(p + 1)}
    vf = {(p, q, j): T.faces[(v, key_of(p, q), j)]
          for (p, q) in cells if q >= 1 for j in range(q + 1)}
    vd = {(p, q, j): T.degens[(v, key_of(p, q), j)]
          for (p, q) in cells if q < T.bounds[v] for j in range(q + 1)}
    return TruncatedBisimplicialSet(T.bounds[h], T.bounds[v], cells, hf, hd, vf, vd,
                                    name=f"{T.name}|axis{axis}={value}")


def tri_diag(T: TruncatedTrisimplicialSet) -> TruncatedSimplicialSet:
    n_max = min(T.bounds)
    return build_simplicial(
        n_max,
        lambda n: T.level((n, n, n)),
        lambda n, i, x: T.face(0, (n, n - 1, n - 1), i,
                               T.face(1, (n, n, n - 1), i,
                                      T.face(2, (n, n, n), i, x))),
        lambda n, i, x: T.degen(0, (n, n + 1, n + 1), i,
                                T.degen(1, (n, n, n + 1), i,
                                        T.degen(2, (n, n, n), i, x))),
        name=f"Diag({T.name})")


def check_trisimplicial_set(T: TruncatedTrisimplicialSet) -> ValidationReport:
    r = ValidationReport()
    for axis in range(3):
        for value in range(T.bounds[axis] + 1):
            B = tri_slice(T, axis, value)
            rep = check_bisimplicial_set(B)
            for v in rep.violations:
                r.add(f"slice axis{axis}={value}: {v}")
    return r


def check_simplicial_identities(X) -> ValidationReport:
    """Identity suite for any truncated (multi-)simplicial set."""
    if isinstance(X, TruncatedSimplicialSet):
        return check_simplicial_set(X)
    if isinstance(X, TruncatedBisimplicialSet):
        return check_bisimplicial_set(X)
    if isinstance(X, TruncatedTrisimplicialSet):
        return check_trisimplicial_set(X)
    raise TwoCatError(f"check_simplicial_identities: unsupported {type(X)!r}")


def bisimplicial_from_family(levels, hface_fn, hdegen_fn, p_max=None, name="") -> TruncatedBisimplicialSet:
    """Assemble a bisimplicial set from a family of simplicial sets indexed by
    the horizontal degree, with supplied horizontal structure maps.

    levels[p] provides the column (p, *); hface_fn(p, i, q, x) maps a cell of
    levels[p] at vertical level q into levels[p-1]; hdegen_fn likewise upward.
    """
    if p_max is None:
        p_max = len(levels) - 1
    q_max = min(X.n_max for X in levels[:p_max + 1])

    def level(p, q):
        return levels[p].level(q)

    def vface(p, q, j, x):
        return levels[p].face(q, j, x)

    def vdegen(p, q, j, x):
        return levels[p].degen(q, j, x)

    return build_bisimplicial(p_max, q_max, level,
                              lambda p, q, i, x: hface_fn(p, i, q, x),
                              lambda p, q, i, x: hdegen_fn(p, i, q, x),
                              vface, vdegen, name=name)
