"""Homotopy-fibre and slice 2-categories with their comparison 2-functors.

The fibre of F over c is the Grothendieck construction of the restricted
representable diagram, so the unfolded description is a consequence tested
against the construction rather than a second cell grammar.  Cells look like

    object   (a, p)                       p: Fa -> c   (side "over")
    1-cell   (u, phi, p, p')              phi: p => p' o Fu
    2-cell   (al, e, phi, phi', p, p')    e the forced hom-fibre identity

with the dual orientation for side "under" (p: c -> Fa, phi: Fu o p => p').

2-cells of these comma-style 2-categories are determined by their base
2-cell and their boundary 1-cells; `forced_two_cell` resolves the remaining
identity slot by table lookup and fails loudly if the cell does not exist.
"""

from __future__ import annotations

from .core import (COVARIANT, CONTRAVARIANT, TwoCategory, TwoDiagram,
                   TwoFunctor, TwoNaturalTransformation, OplaxTransformation,
                   TwoCatError, hom_category, identity_functor,
                   compose_functors, functor_equal)
from .grothendieck import (grothendieck, pullback_diagram, projection_functor,
                           base_change, grothendieck_morphism)

OVER = "over"
UNDER = "under"


def forced_two_cell(K: TwoCategory, base, src_one, tgt_one):
    """The unique 2-cell of K with the given base slot between the given
    parallel 1-cells; every other slot of such a cell is forced."""
    cands = [t for t in K.two_cells_between(src_one, tgt_one) if t[0] == base]
    if len(cands) != 1:
        raise TwoCatError(f"forced_two_cell: {len(cands)} candidates for base "
                          f"{base!r} between {src_one!r} and {tgt_one!r}")
    return cands[0]


# ---------------------------------------------------------------------------
# representable diagrams and homotopy fibres
# ---------------------------------------------------------------------------

def representable_diagram(C: TwoCategory, c, side: str = OVER) -> TwoDiagram:
    """The hom 2-functor into categories: side "over" sends a to C(a, c) with
    transports by precomposition (contravariant); side "under" sends a to
    C(c, a) with transports by postcomposition (covariant)."""
    fibres = {a: (hom_category(C, a, c) if side == OVER else hom_category(C, c, a))
              for a in C.objects}
    one, two = {}, {}
    for f, (a, b) in C.one_cells.items():
        if side == OVER:
            src, tgt = fibres[b], fibres[a]
            on_obj = {p: C.comp1(p, f) for p in src.objects}
            on_one = {x: C.rwhisk(x, f) for x in src.one_cells}
        else:
            src, tgt = fibres[a], fibres[b]
            on_obj = {p: C.comp1(f, p) for p in src.objects}
            on_one = {x: C.lwhisk(f, x) for x in src.one_cells}
        on_two = {x: tgt.id2[on_one[x]] for x in src.one_cells}
        one[f] = TwoFunctor(src, tgt, on_obj, on_one, on_two, name=f"hom[{f}]")
    for al, (f, g) in C.two_cells.items():
        a, b = C.one_cells[f]
        if side == OVER:
            comp = {p: C.lwhisk(p, al) for p in fibres[b].objects}
        else:
            comp = {p: C.rwhisk(al, p) for p in fibres[a].objects}
        two[al] = TwoNaturalTransformation(one[f], one[g], comp, name=f"hom[{al}]")
    variance = CONTRAVARIANT if side == OVER else COVARIANT
    return TwoDiagram(C, variance, fibres, one, two,
                      name=f"{C.name}(-,{c})" if side == OVER else f"{C.name}({c},-)")


def comma_diagram(F: TwoFunctor, c, side: str = OVER) -> TwoDiagram:
    return pullback_diagram(F, representable_diagram(F.target, c, side))


def comma(F: TwoFunctor, c, side: str = OVER) -> TwoCategory:
    """Homotopy fibre of F over (or under) c; slices are the identity case."""
    G = grothendieck(comma_diagram(F, c, side))
    G.name = f"{F.name}|{c}|{side}"
    return G


def comma_projection(F: TwoFunctor, c, side: str = OVER, K: TwoCategory = None) -> TwoFunctor:
    if K is None:
        K = comma(F, c, side)
    return projection_functor(comma_diagram(F, c, side), K)


def induced_fibre_functor(F: TwoFunctor, h, side: str = OVER,
                          src: TwoCategory = None, tgt: TwoCategory = None) -> TwoFunctor:
    """Transport along a base 1-cell h: composition with h on the c side."""
    C = F.target
    c, c2 = (C.dom1(h), C.cod1(h)) if side == OVER else (C.cod1(h), C.dom1(h))
    src = src if src is not None else comma(F, c, side)
    tgt = tgt if tgt is not None else comma(F, c2, side)

    def move_p(p):
        return C.comp1(h, p) if side == OVER else C.comp1(p, h)

    def move_phi(phi):
        return C.lwhisk(h, phi) if side == OVER else C.rwhisk(phi, h)

    on_obj = {(a, p): (a, move_p(p)) for (a, p) in src.objects}
    on_one = {(u, phi, p, p2): (u, move_phi(phi), move_p(p), move_p(p2))
              for (u, phi, p, p2) in src.one_cells}
    on_two = {(al, e, f1, f2, p, p2): (al, move_phi(e), move_phi(f1),
                                       move_phi(f2), move_p(p), move_p(p2))
              for (al, e, f1, f2, p, p2) in src.two_cells}
    return TwoFunctor(src, tgt, on_obj, on_one, on_two, name=f"({h})_*")


def induced_fibre_transformation(F: TwoFunctor, psi, side: str = OVER,
                                 Fh: TwoFunctor = None, Fh2: TwoFunctor = None) -> TwoNaturalTransformation:
    """Transport along a base 2-cell psi: h => h', with component
    (1_a, psi o 1_p) over, (1_a, 1_p o psi) under."""
    C = F.target
    A = F.source
    h, h2 = C.dom2(psi), C.cod2(psi)
    Fh = Fh if Fh is not None else induced_fibre_functor(F, h, side)
    Fh2 = Fh2 if Fh2 is not None else induced_fibre_functor(F, h2, side)
    comp = {}
    for (a, p) in Fh.source.objects:
        phi = C.hcomp(psi, C.unit2(p)) if side == OVER else C.hcomp(C.unit2(p), psi)
        comp[(a, p)] = (A.id1[a], phi, Fh.on_obj[(a, p)][1], Fh2.on_obj[(a, p)][1])
    return TwoNaturalTransformation(Fh, Fh2, comp, name=f"({psi})_*")


def fibre_diagram(F: TwoFunctor, side: str = OVER) -> TwoDiagram:
    """The homotopy-fibre 2-functor: covariant over the target for "over",
    contravariant for "under"."""
    C = F.target
    fibres = {c: comma(F, c, side) for c in C.objects}
    one, two = {}, {}
    for h, (c, c2) in C.one_cells.items():
        if side == OVER:
            one[h] = induced_fibre_functor(F, h, side, fibres[c], fibres[c2])
        else:
            one[h] = induced_fibre_functor(F, h, side, fibres[c2], fibres[c])
    for psi, (h, h2) in C.two_cells.items():
        two[psi] = induced_fibre_transformation(F, psi, side, one[h], one[h2])
    variance = COVARIANT if side == OVER else CONTRAVARIANT
    return TwoDiagram(C, variance, fibres, one, two, name=f"fib({F.name},{side})")


# ---------------------------------------------------------------------------
# the assembled projection, its section, and the oplax witness
# ---------------------------------------------------------------------------

def projections(F: TwoFunctor, side: str = OVER):
    """Per-fibre projections assemble into Pi with section iota and an oplax
    witness between iota o Pi and the identity.

    Returns (fibre diagram, assembled 2-category, Pi, iota, witness).
    """
    A, C = F.source, F.target
    fib = fibre_diagram(F, side)
    G = grothendieck(fib)

    Pi = TwoFunctor(G, A,
                    {o: o[1][0] for o in G.objects},
                    {m: m[1][0] for m in G.one_cells},
                    {t: t[1][0] for t in G.two_cells},
                    name=f"Pi({F.name})")

    def unit_obj(a):
        return (F.o(a), (a, C.id1[F.o(a)]))

    def unit_one(u):
        a, b = A.one_cells[u]
        fu = F.f1(u)
        p0, p1 = C.id1[F.o(a)], C.id1[F.o(b)]
        if side == OVER:
            # inner (u, 1_Fu): (a, Fu o 1_Fa) -> (b, 1_Fb) in the fibre at Fb
            inner = (u, C.id2[fu], C.comp1(fu, p0), p1)
        else:
            # inner (u, 1_Fu): (a, 1_Fa) -> (b, 1_Fb o Fu) in the fibre at Fa
            inner = (u, C.id2[fu], p0, C.comp1(p1, fu))
        return (fu, inner, (a, p0), (b, p1))

    iota_obj = {a: unit_obj(a) for a in A.objects}
    iota_one = {u: unit_one(u) for u in A.one_cells}
    iota_two = {}
    for al, (u, v) in A.two_cells.items():
        iota_two[al] = _assembled_two_cell(G, F.f2(al), al, iota_one[u], iota_one[v])
    iota = TwoFunctor(A, G, iota_obj, iota_one, iota_two, name=f"iota({F.name})")

    witness = _projection_witness(F, side, G, Pi, iota)
    return fib, G, Pi, iota, witness


def _assembled_two_cell(G: TwoCategory, base, inner_base, src_one, tgt_one):
    """2-cell of an assembled 2-category whose base slot and inner base slot
    are prescribed; the remaining identity slots are forced."""
    cands = [t for t in G.two_cells_between(src_one, tgt_one)
             if t[0] == base and t[1][0] == inner_base]
    if len(cands) != 1:
        raise TwoCatError(f"_assembled_two_cell: {len(cands)} candidates for "
                          f"({base!r}, {inner_base!r})")
    return cands[0]


def _projection_witness(F, side, G, Pi, iota):
    A, C = F.source, F.target
    IP = compose_functors(iota, Pi)
    one = identity_functor(G)
    # over: witness iota Pi => 1; under: witness 1 => iota Pi
    Fw, Gw = (IP, one) if side == OVER else (one, IP)
    comp = {}
    for o in G.objects:
        c, (a, p) = o
        p0 = C.id1[F.o(a)]
        if side == OVER:
            # (p, (1_a, 1_p)): (Fa, (a, 1_Fa)) -> (c, (a, p))
            inner = (A.id1[a], C.id2[p], C.comp1(p, p0), p)
        else:
            # (p, (1_a, 1_p)): (c, (a, p)) -> (Fa, (a, 1_Fa))
            inner = (A.id1[a], C.id2[p], p, p)
        comp[o] = (p, inner, (a, p0), (a, p)) if side == OVER else \
                  (p, inner, (a, p), (a, p0))
    nat = {}
    for m in G.one_cells:
        src_o, tgt_o = G.one_cells[m]
        gf_side = G.comp1(Gw.f1(m), comp[src_o])
        ff_side = G.comp1(comp[tgt_o], Fw.f1(m))
        phi = m[1][1]  # the comma datum of the inner 1-cell
        inner_al = A.id2[m[1][0]]
        nat[m] = _assembled_two_cell(G, phi, inner_al, gf_side, ff_side)
    return OplaxTransformation(Fw, Gw, comp, nat, direction="gf_first",
                               name=f"proj_witness({F.name},{side})")


# ---------------------------------------------------------------------------
# retraction from the comma of an assembled morphism onto the fibrewise comma
# ---------------------------------------------------------------------------

def retraction_R(gamma, c, y, side: str = OVER, GD=None, GE=None, intG=None):
    """The comparison retraction between the comma of the assembled morphism
    and the fibrewise comma, its section, and the oplax witness.

    For side "over" (covariant diagrams): R: (int Gamma) over (c, y) ->
    Gamma_c over y, section embeds at c, witness 1 => section o R.
    For side "under" (contravariant diagrams) the orientations dualize.

    Returns (K, L, R, section, witness) with K the ambient comma and L the
    fibrewise one.
    """
    from .grothendieck import grothendieck as _g
    D, E = gamma.source, gamma.target
    C = D.base
    cov = D.variance == COVARIANT
    if (side == OVER) != cov:
        raise TwoCatError("retraction_R: side must match the diagram variance")
    GD = GD if GD is not None else _g(D)
    GE = GE if GE is not None else _g(E)
    intG = intG if intG is not None else grothendieck_morphism(gamma, GD, GE)
    Dc = D.ob[c]
    K = comma(intG, (c, y), side)
    L = comma(gamma.at(c), y, side)
    e1 = C.id1[c]

    def transport(p, x):
        return D.one[p].o(x)

    if side == OVER:
        def r_obj(o):
            (a, x), (p, v, gx, yy) = o
            return (transport(p, x), v)

        def r_one(m):
            (f, u, x, x2), (al, psi, v, vt, gx, yy), P, P2 = m
            p, p2 = P[0], P2[0]
            w = Dc.comp1(D.one[p2].f1(u), D.two[al].at(x))
            return (w, psi, P[1], P2[1])

        def r_two(t):
            (be, phi, u, u2, x, x2) = t[0]
            m_src, m_tgt = K.two_cells[t][0], K.two_cells[t][1]
            p2 = m_src[3][0]
            al = m_src[1][0]
            base = Dc.hcomp(D.one[p2].f2(phi), Dc.unit2(D.two[al].at(x)))
            return forced_two_cell(L, base, r_one(m_src), r_one(m_tgt))
    else:
        def r_obj(o):
            (a, x), (p, v, yy, gx) = o
            return (transport(p, x), v)

        def r_one(m):
            M, Phi, P, P2 = m
            (f, u, x, x2) = M
            (al, psi, v, vt, yy, gx) = Phi
            p, p2 = P[0], P2[0]
            # al: f o p => p'; image 1-cell al^*x' o p^*u
            w = Dc.comp1(D.two[al].at(x2), D.one[p].f1(u))
            return (w, psi, P[1], P2[1])

        def r_two(t):
            (be, phi, u, u2, x, x2) = t[0]
            m_src, m_tgt = K.two_cells[t][0], K.two_cells[t][1]
            p = m_src[2][0]
            al2 = m_tgt[1][0]
            base = Dc.hcomp(Dc.unit2(D.two[al2].at(x2)), D.one[p].f2(phi))
            return forced_two_cell(L, base, r_one(m_src), r_one(m_tgt))

    R = TwoFunctor(K, L,
                   {o: r_obj(o) for o in K.objects},
                   {m: r_one(m) for m in K.one_cells},
                   {t: r_two(t) for t in K.two_cells},
                   name=f"R({gamma.name},{c},{y})")

    # section: embed the fibrewise comma at c
    def s_obj(o):
        x, v = o
        return ((c, x), (e1, v, gamma.at(c).o(x), y) if side == OVER
                else (e1, v, y, gamma.at(c).o(x)))

    def s_one(m):
        u, psi, v, v2 = m
        x, x2 = Dc.one_cells[u]
        M = (e1, u, x, x2)
        P, P2 = s_obj((x, v))[1], s_obj((x2, v2))[1]
        if side == OVER:
            tgt1 = GE.comp1(P2, intG.f1(M))
            Phi = (C.id2[e1], psi, P[1], tgt1[1], P[2], P[3])
        else:
            src1 = GE.comp1(intG.f1(M), P)
            Phi = (C.id2[e1], psi, src1[1], P2[1], src1[2], src1[3])
        if Phi not in GE.two_cells:
            raise TwoCatError(f"retraction_R: section comma datum missing at {m!r}")
        return (M, Phi, P, P2)

    def s_two(t):
        be, e, psi, psi2, v, v2 = t
        m_src, m_tgt = L.two_cells[t]
        u, u2 = m_src[0], m_tgt[0]
        x, x2 = Dc.one_cells[u]
        base = (C.id2[e1], be, u, u2, x, x2)
        if base not in GD.two_cells:
            raise TwoCatError(f"retraction_R: section base cell missing at {t!r}")
        return forced_two_cell(K, base, s_one(m_src), s_one(m_tgt))

    section = TwoFunctor(L, K,
                         {o: s_obj(o) for o in L.objects},
                         {m: s_one(m) for m in L.one_cells},
                         {t: s_two(t) for t in L.two_cells},
                         name=f"cbar({gamma.name},{c},{y})")

    witness = _retraction_witness(gamma, c, y, side, K, R, section, GD, GE, intG)
    return K, L, R, section, witness


def _retraction_witness(gamma, c, y, side, K, R, section, GD, GE, intG):
    D = gamma.source
    C = D.base
    SR = compose_functors(section, R)
    one = identity_functor(K)
    # over: 1 => section R ; under: section R => 1
    Fw, Gw = (one, SR) if side == OVER else (SR, one)
    e1 = C.id1[c]
    comp = {}
    for o in K.objects:
        (a, x), P = o
        p = P[0]
        w = D.one[p].o(x)
        if side == OVER:
            M = (p, D.ob[c].id1[w], x, w)
            comp[o] = (M, GE.unit2(P), P, section.on_obj[R.on_obj[o]][1])
        else:
            M = (p, D.ob[c].id1[w], w, x)
            comp[o] = (M, GE.unit2(P), section.on_obj[R.on_obj[o]][1], P)
    nat = {}
    for m in K.one_cells:
        src_o, tgt_o = K.one_cells[m]
        gf_side = K.comp1(Gw.f1(m), comp[src_o])
        ff_side = K.comp1(comp[tgt_o], Fw.f1(m))
        # base slot: the comma datum al of m with identity fibre part
        al = m[1][0]
        theta = _groth_identity_base(D, GD, al, gf_side[0], ff_side[0])
        nat[m] = forced_two_cell(K, theta, gf_side, ff_side)
    return OplaxTransformation(Fw, Gw, comp, nat, direction="gf_first",
                               name=f"retr_witness({gamma.name})")


def _groth_identity_base(D, GD, al, M_src, M_tgt):
    """The 2-cell (al, identity) of the assembled 2-category between the
    given assembled 1-cells; its fibre slot is an identity 2-cell."""
    cands = [t for t in GD.two_cells_between(M_src, M_tgt)
             if t[0] == al and _is_identity_two(D, t)]
    if len(cands) != 1:
        raise TwoCatError(f"_groth_identity_base: {len(cands)} candidates for "
                          f"{al!r} between {M_src!r} and {M_tgt!r}")
    return cands[0]


def _is_identity_two(D, t):
    al, phi = t[0], t[1]
    C = D.base
    f = C.dom2(al)
    a, b = C.one_cells[f]
    fib = D.ob[b] if D.variance == COVARIANT else D.ob[a]
    return phi in fib.id2.values()


# ---------------------------------------------------------------------------
# sections over a point of the pulled-back assembly
# ---------------------------------------------------------------------------

def section_jz_iz(F: TwoFunctor, D: TwoDiagram, c, z, side: str = OVER,
                  GD=None, GFD=None, Fbar=None):
    """The embedding j_z of the homotopy fibre into the pulled-back assembly,
    the induced retraction pibar from the comma of the comparison functor,
    its section i_z, and the oplax witness relating i_z o pibar to 1.

    Returns (K0, K1, j_z, pibar, i_z, witness) where K0 is the homotopy fibre
    of F at c and K1 the comma of the comparison 2-functor at (c, z).
    """
    A, C = F.source, F.target
    cov = D.variance == COVARIANT
    if (side == OVER) == cov:
        raise TwoCatError("section_jz_iz: side over needs a contravariant "
                          "diagram, side under a covariant one")
    if z not in D.ob[c].objects:
        raise TwoCatError(f"section_jz_iz: {z!r} is not an object of the fibre at {c!r}")
    if GD is None or GFD is None or Fbar is None:
        FD, Fbar = base_change(F, D)
        GFD, GD = Fbar.source, Fbar.target
    K0 = comma(F, c, side)
    K1 = comma(Fbar, (c, z), side)

    def pz(p):
        return D.one[p].o(z)

    def jz_one(m):
        u, phi, p, p2 = m
        return (u, D.two[phi].at(z), pz(p), pz(p2))

    jz_obj = {(a, p): (a, pz(p)) for (a, p) in K0.objects}
    jz_on_one = {m: jz_one(m) for m in K0.one_cells}
    jz_on_two = {}
    for t in K0.two_cells:
        al = t[0]
        m_src, m_tgt = K0.two_cells[t]
        s1, t1 = jz_on_one[m_src], jz_on_one[m_tgt]
        end = A.dom1(m_src[0]) if side == OVER else A.cod1(m_src[0])
        fib = D.ob[F.o(end)]
        e_key = t1[1] if side == OVER else s1[1]
        cell = (al, fib.id2[e_key], s1[1], t1[1], s1[2], s1[3])
        if cell not in GFD.two_cells:
            raise TwoCatError(f"section_jz_iz: j_z image missing at {t!r}")
        jz_on_two[t] = cell
    j_z = TwoFunctor(K0, GFD, jz_obj, jz_on_one, jz_on_two, name=f"j_{z}")

    pibar = TwoFunctor(
        K1, K0,
        {o: (o[0][0], o[1][0]) for o in K1.objects},
        {m: (m[0][0], m[1][0], m[2][0], m[3][0]) for m in K1.one_cells},
        {t: forced_two_cell(K0, t[0][0],
                            (K1.two_cells[t][0][0][0], K1.two_cells[t][0][1][0],
                             K1.two_cells[t][0][2][0], K1.two_cells[t][0][3][0]),
                            (K1.two_cells[t][1][0][0], K1.two_cells[t][1][1][0],
                             K1.two_cells[t][1][2][0], K1.two_cells[t][1][3][0]))
         for t in K1.two_cells},
        name=f"pibar({F.name},{c},{z})")

    def iz_obj(o):
        a, p = o
        w = pz(p)
        fib = D.ob[F.o(a)]
        P = (p, fib.id1[w], w, z) if side == OVER else (p, fib.id1[w], z, w)
        return ((a, w), P)

    def iz_one(m):
        u, phi, p, p2 = m
        M = jz_on_one[m]
        P, P2 = iz_obj((A.dom1(u), p))[1], iz_obj((A.cod1(u), p2))[1]
        end = A.dom1(u) if side == OVER else A.cod1(u)
        fib = D.ob[F.o(end)]
        if side == OVER:
            T1 = GD.comp1(P2, Fbar.f1(M))
            Phi = (phi, fib.id2[T1[1]], P[1], T1[1], P[2], P[3])
        else:
            S1 = GD.comp1(Fbar.f1(M), P)
            Phi = (phi, fib.id2[S1[1]], S1[1], P2[1], S1[2], S1[3])
        if Phi not in GD.two_cells:
            raise TwoCatError(f"section_jz_iz: i_z comma datum missing at {m!r}")
        return (M, Phi, P, P2)

    iz_on_one = {m: iz_one(m) for m in K0.one_cells}
    iz_on_two = {}
    for t in K0.two_cells:
        m_src, m_tgt = K0.two_cells[t]
        iz_on_two[t] = forced_two_cell(K1, jz_on_two[t],
                                       iz_on_one[m_src], iz_on_one[m_tgt])
    i_z = TwoFunctor(K0, K1, {o: iz_obj(o) for o in K0.objects},
                     iz_on_one, iz_on_two, name=f"i_{z}")

    witness = _section_witness(F, D, side, K1, pibar, i_z, GD, GFD, Fbar)
    return K0, K1, j_z, pibar, i_z, witness


def _section_witness(F, D, side, K1, pibar, i_z, GD, GFD, Fbar):
    A = F.source
    IZP = compose_functors(i_z, pibar)
    one = identity_functor(K1)
    # over: witness 1 => i_z pibar; under: witness i_z pibar => 1
    Fw, Gw = (one, IZP) if side == OVER else (IZP, one)
    comp = {}
    for o in K1.objects:
        (a, x), P = o
        v = P[1]
        tgt_o = IZP.o(o)
        if side == OVER:
            M_w = (A.id1[a], v, x, tgt_o[0][1])
            comp[o] = (M_w, GD.unit2(P), P, tgt_o[1])
        else:
            M_w = (A.id1[a], v, tgt_o[0][1], x)
            comp[o] = (M_w, GD.unit2(P), tgt_o[1], P)
    nat = {}
    for m in K1.one_cells:
        src_o, tgt_o = K1.one_cells[m]
        gf_side = K1.comp1(Gw.f1(m), comp[src_o])
        ff_side = K1.comp1(comp[tgt_o], Fw.f1(m))
        beta = m[1][1]  # fibre slot of the comma datum of m
        S_M, T_M = gf_side[0], ff_side[0]
        theta = (A.id2[m[0][0]], beta, S_M[1], T_M[1], S_M[2], S_M[3])
        if theta not in GFD.two_cells:
            raise TwoCatError(f"section witness: naturality base missing at {m!r}")
        nat[m] = forced_two_cell(K1, theta, gf_side, ff_side)
    return OplaxTransformation(Fw, Gw, comp, nat, direction="gf_first",
                               name="section_witness")


# ---------------------------------------------------------------------------
# base change between comma 2-categories
# ---------------------------------------------------------------------------

def comma_base_change(F: TwoFunctor, G: TwoFunctor, H: TwoFunctor,
                      T: TwoFunctor, d, side: str = OVER) -> TwoFunctor:
    """For a strictly commuting square T o G = H o F, the induced 2-functor
    between the homotopy fibres of G at d and of H at T(d), acting by
    (a, p) -> (Fa, Tp); it commutes with both projections."""
    if not functor_equal(compose_functors(T, G), compose_functors(H, F)):
        raise TwoCatError("comma_base_change: square does not commute")
    src = comma(G, d, side)
    tgt = comma(H, T.o(d), side)
    on_obj = {(a, p): (F.o(a), T.f1(p)) for (a, p) in src.objects}
    on_one = {(u, phi, p, p2): (F.f1(u), T.f2(phi), T.f1(p), T.f1(p2))
              for (u, phi, p, p2) in src.one_cells}
    on_two = {}
    for (al, e, f1, f2, p, p2) in src.two_cells:
        cell = (F.f2(al), T.f2(e), T.f2(f1), T.f2(f2), T.f1(p), T.f1(p2))
        if cell not in tgt.two_cells:
            raise TwoCatError(f"comma_base_change: image cell missing at {al!r}")
        on_two[(al, e, f1, f2, p, p2)] = cell
    return TwoFunctor(src, tgt, on_obj, on_one, on_two, name=f"bar({F.name})@{d}")
