"""The chain as a bimodule: semisimple part, atypical zig-zag, verifications.

The chain splits into a semisimple part (simples boxed with typical
quantum-group modules, arranged in a (t,r)-table of bipartitions) and one
indecomposable atypical part whose Loewy graph is a zig-zag of diamonds,
one column per atypical label, plus a lone extra vertex.  Flattening the
quantum-group side (p_*) or the centralizer side (q_*) of the atypical part
reproduces closed-form sums, and the whole decomposition satisfies two
induction identities tying tensoring with the dual fundamental module to
restriction; these are the headline checks of the artifact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .fusion import GrothVector, chain_decompose, fuse_with_v
from .partitions import (
    Bipartition,
    atyp,
    atypical_bipartition,
    bip_str,
    gswap,
)
from .uqmod import (
    BarLabel,
    bar,
    bar_cover,
    bar_subquotients,
    bar_to_plain,
    dim_bar,
    gbar,
    simple_subquotients,
)
from .xcat import (
    atypical_columns,
    column_top_label,
    dim_simple_x,
    extra_vertex_label,
    q_expand,
    res_right_d,
    res_right_k,
)

SemisimplePair = tuple[Bipartition, BarLabel]


def _hook(k: int, ones: int) -> tuple:
    return (k,) + (1,) * ones


@lru_cache(maxsize=None)
def semisimple_part(m: int, n: int) -> tuple[SemisimplePair, ...]:
    """All (bipartition, typical quantum label) pairs of the semisimple part."""
    if m < 0 or n < 0:
        raise ValueError("need m, n >= 0")
    if m + n == 0:
        return ()
    if m < n:
        return tuple((gswap(lam), gbar(z)) for lam, z in semisimple_part(n, m))
    pairs: list[SemisimplePair] = []
    a = m - n
    if m > n:
        for s in range(1, n + 1):
            for k in range(1, a + s + 1):
                if k == a:
                    continue
                pairs.append(((_hook(k, s - k + a), (s,)),
                              bar("Z", s + k + a + 1, k - a, s + a)))
        for s in range(a + 2, m + 1):
            for k in range(1, s - a):
                pairs.append((((s,), _hook(k, s - k - a)),
                              bar("Z", s + k + a + 1, s - a, k + a)))
        for s in range(1, n):
            for k in range(1, min(s, n - s) + 1):
                pairs.append((((1,) * (s + k + a), (s, k)),
                              bar("Z", s + k + a, 1 - k - a, s + a)))
        for s in range(a + 1, m):
            for k in range(1, min(s, m - s) + 1):
                if k == a + 1:
                    continue
                pairs.append((((s, k), (1,) * (s + k - a)),
                              bar("Z", s + k + a, s - a, 1 - k + a)))
        for k in range(1, a // 2 + 1):
            for s in range(k, a - k + 1):
                pairs.append((((s, k) + (1,) * (a - s - k), ()),
                              bar("Z", s + k + a, s - a, 1 - k + a)))
        for s in range(a // 2 + 1, a):
            for k in range(1 - s + a, min(s, m - s) + 1):
                pairs.append((((s, k), (1,) * (s + k - a)),
                              bar("Z", s + k + a, s - a, 1 - k + a)))
    else:
        for s in range(1, m + 1):
            for k in range(1, s + 1):
                pairs.append(((_hook(k, s - k), (s,)), bar("Z", s + k + 1, k, s)))
        for s in range(2, m + 1):
            for k in range(1, s):
                pairs.append((((s,), _hook(k, s - k)), bar("Z", s + k + 1, s, k)))
        for s in range(2, m):
            for k in range(2, min(s, m - s) + 1):
                pairs.append((((1,) * (s + k), (s, k)), bar("Z", s + k, 1 - k, s)))
        for s in range(1, m):
            for k in range(2, min(s, m - s) + 1):
                pairs.append((((s, k), (1,) * (s + k)), bar("Z", s + k, s, 1 - k)))
    for lam, z in pairs:
        zp = bar_to_plain(z)
        assert zp.r not in (0, zp.s), f"atypical label {z} in the semisimple part"
    return tuple(sorted(pairs, key=lambda p: (p[1].t, p[1].r, p[0])))


# ---------------------------------------------------------------------------
# the atypical part as a graph
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BimodVertex:
    x: Bipartition
    z: BarLabel
    layer: str  # "top" | "mid" | "bot" | "extra"
    col: int    # column index, -1 for the extra vertex


@dataclass(frozen=True)
class BimoduleGraph:
    m: int
    n: int
    vertices: tuple[BimodVertex, ...]
    edges: tuple[tuple[int, int, str], ...]  # (src, dst, "uq" | "cent")


def _column_mids(z_top: BarLabel, prev_top, next_top) -> tuple[BarLabel, BarLabel]:
    """Orient the two cover middles toward the previous and next columns."""
    mA, mB = bar_subquotients(bar_cover(z_top))[1:3]
    if prev_top is not None:
        if mA == prev_top:
            pair = mA, mB
        elif mB == prev_top:
            pair = mB, mA
        else:
            raise AssertionError(f"no middle of {z_top} matches previous top {prev_top}")
    elif next_top is not None:
        pair = (mA, mB) if mB == next_top else (mB, mA)
    else:
        return mA, mB
    if next_top is not None and pair[1] != next_top:
        raise AssertionError(f"no middle of {z_top} matches next top {next_top}")
    return pair


@lru_cache(maxsize=None)
def atypical_part(m: int, n: int) -> BimoduleGraph:
    """The indecomposable atypical summand, with both edge colours."""
    cols, extra, host = atypical_columns(m, n)
    xbip = atypical_bipartition
    z_extra = extra_vertex_label(m, n)
    if not cols:
        v = (BimodVertex(xbip(extra), z_extra, "extra", -1),)
        return BimoduleGraph(m, n, v, ())
    tops = [column_top_label(lab, m, n) for lab in cols]
    vertices: list[BimodVertex] = []
    edges: list[tuple[int, int, str]] = []
    idx: dict[tuple[int, str], int] = {}

    def put(v: BimodVertex, key) -> int:
        idx[key] = len(vertices)
        vertices.append(v)
        return idx[key]

    for i, lab in enumerate(cols):
        x = xbip(lab)
        prev_top = tops[i - 1] if i > 0 else None
        next_top = tops[i + 1] if i + 1 < len(cols) else None
        mid_prev, mid_next = _column_mids(tops[i], prev_top, next_top)
        put(BimodVertex(x, tops[i], "top", i), (i, "top"))
        put(BimodVertex(x, mid_prev, "mid", i), (i, "midp"))
        put(BimodVertex(x, mid_next, "mid", i), (i, "midn"))
        put(BimodVertex(x, tops[i], "bot", i), (i, "bot"))
        for mk in ("midp", "midn"):
            edges.append((idx[(i, "top")], idx[(i, mk)], "uq"))
            edges.append((idx[(i, mk)], idx[(i, "bot")], "uq"))
    extra_i = put(BimodVertex(xbip(extra), z_extra, "extra", -1), ("extra",))
    for i in range(len(cols)):
        if i > 0:
            edges.append((idx[(i - 1, "top")], idx[(i, "midp")], "cent"))
            edges.append((idx[(i, "midp")], idx[(i - 1, "bot")], "cent"))
        if i + 1 < len(cols):
            edges.append((idx[(i + 1, "top")], idx[(i, "midn")], "cent"))
            edges.append((idx[(i, "midn")], idx[(i + 1, "bot")], "cent"))
    edges.append((idx[(host, "top")], extra_i, "cent"))
    edges.append((extra_i, idx[(host, "bot")], "cent"))
    return BimoduleGraph(m, n, tuple(vertices), tuple(edges))


def p_atypical(m: int, n: int) -> GrothVector:
    """Quantum-side flattening of the atypical part: (X-term, simple bar) pairs."""
    cols, extra, _host = atypical_columns(m, n)
    xbip = atypical_bipartition
    out = GrothVector()
    if not cols:
        out.add((("D", xbip(extra)), extra_vertex_label(m, n)))
        return out
    tops = [column_top_label(lab, m, n) for lab in cols]
    for i, lab in enumerate(cols):
        out.add((("K", xbip(lab)), tops[i]))
    first_mid, _ = _column_mids(tops[0], None, tops[1] if len(cols) > 1 else None)
    _, last_mid = _column_mids(tops[-1], tops[-2] if len(cols) > 1 else None, None)
    out.add((("D", xbip(cols[0])), first_mid))
    out.add((("D", xbip(cols[-1])), last_mid))
    return out


def q_atypical(m: int, n: int) -> GrothVector:
    """Centralizer-side flattening: (X-term, quantum indecomposable) pairs."""
    cols, extra, _host = atypical_columns(m, n)
    xbip = atypical_bipartition
    out = GrothVector()
    for lab in cols:
        out.add((("D", xbip(lab)), bar_cover(column_top_label(lab, m, n))))
    out.add((("D", xbip(extra)), extra_vertex_label(m, n)))
    return out


def closed_form_q(m: int, n: int) -> GrothVector:
    """The flattened atypical part as displayed in closed form."""
    out = GrothVector()
    if m < n:
        for (term, z), mult in closed_form_q(n, m).items():
            out.add(((term[0], gswap(term[1])), gbar(z)), mult)
        return out
    a = m - n
    xbip = atypical_bipartition
    if n == 0:
        out.add((("D", xbip(atyp("delta", False, m, 0))), bar("Z", 1, 0, m)))
        return out
    if m > n:
        for s in range(1, n + 1):
            out.add((("D", xbip(atyp("delta", False, a, s))), bar("R", s, 0, a + s - 1)))
        for s in range(2, min(a, n) + 1):
            out.add((("D", xbip(atyp("delta1", False, a, s))), bar("R", s, 0, a - s + 1)))
        for s in range(a, n - 1):
            out.add((("D", xbip(atyp("delta2", False, a, s))), bar("R", s + 1, s - a, 0)))
        out.add((("D", xbip(atyp("delta", False, a, 0))), bar("Z", 1, 0, a)))
        return out
    if m == 1:
        out.add((("D", ((), ())), bar("Z", 1, 0, 0)))
        return out
    for s in range(1, m - 1):
        out.add((("D", xbip(atyp("delta2", True, 0, s))), bar("R", s - 1, 0, s)))
    for s in range(0, m - 1):
        out.add((("D", xbip(atyp("delta2", False, 0, s))), bar("R", s - 1, s, 0)))
    out.add((("D", ((), ())), bar("Z", 1, 0, 0)))
    return out


def closed_form_p(m: int, n: int) -> GrothVector:
    out = GrothVector()
    if m < n:
        for (term, z), mult in closed_form_p(n, m).items():
            out.add(((term[0], gswap(term[1])), gbar(z)), mult)
        return out
    a = m - n
    xbip = atypical_bipartition
    if n == 0:
        out.add((("D", xbip(atyp("delta", False, m, 0))), bar("Z", 1, 0, m)))
        return out
    if m > n:
        for s in range(1, n + 1):
            out.add((("K", xbip(atyp("delta", False, a, s))), bar("Z", s, 0, a + s - 1)))
        for s in range(2, min(a, n) + 1):
            out.add((("K", xbip(atyp("delta1", False, a, s))), bar("Z", s, 0, a - s + 1)))
        for s in range(a, n - 1):
            out.add((("K", xbip(atyp("delta2", False, a, s))), bar("Z", s + 1, s - a, 0)))
        out.add((("D", xbip(atyp("delta", False, a, n))), bar("Z", n + 1, 0, m)))
        if 2 * n <= m:
            out.add((("D", xbip(atyp("delta1", False, a, n))), bar("Z", n + 1, 0, m - 2 * n)))
        elif 2 * n == m + 1:
            out.add((("D", xbip(atyp("delta1", False, a, a))), bar("Z", a + 1, 0, 0)))
        else:
            out.add((("D", xbip(atyp("delta2", False, a, n - 2))), bar("Z", n, 2 * n - m - 1, 0)))
        return out
    if m == 1:
        out.add((("D", ((), ())), bar("Z", 1, 0, 0)))
        return out
    for s in range(1, m - 1):
        out.add((("K", xbip(atyp("delta2", True, 0, s))), bar("Z", s - 1, 0, s)))
    for s in range(0, m - 1):
        out.add((("K", xbip(atyp("delta2", False, 0, s))), bar("Z", s - 1, s, 0)))
    out.add((("D", xbip(atyp("delta2", True, 0, m - 2))), bar("Z", m - 2, 0, m - 1)))
    out.add((("D", xbip(atyp("delta2", False, 0, m - 2))), bar("Z", m - 2, m - 1, 0)))
    return out


# ---------------------------------------------------------------------------
# flattened bimodule and the induction identities
# ---------------------------------------------------------------------------

def q_flattened(m: int, n: int) -> GrothVector:
    """The fully assembled bimodule after centralizer-side flattening."""
    out = GrothVector()
    for lam, z in semisimple_part(m, n):
        out.add((("D", lam), z))
    out.add_all(q_atypical(m, n))
    return out


def p_flattened(m: int, n: int) -> GrothVector:
    """The fully assembled bimodule after quantum-side flattening."""
    out = GrothVector()
    for lam, z in semisimple_part(m, n):
        out.add((("D", lam), z))
    out.add_all(p_atypical(m, n))
    return out


def verify_identity_tensor(m: int, n: int) -> bool:
    """Tensoring the q-flattened chain with the dual fundamental module
    matches restriction of the next chain, flattened again."""
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    lhs = GrothVector()
    for (term, z), mult in q_flattened(m, n).items():
        for w, wm in fuse_with_v(bar_to_plain(z)).items():
            lhs.add((term, w), mult * wm)
    rhs = GrothVector()
    for (term, z), mult in q_flattened(m, n + 1).items():
        rd = q_expand(res_right_d(term[1], m, n + 1), m, n)
        w = bar_to_plain(z)
        for dterm, dm in rd.items():
            rhs.add((dterm, w), mult * dm)
    return lhs == rhs


def verify_identity_proj(m: int, n: int) -> bool:
    """Quantum-side flattening of (chain x dual fundamental) matches the
    restricted p-flattened next chain."""
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    lhs = GrothVector()
    for (term, z), mult in p_flattened(m, n).items():
        for w, wm in fuse_with_v(bar_to_plain(z)).items():
            for sub in simple_subquotients(w):
                lhs.add((term, sub), mult * wm)
    rhs = GrothVector()
    for (term, z), mult in p_flattened(m, n + 1).items():
        res = (res_right_k if term[0] == "K" else res_right_d)(term[1], m, n + 1)
        w = bar_to_plain(z)
        for rterm, rm in res.items():
            rhs.add((rterm, w), mult * rm)
    return lhs == rhs


def dimension_audit(m: int, n: int) -> bool:
    """Total bimodule dimension, and quantum content against the chain."""
    total = 0
    for lam, z in semisimple_part(m, n):
        total += dim_simple_x(lam, m, n) * dim_bar(z)
    for v in atypical_part(m, n).vertices:
        total += dim_simple_x(v.x, m, n) * dim_bar(v.z)
    if total != 3 ** (m + n):
        return False
    expected = GrothVector()
    for (term, z), mult in q_flattened(m, n).items():
        expected.add(bar_to_plain(z), mult * dim_simple_x(term[1], m, n))
    return expected == chain_decompose(m, n)


def p_weighted_against_chain(m: int, n: int) -> bool:
    """p-flattened bimodule, weighted by X-dimensions, against the
    subquotient content of the chain."""
    from .xcat import dim_term

    lhs = GrothVector()
    for (term, z), mult in p_flattened(m, n).items():
        lhs.add(bar_to_plain(z), mult * dim_term(term, m, n))
    rhs = GrothVector()
    for x, mult in chain_decompose(m, n).items():
        for sub in simple_subquotients(x):
            rhs.add(sub, mult)
    return lhs == rhs


def projections_match(m: int, n: int) -> bool:
    return (p_atypical(m, n) == closed_form_p(m, n)
            and q_atypical(m, n) == closed_form_q(m, n))


# ---------------------------------------------------------------------------
# the (t, r) tables of the semisimple part
# ---------------------------------------------------------------------------

def table_grid(m: int, n: int):
    cells: dict[tuple[int, int], Bipartition] = {}
    for lam, z in semisimple_part(m, n):
        key = (z.t, z.r)
        assert key not in cells, f"duplicate table cell {key}"
        cells[key] = lam
    if not cells:
        return cells, [], []
    ts = sorted({t for t, _ in cells})
    rs = sorted({r for _, r in cells})
    return cells, list(range(ts[0], ts[-1] + 1)), list(range(rs[0], rs[-1] + 1))


def table_csv(m: int, n: int) -> str:
    cells, ts, rs = table_grid(m, n)
    if not cells:
        return "\n"
    lines = ["," + ",".join(f"t={t}" for t in ts)]
    for r in reversed(rs):
        row = [f"r={r}"]
        for t in ts:
            lam = cells.get((t, r))
            row.append(bip_str(lam) if lam is not None else "0")
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"
