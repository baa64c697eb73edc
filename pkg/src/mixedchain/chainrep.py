"""Explicit chain realization: braiding operators and the coproduct action.

The two fundamental three-dimensional modules span the chain; on adjacent
pairs we have the 9x9 operators g (two left factors), h (two right factors)
and the wall contraction e.  Embedded along the chain they generate the
walled Brauer algebra at the specialized parameters (-1, 1/q^2, -1/q^2),
and they commute with the full coproduct action of the quantum supergroup.
Both statements are verified here as exact matrix identities, symbolically
or at rational evaluation points.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .qarith import MINUS_ONE, ONE, Q, EvalPoint, QScalar, qpow
from .sparse import SparseMatrix, embed_factor, embed_with_diags
from .uqmod import THREE, THREE_BAR, build_simple


class IndexOutOfRange(ValueError):
    pass


class SingularParams(ValueError):
    pass


@dataclass(frozen=True)
class QwbParams:
    gamma: QScalar
    delta: QScalar
    theta: QScalar


def chain_params() -> QwbParams:
    """The specialization realized on the chain: (-1, q^-2, -q^-2)."""
    return QwbParams(MINUS_ONE, qpow(-2), qpow(-2, -1))


# ---------------------------------------------------------------------------
# factor matrices in the chain basis
# ---------------------------------------------------------------------------
#
# Chain bases: the left factor uses (f1, f2, f3) = (phi_0, beta_0, beta_1);
# the right factor uses (v1, v2, v3) = (beta_0, phi_1, phi_0), i.e. the
# reversal of the stored order of the dual fundamental module.

_PERM_LEFT = (0, 1, 2)
_PERM_RIGHT = (2, 1, 0)


def _permuted(mat: SparseMatrix, perm) -> SparseMatrix:
    inv = {stored: chain for chain, stored in enumerate(perm)}
    out = SparseMatrix(mat.nrows, mat.ncols)
    for r, c, v in mat.entries():
        out.set(inv[r], inv[c], v)
    return out


def factor_matrices(dual: bool) -> dict[str, SparseMatrix]:
    rep = build_simple(THREE_BAR if dual else THREE)
    perm = _PERM_RIGHT if dual else _PERM_LEFT
    return {g: _permuted(m, perm) for g, m in rep.mats.items()}


def fundamental_ops() -> tuple[SparseMatrix, SparseMatrix, SparseMatrix]:
    """The 9x9 operators (g, e, h) in the bases f_i(x)f_j, f_i(x)v_j, v_i(x)v_j."""
    qm2 = qpow(-2)
    qm1 = qpow(-1)
    lo = qm2 - ONE  # q^-2 - 1
    g = SparseMatrix(9, 9)
    h = SparseMatrix(9, 9)

    def idx(i, j):
        return 3 * (i - 1) + (j - 1)

    # g: diagonal part
    g.set(idx(1, 1), idx(1, 1), qm2)
    for i, j in ((2, 2), (3, 3)):
        g.set(idx(i, j), idx(i, j), MINUS_ONE)
    # g: swaps with q^-2 - 1 corrections on the lower member of each pair
    for i, j in ((1, 2), (1, 3), (2, 3)):
        g.set(idx(j, i), idx(i, j), -qm1)
        g.set(idx(j, i), idx(j, i), lo)
        g.set(idx(i, j), idx(j, i), -qm1)
    # h: same spectral projectors, transposed pairing
    h.set(idx(1, 1), idx(1, 1), qm2)
    for i, j in ((2, 2), (3, 3)):
        h.set(idx(i, j), idx(i, j), MINUS_ONE)
    for i, j in ((1, 2), (1, 3), (2, 3)):
        h.set(idx(i, j), idx(i, j), lo)
        h.set(idx(j, i), idx(i, j), -qm1)
        h.set(idx(i, j), idx(j, i), -qm1)

    # e: rank-one contraction through the wall, image spanned by
    # w = q^2 f1(x)v1 + q f2(x)v2 - f3(x)v3, with column weights (1, -q, 1).
    e = SparseMatrix(9, 9)
    w = ((idx(1, 1), qpow(2)), (idx(2, 2), Q), (idx(3, 3), MINUS_ONE))
    diag = {idx(1, 1): ONE, idx(2, 2): -Q, idx(3, 3): ONE}
    for col, dv in diag.items():
        for row, wv in w:
            e.set(row, col, dv * wv)
    return g, e, h


@dataclass
class ChainContext:
    """Cached operator store for a fixed chain shape (m left, n right factors)."""

    m: int
    n: int
    _cache: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.m < 0 or self.n < 0 or self.m + self.n < 1:
            raise ValueError("need m, n >= 0 with m + n >= 1")

    @property
    def nsites(self) -> int:
        return self.m + self.n

    @property
    def dim(self) -> int:
        return 3 ** self.nsites

    def factors(self) -> list[dict[str, SparseMatrix]]:
        if "factors" not in self._cache:
            left = factor_matrices(dual=False)
            right = factor_matrices(dual=True)
            self._cache["factors"] = [left] * self.m + [right] * self.n
        return self._cache["factors"]

    def chain_operator(self, which: str, index: int = 0) -> SparseMatrix:
        """g_j on factors (m-j, m-j+1), h_i on (m+i, m+i+1), e on (m, m+1)."""
        key = (which, index)
        if key in self._cache:
            return self._cache[key]
        g9, e9, h9 = fundamental_ops()
        m, n = self.m, self.n
        if which == "g":
            if not (1 <= index <= m - 1):
                raise IndexOutOfRange(f"g_{index} needs 1 <= j <= m-1 = {m - 1}")
            left, op, right = m - index - 1, g9, n + index - 1
        elif which == "h":
            if not (1 <= index <= n - 1):
                raise IndexOutOfRange(f"h_{index} needs 1 <= i <= n-1 = {n - 1}")
            left, op, right = m + index - 1, h9, n - index - 1
        elif which == "e":
            if m < 1 or n < 1:
                raise IndexOutOfRange("the wall contraction needs m, n >= 1")
            left, op, right = m - 1, e9, n - 1
        else:
            raise ValueError(f"unknown chain operator {which!r}")
        mat = embed_factor(op, 3 ** left, 3 ** right, ONE)
        self._cache[key] = mat
        return mat

    def _diag(self, gen: str, factors: slice) -> list:
        mats = self.factors()[factors]
        diag = [ONE]
        for f in mats:
            d = f[gen].diagonal()
            diag = [a * b for a in diag for b in d]
        return diag

    def quantum_group_action(self, gen: str) -> SparseMatrix:
        """Iterated coproduct action of a generator on the full chain."""
        key = ("uq", gen)
        if key in self._cache:
            return self._cache[key]
        facs = self.factors()
        N = self.nsites
        if gen in ("K", "Kinv", "k", "kinv"):
            diag = self._diag(gen, slice(0, N))
            mat = SparseMatrix(self.dim, self.dim)
            for i, v in enumerate(diag):
                mat.set(i, i, v)
            self._cache[key] = mat
            return mat
        # twists: E picks up K on the right, F picks K^-1 on the left,
        # B picks k^-1 on the left, C picks k on the right.
        left_gen = {"E": None, "F": "Kinv", "B": "kinv", "C": None}[gen]
        right_gen = {"E": "K", "F": None, "B": None, "C": "k"}[gen]
        total = SparseMatrix(self.dim, self.dim)
        for p in range(N):
            left = self._diag(left_gen, slice(0, p)) if left_gen else [ONE] * 3 ** p
            right = (self._diag(right_gen, slice(p + 1, N))
                     if right_gen else [ONE] * 3 ** (N - p - 1))
            total = total + embed_with_diags(facs[p][gen], left, right)
        self._cache[key] = total
        return total

    def operators(self) -> list[tuple[str, SparseMatrix]]:
        ops = []
        for j in range(1, self.m):
            ops.append((f"g{j}", self.chain_operator("g", j)))
        for i in range(1, self.n):
            ops.append((f"h{i}", self.chain_operator("h", i)))
        if self.m >= 1 and self.n >= 1:
            ops.append(("e", self.chain_operator("e")))
        return ops


# ---------------------------------------------------------------------------
# relation and centralizer reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    relation: str
    m: int
    n: int
    backend: str
    ok: bool
    seconds: float = 0.0


def _as_backend(mat: SparseMatrix, point: EvalPoint | None) -> SparseMatrix:
    if point is None:
        return mat
    return mat.map_values(lambda v: v.eval_at(point))


def _scalar(value: QScalar, point: EvalPoint | None):
    return value if point is None else value.eval_at(point)


def qwb_relation_residuals(ctx: ChainContext, params: QwbParams,
                           point: EvalPoint | None = None):
    """Yield (name, residual) for every walled-Brauer relation on the chain."""
    m, n = ctx.m, ctx.n
    gam = _scalar(params.gamma, point)
    dlt = _scalar(params.delta, point)
    tht = _scalar(params.theta, point)
    gpd = gam + dlt
    if not gpd:
        raise SingularParams("gamma + delta = 0")
    one = Fraction(1) if point is not None else ONE
    ident = SparseMatrix.identity(ctx.dim, one)
    g = {j: _as_backend(ctx.chain_operator("g", j), point) for j in range(1, m)}
    h = {i: _as_backend(ctx.chain_operator("h", i), point) for i in range(1, n)}
    e = (_as_backend(ctx.chain_operator("e"), point)
         if (m >= 1 and n >= 1) else None)

    def quad(x):
        return (x - ident.scale(gam)) * (x - ident.scale(dlt))

    for j, gj in g.items():
        yield f"quad_g{j}", quad(gj)
    for i, hi in h.items():
        yield f"quad_h{i}", quad(hi)
    for j in g:
        for i in h:
            yield f"comm_g{j}_h{i}", g[j] * h[i] - h[i] * g[j]
    for j1 in g:
        for j2 in g:
            if j2 - j1 > 1:
                yield f"comm_g{j1}_g{j2}", g[j1] * g[j2] - g[j2] * g[j1]
    for i1 in h:
        for i2 in h:
            if i2 - i1 > 1:
                yield f"comm_h{i1}_h{i2}", h[i1] * h[i2] - h[i2] * h[i1]
    for j in range(1, m - 1):
        yield f"braid_g{j}", g[j] * g[j + 1] * g[j] - g[j + 1] * g[j] * g[j + 1]
    for i in range(1, n - 1):
        yield f"braid_h{i}", h[i] * h[i + 1] * h[i] - h[i + 1] * h[i] * h[i + 1]
    if e is not None:
        yield "ee", e * e - e.scale((tht + one) / gpd)
        if 1 in g:
            yield "ege", e * g[1] * e - e
        if 1 in h:
            yield "ehe", e * h[1] * e - e
        for j in g:
            if j >= 2:
                yield f"comm_e_g{j}", e * g[j] - g[j] * e
        for i in h:
            if i >= 2:
                yield f"comm_e_h{i}", e * h[i] - h[i] * e
        if 1 in g and 1 in h:
            # h1^-1 from the quadratic relation: h^-1 = (h - (gamma+delta)) / (-gamma delta)
            scale = -(gam * dlt)
            h1inv = (h[1] - ident.scale(gpd)).scale(one / scale if point is not None
                                                    else scale.invert())
            core = e * g[1] * h1inv * e
            dif = g[1] - h[1]
            yield "eghinv_right", core * dif
            yield "eghinv_left", dif * core


def _timed_results(ctx, backend, residuals) -> list[CheckResult]:
    import time

    out = []
    t0 = time.monotonic()
    for name, res in residuals:
        t1 = time.monotonic()
        out.append(CheckResult(name, ctx.m, ctx.n, backend, res.is_zero(),
                               round(t1 - t0, 6)))
        t0 = t1
    return out


def check_qwb_relations(ctx: ChainContext, params: QwbParams | None = None,
                        point: EvalPoint | None = None) -> list[CheckResult]:
    params = params or chain_params()
    backend = "symbolic" if point is None else f"eval(q={point.value})"
    return _timed_results(ctx, backend, qwb_relation_residuals(ctx, params, point))


def centralizer_residuals(ctx: ChainContext, point: EvalPoint | None = None):
    """Commutators of every chain operator with every coproduct generator."""
    gens = {gname: _as_backend(ctx.quantum_group_action(gname), point)
            for gname in ("E", "F", "K", "k", "B", "C")}
    for opname, op in ctx.operators():
        opb = _as_backend(op, point)
        for gname, gmat in gens.items():
            yield f"[{opname},{gname}]", opb * gmat - gmat * opb


def check_centralizer(ctx: ChainContext, point: EvalPoint | None = None) -> list[CheckResult]:
    backend = "symbolic" if point is None else f"eval(q={point.value})"
    return _timed_results(ctx, backend, centralizer_residuals(ctx, point))


# ---------------------------------------------------------------------------
# the generated endomorphism algebra, numerically
# ---------------------------------------------------------------------------

def _reduce_against(basis: dict, vec: dict):
    """Row-reduce a flat sparse vector against pivot-indexed basis rows."""
    while vec:
        pivot = min(vec)
        row = basis.get(pivot)
        if row is None:
            lead = vec[pivot]
            basis[pivot] = {k: v / lead for k, v in vec.items()}
            return True
        factor = vec[pivot]
        for k, v in row.items():
            w = vec.get(k, 0) - factor * v
            if w:
                vec[k] = w
            else:
                vec.pop(k, None)
    return False


def endomorphism_algebra_dimension(ctx: ChainContext, point: EvalPoint,
                                   max_dim: int | None = None) -> int:
    """Dimension of the unital algebra generated by the chain operators.

    Computed at a rational evaluation point by closing the linear span of
    {1, g_j, h_i, e} under multiplication.  A non-generic point can only
    undershoot, never overshoot, the generic dimension.
    """
    gens = [SparseMatrix.identity(ctx.dim, Fraction(1))]
    gens += [_as_backend(op, point) for _, op in ctx.operators()]

    def flat(mat):
        return {(r, c): v for r, c, v in mat.entries()}

    basis: dict = {}
    elements: list[SparseMatrix] = []
    queue = list(gens)
    while queue:
        mat = queue.pop()
        if not _reduce_against(basis, flat(mat)):
            continue
        elements.append(mat)
        if max_dim is not None and len(elements) > max_dim:
            raise AssertionError("generated algebra exceeds the expected dimension")
        for g in gens[1:]:
            queue.append(mat * g)
            queue.append(g * mat)
    return len(elements)
