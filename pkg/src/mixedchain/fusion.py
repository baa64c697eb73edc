"""Label-level fusion with the two fundamental three-dimensional modules.

The complete rule table for tensoring any simple module or projective cover
with the fundamental module (s,r) = (1,1) or its dual (2,0), and the
iterated decomposition of the chain built from m copies of the first and n
of the second.  The dispatcher tries the exceptional low-spin cases first,
then the regular families, and insists that exactly one rule fires.
"""

from __future__ import annotations

from functools import lru_cache

from .uqmod import R, RLabel, Z, ZLabel, dim_label

Label = ZLabel | RLabel


class GrothVector(dict):
    """Multiset of labels with positive integer multiplicities."""

    def add(self, label, mult: int = 1) -> None:
        if mult == 0:
            return
        new = self.get(label, 0) + mult
        if new:
            self[label] = new
        else:
            del self[label]

    def add_all(self, other: "GrothVector", mult: int = 1) -> None:
        for label, m in other.items():
            self.add(label, m * mult)

    def __add__(self, other):
        out = GrothVector(self)
        out.add_all(other)
        return out

    def total_dim(self) -> int:
        return sum(m * dim_label(x) for x, m in self.items())


def gv(*pairs) -> GrothVector:
    out = GrothVector()
    for label, mult in pairs:
        out.add(label, mult)
    return out


def dim_of_groth(v: GrothVector) -> int:
    return v.total_dim()


def _rules_with_f(x: Label, a: int, b: int):
    """Candidate decompositions of x (x) Z^{a2,b2}_{1,1}, with a = a1*a2 etc."""
    s, r = x.s, x.r
    out = []
    if isinstance(x, ZLabel):
        # exceptional cases
        if (s, r) == (1, 0):
            out.append(("x:Z10", gv((Z(a, b, 1, 1), 1))))
        if (s, r) == (1, -1):
            out.append(("x:Z1-1", gv((R(a, -b, 2, 0), 1))))
        if s == 1 and r not in (-1, 0, 1):
            out.append(("x:Z1r", gv((Z(a, b, 1, r + 1), 1), (Z(a, -b, 2, r + 1), 1))))
        # regular families
        if r == 0 and s >= 2:
            out.append(("Zs0", gv((Z(a, -b, s - 1, 0), 1), (Z(a, b, s, 1), 1))))
        if r == s and s >= 1:
            out.append(("Zss", gv((Z(a, -b, s + 1, s + 1), 1), (Z(a, b, s, s + 1), 1))))
        if r not in (0, s) and s >= 2:
            if r == -1:
                out.append(("Zt-1", gv((R(a, -b, s + 1, 0), 1), (Z(a, -b, s - 1, -1), 1))))
            elif r == s - 1:
                out.append(("Zts-1", gv((R(a, -b, s - 1, s - 1), 1), (Z(a, -b, s + 1, s), 1))))
            else:
                out.append(("Zt", gv((Z(a, b, s, r + 1), 1), (Z(a, -b, s + 1, r + 1), 1),
                                     (Z(a, -b, s - 1, r), 1))))
    else:
        if (s, r) == (2, 0):
            out.append(("x:R20", gv((R(a, -b, 1, 0), 1), (Z(a, b, 2, 1), 2), (Z(a, -b, 3, 1), 1))))
        if (s, r) == (1, 0):
            out.append(("x:R10", gv((R(a, b, 1, 1), 1), (Z(a, b, 1, 2), 1), (Z(a, -b, 2, 1), 1))))
        if (s, r) == (1, 1):
            out.append(("x:R11", gv((R(a, -b, 2, 2), 1), (Z(a, b, 1, 2), 2), (Z(a, -b, 2, 3), 1))))
        if r == 0 and s >= 3:
            out.append(("Rs0", gv((R(a, -b, s - 1, 0), 1), (Z(a, b, s, 1), 2),
                                  (Z(a, -b, s - 1, 1), 1), (Z(a, -b, s + 1, 1), 1))))
        if r == s and s >= 2:
            out.append(("Rss", gv((R(a, -b, s + 1, s + 1), 1), (Z(a, b, s, s + 1), 2),
                                  (Z(a, -b, s - 1, s), 1), (Z(a, -b, s + 1, s + 2), 1))))
    return out


def _rules_with_v(x: Label, a: int, b: int):
    """Candidate decompositions of x (x) Z^{a2,b2}_{2,0}."""
    s, r = x.s, x.r
    out = []
    if isinstance(x, ZLabel):
        if (s, r) == (1, 0):
            out.append(("x:Z10", gv((Z(a, b, 2, 0), 1))))
        if (s, r) == (1, 1):
            out.append(("x:Z11", gv((Z(a, -b, 1, 0), 1), (Z(a, b, 2, 1), 1))))
        if (s, r) == (1, 2):
            out.append(("x:Z12", gv((R(a, -b, 1, 1), 1))))
        if s == 1 and r not in (0, 1, 2):
            out.append(("x:Z1r", gv((Z(a, -b, 1, r - 1), 1), (Z(a, b, 2, r), 1))))
        if r == 0 and s >= 2:
            out.append(("Zs0", gv((Z(a, b, s + 1, 0), 1), (Z(a, b, s - 1, -1), 1))))
        if r == s and s >= 2:
            out.append(("Zss", gv((Z(a, b, s - 1, s - 1), 1), (Z(a, b, s + 1, s), 1))))
        if r not in (0, s) and s >= 2:
            if r == 1:
                out.append(("Zt1", gv((R(a, -b, s, 0), 1), (Z(a, b, s + 1, 1), 1))))
            elif r == s + 1:
                out.append(("Zts+1", gv((R(a, -b, s, s), 1), (Z(a, b, s - 1, s), 1))))
            else:
                out.append(("Zt", gv((Z(a, b, s + 1, r), 1), (Z(a, -b, s, r - 1), 1),
                                     (Z(a, b, s - 1, r - 1), 1))))
    else:
        if (s, r) == (2, 0):
            out.append(("x:R20", gv((R(a, b, 3, 0), 1), (Z(a, b, 1, -1), 2), (Z(a, -b, 2, -1), 1))))
        if (s, r) == (1, 0):
            out.append(("x:R10", gv((R(a, b, 2, 0), 1), (Z(a, -b, 1, -1), 1), (Z(a, b, 2, 1), 1))))
        if (s, r) == (1, 1):
            out.append(("x:R11", gv((R(a, -b, 1, 0), 1), (Z(a, b, 2, 1), 2), (Z(a, -b, 3, 2), 1))))
        if r == 0 and s >= 3:
            out.append(("Rs0", gv((R(a, b, s + 1, 0), 1), (Z(a, b, s - 1, -1), 2),
                                  (Z(a, -b, s, -1), 1), (Z(a, -b, s - 2, -1), 1))))
        if r == s and s >= 2:
            out.append(("Rss", gv((R(a, b, s - 1, s - 1), 1), (Z(a, b, s + 1, s), 2),
                                  (Z(a, -b, s + 2, s + 1), 1), (Z(a, -b, s, s - 1), 1))))
    return out


def _dispatch(x: Label, rules) -> GrothVector:
    exceptional = [rule for name, rule in rules if name.startswith("x:")]
    regular = [rule for name, rule in rules if not name.startswith("x:")]
    hits = exceptional or regular
    if len(hits) != 1:
        raise AssertionError(f"fusion dispatch for {x}: {len(hits)} rules fired")
    return hits[0]


def fuse_with_f(x: Label, alpha2: int = 1, beta2: int = -1) -> GrothVector:
    """Tensor with the fundamental module Z^{alpha2,beta2}_{1,1}."""
    a, b = x.alpha * alpha2, x.beta * beta2
    return _dispatch(x, _rules_with_f(x, a, b))


def fuse_with_v(x: Label, alpha2: int = 1, beta2: int = 1) -> GrothVector:
    """Tensor with the dual fundamental module Z^{alpha2,beta2}_{2,0}."""
    a, b = x.alpha * alpha2, x.beta * beta2
    return _dispatch(x, _rules_with_v(x, a, b))


def fuse_vector(v: GrothVector, fuse) -> GrothVector:
    out = GrothVector()
    for label, mult in v.items():
        out.add_all(fuse(label), mult)
    return out


@lru_cache(maxsize=None)
def _chain(m: int, n: int) -> tuple:
    if m < 0 or n < 0:
        raise ValueError("need m, n >= 0")
    if m + n == 0:
        # empty chain: the trivial one-dimensional module
        v = gv((Z(1, 1, 1, 0), 1))
    elif n == 0:
        if m == 1:
            v = gv((Z(1, -1, 1, 1), 1))
        else:
            v = fuse_vector(GrothVector(dict(_chain(m - 1, 0))), fuse_with_f)
    elif m == 0 and n == 1:
        v = gv((Z(1, 1, 2, 0), 1))
    else:
        v = fuse_vector(GrothVector(dict(_chain(m, n - 1))), fuse_with_v)
    return tuple(sorted(v.items(), key=lambda kv: _label_sort_key(kv[0])))


def chain_decompose(m: int, n: int) -> GrothVector:
    """Indecomposable content of the m,n mixed chain, memoized."""
    return GrothVector(dict(_chain(m, n)))


def _label_sort_key(x: Label):
    return (isinstance(x, RLabel), x.s, x.r, x.alpha, x.beta)


def sorted_labels(v: GrothVector) -> list[tuple[Label, int]]:
    return sorted(v.items(), key=lambda kv: _label_sort_key(kv[0]))


def label_str(x: Label) -> str:
    kind = "Z" if isinstance(x, ZLabel) else "R"
    return f"{kind}[{x.alpha},{x.beta};{x.s},{x.r}]"
