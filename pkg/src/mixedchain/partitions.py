"""Integer partitions, bipartitions and the index combinatorics of the chain.

Partitions are tuples of weakly decreasing positive integers; a bipartition
is a pair (left, right) of partitions.  This module owns the index sets
Lambda_{m,n}(f), the hook/cross tests, the three atypical label families
with their mirror images, and the swap involution that exchanges the two
sides of every bipartition.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

Partition = tuple[int, ...]
Bipartition = tuple[Partition, Partition]

EMPTY: Partition = ()


class InvalidF(ValueError):
    pass


class NotInLambda(ValueError):
    pass


def is_partition(mu) -> bool:
    if not isinstance(mu, tuple):
        return False
    return all(isinstance(p, int) and p > 0 for p in mu) and all(
        mu[i] >= mu[i + 1] for i in range(len(mu) - 1)
    )


def check_partition(mu: Partition) -> Partition:
    if not is_partition(mu):
        raise ValueError(f"not a partition: {mu!r}")
    return mu


def size(mu: Partition) -> int:
    return sum(mu)


@lru_cache(maxsize=None)
def partitions_of(k: int) -> tuple[Partition, ...]:
    """All partitions of k, lexicographically ordered."""
    if k < 0:
        return ()
    if k == 0:
        return (EMPTY,)
    out = []

    def rec(rest, maxpart, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for p in range(min(rest, maxpart), 0, -1):
            acc.append(p)
            rec(rest - p, p, acc)
            acc.pop()

    rec(k, k, [])
    return tuple(sorted(out))


def count_partitions(k: int) -> int:
    return len(partitions_of(k))


def lambda_set(m: int, n: int, f: int) -> list[Bipartition]:
    """All bipartitions with |left| = m - f and |right| = n - f, lex ordered."""
    if not (0 <= f <= min(m, n)):
        raise InvalidF(f"f={f} out of range for (m,n)=({m},{n})")
    return sorted(
        (lam, rho)
        for lam in partitions_of(m - f)
        for rho in partitions_of(n - f)
    )


def lambda_all(m: int, n: int) -> list[Bipartition]:
    out = []
    for f in range(min(m, n) + 1):
        out.extend(lambda_set(m, n, f))
    return sorted(set(out))


def lambda_f(lam: Bipartition, m: int, n: int) -> int:
    """The defect f of lam inside Lambda_{m,n}; raises if lam is not there."""
    f = m - size(lam[0])
    if f != n - size(lam[1]) or not (0 <= f <= min(m, n)):
        raise NotInLambda(f"{lam!r} not in Lambda_({m},{n})")
    return f


def add_boxes(mu: Partition) -> list[Partition]:
    """All partitions obtained from mu by adding a single box."""
    out = []
    k = len(mu)
    for i in range(k + 1):
        cur = mu[i] if i < k else 0
        prev = mu[i - 1] if i > 0 else None
        if prev is None or cur + 1 <= prev:
            out.append(mu[:i] + (cur + 1,) + mu[i + 1:])
    return out


def rem_boxes(mu: Partition) -> list[Partition]:
    """All partitions obtained from mu by removing a single box."""
    out = []
    k = len(mu)
    for i in range(k):
        nxt = mu[i + 1] if i + 1 < k else 0
        if mu[i] - 1 >= nxt:
            if mu[i] == 1:
                out.append(mu[:i] + mu[i + 1:])
            else:
                out.append(mu[:i] + (mu[i] - 1,) + mu[i + 1:])
    return out


def is_hook(mu: Partition, p: int, q: int) -> bool:
    """True iff mu has no box at position (p+1, q+1), i.e. mu_{p+1} < q+1."""
    row = mu[p] if p < len(mu) else 0
    return row < q + 1


def is_cross(lam: Bipartition, p: int, q: int) -> bool:
    """(p,q)-cross test: the two halves are (p_i,q_i)-hooks with p1+p2 <= p, q1+q2 <= q."""
    left, right = lam
    for p1 in range(p + 1):
        for q1 in range(q + 1):
            if not is_hook(left, p1, q1):
                continue
            for p2 in range(p + 1 - p1):
                for q2 in range(q + 1 - q1):
                    if is_hook(right, p2, q2):
                        return True
    return False


def is_cross21(lam: Bipartition) -> bool:
    return is_cross(lam, 2, 1)


def cross_set(m: int, n: int) -> list[Bipartition]:
    return [lam for lam in lambda_all(m, n) if is_cross21(lam)]


# ---------------------------------------------------------------------------
# Atypical families.  Unbarred labels live on the m >= n side:
#   delta(a,s)   = ((a,1^s), (s))
#   delta1(a,s)  = ((a,s), (1^s))
#   delta2(a,s)  = ((s+1,a+1), (1^(s+2)))
# and barred labels are their mirror images (left/right swapped).
# ---------------------------------------------------------------------------

FAMILIES = ("delta", "delta1", "delta2")


@dataclass(frozen=True, order=True)
class AtypicalLabel:
    family: str
    bar: bool
    a: int
    s: int

    def __repr__(self):
        mark = {"delta": "d", "delta1": "d'", "delta2": "d''"}[self.family]
        barmark = "~" if self.bar else ""
        return f"{barmark}{mark}[{self.a},{self.s}]"


def atyp(family: str, bar: bool, a: int, s: int) -> AtypicalLabel:
    """Construct an atypical label in canonical form.

    delta1(a,1) is identified with delta(a,1), delta2(0,0) with its mirror,
    and delta(0,0) with its mirror.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if family == "delta1" and s == 1:
        family = "delta"
    if family == "delta2" and (a, s) == (0, 0):
        bar = False
    if family == "delta" and (a, s) == (0, 0):
        bar = False
    return AtypicalLabel(family, bar, a, s)


def _row(k: int) -> Partition:
    return (k,) if k > 0 else EMPTY


def _column(k: int) -> Partition:
    return (1,) * k


def atypical_bipartition(label: AtypicalLabel) -> Bipartition:
    a, s = label.a, label.s
    if label.family == "delta":
        if a == 0 and s == 0:
            pair = (EMPTY, EMPTY)
        else:
            pair = ((a,) + _column(s), _row(s))
    elif label.family == "delta1":
        pair = ((a, s) if s else (a,), _column(s))
    else:
        pair = ((s + 1, a + 1), _column(s + 2))
    if label.bar:
        pair = (pair[1], pair[0])
    return pair


def atypical_set(m: int, n: int) -> dict[Bipartition, AtypicalLabel]:
    """The atypical bipartitions of the (m,n) context, keyed by bipartition."""
    labels: list[AtypicalLabel] = []
    if m > n:
        a = m - n
        labels += [atyp("delta", False, a, s) for s in range(0, n + 1)]
        labels += [atyp("delta1", False, a, s) for s in range(2, min(a, n) + 1)]
        labels += [atyp("delta2", False, a, s) for s in range(a, n - 1)]
    elif m == n:
        labels += [atyp("delta", False, 0, 0)]
        labels += [atyp("delta2", False, 0, s) for s in range(0, n - 1)]
        labels += [atyp("delta2", True, 0, s) for s in range(1, n - 1)]
    else:
        a = n - m
        labels += [atyp("delta", True, a, s) for s in range(0, m + 1)]
        labels += [atyp("delta1", True, a, s) for s in range(2, min(a, m) + 1)]
        labels += [atyp("delta2", True, a, s) for s in range(a, m - 1)]
    out = {}
    for lab in labels:
        bp = atypical_bipartition(lab)
        assert bp not in out or out[bp] == lab
        out[bp] = lab
    return out


def classify_atypical(lam: Bipartition, m: int, n: int) -> AtypicalLabel | None:
    lambda_f(lam, m, n)  # raises NotInLambda when out of context
    return atypical_set(m, n).get(lam)


def gswap(lam: Bipartition) -> Bipartition:
    """The involution exchanging left and right halves."""
    return (lam[1], lam[0])


def gswap_label(label: AtypicalLabel) -> AtypicalLabel:
    return atyp(label.family, not label.bar, label.a, label.s)


# rendering ------------------------------------------------------------------

def part_str(mu: Partition) -> str:
    """Exponent notation, e.g. (3,1,1,1) -> "3,1^3" and () -> "-"."""
    if not mu:
        return "-"
    out = []
    i = 0
    while i < len(mu):
        j = i
        while j < len(mu) and mu[j] == mu[i]:
            j += 1
        mult = j - i
        out.append(str(mu[i]) if mult == 1 else f"{mu[i]}^{mult}")
        i = j
    return ",".join(out)


def bip_str(lam: Bipartition) -> str:
    return f"[{part_str(lam[0])} | {part_str(lam[1])}]"
