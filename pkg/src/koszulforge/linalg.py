"""Sparse exact Gaussian elimination over Q or a prime field.

Vectors are dicts {index: nonzero coefficient}.  The Eliminator keeps a set
of normalized pivot rows and supports incremental rank queries and kernel
extraction via augmented columns.
"""

from __future__ import annotations

from .polyring import QQ


class Eliminator:
    """Incremental row-reduction: feed vectors, track pivots and rank."""

    def __init__(self, field=QQ):
        self.field = field
        self.pivots: dict[int, dict] = {}  # pivot index -> normalized row

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: dict) -> dict:
        """Eliminate all known pivots from a copy of vec.

        Always eliminates the smallest pivot position present; since a pivot
        row only touches positions at or above its own pivot, eliminated
        positions never reappear and the loop terminates.
        """
        F = self.field
        zero = F.zero
        out = dict(vec)
        piv = self.pivots
        while True:
            common = piv.keys() & out.keys()
            if not common:
                return out
            p = min(common)
            c = out.pop(p)
            for k, v in piv[p].items():
                if k == p:
                    continue
                s = F.sub(out.get(k, zero), F.mul(c, v))
                if s == zero:
                    out.pop(k, None)
                else:
                    out[k] = s

    def insert(self, vec: dict) -> bool:
        """Add a vector to the span; True if it increased the rank."""
        residual = self.reduce(vec)
        if not residual:
            return False
        F = self.field
        p = min(residual)
        inv = F.inv(residual[p])
        self.pivots[p] = {k: F.mul(inv, v) for k, v in residual.items()}
        return True

    def kernel_of_columns(self, columns: list[dict]) -> list[dict]:
        """Kernel of the matrix whose j-th column is columns[j].

        Returns coefficient vectors {j: c} with sum_j c * columns[j] = 0,
        one per kernel dimension.  Requires fresh state.
        """
        if self.pivots:
            raise ValueError("kernel_of_columns needs a fresh Eliminator")
        F = self.field
        offset = 1 + max((max(c) for c in columns if c), default=0)
        kernel = []
        for j, col in enumerate(columns):
            aug = dict(col)
            aug[offset + j] = F.one
            residual = self.reduce(aug)
            head = [k for k in residual if k < offset]
            if head:
                p = min(head)
                inv = F.inv(residual[p])
                self.pivots[p] = {k: F.mul(inv, v) for k, v in residual.items()}
            else:
                kernel.append({k - offset: v for k, v in residual.items()})
        return kernel


def columns_rank(columns: list[dict], field=QQ) -> int:
    elim = Eliminator(field)
    for col in columns:
        elim.insert(col)
    return elim.rank
