"""Label-set reference implementation used to derive expected values.

Works on frozensets of point labels and shares no code with gtlab.
"""
from itertools import chain, combinations


def powerset(points):
    pts = sorted(points)
    return [frozenset(c) for c in chain.from_iterable(combinations(pts, r) for r in range(len(pts) + 1))]


class Space:
    def __init__(self, points, opens):
        self.X = frozenset(points)
        self.mu = [frozenset(o) for o in opens]
        self.subsets = powerset(points)

    # primitive operators
    def interior(self, A):
        return frozenset().union(*[U for U in self.mu if U <= A])

    def closure(self, A):
        return frozenset(x for x in self.X if all(U & A for U in self.mu if x in U))

    # semi level
    def semi_open(self):
        return [A for A in self.subsets if any(E <= A <= self.closure(E) for E in self.mu)]

    def semi_closed(self):
        return [self.X - A for A in self.semi_open()]

    def _meet(self, fam, A):
        sups = [U for U in fam if A <= U]
        out = self.X
        for U in sups:
            out = out & U
        return out

    def _join(self, fam, A):
        return frozenset().union(*[F for F in fam if F <= A])

    def s_closure(self, A):
        return self._meet(self.semi_closed(), A)

    def s_interior(self, A):
        return self._join(self.semi_open(), A)

    def s_wedge(self, A):
        return self._meet(self.semi_open(), A)

    def s_vee(self, A):
        return self._join(self.semi_closed(), A)

    def wedge_sets(self):
        return [A for A in self.subsets if self.s_wedge(A) == A]

    # lambda level, existential forms
    def lambda_closed(self):
        return sorted({K & P for K in self.wedge_sets() for P in self.semi_closed()}, key=sorted)

    def lambda_open(self):
        return [self.X - A for A in self.lambda_closed()]

    def l_closure(self, A):
        return self._meet(self.lambda_closed(), A)

    def l_interior(self, A):
        return self._join(self.lambda_open(), A)

    def l_wedge(self, A):
        return self._meet(self.lambda_open(), A)

    def l_vee(self, A):
        return self._join(self.lambda_closed(), A)

    def sg_closed(self, A):
        cl = self.l_closure(A)
        return all(cl <= U for U in self.lambda_open() if A <= U)

    def sg_wedge(self, A):
        k = self.l_wedge(A)
        return all(k <= F for F in self.lambda_closed() if A <= F)

    def beta_closed(self, A):
        hs = [H for H in self.subsets if self.l_wedge(H) == H]
        return any(A == H & Q for H in hs for Q in self.lambda_closed())
