"""Integer Laurent polynomials in one variable (sparse dict representation)."""

from __future__ import annotations


class Laurent:
    """Immutable Laurent polynomial with integer coefficients."""

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if v:
                    c[e] = v
        self.c = c

    # -- constructors -------------------------------------------------------
    @staticmethod
    def zero() -> "Laurent":
        return Laurent()

    @staticmethod
    def one() -> "Laurent":
        return Laurent({0: 1})

    @staticmethod
    def monomial(exp: int, coeff: int = 1) -> "Laurent":
        return Laurent({exp: coeff})

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other: "Laurent") -> "Laurent":
        c = dict(self.c)
        for e, v in other.c.items():
            c[e] = c.get(e, 0) + v
        return Laurent(c)

    def __sub__(self, other: "Laurent") -> "Laurent":
        c = dict(self.c)
        for e, v in other.c.items():
            c[e] = c.get(e, 0) - v
        return Laurent(c)

    def __neg__(self) -> "Laurent":
        return Laurent({e: -v for e, v in self.c.items()})

    def __mul__(self, other) -> "Laurent":
        if isinstance(other, int):
            return Laurent({e: v * other for e, v in self.c.items()})
        c = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return Laurent(c)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Laurent":
        if n < 0:
            inv = self.inverse_monomial()
            return inv ** (-n)
        out = Laurent.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse_monomial(self) -> "Laurent":
        if len(self.c) != 1:
            raise ValueError("only monomials (and their signs) are invertible")
        ((e, v),) = self.c.items()
        if v not in (1, -1):
            raise ValueError("coefficient not a unit")
        return Laurent({-e: v})

    def divide_exact(self, other: "Laurent") -> "Laurent":
        """Exact division; raises ValueError when the remainder is nonzero."""
        if not other.c:
            raise ZeroDivisionError
        if not self.c:
            return Laurent()
        rem = dict(self.c)
        d_hi = max(other.c)
        d_lead = other.c[d_hi]
        q = {}
        while rem:
            hi = max(rem)
            coeff, r = divmod(rem[hi], d_lead)
            if r:
                raise ValueError("division not exact")
            e = hi - d_hi
            q[e] = q.get(e, 0) + coeff
            for de, dv in other.c.items():
                key = de + e
                nv = rem.get(key, 0) - dv * coeff
                if nv:
                    rem[key] = nv
                else:
                    rem.pop(key, None)
        return Laurent(q)

    # -- structure ----------------------------------------------------------
    def substitute_inverse(self) -> "Laurent":
        """The mirror image: variable -> variable^(-1)."""
        return Laurent({-e: v for e, v in self.c.items()})

    def is_one(self) -> bool:
        return self.c == {0: 1}

    def is_zero(self) -> bool:
        return not self.c

    def span(self):
        if not self.c:
            return None
        return (min(self.c), max(self.c))

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.c == ({} if other == 0 else {0: other})
        return isinstance(other, Laurent) and self.c == other.c

    def __hash__(self):
        return hash(tuple(sorted(self.c.items())))

    def __repr__(self) -> str:
        if not self.c:
            return "0"
        terms = []
        for e in sorted(self.c):
            v = self.c[e]
            if e == 0:
                terms.append(f"{v}")
            else:
                mono = "A" if e == 1 else ("A^-1" if e == -1 else f"A^{e}")
                if v == 1:
                    terms.append(mono)
                elif v == -1:
                    terms.append(f"-{mono}")
                else:
                    terms.append(f"{v}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


A = Laurent.monomial(1)
A_INV = Laurent.monomial(-1)
DELTA = Laurent({2: -1, -2: -1})          # loop value -A^2 - A^-2
MINUS_A_CUBED = Laurent.monomial(3, -1)   # curl factor
