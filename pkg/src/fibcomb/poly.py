"""Dense integer-coefficient polynomials with exact arithmetic."""

from __future__ import annotations

from collections.abc import Iterable, Sequence


class IntPolynomial:
    """Polynomial over the integers, stored as a dense coefficient tuple.

    ``coeffs[i]`` is the coefficient of ``x**i``.  The zero polynomial is the
    empty tuple; otherwise the last coefficient is nonzero.  Instances are
    immutable, hashable, and safe to share between threads.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        stripped = list(coeffs)
        while stripped and stripped[-1] == 0:
            stripped.pop()
        self.coeffs: tuple[int, ...] = tuple(stripped)

    @classmethod
    def zero(cls) -> IntPolynomial:
        return cls()

    @classmethod
    def one(cls) -> IntPolynomial:
        return cls((1,))

    @classmethod
    def x(cls) -> IntPolynomial:
        return cls((0, 1))

    @classmethod
    def constant(cls, value: int) -> IntPolynomial:
        return cls((value,))

    @property
    def degree(self) -> int:
        """Degree of the polynomial, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, power: int) -> int:
        """Coefficient of ``x**power`` (0 beyond the stored degree)."""
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __add__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _lift(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __sub__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _lift(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> IntPolynomial:
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = IntPolynomial.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, value):
        """Evaluate at an integer, or compose when ``value`` is a polynomial.

        Horner's scheme; exact in both cases.
        """
        if not self.coeffs:
            return IntPolynomial() if isinstance(value, IntPolynomial) else 0
        result = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            result = result * value + c
        if isinstance(value, IntPolynomial) and not isinstance(result, IntPolynomial):
            result = IntPolynomial.constant(result)
        return result

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            if parts:
                sign = " + " if c > 0 else " - "
            else:
                sign = "" if c > 0 else "-"
            mag = abs(c)
            if power == 0:
                term = str(mag)
            else:
                var = "x" if power == 1 else f"x^{power}"
                term = var if mag == 1 else f"{mag}{var}"
            parts.append(sign + term)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"IntPolynomial({self.coeffs!r})"


def _lift(value) -> IntPolynomial | None:
    if isinstance(value, IntPolynomial):
        return value
    if isinstance(value, int):
        return IntPolynomial((value,))
    return None


def convolve(a: Sequence[int], b: Sequence[int], length: int) -> list[int]:
    """First ``length`` coefficients of the product of two coefficient sequences."""
    out = [0] * length
    for i, ai in enumerate(a[:length]):
        if ai:
            for j, bj in enumerate(b[: length - i]):
                out[i + j] += ai * bj
    return out
