"""Text format for algebra presentations.

::

    # comments run to end of line
    dim 4
    e1*e1 = e2
    e1*e3 = -2*e4
    e3*e2 = i*e4

Unlisted products are zero.  Coefficients are Q(i) expressions and may use
named parameters when a binding is supplied (the catalog relies on this).
"""

from __future__ import annotations

import re

from .algebra import Algebra
from .expressions import ExpressionError, evaluate
from .scalars import ZERO, GaussianRational, RationalFunction, as_scalar, format_scalar


class PresentationError(ValueError):
    pass


_DIM = re.compile(r"^dim\s+(\d+)$")
_PRODUCT = re.compile(r"^e(\d+)\s*\*\s*e(\d+)\s*=\s*(.+)$")


class _Vec:
    """Vector value inside a product right-hand side."""

    __slots__ = ("v",)

    def __init__(self, v):
        self.v = v

    def __add__(self, other):
        if isinstance(other, _Vec):
            return _Vec([a + b for a, b in zip(self.v, other.v)])
        if isinstance(other, (GaussianRational, RationalFunction)) and not other:
            return self
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return _Vec([-a for a in self.v])

    def __sub__(self, other):
        if isinstance(other, _Vec):
            return self + (-other)
        return self.__add__(other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, k):
        if isinstance(k, _Vec):
            return NotImplemented
        return _Vec([a * k for a in self.v])

    __rmul__ = __mul__

    def __truediv__(self, k):
        if isinstance(k, _Vec):
            return NotImplemented
        return _Vec([a / k for a in self.v])


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_presentation(text: str, names: dict | None = None, label: str = "") -> Algebra:
    """Parse the product-list grammar; ``names`` binds parameter symbols."""
    n = None
    seen = set()
    c = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw)
        if not line:
            continue
        m = _DIM.match(line)
        if m:
            if n is not None:
                raise PresentationError(f"line {lineno}: repeated dim header")
            n = int(m.group(1))
            c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
            continue
        m = _PRODUCT.match(line)
        if not m:
            raise PresentationError(f"line {lineno}: cannot parse {raw.strip()!r}")
        if n is None:
            raise PresentationError(f"line {lineno}: product before 'dim' header")
        i, j = int(m.group(1)), int(m.group(2))
        if not (1 <= i <= n and 1 <= j <= n):
            raise PresentationError(f"line {lineno}: basis index out of range 1..{n}")
        if (i, j) in seen:
            raise PresentationError(f"line {lineno}: duplicate product e{i}*e{j}")
        seen.add((i, j))
        env = dict(names or {})
        for k in range(1, n + 1):
            env[f"e{k}"] = _Vec([ZERO] * (k - 1) + [as_scalar(1)] + [ZERO] * (n - k))
        rhs = m.group(3)
        for idx in re.findall(r"\be(\d+)\b", rhs):
            if not 1 <= int(idx) <= n:
                raise PresentationError(f"line {lineno}: basis index e{idx} out of range 1..{n}")
        try:
            value = evaluate(rhs, env)
        except ExpressionError as exc:
            raise PresentationError(f"line {lineno}: malformed coefficient: {exc}") from exc
        if isinstance(value, _Vec):
            c[i - 1][j - 1] = value.v
        elif isinstance(value, (GaussianRational, RationalFunction)) and not value:
            pass
        else:
            raise PresentationError(f"line {lineno}: right-hand side must be a combination of basis vectors")
    if n is None:
        raise PresentationError("missing 'dim <n>' header")
    return Algebra(n, c, label)


def _term(coeff, k) -> str:
    sym = f"e{k}"
    if isinstance(coeff, RationalFunction):
        return f"({coeff})*{sym}"
    if coeff == 1:
        return sym
    if coeff == -1:
        return "-" + sym
    s = format_scalar(coeff)
    if not coeff.is_real() and coeff.re != 0:
        s = f"({s})"
    return f"{s}*{sym}"


def format_product(vec) -> str:
    terms = [_term(x, k + 1) for k, x in enumerate(vec) if x]
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def emit_presentation(A: Algebra) -> str:
    """Normalized text; ``parse_presentation(emit_presentation(A)) == A``."""
    lines = [f"dim {A.n}"]
    for i, j, v in A.nonzero_products():
        lines.append(f"e{i + 1}*e{j + 1} = {format_product(v)}")
    return "\n".join(lines) + "\n"
