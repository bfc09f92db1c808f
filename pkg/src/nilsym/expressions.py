"""Safe evaluation of the small arithmetic grammar used by every text format.

Grammar: integers, names (``i``, ``t``, parameters, basis symbols), ``+ - * /``,
``^`` (or ``**``) with an integer exponent, and parentheses.  Evaluation walks
the Python AST of the expression; nothing is ever passed to ``eval``.
"""

from __future__ import annotations

import ast
import operator

from .scalars import I, T, GaussianRational, as_scalar


class ExpressionError(ValueError):
    pass


_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
}


def evaluate(text: str, names: dict | None = None):
    """Evaluate ``text`` with the given name bindings (``i`` is always bound)."""
    env = {"i": I}
    if names:
        env.update(names)
    src = text.replace("^", "**").strip()
    if not src:
        raise ExpressionError("empty expression")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ExpressionError(f"malformed expression {text!r}") from exc
    try:
        return _eval(tree.body, env, text)
    except ZeroDivisionError as exc:
        raise ExpressionError(f"division by zero in {text!r}") from exc


def _eval(node, env, text):
    if isinstance(node, ast.Constant):
        if isinstance(node.value, bool) or not isinstance(node.value, int):
            raise ExpressionError(f"only integer literals are allowed in {text!r}")
        return as_scalar(node.value)
    if isinstance(node, ast.Name):
        if node.id not in env:
            raise ExpressionError(f"unknown name {node.id!r} in {text!r}")
        return env[node.id]
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval(node.operand, env, text)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            base = _eval(node.left, env, text)
            exp = node.right
            sign = 1
            if isinstance(exp, ast.UnaryOp) and isinstance(exp.op, ast.USub):
                sign, exp = -1, exp.operand
            if not (isinstance(exp, ast.Constant) and type(exp.value) is int):
                raise ExpressionError(f"exponent must be an integer literal in {text!r}")
            return base ** (sign * exp.value)
        op = _BINOPS.get(type(node.op))
        if op is None:
            raise ExpressionError(f"unsupported operator in {text!r}")
        left = _eval(node.left, env, text)
        right = _eval(node.right, env, text)
        try:
            result = op(left, right)
        except TypeError as exc:
            raise ExpressionError(f"ill-typed expression {text!r}: {exc}") from exc
        if result is NotImplemented:
            raise ExpressionError(f"ill-typed expression {text!r}")
        return result
    raise ExpressionError(f"unsupported syntax in {text!r}")


def parse_scalar(text: str, names: dict | None = None) -> GaussianRational:
    """Parse a Q(i) constant such as ``3``, ``-1/2``, ``i``, ``1+2*i``."""
    value = evaluate(text, names)
    if not isinstance(value, GaussianRational):
        raise ExpressionError(f"{text!r} is not a scalar constant")
    return value


def parse_tscalar(text: str, names: dict | None = None):
    """Parse a rational function of ``t`` (scalars are returned as-is)."""
    env = {"t": T}
    if names:
        env.update(names)
    return evaluate(text, env)
