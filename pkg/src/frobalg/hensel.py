"""The one Newton-type iteration used by every lifting routine.

For separable ``f`` write ``g f + h f' = 1``.  Then ``f(X - h f)`` is divisible
by ``f^2``, so each step ``a <- a - h(a) f(a)`` squares the ideal that
``f(a)`` lives in.  Starting inside a nilpotent ideal, ``f(a)`` reaches 0
after ``ceil(log2 nu)`` steps.
"""

from __future__ import annotations

from .algebra import Element, eval_poly_at_element
from .errors import NotSeparable
from .poly import Poly, poly_egcd


def newton_multiplier(f: Poly) -> Poly:
    """``h`` with ``g f + h f' = 1``; raises NotSeparable if no such ``h`` exists."""
    d, _, h = poly_egcd(f, f.derivative())
    if d.degree != 0:
        raise NotSeparable(f, d)
    return h


def newton_iterates(f: Poly, b: Element, max_steps: int, h: Poly | None = None):
    """All iterates ``a_0 = b, a_1, ...`` up to the first root of ``f``.

    Returns ``(iterates, residuals)`` where ``residuals[k] = f(a_k)``.  Raises
    RuntimeError if no root appears within ``max_steps`` steps, which only
    happens when ``f(b)`` is not nilpotent.
    """
    if h is None:
        h = newton_multiplier(f)
    a = b
    iterates, residuals = [a], []
    for _ in range(max_steps + 1):
        r = eval_poly_at_element(f, a)
        residuals.append(r)
        if r.is_zero():
            return iterates, residuals
        if len(iterates) > max_steps:
            break
        a = a - eval_poly_at_element(h, a) * r
        iterates.append(a)
    raise RuntimeError(f"no root of {f} after {max_steps} Newton steps")
