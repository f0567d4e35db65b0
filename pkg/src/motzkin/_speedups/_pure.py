"""Pure-Python fallbacks for the hot loops.

Mirrors the contract of the compiled module ``_kernels``:

* ``count_paths`` runs a depth-first search over every valid word, applying
  the word-level rules directly (level stays nonnegative; L only in the skew
  variant and never adjacent to U).  It deliberately knows nothing about the
  layered automata so the oracle route stays independent.
* ``poly_acc`` / ``poly_mul`` multiply sparse polynomials stored as dicts
  mapping packed exponent keys to int or Fraction coefficients.
"""

from __future__ import annotations

from fractions import Fraction

# step encoding shared with the compiled kernel: 0=U, 1=D, 2=H, 3=L


def count_paths(n_max: int, skew: bool) -> dict[tuple[int, int, int, int], int]:
    """Tally every valid word of length <= n_max.

    Returns a dict mapping (length, end level, #UD, #DU) to the number of
    words with those values.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    counts: dict[tuple[int, int, int, int], int] = {}

    def visit(depth: int, level: int, last: int, ud: int, du: int) -> None:
        key = (depth, level, ud, du)
        counts[key] = counts.get(key, 0) + 1
        if depth == n_max:
            return
        if not (skew and last == 3):
            visit(depth + 1, level + 1, 0, ud, du + (last == 1))
        if level > 0:
            visit(depth + 1, level - 1, 1, ud + (last == 0), du)
        visit(depth + 1, level, 2, ud, du)
        if skew and level > 0 and last != 0:
            visit(depth + 1, level - 1, 3, ud, du)

    visit(0, 0, -1, 0, 0)
    return counts


def poly_acc(dict_out: dict, a: dict, b: dict, negate: bool = False) -> None:
    """Accumulate the product a*b (negated if asked) into dict_out.

    Raw accumulation: zero coefficients are left in place, cleanup is the
    caller's job.  dict_out must not alias a or b.
    """
    if len(a) > len(b):
        a, b = b, a
    get = dict_out.get
    for ka, va in a.items():
        if negate:
            va = -va
        for kb, vb in b.items():
            key = ka + kb
            cur = get(key)
            if cur is None:
                dict_out[key] = va * vb
            else:
                dict_out[key] = cur + va * vb


def poly_mul(a: dict, b: dict) -> dict:
    """Product of two term dicts with zero terms dropped and integral
    Fractions demoted to int."""
    out: dict = {}
    poly_acc(out, a, b)
    res: dict = {}
    for key, val in out.items():
        if type(val) is Fraction:
            if val.denominator == 1:
                val = val.numerator
        if val != 0:
            res[key] = val
    return res
