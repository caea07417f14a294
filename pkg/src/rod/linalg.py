from fractions import Fraction
from math import gcd, lcm
from typing import List, Sequence, Union

Entry = Union[int, Fraction]


def _integer_row(row: Sequence[Entry]) -> List[int]:
    den = 1
    for v in row:
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    return [int(v * den) for v in row]


def _primitive(row: List[int]) -> List[int]:
    g = 0
    for v in row:
        g = gcd(g, v)
        if g == 1:
            return row
    return [v // g for v in row] if g > 1 else row


def exact_rank(rows: Sequence[Sequence[Entry]]) -> int:
    """Rank over the rationals by fraction-free elimination; rows are reduced by their gcd."""
    m = [_primitive(_integer_row(r)) for r in rows if any(r)]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    piv_r = 0
    for piv_c in range(n_cols):
        for i_row in range(piv_r, n_rows):
            if m[i_row][piv_c] != 0:
                break
        else:
            continue
        if i_row != piv_r:
            m[piv_r], m[i_row] = m[i_row], m[piv_r]
        fp = m[piv_r][piv_c]
        for r in range(piv_r + 1, n_rows):
            fr = m[r][piv_c]
            if fr == 0:
                continue
            m[r] = _primitive([fp * x - fr * y for x, y in zip(m[r], m[piv_r])])
        piv_r += 1
        if piv_r == n_rows:
            break
    return piv_r
