"""Truncated Taylor coefficient arithmetic on numpy arrays.

An array c of length n+1 stands for c[0] + c[1] e + ... + c[n] e^n.
"""

import numpy as np


def series_mul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    n = min(len(x), len(y))
    return np.convolve(x[:n], y[:n])[:n]


def series_reciprocal(x: np.ndarray) -> np.ndarray:
    if x[0] == 0:
        raise ZeroDivisionError("leading coefficient of the denominator is zero")
    ans = np.zeros_like(x, dtype=float)
    ans[0] = 1.0 / x[0]
    for n in range(1, len(x)):
        ans[n] = -np.dot(ans[:n], x[n:0:-1]) / x[0]
    return ans


def series_pow(x: np.ndarray, alpha: float) -> np.ndarray:
    """x^alpha for real alpha, x[0] > 0."""
    if x[0] <= 0:
        raise ValueError("real power needs a positive leading coefficient")
    ans = np.zeros_like(x, dtype=float)
    ans[0] = x[0] ** alpha
    for n in range(1, len(x)):
        k = np.arange(1, n + 1)
        ans[n] = np.dot(((alpha + 1.0) * k - n) * x[1:n + 1], ans[n - 1::-1]) / (n * x[0])
    return ans


def series_exp(x: np.ndarray) -> np.ndarray:
    ans = np.zeros_like(x, dtype=float)
    ans[0] = np.exp(x[0])
    for n in range(1, len(x)):
        k = np.arange(1, n + 1)
        ans[n] = np.dot(k * x[1:n + 1], ans[n - 1::-1]) / n
    return ans
