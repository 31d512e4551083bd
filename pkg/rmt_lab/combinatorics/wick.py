"""
Wick formula for centered jointly Gaussian variables
"""
from typing import Callable, Hashable, Sequence

Covariance = Callable[[Hashable, Hashable], object]


def wick_moment(word: Sequence[Hashable], cov: Covariance):
    """
    E[w_1 ... w_n] = sum over pairings of prod cov(w_i, w_j)

    The first symbol is paired with every later one; branches whose
    covariance vanishes are pruned. Exact whenever cov returns exact
    numbers (int, Fraction).

    Args:
        word: Sequence of symbols
        cov: Symmetric covariance function

    Returns:
        The moment (0 for words of odd length)
    """
    word = list(word)
    if len(word) % 2:
        return 0
    if not word:
        return 1
    first, rest = word[0], word[1:]
    total = 0
    for idx, symbol in enumerate(rest):
        c = cov(first, symbol)
        if c == 0:
            continue
        total += c * wick_moment(rest[:idx] + rest[idx + 1 :], cov)
    return total


def independent_standard(a: Hashable, b: Hashable) -> int:
    """Independent unit-variance real Gaussians indexed by symbol"""
    return 1 if a == b else 0


def complex_gaussian(a: str, b: str) -> int:
    """Standard complex Gaussian Z and its conjugate 'Zb': E[Z Zb] = 1, E[Z Z] = 0"""
    return 1 if {a, b} == {"Z", "Zb"} else 0
