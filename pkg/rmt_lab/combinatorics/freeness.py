"""
Mixed moments of independent GUE matrices and the freeness identities they satisfy
"""
import itertools
import logging
from functools import lru_cache
from typing import Callable, Dict, Hashable, Optional, Sequence, Tuple

import numpy as np

from rmt_lab.core.errors import ParameterError
from rmt_lab.core.monte_carlo import mean_and_stderr, run_trials
from rmt_lab.ensembles.ensemble_base import EnsembleKind, EnsembleSpec
from rmt_lab.ensembles.samplers import draw_matrix
from rmt_lab.utils.rng import trial_rng

logger = logging.getLogger(__name__)

Word = Tuple[Hashable, ...]
MomentOracle = Callable[[Word], object]


def count_nc_pairings(word: Sequence[Hashable], allowed: Callable[[Hashable, Hashable], bool]) -> int:
    """
    Number of non-crossing pairings of the positions whose every pair is allowed

    Interval recursion: the first position of an interval pairs with a later
    one, splitting it into an inside and an outside interval.
    """
    word = tuple(word)

    @lru_cache(maxsize=None)
    def count(lo: int, hi: int) -> int:
        if lo > hi:
            return 1
        if (hi - lo + 1) % 2:
            return 0
        total = 0
        for k in range(lo + 1, hi + 1, 2):
            if allowed(word[lo], word[k]):
                total += count(lo + 1, k - 1) * count(k + 1, hi)
        return total

    return count(0, len(word) - 1)


def mixed_gue_moment_limit(colors: Sequence[Hashable]) -> int:
    """lim E tr(A_{i1} ... A_{im}) for independent GUEs: NC pairings respecting colors"""
    return count_nc_pairings(colors, lambda a, b: a == b)


def star_moment_limit(word: Sequence[str]) -> int:
    """
    lim E tr of a word in X and X* (letters 'x', 's') for normalized Ginibre X

    Counts NC pairings in which every pair joins an X with an X*.
    """
    if any(letter not in ("x", "s") for letter in word):
        raise ParameterError("Star words use the letters 'x' (X) and 's' (X*)")
    return count_nc_pairings(word, lambda a, b: a != b)


def powers_word(colors: Sequence[Hashable], powers: Sequence[int]) -> Word:
    """s_{i1}^{p1} ... s_{im}^{pm} spelled out letter by letter"""
    return tuple(c for c, p in zip(colors, powers) for _ in range(p))


def freeness_check(oracle: MomentOracle, colors: Sequence[Hashable], powers: Sequence[int]):
    """
    phi[(a_1 - phi(a_1)) ... (a_m - phi(a_m))] with a_k = s_{i_k}^{p_k}

    Expanded by inclusion-exclusion over the kept factors. Vanishes for
    alternating colors when phi is a free family's moment functional.

    Args:
        oracle: phi on words (empty word -> 1)
        colors: i_1..i_m with i_k != i_{k+1}
        powers: p_1..p_m >= 1

    Returns:
        The centered alternating moment (exact for exact oracles)
    """
    colors, powers = tuple(colors), tuple(powers)
    if len(colors) != len(powers) or not colors:
        raise ParameterError("colors and powers must be nonempty and of equal length")
    if any(p < 1 for p in powers):
        raise ParameterError("powers must be >= 1")
    if any(a == b for a, b in zip(colors, colors[1:])):
        raise ParameterError(f"Colors must alternate, got {colors}")

    singles = [oracle(powers_word([c], [p])) for c, p in zip(colors, powers)]
    total = 0
    for keep in itertools.product((False, True), repeat=len(colors)):
        word = powers_word([c for c, k in zip(colors, keep) if k], [p for p, k in zip(powers, keep) if k])
        term = oracle(word) if word else 1
        for single, k in zip(singles, keep):
            if not k:
                term = term * (-single)
        total += term
    return total


def four_letter_residual(oracle: MomentOracle, p1: int, q1: int, p2: int, q2: int, colors=(1, 2)):
    """
    phi(s1^p1 s2^q1 s1^p2 s2^q2) minus its factorization

    phi(s1^(p1+p2)) phi(s2^q1) phi(s2^q2) + phi(s1^p1) phi(s1^p2) phi(s2^(q1+q2))
    - phi(s1^p1) phi(s2^q1) phi(s1^p2) phi(s2^q2)
    """
    a, b = colors

    def phi(*parts):
        return oracle(powers_word([c for c, _ in parts], [p for _, p in parts]))

    lhs = phi((a, p1), (b, q1), (a, p2), (b, q2))
    rhs = (
        phi((a, p1 + p2)) * phi((b, q1)) * phi((b, q2))
        + phi((a, p1)) * phi((a, p2)) * phi((b, q1 + q2))
        - phi((a, p1)) * phi((b, q1)) * phi((a, p2)) * phi((b, q2))
    )
    return lhs - rhs


class MonteCarloMomentOracle:
    """
    phi(word) = mean over trials of tr of the word in independent GUE(N) matrices

    Matrices for color c in trial t come from the stream (seed, t, index of c),
    so every word is evaluated on the same realizations.
    """

    def __init__(self, n: int, trials: int, seed: int, colors: Sequence[Hashable], threads: Optional[int] = None):
        if trials < 2:
            raise ParameterError("Need at least two trials")
        self.n = n
        self.trials = trials
        self.seed = seed
        self.colors = tuple(colors)
        self.threads = threads
        self.spec = EnsembleSpec(EnsembleKind.GUE, n, seed=seed)
        self._cache: Dict[Word, Tuple[float, float]] = {}

    def _matrices(self, trial: int) -> Dict[Hashable, np.ndarray]:
        return {c: draw_matrix(self.spec, trial_rng(self.seed, trial, idx)) for idx, c in enumerate(self.colors)}

    def estimate(self, word: Word) -> Tuple[float, float]:
        """(mean, standard error) of tr(word)"""
        word = tuple(word)
        if word not in self._cache:

            def one(trial: int) -> float:
                mats = self._matrices(trial)
                product = np.eye(self.n, dtype=complex)
                for c in word:
                    product = product @ mats[c]
                return float(np.real(np.trace(product))) / self.n

            self._cache[word] = mean_and_stderr(run_trials(one, self.trials, self.threads))
        return self._cache[word]

    def __call__(self, word: Word) -> float:
        return self.estimate(word)[0] if word else 1.0
