"""
Concrete pairs of set families over a small ground set [n] = {1, ..., n}.

Subsets are encoded as integer bitmasks, element i being bit i - 1, so a
family is a sorted tuple of distinct non-negative integers below 2^n. The
ground set is capped at MAX_GROUND_SET elements so that every mask fits one
machine word, and all checks are vectorised over numpy int64 arrays.
"""
import itertools
import logging
import math
from typing import Iterable, List, NamedTuple, Optional, TextIO, Tuple

import numpy as np
import scipy.special

from cancellative_bounds import entropy, utils

# declare the names that should be included in the public API for this module
__all__ = [
    "FamilyFormatError",
    "FamilyPair",
    "InequalityCheck",
    "NotCancellativeError",
    "SearchResult",
    "entropy_inequality_check",
    "exhaustive_max_c",
    "exhaustive_max_ck",
    "family_pair",
    "greedy_cancellative_pair",
    "is_cancellative",
    "is_cancellative_by_difference",
    "is_recovering",
    "mask_elements",
    "powerset_split",
    "product",
    "read_family_pair",
    "singleton_pair",
    "small_bound",
    "subset_mask",
    "swap",
    "symmetrize_uniformize",
    "triple_blocks",
    "write_family_pair",
]

# ------------------------------------------------------------------------------
# Retrieve logger and set desired logging level
_logger = utils.get_logger(__name__, logging.WARN)

# ------------------------------------------------------------------------------
# largest ground set for which masks are accepted
MAX_GROUND_SET = 24

# largest n for the search over all family pairs
EXHAUSTIVE_MAX_N = 3

# largest number of k-sets for the search over k-uniform family pairs
EXHAUSTIVE_MAX_CLASS = 12

# slack allowed in the entropy inequality
INEQUALITY_TOLERANCE = 1e-12

# tokens of the family-pair file format
_EMPTY_SET_TOKEN = "-"
_HEADER_PREFIX = "n="


# ------------------------------------------------------------------------------
class NotCancellativeError(ValueError):
    """
    Raised by operations whose hypothesis is a cancellative pair.
    """


# ------------------------------------------------------------------------------
class FamilyFormatError(ValueError):
    """
    Raised when a family-pair file cannot be parsed.
    """


# ------------------------------------------------------------------------------
class FamilyPair(NamedTuple):
    """
    Two families of subsets of [n], each a sorted tuple of distinct bitmasks.
    """

    n: int
    A: Tuple[int, ...]
    B: Tuple[int, ...]


# ------------------------------------------------------------------------------
class InequalityCheck(NamedTuple):
    """
    Both sides of log2(|A||B|) <= sum_i f(p_i, q_i) and whether it holds.
    """

    lhs: float
    rhs: float
    holds: bool


# ------------------------------------------------------------------------------
class SearchResult(NamedTuple):
    """
    The maximum of |A||B| found by an exhaustive search and a pair attaining it.
    """

    value: int
    witness: FamilyPair


# ------------------------------------------------------------------------------
def subset_mask(
        elements: Iterable[int],
        n: int,
) -> int:
    """
    :param elements: elements of [n], 1-based
    :param n: ground set size
    :return: the bitmask of the subset
    :raise ValueError: if an element is outside [n]
    """

    mask = 0
    for element in elements:
        if not 1 <= element <= n:
            message = "Element {element} is outside the ground set [1, {n}]".format(
                element=element, n=n
            )
            _logger.error(message)
            raise ValueError(message)
        mask |= 1 << (element - 1)

    return mask


# ------------------------------------------------------------------------------
def mask_elements(
        mask: int,
) -> List[int]:
    """
    :param mask: bitmask of a subset
    :return: the sorted 1-based elements of the subset
    """

    return [bit + 1 for bit in range(mask.bit_length()) if mask >> bit & 1]


# ------------------------------------------------------------------------------
def _sizes(
        masks: np.ndarray,
) -> np.ndarray:

    # popcount by unpacking the four low bytes of each mask
    as_bytes = np.ascontiguousarray(masks, dtype="<u4").view(np.uint8)
    return np.unpackbits(as_bytes).reshape(-1, 32).sum(axis=1)


# ------------------------------------------------------------------------------
def _membership(
        masks: np.ndarray,
        n: int,
) -> np.ndarray:

    # characteristic vectors, one row per subset and one column per element
    return (masks[:, np.newaxis] >> np.arange(n)) & 1 == 1


# ------------------------------------------------------------------------------
def family_pair(
        n: int,
        A: Iterable[int],
        B: Iterable[int],
) -> FamilyPair:
    """
    Builds a validated pair from two collections of bitmasks.

    :param n: ground set size, 1 <= n <= 24
    :param A: bitmasks of the first family
    :param B: bitmasks of the second family
    :return: the pair, with both families sorted
    :raise ValueError: if n is out of range, a mask has support outside [n],
        a family contains a duplicate or is empty
    """

    if not 1 <= n <= MAX_GROUND_SET:
        message = "Invalid ground set size: {n} (must be in [1, {cap}])".format(
            n=n, cap=MAX_GROUND_SET
        )
        _logger.error(message)
        raise ValueError(message)

    families = []
    for name, family in (("A", A), ("B", B)):
        masks = [int(mask) for mask in family]
        if not masks:
            message = "Family {name} is empty".format(name=name)
            _logger.error(message)
            raise ValueError(message)
        if len(set(masks)) != len(masks):
            message = "Family {name} contains a duplicate subset".format(name=name)
            _logger.error(message)
            raise ValueError(message)
        if any(not 0 <= mask < 1 << n for mask in masks):
            message = "Family {name} has a subset outside the ground set [{n}]".format(
                name=name, n=n
            )
            _logger.error(message)
            raise ValueError(message)
        families.append(tuple(sorted(masks)))

    return FamilyPair(n, families[0], families[1])


# ------------------------------------------------------------------------------
def _as_arrays(
        fp: FamilyPair,
) -> (np.ndarray, np.ndarray):

    if not (fp.A and fp.B):
        message = "Empty families are not supported"
        _logger.error(message)
        raise ValueError(message)

    return np.array(fp.A, dtype=np.int64), np.array(fp.B, dtype=np.int64)


# ------------------------------------------------------------------------------
def _columns_distinct(
        table: np.ndarray,
) -> np.ndarray:

    # True for each column whose entries are pairwise distinct
    ordered = np.sort(table, axis=0)
    return np.all(np.diff(ordered, axis=0) != 0, axis=0)


# ------------------------------------------------------------------------------
def _cancels(
        first: np.ndarray,
        second: np.ndarray,
) -> bool:

    # A u B = A' u B implies A = A', one column per B
    return bool(np.all(_columns_distinct(np.bitwise_or.outer(first, second))))


# ------------------------------------------------------------------------------
def _recovers(
        first: np.ndarray,
        second: np.ndarray,
) -> bool:

    # A \ B = A' \ B' implies A = A': every difference value has a single source
    differences = np.bitwise_and.outer(first, ~second).ravel()
    sources = np.repeat(np.arange(len(first)), len(second))
    order = np.lexsort((sources, differences))
    same_value = np.diff(differences[order]) == 0
    same_source = np.diff(sources[order]) == 0

    return bool(np.all(same_source[same_value]))


# ------------------------------------------------------------------------------
def is_cancellative(
        fp: FamilyPair,
) -> bool:
    """
    Whether A u B = A' u B implies A = A' and A u B = A u B' implies B = B',
    for all members A, A' of the first family and B, B' of the second.

    :param fp: a pair of non-empty families
    :return: True if the pair is cancellative
    :raise ValueError: if a family is empty
    """

    first, second = _as_arrays(fp)
    return _cancels(first, second) and _cancels(second, first)


# ------------------------------------------------------------------------------
def is_cancellative_by_difference(
        fp: FamilyPair,
) -> bool:
    """
    The same property stated with differences: A \\ B = A' \\ B implies A = A'
    and B \\ A = B' \\ A implies B = B'.
    """

    first, second = _as_arrays(fp)
    return bool(
        np.all(_columns_distinct(np.bitwise_and.outer(first, ~second)))
        and np.all(_columns_distinct(np.bitwise_and.outer(second, ~first)))
    )


# ------------------------------------------------------------------------------
def is_recovering(
        fp: FamilyPair,
) -> bool:
    """
    Whether A \\ B = A' \\ B' implies A = A' and B \\ A = B' \\ A' implies B = B'.
    Every recovering pair is cancellative.

    :param fp: a pair of non-empty families
    :return: True if the pair is recovering
    :raise ValueError: if a family is empty
    """

    first, second = _as_arrays(fp)
    return _recovers(first, second) and _recovers(second, first)


# ------------------------------------------------------------------------------
def swap(
        fp: FamilyPair,
) -> FamilyPair:
    return FamilyPair(fp.n, fp.B, fp.A)


# ------------------------------------------------------------------------------
def product(
        fp1: FamilyPair,
        fp2: FamilyPair,
) -> FamilyPair:
    """
    The product pair over [n1 + n2]: the second pair's elements are shifted by
    n1, and each family of the result holds the unions of one member from each
    side. Sizes multiply; cancellativity and recoverability are preserved.

    :param fp1: first pair, over [n1]
    :param fp2: second pair, over [n2]
    :return: the product pair
    :raise ValueError: if n1 + n2 exceeds the ground set cap
    """

    n = fp1.n + fp2.n
    if n > MAX_GROUND_SET:
        message = "Product ground set {n} exceeds the cap of {cap}".format(
            n=n, cap=MAX_GROUND_SET
        )
        _logger.error(message)
        raise ValueError(message)

    def combine(first, second):
        shifted = np.array(second, dtype=np.int64) << fp1.n
        unions = np.bitwise_or.outer(np.array(first, dtype=np.int64), shifted)
        return tuple(sorted(int(mask) for mask in unions.ravel()))

    return FamilyPair(n, combine(fp1.A, fp2.A), combine(fp1.B, fp2.B))


# ------------------------------------------------------------------------------
def symmetrize_uniformize(
        fp: FamilyPair,
        M: int = 1,
) -> FamilyPair:
    """
    Reduction of a cancellative pair to a symmetric-size uniform one: take the
    product of the pair with its swap, keep the sets of the most popular size
    k0 (the smallest such size on ties) on both sides, and raise the result
    to the M-th product power.

    The two families of the swap product have the same size distribution, so
    the kept families have equal sizes, at least (|A||B| / (2n + 1))^M each.

    :param fp: a cancellative pair over [n]
    :param M: number of factors of the final power
    :return: a uniform cancellative pair over [2nM] with |A| = |B|
    :raise NotCancellativeError: if the input pair is not cancellative
    :raise ValueError: if M < 1 or the result exceeds the ground set cap
    """

    if M < 1:
        message = "Invalid power: {M}".format(M=M)
        _logger.error(message)
        raise ValueError(message)

    if not is_cancellative(fp):
        message = "Uniformisation needs a cancellative pair"
        _logger.error(message)
        raise NotCancellativeError(message)

    if 2 * fp.n * M > MAX_GROUND_SET:
        message = "Uniformised ground set {n} exceeds the cap of {cap}".format(
            n=2 * fp.n * M, cap=MAX_GROUND_SET
        )
        _logger.error(message)
        raise ValueError(message)

    doubled = product(fp, swap(fp))
    first = np.array(doubled.A, dtype=np.int64)
    second = np.array(doubled.B, dtype=np.int64)
    first_sizes = _sizes(first)

    # argmax returns the first, i.e. smallest, of the most popular sizes
    k0 = int(np.argmax(np.bincount(first_sizes)))
    _logger.debug("Keeping sets of size %d", k0)

    uniform = FamilyPair(
        doubled.n,
        tuple(int(mask) for mask in first[first_sizes == k0]),
        tuple(int(mask) for mask in second[_sizes(second) == k0]),
    )

    result = uniform
    for _ in range(M - 1):
        result = product(result, uniform)

    return result


# ------------------------------------------------------------------------------
def entropy_inequality_check(
        fp: FamilyPair,
) -> InequalityCheck:
    """
    Evaluates both sides of log2(|A||B|) <= sum_i f(p_i, q_i), where p_i and
    q_i are the fractions of the members of A and of B avoiding element i.

    :param fp: a cancellative pair
    :return: the two sides and whether lhs <= rhs + INEQUALITY_TOLERANCE
    :raise NotCancellativeError: if the pair is not cancellative
    """

    if not is_cancellative(fp):
        message = "The entropy inequality needs a cancellative pair"
        _logger.error(message)
        raise NotCancellativeError(message)

    first, second = _as_arrays(fp)
    p = 1.0 - _membership(first, fp.n).mean(axis=0)
    q = 1.0 - _membership(second, fp.n).mean(axis=0)

    lhs = math.log2(len(first) * len(second))
    rhs = float(np.sum(entropy.pair_objective(entropy.ProbPair(p, q))))

    return InequalityCheck(lhs, rhs, lhs <= rhs + INEQUALITY_TOLERANCE)


# ------------------------------------------------------------------------------
def small_bound(
        n: int,
        k: int,
) -> int:
    """
    The bound c_k(n) <= 2^(2(n - k)), with equality for k <= n <= 2k.

    :param n: ground set size
    :param k: uniform set size, 1 <= k <= n
    :return: 4^(n - k) as an exact integer
    """

    if not 1 <= k <= n:
        message = "Invalid arguments: need 1 <= k <= n, got n={n}, k={k}".format(n=n, k=k)
        _logger.error(message)
        raise ValueError(message)

    return 4 ** (n - k)


# ------------------------------------------------------------------------------
def triple_blocks(
        m: int,
) -> FamilyPair:
    """
    The pair over [3m] with A = B = the sets taking exactly one element from
    each of the blocks {1, 2, 3}, {4, 5, 6}, ..., so |A||B| = 3^(2n/3).

    :param m: number of blocks, at most 8
    :return: the cancellative (not recovering) pair
    """

    if not 1 <= m <= MAX_GROUND_SET // 3:
        message = "Invalid number of blocks: {m}".format(m=m)
        _logger.error(message)
        raise ValueError(message)

    block = FamilyPair(3, (0b001, 0b010, 0b100), (0b001, 0b010, 0b100))
    result = block
    for _ in range(m - 1):
        result = product(result, block)

    return result


# ------------------------------------------------------------------------------
def powerset_split(
        n: int,
        s1: int,
) -> FamilyPair:
    """
    The recovering pair A = all subsets of {1, ..., s1}, B = all subsets of
    {s1 + 1, ..., n}, with |A||B| = 2^n.

    :param n: ground set size
    :param s1: size of the first part, 0 <= s1 <= n
    :return: the pair
    """

    if not 0 <= s1 <= n:
        message = "Invalid split: s1={s1} for n={n}".format(s1=s1, n=n)
        _logger.error(message)
        raise ValueError(message)

    return family_pair(n, range(1 << s1), (mask << s1 for mask in range(1 << (n - s1))))


# ------------------------------------------------------------------------------
def singleton_pair(
        n: int,
) -> FamilyPair:
    """
    The pair ({empty set}, {empty set}) over [n], the unit of product().
    """

    return family_pair(n, (0,), (0,))


# ------------------------------------------------------------------------------
def greedy_cancellative_pair(
        n: int,
        rng: np.random.Generator,
) -> FamilyPair:
    """
    A random cancellative pair: starting from one random subset on each side,
    every subset of [n] is offered in random order to a randomly chosen side
    and kept when the pair stays cancellative.

    :param n: ground set size, at most 10
    :param rng: random number generator
    :return: a cancellative pair
    """

    if not 1 <= n <= 10:
        message = "Invalid ground set size for the greedy generator: {n}".format(n=n)
        _logger.error(message)
        raise ValueError(message)

    subsets = rng.permutation(1 << n)
    first = [int(subsets[0])]
    second = [int(rng.integers(1 << n))]

    for candidate, to_first in zip(subsets[1:], rng.random(len(subsets) - 1) < 0.5):
        candidate = int(candidate)
        grown, other = (first, second) if to_first else (second, first)
        if candidate in grown:
            continue

        trial = np.array(grown + [candidate], dtype=np.int64)
        fixed = np.array(other, dtype=np.int64)
        if _cancels(trial, fixed) and _cancels(fixed, trial):
            grown.append(candidate)

    return family_pair(n, first, second)


# ------------------------------------------------------------------------------
def _compatibility(
        family: np.ndarray,
        universe: np.ndarray,
        recovering: bool,
) -> (np.ndarray, np.ndarray):
    """
    For a fixed first family, the candidates b of the universe that may belong
    to the second family on their own, and the pairs (b, b') that may not both
    belong to it. Both conditions are pairwise in the second family.
    """

    if recovering:
        differences = np.bitwise_and.outer(family, ~universe)
        admissible = _columns_distinct(differences)

        # a \ b = a' \ b' with a != a'
        distinct_sources = ~np.eye(len(family), dtype=bool)[:, :, np.newaxis, np.newaxis]
        clashes = (differences[:, np.newaxis, :, np.newaxis]
                   == differences[np.newaxis, :, np.newaxis, :]) & distinct_sources

        # b \ a = b' \ a'
        reverse = np.bitwise_and.outer(~family, universe)
        reverse_clashes = (reverse[:, np.newaxis, :, np.newaxis]
                           == reverse[np.newaxis, :, np.newaxis, :])

        conflicts = clashes.any(axis=(0, 1)) | reverse_clashes.any(axis=(0, 1))
    else:
        unions = np.bitwise_or.outer(family, universe)
        admissible = _columns_distinct(unions)
        conflicts = (unions[:, :, np.newaxis] == unions[:, np.newaxis, :]).any(axis=0)

    np.fill_diagonal(conflicts, False)
    return admissible, conflicts


# ------------------------------------------------------------------------------
def _largest_compatible_subset(
        conflicts: np.ndarray,
) -> List[int]:
    """
    Branch and bound for a largest set of vertices without conflicts. Vertices
    are tried in increasing order and only strict improvements are kept, so
    the result is the lexicographically smallest among the largest.
    """

    best = []

    def branch_and_bound(candidates, current):
        nonlocal best

        if not candidates:
            if len(current) > len(best):
                best = current.copy()
            return

        # current plus every candidate cannot beat the incumbent
        if len(current) + len(candidates) <= len(best):
            return

        for i, vertex in enumerate(candidates):
            remaining = [other for other in candidates[i + 1:] if not conflicts[vertex, other]]
            current.append(vertex)
            branch_and_bound(remaining, current)
            current.pop()

    branch_and_bound(list(range(len(conflicts))), [])
    return best


# ------------------------------------------------------------------------------
def _search(
        n: int,
        universe: np.ndarray,
        recovering: bool,
) -> SearchResult:
    """
    Maximises |A||B| over pairs of families drawn from the universe. First
    families are visited in lexicographic order of their sorted masks, and for
    each one the best second family is a largest conflict-free set of
    admissible candidates.
    """

    size = len(universe)
    best_value = 0
    best_pair = None

    families = sorted(
        itertools.chain.from_iterable(
            itertools.combinations(range(size), count) for count in range(1, size + 1)
        )
    )
    for indices in families:
        family = universe[list(indices)]
        admissible, conflicts = _compatibility(family, universe, recovering)

        candidates = np.flatnonzero(admissible)
        if len(family) * len(candidates) <= best_value:
            continue

        chosen = _largest_compatible_subset(conflicts[np.ix_(candidates, candidates)])
        value = len(family) * len(chosen)
        if value > best_value:
            best_value = value
            best_pair = FamilyPair(
                n,
                tuple(int(mask) for mask in family),
                tuple(int(universe[candidates[i]]) for i in chosen),
            )

    _logger.debug("Search over %d subsets of [%d] found %d", size, n, best_value)
    return SearchResult(best_value, best_pair)


# ------------------------------------------------------------------------------
def exhaustive_max_c(
        n: int,
        recovering: bool = False,
) -> SearchResult:
    """
    The exact maximum c(n) of |A||B| over cancellative pairs on [n], by
    exhaustive search over all families of subsets.

    :param n: ground set size, 1 <= n <= 3
    :param recovering: maximise over recovering pairs instead
    :return: the maximum and the lexicographically smallest pair attaining it
    :raise ValueError: if n is outside [1, 3]
    """

    if not 1 <= n <= EXHAUSTIVE_MAX_N:
        message = "Exhaustive search supports 1 <= n <= {cap}, got {n}".format(
            cap=EXHAUSTIVE_MAX_N, n=n
        )
        _logger.error(message)
        raise ValueError(message)

    return _search(n, np.arange(1 << n, dtype=np.int64), recovering)


# ------------------------------------------------------------------------------
def exhaustive_max_ck(
        n: int,
        k: int,
        recovering: bool = False,
) -> SearchResult:
    """
    The exact maximum c_k(n) of |A||B| over k-uniform cancellative pairs on [n].

    :param n: ground set size
    :param k: set size, 1 <= k <= n, with C(n, k) <= 12
    :param recovering: maximise over recovering pairs instead
    :return: the maximum and the lexicographically smallest pair attaining it
    :raise ValueError: if the arguments are out of range or there are more
        than 12 sets of size k
    """

    if not (1 <= k <= n <= MAX_GROUND_SET) \
            or scipy.special.comb(n, k, exact=True) > EXHAUSTIVE_MAX_CLASS:
        message = "Exhaustive search needs 1 <= k <= n and C(n, k) <= {cap}, " \
                  "got n={n}, k={k}".format(cap=EXHAUSTIVE_MAX_CLASS, n=n, k=k)
        _logger.error(message)
        raise ValueError(message)

    universe = np.array(
        sorted(subset_mask((i + 1 for i in chosen), n)
               for chosen in itertools.combinations(range(n), k)),
        dtype=np.int64,
    )
    return _search(n, universe, recovering)


# ------------------------------------------------------------------------------
def write_family_pair(
        fp: FamilyPair,
        stream: TextIO,
):
    """
    Writes a pair as text: the line n=<n>, then "A:" and one subset per line as
    comma-separated elements ("-" for the empty set), then "B:" likewise.

    :param fp: the pair to write
    :param stream: text stream to write to
    """

    stream.write("{prefix}{n}\n".format(prefix=_HEADER_PREFIX, n=fp.n))
    for label, family in (("A", fp.A), ("B", fp.B)):
        stream.write("{label}:\n".format(label=label))
        for mask in family:
            elements = mask_elements(mask)
            line = ",".join(str(element) for element in elements) if elements \
                else _EMPTY_SET_TOKEN
            stream.write(line + "\n")


# ------------------------------------------------------------------------------
def _parse_subset(
        line: str,
        n: int,
        number: int,
) -> int:

    if line == _EMPTY_SET_TOKEN:
        return 0

    try:
        elements = [int(token) for token in line.split(",")]
    except ValueError as error:
        raise FamilyFormatError(
            "Line {number}: unreadable subset '{line}'".format(number=number, line=line)
        ) from error

    if len(set(elements)) != len(elements) or any(not 1 <= e <= n for e in elements):
        raise FamilyFormatError(
            "Line {number}: subset '{line}' is not a set of elements of [{n}]".format(
                number=number, line=line, n=n
            )
        )

    return subset_mask(elements, n)


# ------------------------------------------------------------------------------
def read_family_pair(
        stream: TextIO,
) -> FamilyPair:
    """
    Reads a pair written by write_family_pair(). Blank lines are ignored and
    a subset listed twice in one family is an error.

    :param stream: text stream to read from
    :return: the pair
    :raise FamilyFormatError: if the text is not a family-pair file
    """

    try:
        lines = [(number, line.strip()) for number, line in enumerate(stream, start=1)]
        lines = [(number, line) for number, line in lines if line]

        if not lines or not lines[0][1].startswith(_HEADER_PREFIX):
            raise FamilyFormatError("Missing 'n=' header line")
        try:
            n = int(lines[0][1][len(_HEADER_PREFIX):])
        except ValueError as error:
            raise FamilyFormatError("Unreadable ground set size") from error
        if not 1 <= n <= MAX_GROUND_SET:
            raise FamilyFormatError("Ground set size {n} is out of range".format(n=n))

        sections = {"A": None, "B": None}
        current: Optional[List[int]] = None
        seen = set()
        for number, line in lines[1:]:
            if line in ("A:", "B:"):
                label = line[0]
                if sections[label] is not None:
                    raise FamilyFormatError(
                        "Line {number}: section {label} repeated".format(
                            number=number, label=label)
                    )
                if label == "B" and sections["A"] is None:
                    raise FamilyFormatError("Section B precedes section A")
                current = sections[label] = []
                seen = set()
                continue

            if current is None:
                raise FamilyFormatError(
                    "Line {number}: subset outside a section".format(number=number)
                )
            if line in seen:
                raise FamilyFormatError(
                    "Line {number}: duplicate subset '{line}'".format(number=number, line=line)
                )
            seen.add(line)

            mask = _parse_subset(line, n, number)
            if mask in current:
                raise FamilyFormatError(
                    "Line {number}: duplicate subset '{line}'".format(number=number, line=line)
                )
            current.append(mask)

        if not sections["A"] or not sections["B"]:
            raise FamilyFormatError("Both families must be present and non-empty")

    except FamilyFormatError as error:
        _logger.error("%s", error)
        raise

    return family_pair(n, sections["A"], sections["B"])
