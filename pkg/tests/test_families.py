import io
import itertools
import logging
import math

import numpy as np
import pytest

from cancellative_bounds import families

# ------------------------------------------------------------------------------
# disable logging messages
logging.disable(logging.CRITICAL)


# ------------------------------------------------------------------------------
def _cancellative_reference(fp):

    # the definition, one pair of members at a time
    for b in fp.B:
        unions = [a | b for a in fp.A]
        if len(set(unions)) != len(unions):
            return False
    for a in fp.A:
        unions = [a | b for b in fp.B]
        if len(set(unions)) != len(unions):
            return False
    return True


# ------------------------------------------------------------------------------
def _recovering_reference(fp):

    for first, second in ((fp.A, fp.B), (fp.B, fp.A)):
        sources = {}
        for x in first:
            for y in second:
                if sources.setdefault(x & ~y, x) != x:
                    return False
    return True


# ------------------------------------------------------------------------------
def _brute_force_maximum(n, recovering):

    # every pair of non-empty families of subsets of [n]
    subsets = range(1 << n)
    all_families = [
        combination
        for count in range(1, (1 << n) + 1)
        for combination in itertools.combinations(subsets, count)
    ]
    check = _recovering_reference if recovering else _cancellative_reference

    best = 0
    for A in all_families:
        for B in all_families:
            if len(A) * len(B) > best and check(families.FamilyPair(n, A, B)):
                best = len(A) * len(B)
    return best


# ------------------------------------------------------------------------------
def _random_pair(rng, n):

    size_a = int(rng.integers(1, min(8, 1 << n) + 1))
    size_b = int(rng.integers(1, min(8, 1 << n) + 1))
    A = rng.choice(1 << n, size_a, replace=False)
    B = rng.choice(1 << n, size_b, replace=False)
    return families.family_pair(n, A, B)


# ------------------------------------------------------------------------------
def test_subset_mask():

    assert families.subset_mask([], 3) == 0
    assert families.subset_mask([1, 3], 3) == 0b101
    assert families.mask_elements(0b101) == [1, 3]
    assert families.mask_elements(0) == []
    assert families.mask_elements(families.subset_mask([2, 4, 5], 5)) == [2, 4, 5]

    pytest.raises(ValueError, families.subset_mask, [0], 3)
    pytest.raises(ValueError, families.subset_mask, [4], 3)


# ------------------------------------------------------------------------------
def test_family_pair():

    fp = families.family_pair(3, [4, 1, 2], np.array([0, 7]))
    assert fp.n == 3
    assert fp.A == (1, 2, 4)
    assert fp.B == (0, 7)
    assert isinstance(fp.B[0], int)

    pytest.raises(ValueError, families.family_pair, 0, [0], [0])
    pytest.raises(ValueError, families.family_pair, families.MAX_GROUND_SET + 1, [0], [0])
    pytest.raises(ValueError, families.family_pair, 2, [], [0])
    pytest.raises(ValueError, families.family_pair, 2, [1, 1], [0])
    pytest.raises(ValueError, families.family_pair, 2, [1], [4])
    pytest.raises(ValueError, families.family_pair, 2, [-1], [0])


# ------------------------------------------------------------------------------
def test_is_cancellative(triple_pair, powerset_pair):

    assert families.is_cancellative(triple_pair)
    assert not families.is_recovering(triple_pair)

    assert families.is_cancellative(powerset_pair)
    assert families.is_recovering(powerset_pair)

    # {} u {1} = {1} u {1}
    fp = families.family_pair(1, [0, 1], [0, 1])
    assert not families.is_cancellative(fp)
    assert not families.is_cancellative_by_difference(fp)
    assert not families.is_recovering(fp)

    # c_1(2) = 4 is attained by two copies of the singletons
    fp = families.family_pair(2, [0b01, 0b10], [0b01, 0b10])
    assert families.is_cancellative(fp)
    check = families.entropy_inequality_check(fp)
    assert check.lhs == pytest.approx(2.0)
    assert check.rhs == pytest.approx(2.0)

    # one-member families are always cancellative
    assert families.is_cancellative(families.singleton_pair(4))
    assert families.is_recovering(families.singleton_pair(4))

    pytest.raises(ValueError, families.is_cancellative, families.FamilyPair(2, (), (1,)))


# ------------------------------------------------------------------------------
def test_definitions_agree(rng):

    # both definitions of cancellativity and the member-wise references agree,
    # and every recovering pair is cancellative
    for _ in range(1000):
        fp = _random_pair(rng, int(rng.integers(1, 6)))
        cancellative = families.is_cancellative(fp)
        recovering = families.is_recovering(fp)

        assert cancellative == families.is_cancellative_by_difference(fp), str(fp)
        assert cancellative == _cancellative_reference(fp), str(fp)
        assert recovering == _recovering_reference(fp), str(fp)
        assert cancellative or not recovering, str(fp)

        swapped = families.swap(fp)
        assert families.is_cancellative(swapped) == cancellative
        assert families.is_recovering(swapped) == recovering


# ------------------------------------------------------------------------------
def test_product(triple_pair, powerset_pair):

    # sizes multiply and the properties carry over
    squared = families.product(triple_pair, triple_pair)
    assert squared.n == 6
    assert len(squared.A) * len(squared.B) == 81
    assert families.is_cancellative(squared)
    assert squared == families.triple_blocks(2)

    mixed = families.product(triple_pair, powerset_pair)
    assert mixed.n == 5
    assert len(mixed.A) == 3 * 2
    assert len(mixed.B) == 3 * 2
    assert families.is_cancellative(mixed)

    recovering = families.product(powerset_pair, powerset_pair)
    assert families.is_recovering(recovering)
    assert len(recovering.A) * len(recovering.B) == 2 ** 4

    # the singleton pair is a unit up to the shift of the ground set
    unit = families.product(triple_pair, families.singleton_pair(2))
    assert unit.n == 5
    assert unit.A == triple_pair.A
    assert unit.B == triple_pair.B

    pytest.raises(ValueError, families.product, families.triple_blocks(8), triple_pair)


# ------------------------------------------------------------------------------
def test_swap(powerset_pair):

    swapped = families.swap(powerset_pair)
    assert swapped.A == powerset_pair.B
    assert swapped.B == powerset_pair.A
    assert families.swap(swapped) == powerset_pair


# ------------------------------------------------------------------------------
def test_symmetrize_uniformize(triple_pair, powerset_pair):

    uniform = families.symmetrize_uniformize(triple_pair)
    assert uniform == families.triple_blocks(2)

    # A = {{}, {1}}, B = {{}, {2}} keeps the sets of size 1 of the swap product
    uniform = families.symmetrize_uniformize(powerset_pair)
    assert uniform.n == 4
    assert uniform.A == (0b0001, 0b1000)
    assert uniform.B == (0b0010, 0b0100)
    assert families.is_cancellative(uniform)

    powered = families.symmetrize_uniformize(triple_pair, M=2)
    assert powered.n == 12
    assert len(powered.A) == len(powered.B) == 81

    pytest.raises(families.NotCancellativeError, families.symmetrize_uniformize,
                  families.family_pair(1, [0, 1], [0, 1]))
    pytest.raises(ValueError, families.symmetrize_uniformize, triple_pair, 0)
    pytest.raises(ValueError, families.symmetrize_uniformize, triple_pair, 5)


# ------------------------------------------------------------------------------
def test_symmetrize_uniformize_properties(rng):

    for _ in range(100):
        fp = families.greedy_cancellative_pair(int(rng.integers(1, 5)), rng)
        uniform = families.symmetrize_uniformize(fp)

        assert uniform.n == 2 * fp.n
        assert len(uniform.A) == len(uniform.B)
        assert families.is_cancellative(uniform)

        sizes = {len(families.mask_elements(mask)) for mask in uniform.A + uniform.B}
        assert len(sizes) == 1

        # the most popular of the 2n + 1 sizes keeps at least the average
        kept = len(uniform.A) * len(uniform.B)
        assert kept * (2 * fp.n + 1) ** 2 >= (len(fp.A) * len(fp.B)) ** 2


# ------------------------------------------------------------------------------
def test_entropy_inequality_check(triple_pair, powerset_pair):

    check = families.entropy_inequality_check(triple_pair)
    assert check.lhs == pytest.approx(math.log2(9.0))
    # three coordinates with p = q = 2/3, f = (4/3) h(1/3)
    assert check.rhs == pytest.approx(4.0 * 0.9182958340544896, rel=1e-12)
    assert check.holds

    # the product pair of power sets is tight
    check = families.entropy_inequality_check(powerset_pair)
    assert check.lhs == pytest.approx(2.0)
    assert check.rhs == pytest.approx(2.0)
    assert check.holds

    pytest.raises(families.NotCancellativeError, families.entropy_inequality_check,
                  families.family_pair(1, [0, 1], [0, 1]))


# ------------------------------------------------------------------------------
def test_entropy_inequality_random(rng):

    for _ in range(500):
        fp = families.greedy_cancellative_pair(int(rng.integers(1, 9)), rng)
        assert families.is_cancellative(fp)
        check = families.entropy_inequality_check(fp)
        assert check.holds, "Entropy inequality fails for {fp}".format(fp=fp)


# ------------------------------------------------------------------------------
def test_small_bound():

    assert families.small_bound(4, 2) == 16
    assert families.small_bound(3, 3) == 1
    assert families.small_bound(10, 4) == 4 ** 6

    pytest.raises(ValueError, families.small_bound, 3, 0)
    pytest.raises(ValueError, families.small_bound, 3, 4)


# ------------------------------------------------------------------------------
def test_constructions():

    for m in (1, 2, 3):
        fp = families.triple_blocks(m)
        assert fp.n == 3 * m
        assert len(fp.A) * len(fp.B) == 3 ** (2 * m)
        assert fp.A == fp.B
        assert families.is_cancellative(fp)

    for n in (2, 4, 6):
        fp = families.powerset_split(n, n // 2)
        assert len(fp.A) * len(fp.B) == 2 ** n
        assert families.is_recovering(fp)
        assert families.is_cancellative(fp)

    fp = families.powerset_split(3, 0)
    assert fp.A == (0,)
    assert len(fp.B) == 8

    pytest.raises(ValueError, families.triple_blocks, 0)
    pytest.raises(ValueError, families.triple_blocks, 9)
    pytest.raises(ValueError, families.powerset_split, 3, 4)
    pytest.raises(ValueError, families.powerset_split, 3, -1)


# ------------------------------------------------------------------------------
def test_greedy_cancellative_pair(rng):

    for n in range(1, 7):
        fp = families.greedy_cancellative_pair(n, rng)
        assert fp.n == n
        assert families.is_cancellative(fp)

    pytest.raises(ValueError, families.greedy_cancellative_pair, 0, rng)
    pytest.raises(ValueError, families.greedy_cancellative_pair, 11, rng)


# ------------------------------------------------------------------------------
@pytest.mark.parametrize("recovering", [False, True])
def test_exhaustive_matches_brute_force(recovering):

    check = families.is_recovering if recovering else families.is_cancellative
    for n in (1, 2):
        result = families.exhaustive_max_c(n, recovering)
        assert result.value == _brute_force_maximum(n, recovering)
        assert len(result.witness.A) * len(result.witness.B) == result.value
        assert check(result.witness)


# ------------------------------------------------------------------------------
def test_exhaustive_max_c():

    assert families.exhaustive_max_c(1).value == 2

    result = families.exhaustive_max_c(3)
    assert 9 <= result.value <= 11
    assert families.entropy_inequality_check(result.witness).holds
    assert families.is_cancellative(result.witness)
    assert len(result.witness.A) * len(result.witness.B) == result.value

    result = families.exhaustive_max_c(3, recovering=True)
    assert 8 <= result.value
    assert families.is_recovering(result.witness)

    pytest.raises(ValueError, families.exhaustive_max_c, 0)
    pytest.raises(ValueError, families.exhaustive_max_c, 4)


# ------------------------------------------------------------------------------
def test_exhaustive_max_ck():

    assert families.exhaustive_max_ck(2, 1).value == 4
    assert families.exhaustive_max_ck(3, 1).value == 9
    for n in (1, 2, 5):
        assert families.exhaustive_max_ck(n, n).value == 1

    # equality with 4^(n - k) for k <= n <= 2k
    result = families.exhaustive_max_ck(4, 2)
    assert result.value == 16 == families.small_bound(4, 2)
    witness = result.witness
    assert families.is_cancellative(witness)
    assert all(len(families.mask_elements(mask)) == 2 for mask in witness.A + witness.B)

    # the recovering maximum never exceeds the cancellative one
    for n, k in ((2, 1), (3, 1), (3, 2), (4, 2)):
        assert families.exhaustive_max_ck(n, k, recovering=True).value <= \
            families.exhaustive_max_ck(n, k).value

    pytest.raises(ValueError, families.exhaustive_max_ck, 3, 0)
    pytest.raises(ValueError, families.exhaustive_max_ck, 3, 4)
    pytest.raises(ValueError, families.exhaustive_max_ck, 6, 3)


# ------------------------------------------------------------------------------
def test_family_pair_file(triple_pair, powerset_pair):

    for fp in (triple_pair, powerset_pair, families.triple_blocks(2)):
        stream = io.StringIO()
        families.write_family_pair(fp, stream)
        stream.seek(0)
        assert families.read_family_pair(stream) == fp

    stream = io.StringIO()
    families.write_family_pair(powerset_pair, stream)
    assert stream.getvalue() == "n=2\nA:\n-\n1\nB:\n-\n2\n"

    # blank lines and unordered subsets are accepted
    text = "n=3\n\nA:\n3,1\n2\n\nB:\n-\n"
    fp = families.read_family_pair(io.StringIO(text))
    assert fp.A == (0b010, 0b101)
    assert fp.B == (0,)


# ------------------------------------------------------------------------------
@pytest.mark.parametrize(
    "text",
    [
        "",
        "A:\n1\nB:\n2\n",
        "n=x\nA:\n1\nB:\n2\n",
        "n=30\nA:\n1\nB:\n2\n",
        "n=2\n1\nA:\n1\nB:\n2\n",
        "n=2\nA:\n1\n",
        "n=2\nB:\n2\nA:\n1\n",
        "n=2\nA:\n1\nA:\n2\nB:\n2\n",
        "n=2\nA:\n1\n1\nB:\n2\n",
        "n=2\nA:\n1,2\n2,1\nB:\n2\n",
        "n=2\nA:\n3\nB:\n2\n",
        "n=2\nA:\n1,1\nB:\n2\n",
        "n=2\nA:\none\nB:\n2\n",
        "n=2\nA:\nB:\n2\n",
    ],
)
def test_read_family_pair_errors(text):

    pytest.raises(families.FamilyFormatError, families.read_family_pair, io.StringIO(text))
