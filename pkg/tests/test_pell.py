import pytest

from seqcert.ntkernel import is_perfect_square
from seqcert.pell import (
    Form,
    PellSolution,
    enumerate_solutions,
    fundamental_solution,
    next_solution,
    solutions,
)


def test_fundamental_examples():
    s = fundamental_solution(3, Form.UNIT1)
    assert (s.A, s.B) == (2, 1)
    s = fundamental_solution(5, Form.UNIT4)
    assert (s.A, s.B) == (3, 1)
    s = fundamental_solution(2, Form.UNIT1)
    assert (s.A, s.B) == (3, 2)


def test_fundamental_rejects_bad_d():
    with pytest.raises(ValueError):
        fundamental_solution(12, Form.UNIT1)  # not squarefree
    with pytest.raises(ValueError):
        fundamental_solution(1, Form.UNIT1)
    with pytest.raises(ValueError):
        fundamental_solution(3, Form.UNIT4)  # d != 1 (mod 4)


def test_next_solution_chain_d3():
    s1 = fundamental_solution(3, Form.UNIT1)
    s2 = next_solution(s1)
    s3 = next_solution(s2)
    assert (s2.A, s2.B) == (7, 4)
    assert (s3.A, s3.B) == (26, 15)


def test_next_solution_chain_d5_norm4():
    s1 = fundamental_solution(5, Form.UNIT4)
    s2 = next_solution(s1)
    assert (s2.A, s2.B) == (7, 3)
    s3 = next_solution(s2)
    assert (s3.A, s3.B) == (18, 8)


def test_enumerate_b_sequences():
    bs = [s.B for s in enumerate_solutions(3, Form.UNIT1, max_index=7)]
    assert bs == [1, 4, 15, 56, 209, 780, 2911]
    bs = [s.B for s in enumerate_solutions(5, Form.UNIT4, max_index=3)]
    assert bs == [1, 3, 8]
    only = enumerate_solutions(7, Form.UNIT1, max_index=1)
    assert len(only) == 1 and only[0].index == 1


def test_enumerate_stop_predicate():
    got = enumerate_solutions(3, Form.UNIT1, stop=lambda s: s.B > 100)
    assert [s.B for s in got] == [1, 4, 15, 56]
    with pytest.raises(ValueError):
        enumerate_solutions(3, Form.UNIT1)


def test_norm_invariant_to_index_50():
    for d, form in ((3, Form.UNIT1), (2, Form.UNIT1), (5, Form.UNIT4)):
        prev_b = 0
        for s in enumerate_solutions(d, form, max_index=50):
            assert s.A * s.A - d * s.B * s.B == form.value
            assert s.B > prev_b
            prev_b = s.B


def test_d3_completeness_by_exhaustive_scan():
    # every (A, B) with B <= 10^4 and A^2 - 3 B^2 = 1 appears in the enumeration
    enumerated = {(s.A, s.B) for s in enumerate_solutions(3, Form.UNIT1, max_b=10**4)}
    from seqcert.ntkernel import isqrt

    found = set()
    for b in range(1, 10**4 + 1):
        t = 3 * b * b + 1
        if is_perfect_square(t):
            found.add((isqrt(t), b))
    assert found == enumerated


def test_solution_validation():
    with pytest.raises(ValueError):
        PellSolution(3, Form.UNIT1, 1, 3, 1)  # 9 - 3 != 1


def test_generator_matches_enumeration():
    gen = solutions(3, Form.UNIT1)
    assert [next(gen).B for _ in range(4)] == [1, 4, 15, 56]
