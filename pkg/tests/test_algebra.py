import itertools

import pytest

from bck import (
    BckAxiomError,
    MalformedTableError,
    UnboundedAlgebraError,
    bck_union,
    chain,
    check_axioms,
    d_algebra,
    family,
    from_table,
    pi,
    q_algebra,
    tc,
    trivial,
    two,
)
from bck.algebra import _check_small, _check_vectorized, canonical_table

PI_TABLE = [[0, 0, 0], [1, 0, 0], [2, 2, 0]]
TC_TABLE = [[0, 0, 0], [1, 0, 0], [2, 1, 0]]
UNION_22_TABLE = [[0, 0, 0], [1, 0, 1], [2, 2, 0]]


def test_check_axioms_pi_is_clean():
    assert check_axioms(3, PI_TABLE).ok


def test_check_axioms_bck4_violation():
    report = check_axioms(2, [[0, 1], [1, 0]])
    assert not report.ok
    assert report.witness("BCK4") == (1,)


def test_check_axioms_bck5_violation():
    report = check_axioms(3, [[0, 0, 0], [1, 0, 0], [2, 0, 0]])
    assert report.witness("BCK5") == (1, 2)


def test_check_axioms_bck3_violation():
    report = check_axioms(2, [[0, 0], [1, 1]])
    assert report.witness("BCK3") == (1,)


def test_malformed_tables_raise_structural_error():
    with pytest.raises(MalformedTableError):
        check_axioms(2, [[0, 0]])
    with pytest.raises(MalformedTableError):
        check_axioms(2, [[0, 0], [1, 0, 0]])
    with pytest.raises(MalformedTableError):
        check_axioms(2, [[0, 5], [1, 0]])
    with pytest.raises(MalformedTableError):
        check_axioms(0, [])


def test_from_table_rejects_invalid_with_report():
    with pytest.raises(BckAxiomError) as exc:
        from_table(2, [[0, 1], [1, 0]])
    assert exc.value.report.witness("BCK4") == (1,)


def test_from_table_detects_bound():
    assert from_table(3, TC_TABLE).bound == 2
    assert trivial().bound == 0
    assert from_table(3, UNION_22_TABLE).bound is None


def test_basic_ops_on_pi():
    a = pi()
    assert a.op(2, 1) == 2
    assert all(a.op(x, x) == 0 for x in a.elements)
    assert all(a.op(x, 0) == x for x in a.elements)


def test_leq():
    assert tc().leq(1, 2)
    u = from_table(3, UNION_22_TABLE)
    assert not u.leq(1, 2) and not u.leq(2, 1)
    assert all(u.leq(0, x) for x in u.elements)


def test_meet_examples():
    a = pi()
    assert a.meet(1, 2) == 0
    assert a.meet(2, 1) == 1
    for alg in (pi(), tc(), chain(5)):
        assert all(alg.meet(x, x) == x for x in alg.elements)


def test_neg():
    c3 = chain(3)
    assert c3.neg(1) == 1
    for alg in (pi(), tc(), chain(4), d_algebra(4)):
        assert alg.neg(0) == alg.bound and alg.neg(alg.bound) == 0
        # triple negation always collapses to single negation
        assert all(alg.neg(alg.neg(alg.neg(x))) == alg.neg(x) for x in alg.elements)


def test_neg_join_require_bound():
    u = from_table(3, UNION_22_TABLE)
    with pytest.raises(UnboundedAlgebraError):
        u.neg(1)
    with pytest.raises(UnboundedAlgebraError):
        u.join(1, 2)


def test_join_on_chain_matches_arithmetic_oracle():
    # in C_n: ~k = n-1-k and x*y = max(x-y, 0), so the join term can be
    # computed by integer arithmetic independently of the table
    for n in (3, 4, 5, 6):
        alg = chain(n)

        def oracle(x, y):
            nx, ny = n - 1 - x, n - 1 - y
            m = max(ny - max(ny - nx, 0), 0)
            return n - 1 - m

        for x in range(n):
            for y in range(n):
                assert alg.join(x, y) == oracle(x, y)
    assert chain(4).join(1, 2) == 2


def test_join_of_neg_on_c3_is_not_top():
    c3 = chain(3)
    assert c3.join(1, c3.neg(1)) == 1


def test_property_flags_on_named_algebras():
    a, t, d = pi(), tc(), two()
    assert a.bound == 2 and a.is_linear()
    assert not a.is_commutative() and a.is_positive_implicative() and not a.is_implicative()
    assert t.bound == 2 and t.is_linear()
    assert t.is_commutative() and not t.is_positive_implicative() and not t.is_implicative()
    assert d.is_implicative() and d.is_commutative() and d.is_positive_implicative()


def test_atoms():
    assert family("B", 5).atoms() == {1, 3, 4}
    assert len(family("B", 5).atoms()) == 3
    assert chain(6).atoms() == {1}
    assert from_table(3, UNION_22_TABLE).atoms() == {1, 2}


def test_canonical_form_idempotent():
    for alg in (pi(), tc(), d_algebra(3), q_algebra(4)):
        c = alg.canonical_form()
        assert canonical_table(alg.order, c) == c


def test_pi_tc_not_isomorphic():
    assert not pi().is_isomorphic(tc())


def test_relabeled_pi_is_isomorphic():
    swapped = pi().relabel((0, 2, 1))
    assert swapped.table != pi().table
    assert swapped.is_isomorphic(pi())


def test_canonical_form_invariant_under_all_relabelings():
    for alg in (pi(), tc(), d_algebra(3), q_algebra(4)):
        for perm in itertools.permutations(range(1, alg.order)):
            sigma = (0,) + perm
            assert alg.relabel(sigma).canonical_form() == alg.canonical_form()


def test_relabel_must_fix_zero():
    with pytest.raises(ValueError):
        pi().relabel((1, 0, 2))


def test_ops_respect_derived_order_laws():
    # x*0 = x, 0 <= x, and x*y <= x hold in every valid algebra
    for alg in (pi(), tc(), chain(6), d_algebra(5), q_algebra(5), bck_union(pi(), tc())):
        for x in alg.elements:
            assert alg.op(x, 0) == x
            assert alg.leq(0, x)
            for y in alg.elements:
                assert alg.leq(alg.op(x, y), x)


def test_bounded_commutative_double_negation_is_identity(small_catalogs):
    for cat in small_catalogs.values():
        for entry in cat.entries:
            if entry.commutative and entry.bound is not None:
                alg = entry.algebra
                assert all(alg.neg(alg.neg(x)) == x for x in alg.elements)


def test_bounded_commutative_meet_join_form_distributive_lattice(small_catalogs):
    for cat in small_catalogs.values():
        for entry in cat.entries:
            if not (entry.commutative and entry.bound is not None):
                continue
            alg = entry.algebra
            els = list(alg.elements)
            for x, y in itertools.product(els, els):
                assert alg.meet(x, y) == alg.meet(y, x)
                assert alg.join(x, y) == alg.join(y, x)
                assert alg.meet(x, alg.join(x, y)) == x
                assert alg.join(x, alg.meet(x, y)) == x
            for x, y, z in itertools.product(els, els, els):
                assert alg.meet(x, alg.meet(y, z)) == alg.meet(alg.meet(x, y), z)
                assert alg.join(x, alg.join(y, z)) == alg.join(alg.join(x, y), z)
                assert alg.meet(x, alg.join(y, z)) == alg.join(alg.meet(x, y), alg.meet(x, z))


def test_small_and_vectorized_checkers_agree():
    import random

    rng = random.Random(20240917)
    for _ in range(200):
        n = rng.randint(1, 6)
        t = [[rng.randrange(n) for _ in range(n)] for _ in range(n)]
        assert _check_small(n, t) == _check_vectorized(n, t)


def test_vectorized_checker_used_at_scale():
    a = chain(40)  # above the vectorization cutoff
    assert check_axioms(a.order, a.table).ok
    bad = [list(row) for row in a.table]
    bad[0][7] = 3
    assert check_axioms(40, bad).witness("BCK4") == (7,)
