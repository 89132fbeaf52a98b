import pytest

from gpi.groups import (FiniteGroup, GradingTuple, GroupError, cyclic_group,
                        default_grading)

# S3 as permutations of {0,1,2}: elements e, (01), (02), (12), (012), (021)
_S3_PERMS = [
    (0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1),
]


def s3():
    def compose(p, q):  # apply q first, then p
        return tuple(p[q[i]] for i in range(3))
    idx = {p: i for i, p in enumerate(_S3_PERMS)}
    table = tuple(tuple(idx[compose(p, q)] for q in _S3_PERMS) for p in _S3_PERMS)
    return FiniteGroup(table)


class TestCyclicGroup:
    def test_trivial(self):
        assert cyclic_group(1).table == ((0,),)

    def test_z3_entry(self):
        assert cyclic_group(3).table[1][2] == 0

    def test_z2_entry(self):
        assert cyclic_group(2).table[1][1] == 0

    def test_invalid_order(self):
        with pytest.raises(GroupError):
            cyclic_group(0)

    def test_inverses(self):
        g = cyclic_group(5)
        for a in range(5):
            assert g.mul(a, g.inv(a)) == g.identity_index


class TestTableValidation:
    def test_not_associative(self):
        with pytest.raises(GroupError):
            FiniteGroup(((0, 1), (1, 1)))

    def test_no_identity(self):
        with pytest.raises(GroupError):
            FiniteGroup(((0, 0), (0, 0)))

    def test_s3_is_a_group(self):
        g = s3()
        assert g.order == 6
        assert not g.is_abelian()


class TestPhi:
    def setup_method(self):
        self.grading = default_grading(cyclic_group(3))

    def test_identity_element_fixes_positions(self):
        for i in range(3):
            assert self.grading.phi(0, i) == i

    def test_shift_examples(self):
        # 1-based statements phi(1,1)=2 and phi(1,3)=1, here 0-based
        assert self.grading.phi(1, 0) == 1
        assert self.grading.phi(1, 2) == 0

    def test_table_lookup_oracle(self):
        # phi_g(i) is the unique j with tuple[j] = tuple[i]*g
        g3 = self.grading
        for g in range(3):
            for i in range(3):
                j = g3.phi(g, i)
                assert g3.tuple_[j] == g3.group.mul(g3.tuple_[i], g)

    def test_bijection_every_element(self):
        for grading in (default_grading(cyclic_group(4)), default_grading(s3())):
            n = grading.n
            for g in range(n):
                assert sorted(grading.phi(g, i) for i in range(n)) == list(range(n))

    def test_composition_law(self):
        # phi_a(phi_b(i)) = phi_{ba}(i), exhaustively incl. a non-abelian table
        for grading in (default_grading(cyclic_group(2)),
                        default_grading(cyclic_group(3)),
                        default_grading(cyclic_group(4)),
                        default_grading(s3())):
            n = grading.n
            for a in range(n):
                for b in range(n):
                    for i in range(n):
                        assert grading.phi(a, grading.phi(b, i)) == \
                            grading.phi(grading.group.mul(b, a), i)

    def test_separation(self):
        for grading in (default_grading(cyclic_group(3)), default_grading(s3())):
            n = grading.n
            maps = {g: tuple(grading.phi(g, i) for i in range(n)) for g in range(n)}
            assert len(set(maps.values())) == n


class TestBeta:
    def setup_method(self):
        self.grading = default_grading(cyclic_group(3))

    def test_single_degree(self):
        assert self.grading.beta((1,), 0, 0) == 1

    def test_cancelling_pair(self):
        assert self.grading.beta((1, 2), 1, 1) == 1

    def test_trivial_degrees(self):
        for t in range(2):
            for i in range(3):
                assert self.grading.beta((0, 0), t, i) == i

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            self.grading.beta((1,), 1, 0)

    def test_fold_oracle(self):
        import itertools
        g3 = self.grading
        for hbar in itertools.product(range(3), repeat=3):
            for t in range(3):
                prod = 0
                for h in hbar[: t + 1]:
                    prod = g3.group.mul(h, prod)
                for i in range(3):
                    assert g3.beta(hbar, t, i) == g3.phi(prod, i)


def test_grading_tuple_must_be_bijection():
    with pytest.raises(GroupError):
        GradingTuple(cyclic_group(3), (0, 1, 1))


def test_nondefault_grading_permutes_phi():
    g = GradingTuple(cyclic_group(3), (2, 0, 1))
    for gg in range(3):
        for i in range(3):
            assert g.tuple_[g.phi(gg, i)] == g.group.mul(g.tuple_[i], gg)
