import numpy as np
import pytest

import essentials as ess
import root_systems as rsys


@pytest.mark.parametrize('type_, positive, dim', [
    ('G2', 6, 14), ('F4', 24, 52), ('E6', 36, 78), ('E7', 63, 133), ('E8', 120, 248)])
def test_counts(type_, positive, dim):
    rs = rsys.build(type_)
    assert rs.num_positive == positive
    assert rs.dim == dim


@pytest.mark.parametrize('type_, highest', [
    ('G2', [3, 2]), ('F4', [2, 3, 4, 2]), ('E6', [1, 2, 2, 3, 2, 1]), ('E7', [2, 2, 3, 4, 3, 2, 1]),
    ('E8', [2, 3, 4, 6, 5, 4, 3, 2])])
def test_highest_root(type_, highest):
    assert rsys.build(type_).highest_root.tolist() == highest


def test_positive_roots_sorted_by_height():
    rs = rsys.build('F4')
    heights = [rs.height(r) for r in rs.positive]
    assert heights == sorted(heights)
    assert heights[-1] == 11


def test_g2_cartan_matrix_and_strings():
    rs = rsys.build('G2')
    assert rs.cartan.tolist() == [[2, -1], [-3, 2]]
    assert rsys.cartan_integer(rs, [0, 1], [1, 0]) == -3
    assert rsys.root_string(rs, [0, 1], [1, 0]) == (0, 3)
    assert rsys.root_string(rs, [1, 0], [0, 1]) == (0, 1)
    with pytest.raises(ess.DimensionMismatch):
        rsys.root_string(rs, [1, 0], [-1, 0])


def test_unknown_type_and_rank():
    with pytest.raises(ess.UnknownType):
        rsys.build('B3')
    with pytest.raises(ess.UnknownType):
        rsys.build('E7', rank=8)


def test_parse_root_notations():
    e8 = rsys.build('E8')
    assert rsys.parse_root(e8, '2465432|3').tolist() == e8.highest_root.tolist()
    assert rsys.parse_root(e8, '-2465432|3').tolist() == (-e8.highest_root).tolist()
    assert rsys.parse_root(e8, '12|22110,1').tolist() == [1, 1, 2, 2, 2, 1, 1, 0]
    g2 = rsys.build('G2')
    assert rsys.parse_root(g2, '32').tolist() == [3, 2]
    assert rsys.format_two_row(e8, e8.highest_root) == '2465432|3'


def test_parse_root_rejects_non_roots():
    f4 = rsys.build('F4')
    with pytest.raises(ess.UnknownType):
        rsys.parse_root(f4, '2000')
    with pytest.raises(ess.UnknownType):
        rsys.parse_root(f4, '123|2')
    with pytest.raises(ess.UnknownType):
        rsys.parse_root(f4, '12')


def test_borel_de_siebenthal_g2():
    rs = rsys.build('G2')
    long_deleted = rsys.borel_de_siebenthal_delete(rs, 1)
    assert long_deleted.label == 'A2'
    assert long_deleted.num_positive == 3
    assert long_deleted.maximal and long_deleted.caveat_prime == 3
    short_deleted = rsys.borel_de_siebenthal_delete(rs, 2)
    assert short_deleted.label == 'A1+A1'
    assert short_deleted.num_positive == 2
    assert short_deleted.caveat_prime == 2


def test_borel_de_siebenthal_e8_d8():
    result = rsys.borel_de_siebenthal_delete(rsys.build('E8'), 1)
    assert result.label == 'D8'
    assert result.num_positive == 56
    assert result.caveat_prime == 2


def test_levi_diagram_a4_a3():
    rs = rsys.build('E8')
    assert rsys.levi_diagram(rs, [1, 2, 3, 4, 6, 7, 8]).tolist() == [2, 2, 2, 2, -9, 2, 2, 2]


def test_f4_gap_order_is_a_permutation():
    rs = rsys.build('F4')
    order = rs.gap_order()
    assert sorted(order) == list(range(24))
    assert np.array_equal(rs.positive[order[-1]], rs.highest_root)


def test_f4_gap_positions_of_negative_roots():
    rs = rsys.build('F4')
    assert rs.gap_root(45).tolist() == [-1, -2, -4, -2]
    assert rs.gap_root(44).tolist() == [-1, -2, -3, -2]
    assert rs.gap_root(43).tolist() == [-1, -2, -2, -2]
    assert rs.gap_root(0).tolist() == [0, 0, 0, 1]
    with pytest.raises(ess.UnknownType):
        rs.gap_root(48)
    with pytest.raises(ess.UnknownType):
        rsys.build('G2').gap_root(0)
