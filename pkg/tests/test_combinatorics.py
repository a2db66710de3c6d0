import pytest

from core.combinatorics import (
    ColoredLetter,
    Face,
    OrderedSetPartition,
    comaj_face,
    comaj_osp,
    compare_letters,
    count_faces,
    count_osp,
    count_words,
    des,
    descent_set,
    enumerate_faces,
    enumerate_osp,
    enumerate_words,
    format_face,
    format_osp,
    hrs_maj,
    hrs_weights,
    maj,
    osp_from_blocks,
    osp_to_blocks,
    parse_blocks,
    parse_face,
    parse_osp,
    parse_word,
)
from core.errors import (
    DomainError,
    InvalidColorError,
    InvalidFaceError,
    MalformedPartitionError,
    ParseError,
    UnsupportedStatisticError,
)


def test_color_heavy_order():
    # heavier colors are smaller, ties broken by the letter
    assert compare_letters(ColoredLetter(3, 3), ColoredLetter(1, 1), 4) == -1
    assert compare_letters(ColoredLetter(2, 2), ColoredLetter(5, 2), 4) == -1
    assert compare_letters(ColoredLetter(1, 0), ColoredLetter(9, 1), 4) == 1


def test_descents_and_maj_of_worked_word():
    w = parse_word('3^3 1^1 5^2 2^2 4^0', 5, 4)
    assert descent_set(w) == {2, 3}
    assert des(w) == 2
    assert maj(w) == 28


def test_descents_of_three_colored_word():
    g = parse_word('4^0 2^2 5^2 3^2 1^1', 5, 3)
    assert descent_set(g) == {1, 3}
    assert maj(g) == 7 + 3 * 4


def test_comaj_of_nine_letter_osp(nine_letter_osp):
    assert descent_set(nine_letter_osp.word) == {4, 6}
    assert maj(nine_letter_osp.word) == 54
    assert comaj_osp(nine_letter_osp) == 74


def test_comaj_of_face():
    f = parse_face('({1,4}; 5^2 2^1 3^1 7^2 6^0; 2)', 7, 3)
    assert descent_set(f.word) == {3}
    assert maj(f.word) == 15
    assert comaj_face(f, 7, 3, 3) == 39


def test_blocks_give_ascent_starred_pair():
    p = parse_blocks('24|6|1|357', 7, 1)
    assert p.word.perm == (2, 4, 6, 1, 3, 5, 7)
    assert p.lam == (1, 1)
    assert comaj_osp(p) == 5


def test_hrs_weights_count_completed_blocks():
    p = parse_blocks('24|6|1|357', 7, 1)
    assert hrs_weights(p, 4) == (0, 1, 2, 3, 3, 3, 4)
    assert hrs_maj(p, 4) == 10


def test_hrs_needs_one_color():
    p = OrderedSetPartition(parse_word('1^1 2^0', 2, 2), ())
    with pytest.raises(UnsupportedStatisticError):
        hrs_maj(p, 2)


@pytest.mark.parametrize('n', [2, 3, 4])
def test_comaj_against_hrs_maj(n):
    for k in range(1, n + 1):
        offset = (n - k) * (k - 1) + k * (k - 1) // 2
        for p in enumerate_osp(n, k, 1):
            assert comaj_osp(p) == offset - hrs_maj(p, k), format_osp(p)


@pytest.mark.slow
@pytest.mark.parametrize('n', [5, 6])
def test_comaj_against_hrs_maj_exhaustive(n):
    for k in range(1, n + 1):
        offset = (n - k) * (k - 1) + k * (k - 1) // 2
        for p in enumerate_osp(n, k, 1):
            assert comaj_osp(p) == offset - hrs_maj(p, k)


@pytest.mark.parametrize('n,k,r', [(3, 2, 1), (3, 1, 2), (4, 2, 2), (4, 3, 1), (3, 3, 3)])
def test_enumeration_matches_closed_forms(n, k, r):
    assert len(list(enumerate_words(n, r))) == count_words(n, r)
    assert len(list(enumerate_osp(n, k, r))) == count_osp(n, k, r)
    assert len(list(enumerate_faces(n, k, r))) == count_faces(n, k, r)


def test_small_counts():
    assert count_osp(3, 2, 1) == 6
    assert count_words(2, 2) == 8
    assert count_faces(2, 2, 1) == 2


def test_k_zero():
    assert list(enumerate_osp(3, 0, 1)) == []
    faces = list(enumerate_faces(3, 0, 2))
    assert len(faces) == 1
    assert faces[0].zero_block == {1, 2, 3}
    assert comaj_face(faces[0], 3, 0, 2) == 0


@pytest.mark.parametrize('n,k,r', [(3, 2, 2), (4, 2, 1), (4, 3, 2)])
def test_blocks_round_trip(n, k, r):
    for p in enumerate_osp(n, k, r):
        blocks = osp_to_blocks(p, k)
        assert len(blocks) == k
        assert osp_from_blocks(blocks, n, r) == p


def test_text_forms_round_trip():
    text = '(4^3 2^2 3^2 9^1 6^1 1^0 5^2 7^2 8^1; 3,2)'
    assert format_osp(parse_osp(text, 9, 4)) == text
    face = '({1,4}; 5^2 2^1 3^1 7^2 6^0; 2)'
    assert format_face(parse_face(face, 7, 3)) == face


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_osp('4^3 2^2', 4, 4)
    with pytest.raises(ParseError):
        parse_word('1^a 2', 2, 2)
    with pytest.raises(ParseError):
        parse_face('({x}; 2^0; )', 2, 1)


def test_invalid_words():
    with pytest.raises(InvalidColorError):
        parse_word('1^4 2^0', 2, 4)
    with pytest.raises(DomainError):
        parse_word('1 1', 2, 1)
    with pytest.raises(DomainError):
        parse_word('3 1', 2, 1)


def test_osp_validation_against_k():
    p = OrderedSetPartition(parse_word('2 1', 2, 1), ())
    p.validate(2)
    with pytest.raises(MalformedPartitionError):
        p.validate(1)
    with pytest.raises(MalformedPartitionError):
        OrderedSetPartition(parse_word('2 1', 3, 1), ())


def test_face_validation():
    with pytest.raises(InvalidFaceError):
        Face(frozenset({1}), parse_word('1 2', 3, 1), ())
    with pytest.raises(InvalidFaceError):
        Face(frozenset({1}), parse_word('2', 3, 1), ())
    f = Face(frozenset({1, 2}), parse_word('3', 3, 1), ())
    with pytest.raises(InvalidFaceError):
        f.validate(2)
