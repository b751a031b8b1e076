from fractions import Fraction

import pytest

import prefixnormal as pn


def test_generate():
    assert pn.generate("fibonacci", 34) == "0100101001001010010100100101001001"
    assert pn.generate("thue-morse", 8) == "01101001"
    assert pn.generate("mechanical", 6, slope="1/2", upper=True) == "101010"
    assert pn.generate("lazy-flipext-omega", 7, slope="1/2") == "1010101"
    with pytest.raises(ValueError):
        pn.generate("nope", 3)
    with pytest.raises(ValueError):
        pn.generate("mechanical", 3, slope="sqrt(2)-1", intercept="1/2")


def test_check():
    assert pn.is_prefix_normal("11100110101")
    v = pn.check("110100110110")
    assert v == {"start": 7, "length": 5, "ones": 4, "prefix_ones": 3}
    assert pn.is_prefix_normal("0010", zero=True)


def test_forms_and_complexity():
    word = pn.generate("fibonacci", 2048)
    p1, p0 = pn.pnf(word)
    assert p1[:20] == "10100101001001010010"
    assert p0[:20] == "00100101001001010010"
    psi = pn.abelian_complexity(pn.generate("paperfolding", 2048))
    assert psi[:20] == [2, 3, 4, 3, 4, 5, 4, 3, 4, 5, 6, 5, 4, 5, 4, 3, 4, 5, 6, 5]
    hi, lo = pn.profile("0101")
    assert hi == [1, 1, 2, 2] and lo == [0, 1, 1, 2]


def test_density():
    assert pn.min_density("1110000") == (Fraction(3, 7), 7, 3)
    assert pn.min_density_periodic("1", "10") == Fraction(1, 2)
    assert pn.flipext("1101") == "11011"
    assert pn.lazy_flipext("111", "sqrt(2)-1") == "11100001"


def test_lex():
    assert pn.is_prenecklace("11100110110")
    assert not pn.is_prenecklace("0101")
    assert pn.max_word("1010101010", 4) == "1010"
    assert pn.min_word("1010101010", 4) == "0101"


def test_index_round_trip():
    ix = pn.JumbledIndex.build(pn.generate("fibonacci", 20))
    assert ix.query(3, 2)
    assert not ix.query(2, 3)
    assert not ix.query(0, 0)
    data = ix.serialize()
    assert data[:4] == b"PNJI"
    assert pn.JumbledIndex.deserialize(data) == ix
    assert len(ix) == 20
    with pytest.raises(pn.FormatError):
        pn.JumbledIndex.deserialize(data[:-1])
