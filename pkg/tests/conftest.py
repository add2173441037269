import pytest

from ptrac import data, parse_lexicon


@pytest.fixture(scope="session")
def persian():
    return data.persian_inventory()


@pytest.fixture(scope="session")
def fixture_lexicon(persian):
    lex, diags = parse_lexicon(data.voicing_fixture_text(), persian)
    assert not diags
    return lex


MINI_INV = """
[phonemes]
b consonant
p consonant
d consonant
t consonant
n consonant
a vowel
[pairs]
b p voice
d t voice
b d place
p t place
"""


@pytest.fixture(scope="session")
def mini():
    from ptrac import parse_inventory

    return parse_inventory(MINI_INV)
