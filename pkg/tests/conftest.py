from pathlib import Path

import pytest

import semibrace as sb

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"


def load_fixture(name):
    from semibrace.fileformat import load_structure

    sf = load_structure(FIXTURE_DIR / name)
    return sb.validate(sf.add, sf.mul, sf.labels)


@pytest.fixture(scope="session")
def phi3():
    """Sym3 with addition a + b = b∘φ(a), φ fixing (12) and killing (123)."""
    return load_fixture("phi_sym3.json")


@pytest.fixture(scope="session")
def sd12():
    """Skew brace on Sym3 twisted by a C2 conjugation action; E not an ideal."""
    return load_fixture("sd12.json")


@pytest.fixture(scope="session")
def trivial_c2():
    return load_fixture("trivial_c2.json")


@pytest.fixture(scope="session")
def trivial_s3():
    return load_fixture("trivial_s3.json")


@pytest.fixture(scope="session")
def skew_s3():
    """a + b = a∘b on Sym3."""
    return load_fixture("skew_s3.json")


@pytest.fixture(scope="session")
def skew_c4():
    """a + b = a∘b on C4: abelian, λ = id."""
    return load_fixture("skew_c4.json")


@pytest.fixture(scope="session")
def trivial_a5():
    return sb.trivial_semibrace(sb.named_group("A5"))


@pytest.fixture(scope="session")
def enumerated_by_order():
    """Raw-mode census for orders 1..6, computed once per session."""
    return {n: sb.enumerate_semibraces(n).structures for n in range(1, 7)}


@pytest.fixture(scope="session")
def corpus(enumerated_by_order, phi3, sd12, trivial_c2, trivial_s3, skew_s3, skew_c4):
    """Everything the property layers run over (A5 is used selectively)."""
    out = [B for structures in enumerated_by_order.values() for B in structures]
    out += [phi3, sd12, trivial_c2, trivial_s3, skew_s3, skew_c4]
    return out


def idx(B, label):
    return B.labels.index(label)
