"""Core data structures: validation, generation, isomorphism, codec."""

import pytest
from hypothesis import given, strategies as st

from ordertop.finstruct import (
    BinaryRelation,
    Lattice,
    OrderedSpace,
    ParseError,
    Qoset,
    SchemaError,
    SpaceMap,
    Topology,
    ValidationError,
    are_isomorphic,
    decode,
    encode,
    generate_topology,
    mask_of,
    mask_to_list,
    qoset_from_rows,
    subsets_of,
    validate_lattice,
    validate_qoset,
    validate_topology,
)

SIER = Topology(2, (0, 2, 3))
CHAIN3 = Qoset(3, (0b111, 0b110, 0b100))


# ---------------------------------------------------------------- helpers

def test_mask_roundtrip():
    assert mask_of([0, 2, 3]) == 0b1101
    assert mask_to_list(0b1101) == [0, 2, 3]


def test_subsets_of_enumerates_all_submasks():
    subs = list(subsets_of(0b101))
    assert sorted(subs) == [0, 0b001, 0b100, 0b101]


# ---------------------------------------------------------------- validators

def test_validate_topology_accepts_powerset():
    t = validate_topology(2, [0, 1, 2, 3])
    assert t.opens == (0, 1, 2, 3)


@pytest.mark.parametrize(
    "n,family,code",
    [
        (2, [0b11], "MissingEmpty"),
        (2, [0], "MissingFull"),
        (2, [0, 0b01, 0b11, 0b01], "Duplicate"),
        (3, [0, 0b011, 0b110, 0b111], "NotIntersectionClosed"),
    ],
)
def test_validate_topology_errors(n, family, code):
    with pytest.raises(ValidationError) as err:
        validate_topology(n, family)
    assert err.value.code == code


def test_validate_topology_union_closure_error():
    with pytest.raises(ValidationError) as err:
        validate_topology(2, [0, 0b01, 0b10])
    # {0} and {1} are present but {0,1} is not
    assert err.value.code in ("NotUnionClosed", "MissingFull")


def test_validate_qoset_matrix_and_rows_agree():
    m = [[1, 1, 1], [0, 1, 1], [0, 0, 1]]
    assert validate_qoset(3, m).leq == CHAIN3.leq
    assert qoset_from_rows(3, (0b111, 0b110, 0b100)).leq == CHAIN3.leq


def test_validate_qoset_errors():
    with pytest.raises(ValidationError) as err:
        validate_qoset(2, [[0, 0], [0, 1]])
    assert err.value.code == "NotReflexive"
    with pytest.raises(ValidationError) as err:
        validate_qoset(3, [[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    assert err.value.code == "NotTransitive"
    assert err.value.witness == (0, 1, 2)


def test_validate_lattice_m3():
    m3 = validate_lattice(5, (0b11111, 0b10010, 0b10100, 0b11000, 0b10000))
    assert m3.bottom == 0 and m3.top == 4
    assert m3.meet[1][2] == 0 and m3.join[1][2] == 4


def test_validate_lattice_errors():
    # two maximal elements: no join
    with pytest.raises(ValidationError) as err:
        validate_lattice(3, (0b111, 0b010, 0b100))
    assert err.value.code == "NoJoin"
    with pytest.raises(ValidationError) as err:
        validate_lattice(2, (0b11, 0b11))
    assert err.value.code == "NotAntisymmetric"


# ---------------------------------------------------------------- generation

def test_generate_topology_from_subbase():
    t = generate_topology(3, [0b011, 0b110])
    assert t.opens == (0, 0b010, 0b011, 0b110, 0b111)


def test_generate_topology_empty_subbase_is_indiscrete():
    assert generate_topology(2, []).opens == (0, 3)


# ---------------------------------------------------------------- structures

def test_qoset_up_down_dual():
    assert CHAIN3.up(0b001) == 0b111
    assert CHAIN3.down(0b100) == 0b111
    assert CHAIN3.dual().leq == (0b001, 0b011, 0b111)
    assert CHAIN3.is_antisymmetric()
    assert not Qoset(2, (0b11, 0b11)).is_antisymmetric()


def test_qoset_upper_lower_sets():
    assert set(CHAIN3.upper_sets()) == {0, 0b100, 0b110, 0b111}
    assert set(CHAIN3.lower_sets()) == {0, 0b001, 0b011, 0b111}


def test_topology_accessors():
    assert SIER.full == 3
    assert SIER.is_t0()
    assert tuple(SIER.closeds()) == (0, 1, 3)
    assert SIER.min_neighborhood(0) == 3
    assert SIER.min_neighborhood(1) == 2
    assert not Topology(2, (0, 3)).is_t0()


def test_lattice_fold_operations():
    m3 = validate_lattice(5, (0b11111, 0b10010, 0b10100, 0b11000, 0b10000))
    assert m3.join_of(0b01110) == 4
    assert m3.meet_of(0b01110) == 0
    assert m3.join_of(0) == m3.bottom
    assert m3.meet_of(0) == m3.top
    assert m3.dual().bottom == 4


def test_ordered_space_carrier_mismatch():
    with pytest.raises(ValidationError) as err:
        OrderedSpace(CHAIN3, SIER)
    assert err.value.code == "CarrierMismatch"


def test_space_map_images():
    f = SpaceMap(3, 2, (0, 0, 1))
    assert f(2) == 1
    assert f.image(0b111) == 0b11
    assert f.preimage(0b10) == 0b100


# ---------------------------------------------------------------- isomorphism

def test_isomorphic_relabeled_topology():
    a = Topology(2, (0, 2, 3))
    b = Topology(2, (0, 1, 3))
    ok, perm = are_isomorphic(a, b)
    assert ok and perm == (1, 0)


def test_isomorphism_witness_is_lexicographically_least():
    a = Topology(2, (0, 1, 2, 3))
    ok, perm = are_isomorphic(a, a)
    assert ok and perm == (0, 1)


def test_non_isomorphic_detected():
    ok, _ = are_isomorphic(Topology(2, (0, 2, 3)), Topology(2, (0, 3)))
    assert not ok


def test_kind_mismatch():
    with pytest.raises(ValidationError) as err:
        are_isomorphic(SIER, CHAIN3)
    assert err.value.code == "KindMismatch"


# ---------------------------------------------------------------- codec

@pytest.mark.parametrize(
    "obj",
    [
        SIER,
        CHAIN3,
        OrderedSpace(Qoset(2, (3, 2)), SIER),
        validate_lattice(5, (0b11111, 0b10010, 0b10100, 0b11000, 0b10000)),
        BinaryRelation(2, (3, 2)),
        SpaceMap(3, 2, (0, 0, 1)),
    ],
)
def test_codec_roundtrip(obj):
    assert decode(encode(obj)) == obj


def test_decode_rejects_malformed():
    with pytest.raises(ParseError):
        decode("{not json")
    with pytest.raises(SchemaError):
        decode('{"kind": "nope"}')
    with pytest.raises(SchemaError):
        decode('{"kind": "topology", "n": 2}')


def test_decode_validates_payload():
    with pytest.raises(ValidationError):
        decode('{"kind": "topology", "n": 2, "opens": [[0]]}')


# ---------------------------------------------------------------- properties

@st.composite
def random_topology(draw):
    n = draw(st.integers(min_value=1, max_value=4))
    k = draw(st.integers(min_value=0, max_value=4))
    full = (1 << n) - 1
    subbase = [draw(st.integers(min_value=0, max_value=full)) for _ in range(k)]
    return generate_topology(n, subbase)


@given(random_topology())
def test_generated_families_are_topologies(t):
    assert validate_topology(t.n, t.opens) == t


@given(random_topology())
def test_codec_roundtrip_random(t):
    assert decode(encode(t)) == t
