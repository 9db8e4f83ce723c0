import pytest

from sepscope.errors import CreatureAxiomError, ParameterError
from sepscope.generators import (
    CreatureSpec,
    FamilySpec,
    gamma,
    gamma_layout,
    k_creature,
    k_prism,
    k_skinny_ladder,
    k_theta,
    long_twin_wheel,
    subdivide,
    validate_k_creature,
    validate_k_prism,
    validate_k_skinny_ladder,
    validate_k_theta,
    validate_three_paths,
    validate_twin_wheel,
)
from sepscope.graph import complement, cycle, delete_vertices, is_isomorphic, named, path

def iso(g, h):
    return is_isomorphic(g, h) is not None


@pytest.mark.parametrize("k", range(3, 13))
def test_theta_and_prism_closed_forms(k):
    t = k_theta(k)
    assert (t.n, t.m) == (2 * k + 2, 3 * k)
    validate_k_theta(t, k)
    p = k_prism(k)
    assert (p.n, p.m) == (2 * k, k * (k - 1) + k)
    validate_k_prism(p, k)


def test_theta_examples():
    t = k_theta(4)
    assert not t.has_edge(0, 1) and t.degree(0) == 4 and t.degree(1) == 4
    with pytest.raises(ParameterError):
        k_theta(2)


def test_prism_examples():
    assert iso(k_prism(3), complement(cycle(6)))
    for k in range(4, 8):
        # drop a_k and b_k
        smaller, _ = delete_vertices(k_prism(k), [k - 1, 2 * k - 1])
        assert smaller == k_prism(k - 1)
    with pytest.raises(ParameterError):
        k_prism(2)


def test_skinny_ladder_examples():
    assert iso(k_skinny_ladder(3), gamma(2, 4, 4))
    assert iso(k_skinny_ladder(1), path(3))
    for k in range(1, 7):
        validate_k_skinny_ladder(k_skinny_ladder(k), k)
    with pytest.raises(ParameterError):
        k_skinny_ladder(0)


def test_minimal_creature_is_three_theta():
    spec = CreatureSpec(k=3)
    g = k_creature(spec)
    assert iso(g, k_theta(3))
    validate_k_creature(g, *spec.parts())


def test_creature_axioms_named():
    with pytest.raises(CreatureAxiomError) as info:
        k_creature(CreatureSpec(k=3, extra_edges=((0, 1),)))  # A-B edge
    assert info.value.axiom == "ii"
    with pytest.raises(CreatureAxiomError):
        k_creature(CreatureSpec(k=2, a_size=2))  # A disconnected


@pytest.mark.parametrize(
    "spec",
    [
        CreatureSpec(k=1),
        CreatureSpec(k=4, x_edges=((0, 1), (1, 2), (2, 3)), y_edges=((0, 3),)),
        CreatureSpec(k=3, a_size=3, a_edges=((0, 1), (1, 2)), x_attach=((0,), (1,), (2,))),
        CreatureSpec(k=3, x_edges=((0, 1), (0, 2), (1, 2)), y_edges=((0, 1), (0, 2), (1, 2))),
    ],
)
def test_validator_accepts_generator_output(spec):
    validate_k_creature(k_creature(spec), *spec.parts())


def test_gamma_examples():
    assert iso(gamma(1, 2, 3), named("house"))
    assert iso(gamma(2, 2, 2), named("K_{2,3}"))
    assert iso(gamma(1, 2, 2), named("diamond"))
    g = gamma(2, 3, 4)
    assert g.n == 2 + 3 + 4 - 1
    validate_three_paths(g, gamma_layout(2, 3, 4))
    with pytest.raises(ParameterError):
        gamma(1, 1, 3)
    with pytest.raises(ParameterError):
        gamma(0, 2, 3)


def test_three_path_validator_rejects_chords():
    g = gamma(2, 2, 3)
    chorded = g.__class__(g.n, [*g.edges, (2, 3)])
    with pytest.raises(ParameterError):
        validate_three_paths(chorded, gamma_layout(2, 2, 3))


def test_twin_wheel_examples():
    for L in range(5, 10):
        g = long_twin_wheel(L)
        assert (g.n, g.m) == (L + 1, L + 3)
        assert g.degree(L) == 3
        validate_twin_wheel(g, range(L), L)
    with pytest.raises(ParameterError):
        long_twin_wheel(4)


def test_subdivide_examples():
    assert iso(subdivide(named("K3"), [1, 1, 1]), cycle(6))
    house = named("house")
    assert subdivide(house, [0] * house.m) == house
    assert iso(subdivide(house, {(0, 3): 1}), gamma(2, 2, 3))
    with pytest.raises(ParameterError):
        subdivide(house, [1, 0])


def test_family_dispatch():
    assert FamilySpec("theta", (4,)).build() == k_theta(4)
    assert FamilySpec("gamma", (1, 2, 3)).build() == gamma(1, 2, 3)
    with pytest.raises(ParameterError):
        FamilySpec("gamma", (1, 2)).build()
    with pytest.raises(ParameterError):
        FamilySpec("moebius", (3,)).build()
