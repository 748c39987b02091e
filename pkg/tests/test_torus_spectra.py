import math
from itertools import product

import pytest

from ordspectra import lie_catalog as lc
from ordspectra import torus_spectra as ts
from ordspectra.errors import DataMissing, NotAvailable


def test_gl_examples():
    assert ts.semisimple_orders_gl(2, 2).values == (1, 3)
    assert ts.semisimple_orders_gl(1, 5).values == (1, 2, 4)
    assert ts.semisimple_orders_gl(3, 2).values == (1, 3, 7)


def test_gu_examples():
    assert ts.semisimple_orders_gu(2, 2).values == (1, 3)
    assert ts.semisimple_orders_gu(1, 5).values == (1, 2, 3, 6)
    assert ts.semisimple_orders_gu(3, 2).values == (1, 3, 9)


def test_go_examples():
    assert ts.semisimple_orders_go(3, 3).values == (1, 2, 4)
    assert ts.semisimple_orders_go(2, 5, +1).values == (1, 2, 4)
    assert ts.semisimple_orders_go(2, 3, -1).values == (1, 2, 4)
    assert ts.semisimple_orders_go(4, 3, -1).values == (1, 2, 4, 5, 10)


def test_simple_spectra_known_values():
    cases = {
        ("A", 1, 5): (1, 2, 3),
        ("A", 1, 7): (1, 2, 3, 4),
        ("A", 2, 4): (1, 3, 5, 7),       # PSL3(4)
        ("A", 3, 3): (1, 2, 4, 5, 8, 10, 13, 20),  # PSL4(3)
        ("2A", 2, 9): (1, 2, 4, 7, 8),   # PSU3(3)
        ("2A", 3, 4): (1, 3, 5, 9),      # PSU4(2)
        ("2A", 3, 9): (1, 2, 4, 5, 7, 8),  # PSU4(3)
        ("B", 2, 3): (1, 2, 4, 5),
        ("C", 2, 3): (1, 2, 4, 5),
        ("D", 3, 2): (1, 3, 5, 7, 15),   # PSL4(2)
        ("D", 3, 3): (1, 2, 4, 5, 8, 10, 13, 20),  # PSL4(3) again as D3
        ("2D", 3, 9): (1, 2, 4, 5, 7, 8),
        ("2D", 2, 4): (1, 3, 5),         # PSL2(4)
    }
    for (family, d, Q), expected in cases.items():
        spec = lc.make_spec(family, d, Q)
        assert ts.semisimple_orders_simple(spec).values == expected, (family, d, Q)


def test_b_equals_c_spectra():
    for d, q in product((1, 2, 3, 4), (2, 3, 4, 5, 7)):
        b = ts.semisimple_orders_simple(lc.make_spec("B", d, q))
        c = ts.semisimple_orders_simple(lc.make_spec("C", d, q))
        assert b.values == c.values, (d, q)


def divisor_closed(values):
    value_set = set(values)
    return all(d in value_set for v in values for d in range(1, v + 1) if v % d == 0)


GRID_SPECS = [
    ("A", 1, 5), ("A", 1, 8), ("A", 2, 4), ("A", 3, 3),
    ("2A", 2, 9), ("2A", 3, 4), ("B", 2, 3), ("B", 3, 2),
    ("C", 2, 5), ("D", 3, 2), ("D", 4, 3), ("2D", 3, 9), ("2D", 4, 4),
]


def test_divisor_closure_and_characteristic():
    for family, d, Q in GRID_SPECS:
        spec = lc.make_spec(family, d, Q)
        orders = ts.semisimple_orders_simple(spec)
        assert 1 in orders.values
        assert divisor_closed(orders.values), (family, d, Q)
        assert all(v % spec.p != 0 for v in orders.values), (family, d, Q)


def test_containment_in_ambient():
    for family, d, Q in GRID_SPECS:
        spec = lc.make_spec(family, d, Q)
        simple = set(ts.semisimple_orders_simple(spec).values)
        q = spec.q
        if family == "A":
            ambient = set(ts.semisimple_orders_gl(d + 1, q).values)
        elif family == "2A":
            ambient = set(ts.semisimple_orders_gu(d + 1, q).values)
        elif family in ("B", "C"):
            ambient = set(ts.semisimple_orders_go(2 * d + 1, q).values)
        else:
            sign = 1 if family == "D" else -1
            ambient = set(ts.semisimple_orders_go(2 * d, q, sign).values)
        assert simple <= ambient, (family, d, Q)


def test_level_one_dominates_level_two():
    for family, d, Q in GRID_SPECS:
        spec = lc.make_spec(family, d, Q)
        assert ts.nr_semisimple_orders_bound(spec) >= ts.nr_semisimple_orders(spec)


def test_count_examples():
    assert ts.nr_semisimple_orders(lc.make_spec("A", 1, 5)) == 3
    assert ts.nr_semisimple_orders(lc.make_spec("A", 1, 7)) == 4
    assert ts.nr_semisimple_orders_bound(lc.make_spec("A", 1, 5)) == 4
    assert ts.nr_semisimple_orders_bound(lc.make_spec("A", 1, 7)) == 5


# ---------------------------------------------------------------------------
# independent brute-force check of the simple-torus exponents


def brute_quotient_exponent(ms, char_mod, center):
    """Exponent of {x in prod C_m : sum x_i = 0 mod char_mod} / <center>,
    by direct enumeration (small cases only)."""
    total = math.prod(ms)
    assert total <= 400_000
    center_subgroup = set()
    z = tuple(0 for _ in ms)
    while True:
        center_subgroup.add(z)
        z = tuple((a + b) % m for a, b, m in zip(z, center, ms))
        if z == tuple(0 for _ in ms):
            break
    exponent = 1
    for combo in product(*[range(m) for m in ms]):
        if char_mod > 1 and sum(combo) % char_mod:
            continue
        order = 1
        current = combo
        while not (current in center_subgroup):
            current = tuple((a + b) % m for a, b, m in zip(current, combo, ms))
            order += 1
        exponent = exponent * order // math.gcd(exponent, order)
    return exponent


def test_a_family_exponents_against_enumeration():
    from ordspectra.torus_spectra import _a_family_exponent, partitions

    for n, q in [(2, 5), (2, 7), (3, 4), (3, 3), (4, 2), (4, 3)]:
        r = q - 1
        w = math.gcd(n, r)
        for lam in partitions(n):
            ms = [q**part - 1 for part in lam]
            if math.prod(ms) > 400_000:
                continue
            center = tuple(m // w for m in ms)
            expected = brute_quotient_exponent(ms, r, center)
            assert _a_family_exponent(n, q, lam, twisted=False) == expected, (n, q, lam)


def brute_signed_quotient_exponent(ms, eps, r, center):
    """Like brute_quotient_exponent but with the signed determinant
    character sum(eps_i x_i) mod r."""
    total = math.prod(ms)
    assert total <= 400_000
    center_subgroup = set()
    z = tuple(0 for _ in ms)
    while True:
        center_subgroup.add(z)
        z = tuple((a + b) % m for a, b, m in zip(z, center, ms))
        if z == tuple(0 for _ in ms):
            break
    exponent = 1
    for combo in product(*[range(m) for m in ms]):
        if sum(e * x for e, x in zip(eps, combo)) % r:
            continue
        order = 1
        current = combo
        while current not in center_subgroup:
            current = tuple((a + b) % m for a, b, m in zip(current, combo, ms))
            order += 1
        exponent = exponent * order // math.gcd(exponent, order)
    return exponent


def test_2a_family_exponents_against_enumeration():
    from ordspectra.torus_spectra import _a_family_exponent, partitions

    for n, q in [(2, 3), (3, 3), (3, 2), (4, 2), (4, 3)]:
        r = q + 1
        w = math.gcd(n, r)
        for lam in partitions(n):
            ms = [q**part - (-1) ** part for part in lam]
            eps = [1 if part % 2 else -1 for part in lam]
            if math.prod(ms) > 400_000:
                continue
            center = tuple(m // w for m in ms)
            expected = brute_signed_quotient_exponent(ms, eps, r, center)
            assert _a_family_exponent(n, q, lam, twisted=True) == expected, (n, q, lam)


def brute_bcd_exponent(family, q, plus, minus):
    """Independent evaluation of the B/C/D/2D torus-image exponent by
    enumerating the kernel-of-character mod central-element group."""
    ms = [q**a - 1 for a in plus] + [q**b + 1 for b in minus]
    if q % 2 == 0:
        return math.lcm(*ms) if ms else 1
    if family == "C":
        center = tuple(m // 2 for m in ms)
        return brute_quotient_exponent(ms, 1, center)
    if family == "B":
        return brute_quotient_exponent(ms, 2, tuple(0 for _ in ms))
    # D / 2D: spinor kernel, with the central relation present only when
    # the half-lattice shift has even coordinate sum
    half_qm1 = (q - 1) // 2
    half_qp1 = (q + 1) // 2
    parity = 0
    for a in plus:
        parity ^= (a * half_qm1) & 1
    for b in minus:
        parity ^= (half_qp1 + (b - 1) * half_qm1) & 1
    if parity == 1:
        return brute_quotient_exponent(ms, 2, tuple(0 for _ in ms))
    return brute_quotient_exponent(ms, 2, tuple(m // 2 for m in ms))


def test_bcd_exponents_against_enumeration():
    from ordspectra.torus_spectra import (
        _bcd_family_exponent,
        _fact_value,
        signed_partitions,
    )

    for family, d_range, qs in [
        ("B", (1, 2, 3), (2, 3, 5)),
        ("C", (1, 2, 3), (3, 5, 9)),
        ("D", (2, 3, 4), (2, 3, 5)),
        ("2D", (2, 3, 4), (3, 5)),
    ]:
        parity = {"D": 0, "2D": 1}.get(family)
        for d in d_range:
            for q in qs:
                for plus, minus in signed_partitions(d, parity):
                    ms = [q**a - 1 for a in plus] + [q**b + 1 for b in minus]
                    if math.prod(ms) > 400_000 or not ms:
                        continue
                    got = _fact_value(_bcd_family_exponent(family, q, plus, minus))
                    want = brute_bcd_exponent(family, q, plus, minus)
                    assert got == want, (family, d, q, plus, minus)


def test_go_formulas_match_oracle(get_group):
    from ordspectra import oracle

    cases = [
        (("GO", 3, 3), lambda: ts.semisimple_orders_go(3, 3)),
        (("GOplus", 4, 3), lambda: ts.semisimple_orders_go(4, 3, +1)),
        (("GOminus", 4, 3), lambda: ts.semisimple_orders_go(4, 3, -1)),
        (("GU", 2, 2), lambda: ts.semisimple_orders_gu(2, 2)),
        (("GU", 3, 2), lambda: ts.semisimple_orders_gu(3, 2)),
        (("GL", 3, 2), lambda: ts.semisimple_orders_gl(3, 2)),
        (("GL", 2, 3), lambda: ts.semisimple_orders_gl(2, 3)),
    ]
    for (kind, n, q), formula in cases:
        group = get_group(kind, n, q)
        p = group.meta["field"].p
        expected = oracle.semisimple_orders(group, p)
        assert formula().values == expected.values, (kind, n, q)


def test_suzuki_spectrum():
    assert ts.suzuki_spectrum(8).values == (1, 2, 4, 5, 7, 13)
    spec = lc.make_spec("2B2", Q=8)
    assert ts.exceptional_semisimple(spec).values == (1, 5, 7, 13)
    spec32 = lc.make_spec("2B2", Q=32)
    values = ts.suzuki_spectrum(32).values
    assert divisor_closed(values)
    assert all(v % 2 == 1 for v in ts.exceptional_semisimple(spec32).values)


def test_e8_spectrum_not_available():
    spec = lc.make_spec("E8", Q=2)
    with pytest.raises(NotAvailable):
        ts.exceptional_spectrum(spec)


def test_exceptional_provider():
    provider = ts.SpectrumProvider()
    spec = lc.make_spec("G2", Q=4)
    with pytest.raises(DataMissing):
        ts.exceptional_spectrum(spec, provider)
    provider.add("G2", 4, [1, 2, 3, 4, 5, 6, 7, 8, 12, 13, 15, 21])
    full = ts.exceptional_spectrum(spec, provider)
    assert 21 in full.values
    semisimple = ts.exceptional_semisimple(spec, provider)
    assert all(v % 2 == 1 for v in semisimple.values)
    assert provider.loaded_families() == {"G2"}


def test_smith_diagonal_simple_cases():
    from ordspectra.torus_spectra import smith_diagonal

    assert smith_diagonal([[2, 0], [0, 3]], 2) == [1, 6]
    assert smith_diagonal([[4, 0], [0, 6]], 2) == [2, 12]
    assert smith_diagonal([[1, 0], [0, 1], [5, 7]], 2) == [1, 1]
