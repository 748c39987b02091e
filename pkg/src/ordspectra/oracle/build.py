"""Generator recipes and the public entry point for constructing small
classical groups as explicit permutation groups.

Canonical kind names: GL SL PSL GU SU PSU Sp PSp, GO SO Omega (odd
dimension), GOplus GOminus SOplus SOminus Omegaplus Omegaminus
POmegaplus POmegaminus (even dimension).
"""

from __future__ import annotations

import math

from ..errors import CapExceeded, DomainError
from .ffield import Fq, get_field
from .groups import (
    Matrix,
    SmallGroup,
    all_vectors,
    bilinear,
    close_under_products,
    derived_subgroup,
    hermitian_value,
    mat_det,
    mat_identity,
    matrices_to_perms,
    perm_compose,
    projective_points,
    quadratic_coeffs,
    quadratic_value,
    symplectic_gram,
)

DEFAULT_CAP = 10**7

KINDS = (
    "GL", "SL", "PSL", "GU", "SU", "PSU", "Sp", "PSp",
    "GO", "SO", "Omega",
    "GOplus", "GOminus", "SOplus", "SOminus",
    "Omegaplus", "Omegaminus", "POmegaplus", "POmegaminus",
)


def _prod(vals) -> int:
    out = 1
    for v in vals:
        out *= v
    return out


def expected_order(kind: str, n: int, q: int) -> int:
    """Order polynomial of the requested group (q is the base parameter;
    unitary kinds are matrix groups over F(q**2))."""
    if kind == "GL":
        return _prod(q**n - q**i for i in range(n))
    if kind == "SL":
        return expected_order("GL", n, q) // (q - 1)
    if kind == "PSL":
        return expected_order("SL", n, q) // math.gcd(n, q - 1)
    if kind == "GU":
        return q ** (n * (n - 1) // 2) * _prod(q**i - (-1) ** i for i in range(1, n + 1))
    if kind == "SU":
        return expected_order("GU", n, q) // (q + 1)
    if kind == "PSU":
        return expected_order("SU", n, q) // math.gcd(n, q + 1)
    if kind in ("Sp", "PSp"):
        m = n // 2
        sp = q ** (m * m) * _prod(q ** (2 * i) - 1 for i in range(1, m + 1))
        return sp if kind == "Sp" else sp // math.gcd(2, q - 1)
    if kind in ("GO", "SO", "Omega"):
        if n % 2 == 0:
            raise DomainError("even dimension needs a plus/minus kind")
        m = n // 2
        so = q ** (m * m) * _prod(q ** (2 * i) - 1 for i in range(1, m + 1))
        if kind == "GO":
            return 2 * so
        if kind == "SO":
            return so
        return so // math.gcd(2, q - 1)
    sign = 1 if kind.endswith("plus") else -1
    base = kind[: -4 if sign == 1 else -5]
    m = n // 2
    go = 2 * q ** (m * (m - 1)) * (q**m - sign) * _prod(
        q ** (2 * i) - 1 for i in range(1, m)
    )
    if base == "GO":
        return go
    if base == "SO":
        return go // 2
    omega = go // 2 // math.gcd(2, q - 1)
    if base == "Omega":
        return omega
    if base == "POmega":
        center = math.gcd(4, q**m - sign) // math.gcd(2, q - 1)
        return omega // center
    raise DomainError(f"unknown kind {kind!r}")


# ---------------------------------------------------------------------------
# generator matrices


def _elementary(F: Fq, n: int, i: int, j: int, value: int) -> Matrix:
    m = list(mat_identity(n))
    m[i * n + j] = value
    return tuple(m)


def _cols_to_matrix(cols: list[list[int]], n: int) -> Matrix:
    """cols[i] is the image of the i-th basis vector."""
    return tuple(cols[j][i] for i in range(n) for j in range(n))


def _gl_gens(F: Fq, n: int, special: bool) -> list[Matrix]:
    gens = []
    values = [1]
    if F.q > 2:
        values.append(F.generator)
    for i in range(n - 1):
        for v in values:
            gens.append(_elementary(F, n, i, i + 1, v))
            gens.append(_elementary(F, n, i + 1, i, v))
    if not special and F.q > 2:
        diag = list(mat_identity(n))
        diag[0] = F.generator
        gens.append(tuple(diag))
    return gens


def _sp_gens(F: Fq, n: int) -> list[Matrix]:
    """Symplectic transvections x -> x + lam*B(x,v)*v along a vector list."""
    gram = symplectic_gram(F, n)
    vectors = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    vectors += [tuple(1 if k in (0, i) else 0 for k in range(n)) for i in range(1, n)]
    values = [1] + ([F.generator] if F.q > 2 else [])
    gens = []
    for v in vectors:
        for lam in values:
            cols = []
            for i in range(n):
                basis = tuple(1 if k == i else 0 for k in range(n))
                coeff = F.mul[lam][bilinear(F, n, gram, basis, v)]
                cols.append([F.add[basis[k]][F.mul[coeff][v[k]]] for k in range(n)])
            gens.append(_cols_to_matrix(cols, n))
    return gens


def _unitary_gens(F: Fq, n: int, special: bool) -> list[Matrix]:
    """F is F(q0**2).  Unitary transvections x -> x + lam*H(v,x)*v need v
    isotropic and lam of trace zero; they generate SU.  Diagonal
    isometries extend to GU."""
    half = F.e // 2
    q0 = F.p**half
    trace_zero = [x for x in range(1, F.q) if F.add[x][F.conj(x, half)] == 0]
    isotropic = [pt for pt in projective_points(F, n)
                 if hermitian_value(F, n, half, pt, pt) == 0]
    gens = []
    for v in isotropic:
        for lam in trace_zero:
            cols = []
            for i in range(n):
                basis = tuple(1 if k == i else 0 for k in range(n))
                coeff = F.mul[lam][hermitian_value(F, n, half, v, basis)]
                cols.append([F.add[basis[k]][F.mul[coeff][v[k]]] for k in range(n)])
            gens.append(_cols_to_matrix(cols, n))
    if not special:
        alpha = F.generator
        diag = list(mat_identity(n))
        diag[0] = alpha
        diag[(n - 1) * n + (n - 1)] = F.inv[F.conj(alpha, half)]
        gens.append(tuple(diag))
        if n % 2 == 1:
            beta = 1
            for _ in range(q0 - 1):
                beta = F.mul[beta][F.generator]  # generator**(q0-1): norm 1
            mid = n // 2
            diag2 = list(mat_identity(n))
            diag2[mid * n + mid] = beta
            gens.append(tuple(diag2))
    gens.extend(_unitary_monomials(F, n, special, half))
    return gens


def _unitary_monomials(F: Fq, n: int, special: bool, half: int) -> list[Matrix]:
    """Monomial isometries by brute enumeration; at tiny field sizes the
    transvections alone generate a proper subgroup (the q0 = 2 cases),
    and these close the gap."""
    from itertools import permutations, product

    if math.factorial(n) * (F.q - 1) ** n > 100_000:
        return []
    basis = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    out = []
    for perm in permutations(range(n)):
        for values in product(range(1, F.q), repeat=n):
            cols = []
            for i in range(n):
                col = [0] * n
                col[perm[i]] = values[i]
                cols.append(col)
            m = _cols_to_matrix(cols, n)
            ok = True
            for i in range(n):
                vi = tuple(m[k * n + i] for k in range(n))
                for j in range(i, n):
                    vj = tuple(m[k * n + j] for k in range(n))
                    want = 1 if i + j == n - 1 else 0
                    if hermitian_value(F, n, half, vi, vj) != want:
                        ok = False
                        break
                if not ok:
                    break
            if ok and (not special or mat_det(F, n, m) == 1):
                out.append(m)
    return out


def orthogonal_group_gens(F: Fq, n: int, sign: int,
                          max_vectors: int = 14) -> list[Matrix]:
    """Generators of the full orthogonal group: reflections (q odd) or
    orthogonal transvections (q even) along non-singular vectors."""
    terms = quadratic_coeffs(F, n, sign)

    def polar(x, y):
        xy = tuple(F.add[a][b] for a, b in zip(x, y))
        return F.sub(
            F.sub(quadratic_value(F, terms, xy), quadratic_value(F, terms, x)),
            quadratic_value(F, terms, y),
        )

    gens = []
    for v in all_vectors(F, n):
        qv = quadratic_value(F, terms, v)
        if qv == 0:
            continue
        inv_qv = F.inv[qv]
        cols = []
        for i in range(n):
            basis = tuple(1 if k == i else 0 for k in range(n))
            coeff = F.mul[inv_qv][polar(basis, v)]
            if F.p == 2:
                cols.append([F.add[basis[k]][F.mul[coeff][v[k]]] for k in range(n)])
            else:
                cols.append([F.sub(basis[k], F.mul[coeff][v[k]]) for k in range(n)])
        gens.append(_cols_to_matrix(cols, n))
        if len(gens) >= max_vectors:
            break
    return gens


# ---------------------------------------------------------------------------
# the public builder


def build_classical(kind: str, n: int, q: int, cap: int = DEFAULT_CAP,
                    witnesses: bool = False) -> SmallGroup:
    """Construct the named group as an explicit permutation group.

    Projective kinds act on projective points; the others act on the
    nonzero vectors of the natural module.  Raises CapExceeded when the
    order polynomial exceeds ``cap``; raises DomainError if the closure
    does not reach the expected order (a construction bug, never a
    silent approximation).
    """
    if kind not in KINDS:
        raise DomainError(f"unknown kind {kind!r}")
    target = expected_order(kind, n, q)
    if target > cap:
        raise CapExceeded(target, cap)
    F = _field_for(kind, q)
    projective = kind in ("PSL", "PSU", "PSp", "POmegaplus", "POmegaminus")
    lower = kind.lower()

    orthogonal = kind in (
        "GO", "SO", "Omega", "GOplus", "GOminus", "SOplus", "SOminus",
        "Omegaplus", "Omegaminus", "POmegaplus", "POmegaminus",
    )

    points = projective_points(F, n) if projective else all_vectors(F, n)

    if kind in ("GL", "SL", "PSL"):
        mats = _gl_gens(F, n, special=kind != "GL")
        perm_gens = matrices_to_perms(F, n, mats, points, projective)
    elif kind in ("GU", "SU", "PSU"):
        mats = _unitary_gens(F, n, special=kind != "GU")
        perm_gens = matrices_to_perms(F, n, mats, points, projective)
    elif kind in ("Sp", "PSp"):
        if n % 2:
            raise DomainError("symplectic groups need even dimension")
        mats = _sp_gens(F, n)
        perm_gens = matrices_to_perms(F, n, mats, points, projective)
    elif orthogonal:
        if n % 2 == 1:
            if q % 2 == 0:
                raise DomainError(
                    "odd-dimensional orthogonal groups over even q coincide "
                    "with Sp; build that instead"
                )
            sign = 0
            go_kind = "GO"
        else:
            if kind in ("GO", "SO", "Omega"):
                raise DomainError("even dimension needs a plus/minus kind")
            sign = 1 if "plus" in lower else -1
            go_kind = "GOplus" if sign == 1 else "GOminus"
        go_target = expected_order(go_kind, n, q)
        if projective and q % 2 == 1:
            go_target //= 2  # the projective action kills {+I, -I}
        # reflections along an arbitrary prefix of the non-singular vectors
        # may generate a proper subgroup; grow the prefix until the full
        # orthogonal group is reached
        perm_gens = None
        for max_vectors in (14, 60, len(points) + 1):
            mats = orthogonal_group_gens(F, n, sign, max_vectors)
            candidate = matrices_to_perms(F, n, mats, points, projective)
            elements, _ = close_under_products(candidate, len(points),
                                               limit=2 * go_target)
            if len(elements) == go_target:
                perm_gens = candidate
                break
        if perm_gens is None:
            raise DomainError(
                f"reflections failed to generate the orthogonal group "
                f"for {kind}({n},{q})"
            )
    else:  # pragma: no cover
        raise DomainError(f"unhandled kind {kind!r}")
    meta = {"kind": kind, "n": n, "q": q, "field": F,
            "projective": projective, "points": points}

    def finish(gens, elements, wit=None, extra_meta=None) -> SmallGroup:
        group = SmallGroup(degree=len(points), gens=list(gens),
                           elements=elements, witnesses=wit)
        group.meta = dict(meta)
        if extra_meta:
            group.meta.update(extra_meta)
        if group.order != target:
            raise DomainError(
                f"construction of {kind}({n},{q}) gave order {group.order}, "
                f"expected {target}"
            )
        return group

    so_kernel_kinds = ("SO", "SOplus", "SOminus")
    omega_kinds = ("Omega", "Omegaplus", "Omegaminus", "POmegaplus", "POmegaminus")

    if kind in so_kernel_kinds:
        if q % 2 == 0:
            # det is identically 1 in characteristic 2; the index-2
            # subgroup cut out by the Dickson invariant is Omega.
            gen_list, elements = derived_subgroup(perm_gens, len(points),
                                                  limit=4 * target,
                                                  expected=target)
            return finish(gen_list, elements, extra_meta={"parent_gens": perm_gens})
        r0 = perm_gens[0]
        so_gens = [perm_compose(r0, g) for g in perm_gens]
        used, elements, _ = _close_adaptive(so_gens, len(points), target)
        return finish(used, elements)

    if kind in omega_kinds:
        gen_list, elements = derived_subgroup(perm_gens, len(points),
                                              limit=4 * target,
                                              expected=target)
        return finish(gen_list, elements, extra_meta={"parent_gens": perm_gens})

    if projective and (witnesses or kind == "PSL"):
        used, elements, wit = _close_adaptive(perm_gens, len(points), target,
                                              mats=mats, field_obj=F, n=n)
        return finish(used, elements, wit)

    used, elements, _ = _close_adaptive(perm_gens, len(points), target)
    return finish(used, elements)


def _close_adaptive(perm_gens, npoints: int, target: int,
                    mats=None, field_obj=None, n=None):
    """Close over a growing prefix of the generators: large recipe lists
    are usually hugely redundant, and closure cost scales with the
    generator count."""
    prefix = 6
    while True:
        used = perm_gens[:prefix]
        used_mats = mats[:prefix] if mats is not None else None
        elements, wit = close_under_products(
            used, npoints, gen_mats=used_mats, field_obj=field_obj, n=n,
            limit=2 * target,
        )
        if len(elements) == target or prefix >= len(perm_gens):
            return used, elements, wit
        prefix *= 2


def _field_for(kind: str, q: int) -> Fq:
    from .. import arith

    split = arith.prime_power_split(q)
    if split is None:
        raise DomainError(f"{q} is not a prime power")
    p, e = split
    if kind in ("GU", "SU", "PSU"):
        return get_field(p, 2 * e)
    return get_field(p, e)
