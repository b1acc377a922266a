"""Reflection-subgroup structure of the second Bruhat sphere.

For u at Bruhat distance 2 from the identity, G_u is the subgroup
generated by every reflection appearing in a two-reflection
factorization of u.  These subgroups are dihedral, they equal the full
root-plane subgroup of any factoring pair, and grouping sphere-2
elements by exact subgroup equality partitions the sphere.

A subgroup here counts as dihedral when its order is 2m with exactly m
member reflections and a cyclic rotation part, with m >= 2 admitted
(the Klein four-group is the m = 2 case; orthogonal reflection pairs
produce it, so excluding it would break the partition).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groups import Group
from .isoperimetry import Xorshift64Star

PLANE_TOL = 1e-8
LEMMA_EXHAUST_CAP = 2000


@dataclass(frozen=True)
class ReflectionSubgroup:
    generators: tuple[int, ...]
    elements: tuple[int, ...]
    reflections: tuple[int, ...]
    rotations: tuple[int, ...]
    order: int
    is_dihedral: bool
    m: int | None

    def to_json_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "elements": list(self.elements),
            "reflections": list(self.reflections),
            "order": self.order,
            "is_dihedral": self.is_dihedral,
            "m": self.m,
        }


@dataclass(frozen=True)
class SphereClass:
    representative: int
    members: tuple[int, ...]
    subgroup: ReflectionSubgroup
    member_orders: tuple[int, ...]
    saturated: bool
    proper_pair_closure: bool

    def to_json_dict(self) -> dict:
        return {
            "representative": self.representative,
            "members": list(self.members),
            "size": len(self.members),
            "subgroup_order": self.subgroup.order,
            "m": self.subgroup.m,
            "num_reflections": len(self.subgroup.reflections),
            "member_orders": list(self.member_orders),
            "saturated": self.saturated,
            "proper_pair_closure": self.proper_pair_closure,
        }


def subgroup_closure(grp: Group, gens) -> tuple[int, ...]:
    """Smallest subgroup containing ``gens`` (element ids, sorted)."""
    gens = sorted(set(gens))
    elements = {grp.identity}
    frontier = [grp.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = grp.mult(x, s)
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(elements))


def _is_cyclic(grp: Group, members: tuple[int, ...]) -> bool:
    target = set(members)
    for g in members:
        seen = {grp.identity}
        w = g
        while w not in seen:
            seen.add(w)
            w = grp.mult(w, g)
        if seen == target:
            return True
    return False


def classify_subgroup(grp: Group, gens) -> ReflectionSubgroup:
    elements = subgroup_closure(grp, gens)
    refl = tuple(x for x in elements if grp.is_reflection(x))
    rot = tuple(x for x in elements if not grp.is_reflection(x))
    order = len(elements)
    m = order // 2
    dihedral = (
        order == 2 * m
        and m >= 2
        and len(refl) == m
        and _is_cyclic(grp, rot)
    )
    return ReflectionSubgroup(
        generators=tuple(sorted(set(gens))),
        elements=elements,
        reflections=refl,
        rotations=rot,
        order=order,
        is_dihedral=dihedral,
        m=m if dihedral else None,
    )


def sphere2(grp: Group) -> tuple[int, ...]:
    """Elements at Bruhat distance exactly 2 from the identity."""
    return grp.bruhat_graph().ball(grp.identity, 2)


def reflection_factorizations(grp: Group) -> dict[int, list[tuple[int, int]]]:
    """u -> ordered reflection pairs (s, t) with mult(s, t) = u != e."""
    fact: dict[int, list[tuple[int, int]]] = {}
    for s in grp.reflections:
        for t in grp.reflections:
            if s == t:
                continue
            u = grp.mult(s, t)
            fact.setdefault(u, []).append((s, t))
    return fact


def g_u(grp: Group, u: int) -> ReflectionSubgroup:
    """Subgroup generated by all reflections factoring u in either order."""
    t_set = set(grp.reflections)
    gens = set()
    for t in grp.reflections:
        a = grp.mult(u, t)
        if a in t_set:
            gens.add(a)
            gens.add(t)
        b = grp.mult(t, u)
        if b in t_set:
            gens.add(b)
            gens.add(t)
    if not gens:
        raise ValueError(f"element {u} is not a product of two reflections")
    return classify_subgroup(grp, gens)


def classes(grp: Group) -> list[SphereClass]:
    """Partition of the second sphere by exact subgroup equality."""
    by_elements: dict[tuple[int, ...], list[int]] = {}
    subgroups: dict[tuple[int, ...], ReflectionSubgroup] = {}
    for u in sphere2(grp):
        sub = g_u(grp, u)
        by_elements.setdefault(sub.elements, []).append(u)
        subgroups[sub.elements] = sub
    result = []
    for elements, members in by_elements.items():
        sub = subgroups[elements]
        members = tuple(sorted(members))
        orders = tuple(grp.element_order(u) for u in members)
        m = sub.m if sub.m is not None else sub.order // 2
        result.append(SphereClass(
            representative=members[0],
            members=members,
            subgroup=sub,
            member_orders=orders,
            saturated=len(members) == m - 1,
            proper_pair_closure=any(o < m for o in orders),
        ))
    result.sort(key=lambda c: c.representative)
    return result


def maximal_dihedral(grp: Group, t1: int, t2: int) -> ReflectionSubgroup:
    """Subgroup of all reflections through the root plane of t1 and t2.

    Membership test: the 3x3 Gram determinant (under the bilinear form)
    of the two defining roots and the candidate vanishes while the 2x2
    Gram of the defining pair does not.
    """
    if t1 == t2:
        raise ValueError("need two distinct reflections")
    rs = grp.rs
    a1 = rs.coords[grp.root_of_reflection(t1)]
    a2 = rs.coords[grp.root_of_reflection(t2)]
    base = np.array([
        [rs.inner(a1, a1), rs.inner(a1, a2)],
        [rs.inner(a2, a1), rs.inner(a2, a2)],
    ])
    if abs(np.linalg.det(base)) <= PLANE_TOL:
        raise ValueError("defining roots do not span a plane")
    gens = []
    for b in range(rs.num_positive):
        c = rs.coords[b]
        gram = np.array([
            [base[0, 0], base[0, 1], rs.inner(a1, c)],
            [base[1, 0], base[1, 1], rs.inner(a2, c)],
            [rs.inner(c, a1), rs.inner(c, a2), rs.inner(c, c)],
        ])
        if abs(np.linalg.det(gram)) < PLANE_TOL:
            gens.append(grp.reflections[b])
    return classify_subgroup(grp, gens)


def verify_structure(grp: Group) -> dict:
    """Run the full sphere-2 structure checks; see the module docstring.

    Checks: (a) each G_u is dihedral; (b) G_u equals the root-plane
    subgroup of every factoring pair; (c) each class is exactly the
    nontrivial rotations of its subgroup inside the sphere; (d) two
    subgroups sharing two reflections coincide; (e) every reflection
    pair lies in exactly one class subgroup.  Extra bridges: the common
    neighborhood of u and e has exactly as many elements as G_u has
    reflections, and lies inside G_u.
    """
    s2 = sphere2(grp)
    cls = classes(grp)
    fact = reflection_factorizations(grp)
    graph = grp.bruhat_graph()
    sub_of = {}
    for c in cls:
        for u in c.members:
            sub_of[u] = c

    checks: dict[str, dict] = {}

    def record(name: str, passed: bool, **details):
        checks[name] = {"passed": passed, **details}

    record("partition", sorted(u for c in cls for u in c.members) == sorted(s2),
           sphere2_size=len(s2), class_sizes=[len(c.members) for c in cls])

    bad = [c.representative for c in cls if not c.subgroup.is_dihedral]
    record("dihedral", not bad, counterexamples=bad)

    plane_cache: dict[tuple[int, int], tuple[int, ...]] = {}

    def plane_elements(s: int, t: int) -> tuple[int, ...]:
        key = (s, t) if s < t else (t, s)
        if key not in plane_cache:
            plane_cache[key] = maximal_dihedral(grp, *key).elements
        return plane_cache[key]

    bad = []
    for u in s2:
        target = sub_of[u].subgroup.elements
        for s, t in fact[u]:
            if plane_elements(s, t) != target:
                bad.append({"u": u, "pair": [s, t]})
    record("maximality", not bad, counterexamples=bad[:5])

    bad = []
    s2_set = set(s2)
    for c in cls:
        expected = tuple(sorted(
            x for x in c.subgroup.rotations
            if x != grp.identity and x in s2_set
        ))
        if expected != c.members:
            bad.append({"class": c.representative,
                        "members": list(c.members),
                        "rotations_in_sphere": list(expected)})
    record("class_is_rotations", not bad, counterexamples=bad[:5])

    bad = []
    subs = [c.subgroup for c in cls]
    for i in range(len(subs)):
        for j in range(i + 1, len(subs)):
            common = set(subs[i].reflections) & set(subs[j].reflections)
            if len(common) >= 2:
                bad.append({"classes": [cls[i].representative,
                                        cls[j].representative],
                            "common": sorted(common)})
    record("pair_rigidity", not bad, counterexamples=bad[:5])

    bad = []
    refl = grp.reflections
    refl_sets = [set(c.subgroup.reflections) for c in cls]
    for i in range(len(refl)):
        for j in range(i + 1, len(refl)):
            hits = sum(1 for rset in refl_sets
                       if refl[i] in rset and refl[j] in rset)
            if hits != 1:
                bad.append({"pair": [refl[i], refl[j]], "containers": hits})
    record("pair_coverage", not bad, counterexamples=bad[:5])

    bad = []
    e_nbrs = graph.neighbor_set(grp.identity)
    for u in s2:
        common = graph.neighbor_set(u) & e_nbrs
        sub = sub_of[u].subgroup
        if len(common) != len(sub.reflections) or not common <= set(sub.elements):
            bad.append({"u": u, "common": sorted(common),
                        "subgroup_reflections": list(sub.reflections)})
    record("common_neighborhood", not bad, counterexamples=bad[:5])

    bad = [c.representative for c in cls
           if len(c.members) > (c.subgroup.order // 2) - 1]
    record("class_size_cap", not bad, counterexamples=bad)

    return {
        "order": grp.order,
        "sphere2_size": len(s2),
        "num_classes": len(cls),
        "classes": [c.to_json_dict() for c in cls],
        "checks": checks,
        "passed": all(c["passed"] for c in checks.values()),
    }


def verify_lemma_dyer(grp: Group, samples: int = 500, seed: int = 0) -> dict:
    """Reflection quadruples with equal products generate dihedral groups.

    Exhausts all quadruples (t1,t2,t3,t4) with t1 t2 = t3 t4 != e when
    there are at most LEMMA_EXHAUST_CAP of them, otherwise samples.
    """
    fact = reflection_factorizations(grp)
    per_u = sorted(fact.items())
    total = sum(len(pairs) ** 2 for _, pairs in per_u)
    failures = []
    checked = 0
    exhaustive = total <= LEMMA_EXHAUST_CAP

    def check(p1, p2):
        nonlocal checked
        checked += 1
        sub = classify_subgroup(grp, {*p1, *p2})
        if not sub.is_dihedral:
            failures.append({"quadruple": [*p1, *p2], "order": sub.order})

    if exhaustive:
        for _, pairs in per_u:
            for p1 in pairs:
                for p2 in pairs:
                    check(p1, p2)
    else:
        rng = Xorshift64Star(seed)
        offsets = []
        acc = 0
        for _, pairs in per_u:
            offsets.append(acc)
            acc += len(pairs) ** 2
        for _ in range(samples):
            r = rng.below(total)
            idx = max(i for i, off in enumerate(offsets) if off <= r)
            pairs = per_u[idx][1]
            r -= offsets[idx]
            check(pairs[r // len(pairs)], pairs[r % len(pairs)])

    return {
        "total_quadruples": total,
        "exhaustive": exhaustive,
        "checked": checked,
        "failures": failures[:5],
        "passed": not failures,
    }
