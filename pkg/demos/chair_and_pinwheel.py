"""From polygons to an invariant: the chair, then two pinwheels.

Run with ``python demos/chair_and_pinwheel.py`` (the (2,3)-pinwheel takes
about half a minute).
"""
import time

from tilecoh.complex_builder import corona_counts, orientation_group, sigma_complex
from tilecoh.order_invariant import compare_invariants, mu, mu_image, ordered_invariant
from tilecoh.rule_format import fixture
from tilecoh.tiling_model import split_edges, supertile, validate_system


def chair():
    sys_ = fixture("chair")
    print("== chair ==")
    print("as given, rule is edge-to-edge:", validate_system(sys_).result(2).passed)
    split = split_edges(sys_)
    print("after splitting edges at neighbouring vertices:", validate_system(split).ok,
          f"({sys_.tile('L').n} -> {split.tile('L').n} vertices)")
    print("level-3 supertile has", len(supertile(sys_, "L", 3)), "tiles")

    G = orientation_group(split)
    print("orientation group: Z_%d" % G.order)
    b = sigma_complex(sys_, "x", collared=False)
    print("uncollared face substitution:", b.complex.subst[2][0][0])

    b0 = sigma_complex(sys_, "0", collared=True)
    counts = corona_counts(b0.split, b0.collared.coronas, G)
    print("coronas: %(up_to_rotation)d up to rotation, %(up_to_rotation_and_reflection)d also up to "
          "reflection, %(per_orientation)d counting orientations" % counts)
    inv = ordered_invariant(b0.complex, "chair")
    print("Perron eigenvalue", inv.lam, "| image of mu:", mu_image(inv)["ring"])
    print("mu of a single collared tile at level 2:", mu(inv, ([1] + [0] * (inv.n - 1), 2)))
    return inv


def pinwheels():
    invs = {}
    for name in ("pinwheel", "pinwheel_2_3"):
        t0 = time.perf_counter()
        sys_ = fixture(name)
        G = orientation_group(split_edges(sys_))
        irr = [g for g, o in zip(G.generators, G.generator_orders) if o is None]
        b = sigma_complex(sys_, "0", collared=True)
        inv = ordered_invariant(b.complex, name)
        print(f"\n== {name} == orientation group {G.kind}; "
              f"e.g. rotation by {irr[0].approx()} is not a root of unity")
        print(f"{len(b.complex.faces)} collared face cells, lambda = {inv.lam}, "
              f"primes {mu_image(inv)['primes']}  ({time.perf_counter() - t0:.1f} s)")
        invs[name] = inv
    v = compare_invariants(invs["pinwheel"], invs["pinwheel_2_3"])
    print(f"\ncompare: {v.outcome} because {v.reason}")


if __name__ == "__main__":
    chair()
    pinwheels()
