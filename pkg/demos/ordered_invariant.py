"""The order on top cohomology, seen through mu.

Run with ``python demos/ordered_invariant.py``.

An element of the direct limit is a cochain ``v`` at a level ``k``.  It is
positive when some power of the substitution makes ``v`` entrywise positive,
and mu turns that into a sign test in Q(lambda).
"""
from tilecoh.complex_builder import sigma_complex
from tilecoh.order_invariant import (is_positive, mu, ordered_axioms_check, ordered_invariant, positivity_oracle,
                                     ratio_invariance_check)
from tilecoh.rule_format import fixture


def main():
    inv = ordered_invariant(sigma_complex(fixture("penrose_combinatorial"), "0").complex, "penrose")
    print("lambda =", inv.lam, "~", float(inv.lam))
    print("Perron vector r =", [str(x) for x in inv.perron.r])

    for v in ([1, 0, 0, 0], [1, -1, 0, 0], [2, -3, 1, 0]):
        m = mu(inv, (v, 0))
        pos = is_positive(inv, (v, 0))
        wit = positivity_oracle(inv, v if pos else [-a for a in v])
        print(f"v = {v}: mu = {m} ~ {float(m):+.4f}, positive: {pos}, definite after {wit} substitutions")

    # [1, -1, 0, 0] is the coboundary of an edge, so its cohomology class is zero, but as a
    # cochain it never dies under substitution: one of the logged mu = 0 classes
    print("logged mu-kernel classes:", inv.kernel_log)

    # a x - b y is positive exactly when b/a is at most mu(x)/mu(y)
    x, y = ([1, 1, 1, 1], 0), ([1, 1, 1, 1], 1)
    res = ratio_invariance_check(inv, x, y)
    print(f"\nmu(x)/mu(y) = {res['ratio_approx']:.6f} (lambda itself); grid agrees: {res['ok']}")

    samples = [([a, b, 0, 1], k) for a in (-2, 1) for b in (-1, 3) for k in (0, 1)]
    print("ordered-group axioms on a small sample:", ordered_axioms_check(inv, samples))


if __name__ == "__main__":
    main()
