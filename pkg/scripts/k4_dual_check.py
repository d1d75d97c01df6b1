"""K4 as pseudohalfplane pairs, and the exhaustive dual-realizability search.

Given a vertex order and X, the ABA-free family is forced to {e xor X}, so the
search over 24 orders and 16 choices of X is complete.
"""
from itertools import permutations

from pshelly import coloring, oracle
from pshelly.core import canonicalize, is_aba_free
from pshelly.generators import gen_k4


def main() -> None:
    k4 = gen_k4()
    print("K4 pairs:", k4.base.as_lists())
    print("pshp witness tops:", k4.tops, "bottoms:", k4.bottoms)
    print("color_pshp_4:", coloring.color_pshp_4(k4).color, "chromatic number:", oracle.chromatic_number(k4.base))

    tried = 0
    for order in permutations(range(4)):
        h = oracle.relabel(k4.base, order)
        for xm in range(16):
            tried += 1
            f = [tuple(v for v in range(4) if ((v in e) != bool(xm >> v & 1))) for e in h.edges]
            fam = canonicalize(f, 4)
            if is_aba_free(fam):
                print("realization found:", order, xm, fam.as_lists())
                return
    print(f"dual search: {tried} (order, X) pairs, no ABA-free F")
    print("oracle recognizer agrees:", oracle.find_dual_pshp_witness(k4.base, search_orders=True) is None)


if __name__ == "__main__":
    main()
