"""Tour of the two transforms: rotation sort vs factor-rotation sort.

The classic transform sorts all rotations of the text and keeps the last
column; it loses information about which rotation was the original, so it
is only invertible up to rotation.  The factor-sort variant instead
factorizes the text into Lyndon words, sorts all rotations of all factors
in omega-order, and is a true bijection on strings.
"""

from bbwt import bbwt, bbwt_inverse, bwt, bwt_inverse_multiset, lf_map, lyndon_factorize


def main():
    w = b"banana"
    print(f"text: {w.decode()}")
    print(f"classic transform: {bwt(w).output.decode()}")
    print(f"bijective transform: {bbwt(w).output.decode()}")
    print()

    out = bwt(w).output
    psi = lf_map(out)
    print(f"positional map of {out.decode()}: {psi}")
    print("walking its single cycle recovers the least rotation:")
    print(f"  {bwt_inverse_multiset(out)[0].decode()} (not {w.decode()}!)")
    print()

    w = b"abbbabbababab"
    f = lyndon_factorize(w)
    parts = " * ".join(
        f"{fac.decode()}^{cnt}" if cnt > 1 else fac.decode() for fac, cnt in f.necklaces
    )
    print(f"text: {w.decode()}")
    print(f"factorization: {parts}")
    r = bbwt(w)
    print(f"bijective transform: {r.output.decode()} ({r.runs} runs)")
    print(f"circular suffix array: {list(r.csa)}")
    print(f"inverse recovers the text exactly: {bbwt_inverse(r.output).decode()}")
    print()

    x = b"baac"
    print(f"any string is some transform's image: inverse of {x.decode()} "
          f"is {bbwt_inverse(x).decode()}")
    words = " + ".join(u.decode() for u in bwt_inverse_multiset(x))
    print(f"the classic inverse of {x.decode()} is only a multiset: {{{words}}}")


if __name__ == "__main__":
    main()
