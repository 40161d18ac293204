"""A macro scheme built from the bijective transform's run structure.

Each run boundary in the transform output contributes a literal; every
other position copies from the position its transform neighbour points
at.  Grouping equal-offset copies gives few, long references, and the
phrase count is bounded by three times the run count plus the necklace
count of the factorization.
"""

from bbwt import (
    Literal,
    bbwt,
    decode_bms,
    induce_bms,
    lyndon_factorize,
    scheme_from_text,
    scheme_to_text,
    validate_bms,
)


def main():
    w = b"abbbabbababab"
    scheme = induce_bms(w)
    print(f"text: {w.decode()} (n = {scheme.n})")
    print(f"{scheme.phrase_count} phrases:")
    for p in scheme.phrases:
        if isinstance(p, Literal):
            print(f"  position {p.position}: literal {chr(p.symbol)!r}")
        else:
            src = f"{p.source_start}..{p.source_start + p.length - 1}"
            print(f"  positions {p.start}..{p.start + p.length - 1}: copy of {src}")

    r_b = bbwt(w).runs
    ell = lyndon_factorize(w).necklace_count
    print(f"bound: {scheme.phrase_count} <= 3*{r_b} + {ell}")
    print()

    print("decoded back:", decode_bms(scheme).decode())
    print()

    text = scheme_to_text(scheme)
    print("serialized:")
    print(text)

    tampered = text.replace("R 10 4 8", "R 10 4 2")
    report = validate_bms(scheme_from_text(tampered), w)
    print("after tampering with a copy source:")
    print(f"  acyclic={report.acyclic} decodes={report.decodes} ok={report.ok}")


if __name__ == "__main__":
    main()
