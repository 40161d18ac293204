"""Repetitiveness measures side by side, and where they pull apart.

r and r_B count runs in the two transforms, ell counts necklaces in the
factorization, z counts greedy LZ factors.  On most strings they move
together; the odd-index fibonacci words split them: r stays at 2 forever
while ell (and with it r_B) grows without bound.
"""

from bbwt import fibonacci_separation_table, fibonacci_word, measure_report


def main():
    for text in (b"abbbabbababab", b"banana", b"mississippi", b"aaaaaaaa"):
        rep = measure_report(text)
        print(
            f"{text.decode():>14}: n={rep.n:>2} r={rep.r} rB={rep.r_B} "
            f"ell={rep.ell} z={rep.z} phrases={rep.bms_phrases}"
        )
    print()

    w = fibonacci_word(10)
    print(f"fibonacci word 10 = {w.decode()}")
    print()

    print("odd-index fibonacci words:")
    print(f"{'i':>2} {'n':>5} {'ell':>4} {'rB':>4} {'r':>3}")
    for row in fibonacci_separation_table(8):
        print(f"{row.i:>2} {row.n:>5} {row.ell:>4} {row.r_B:>4} {row.r:>3}")
    print()
    print("r is blind to this family; ell and rB see the growth.")


if __name__ == "__main__":
    main()
