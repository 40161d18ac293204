"""Walking between anagrams with two moves: rotate, and transform.

Rotation and the bijective transform both preserve symbol counts, so they
act on each anagram class.  A single descent step (rotate once, invert
the transform, take the least rotation) strictly decreases qualifying
necklaces, which drives every tested class into one connected orbit.
"""

from bbwt import (
    canonical_smallest,
    descent_step,
    find_path,
    orbit_connected,
    parikh,
    transform_to_smallest,
)


def main():
    x = b"aacb"
    print(f"descent from {x.decode()}: {descent_step(x).decode()}")
    print()

    x, y = b"cab", b"abc"
    path = find_path(x, y)
    print(f"path {x.decode()} -> {y.decode()}: {path.format() or '(empty)'}")
    print(f"replayed: {path.apply(x).decode()}")
    print()

    x = b"bab"
    target = canonical_smallest(parikh(x))
    plan = transform_to_smallest(x)
    print(f"plan from {x.decode()} to {target.decode()}: {plan.format() or '(empty)'}")
    print()

    for spec in (b"aabb", b"aabbcc", b"abcde"):
        rep = orbit_connected(parikh(spec))
        print(
            f"class of {spec.decode()}: {rep.class_size} strings, "
            f"{rep.orbit_count} orbit(s), connected={rep.connected}"
        )
    print()
    print("no disconnected class has ever turned up; the search is ready")
    print("to print a witness pair the day one does.")


if __name__ == "__main__":
    main()
