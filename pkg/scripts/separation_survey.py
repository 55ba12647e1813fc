#!/usr/bin/env python3
"""Survey the separation algorithm over all ordered pairs of short words.

For each pair (g, k) of distinct reduced words up to the given radius,
record whether a standard ordering suffices, a twisted ordering is needed,
or the pair shares a primitive root and cannot be separated at all.
"""

import argparse
import itertools
from collections import Counter

from grouporders.errors import CommonRoot, DepthCapExceeded
from grouporders.stdord import TwistedOrdering, separate
from grouporders.words import ball_words


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rank", type=int, default=2)
    parser.add_argument("--radius", type=int, default=3)
    parser.add_argument("--cap", type=int, default=5)
    args = parser.parse_args()
    words = list(ball_words(args.rank, args.radius))
    outcomes: Counter[str] = Counter()
    twisted_pairs = []
    for g, k in itertools.permutations(words, 2):
        try:
            ordering = separate(g, k, args.cap)
        except CommonRoot:
            outcomes["common root"] += 1
            continue
        except DepthCapExceeded:
            outcomes["cap exceeded"] += 1
            continue
        if isinstance(ordering, TwistedOrdering):
            outcomes["twisted"] += 1
            twisted_pairs.append((g, k))
        else:
            outcomes["standard"] += 1
    total = sum(outcomes.values())
    print(f"{total} ordered pairs of distinct words, radius {args.radius}, "
          f"rank {args.rank}:")
    for name, count in outcomes.most_common():
        print(f"  {name:13s} {count}")
    if twisted_pairs:
        print("\nfirst pairs needing a twist:")
        for g, k in twisted_pairs[:8]:
            print(f"  {g}  vs  {k}")


if __name__ == "__main__":
    main()
