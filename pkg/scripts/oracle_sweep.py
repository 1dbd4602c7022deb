"""Compare the quotient-method local v-number with brute-force enumeration on random ideals.

    python scripts/oracle_sweep.py --count 500 --dim 4 --max-exp 3 --seed 1
"""

import argparse
import random
import sys
import time

from vfilt.decomp import associated_primes
from vfilt.monomial import RingContext, minimalize
from vfilt.vnumber import is_witness, local_v, local_v_oracle


def random_ideal(rng: random.Random, dim: int, max_exp: int, max_gens: int):
    ctx = RingContext(tuple(f"x{i}" for i in range(1, dim + 1)))
    while True:
        gens = [tuple(rng.randint(0, max_exp) for _ in range(dim)) for _ in range(rng.randint(1, max_gens))]
        gens = [g for g in gens if any(g)]
        if gens:
            return minimalize(gens, ctx)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--dim", type=int, default=4)
    ap.add_argument("--max-exp", type=int, default=3)
    ap.add_argument("--max-gens", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    t0 = time.perf_counter()
    pairs = mismatches = 0
    for _ in range(args.count):
        I = random_ideal(rng, rng.randint(1, args.dim), args.max_exp, args.max_gens)
        ass = associated_primes(I)
        for p in ass:
            fast, slow = local_v(I, p, ass), local_v_oracle(I, p)
            pairs += 1
            if fast.value != slow.value or not is_witness(I, fast.witness, p):
                mismatches += 1
                print(f"MISMATCH {I} at {p}: quotient {fast.value}, oracle {slow.value}")
    dt = time.perf_counter() - t0
    print(f"{args.count} ideals, {pairs} (ideal, prime) pairs, {mismatches} mismatches, {dt:.2f}s")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
