"""How multiplication by a field unit shuffles the spreads.

The map (x, x0) -> (beta*x, x0) is a collineation of PG(n,q) sending
B_alpha to B_{alpha * beta^(q+1)}.  Because gcd(q+1, q^n - 1) = 1 the
values beta^(q+1) sweep all units, so a single group orbit contains
every spread: the packing is transitive.  Shown here at q = 2, n = 3.
"""

from pgpack import apply_beta, build_packing, make_context, verify_transitivity

ctx = make_context(1, 3)
p = build_packing(ctx)

print("gamma = beta^(q+1) for each unit beta:")
for beta in range(1, ctx.size):
    gamma = ctx.mul(ctx.frobenius_q(beta), beta)
    print(f"  beta={beta}: every B_alpha -> B_(alpha*{gamma})")

beta = 2
gamma = ctx.mul(ctx.frobenius_q(beta), beta)
print(f"\nfollowing B_1 under repeated action of beta={beta}:")
current = 1
seen = [1]
for _ in range(ctx.size - 2):
    image = sorted(apply_beta(ctx, l, beta) for l in p.spreads[current].lines)
    current = ctx.mul(current, gamma)
    assert tuple(image) == p.spreads[current].lines
    seen.append(current)
print("  orbit:", " -> ".join(f"B_{a}" for a in seen))
assert sorted(seen) == list(range(1, ctx.size))
print("  the orbit visits all", len(seen), "spreads")

report = verify_transitivity(ctx, p)
print("\nfull transitivity recheck:", "passed" if report.passed else "FAILED")
