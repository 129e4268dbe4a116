#!/usr/bin/env python3
"""Why a two-BFS heuristic nails the diameter on typical networks.

tau_s(k) is the first BFS level from s holding k vertices. When levels
behave like growing random sets, distances decompose into per-endpoint
terms, eccentricity tracks tau, and the farthest vertex from anywhere
is nearly an eccentricity maximizer. TwoSweep exploits exactly that.
"""

import math

from netclass import (bct_properties_report,
                      eccentricity_decomposition_report, eccentricities, tau,
                      two_sweep)
from netclass.generators import random_graph, random_tree
from netclass.graph import largest_component

print("=" * 64)
print("TwoSweep on trees: always exact")
print("=" * 64)
for seed in range(4):
    g = random_tree(150, seed=seed)
    exact = eccentricities(g).diameter
    estimate = two_sweep(g, seed=seed % g.n)
    print(f"tree #{seed}: two_sweep {estimate.lower_bound:3d} "
          f"vs exact {exact:3d} (endpoints {estimate.turn}, {estimate.far})")

print()
print("=" * 64)
print("TwoSweep on a sparse random graph: a tight lower bound")
print("=" * 64)
g = largest_component(random_graph(3000, 4 / 3000, seed=1))
estimate = two_sweep(g)
profile = eccentricities(g)
print(f"giant component n={g.n}: two_sweep {estimate.lower_bound} "
      f"vs exact {profile.diameter}")

print()
print("=" * 64)
print("Level thresholds and the three metric properties")
print("=" * 64)
k_star = max(1, math.ceil(math.sqrt(g.n)))
print(f"k* = ceil(sqrt(n)) = {k_star}; tau of three sample vertices:",
      [tau(g, s, k_star) for s in (0, 1, 2)])
report = bct_properties_report(g, sample_pairs=20_000, rng_seed=0)
print(f"T(k*) = {report.level_average:.3f} over {g.n} sources "
      f"({report.infinite_tau_sources} with no level that large)")
print(f"Property 1 (dist <= tau_s + tau_t):     {report.property1_fraction:.1%}")
print(f"Property 2 (dist >= tau_s + tau_t):     {report.property2_fraction:.1%}")
print("Property 3 tail (fraction of sources with tau >= T + offset):")
for gamma, frac in report.tail:
    bar = "#" * int(50 * frac)
    print(f"  +{gamma}: {frac:6.1%} {bar}")
print(f"geometric fit: base c = {report.fit.c:.2f} "
      f"(R^2 = {report.fit.r_squared:.3f})")

print()
print("=" * 64)
print("Eccentricity decomposition")
print("=" * 64)
dec = eccentricity_decomposition_report(g, report=report)
print(f"residuals of ecc - tau - T - log_c n: "
      f"mean {dec.residual_mean:+.2f}, spread "
      f"[{dec.residual_min:+.2f}, {dec.residual_max:+.2f}]")
print(f"rank correlation between tau and eccentricity: "
      f"{dec.rank_correlation:.3f}")
print("that correlation is the mechanism: maximizing distance from any")
print("seed nearly maximizes tau, hence nearly maximizes eccentricity.")
