"""Orbit partitions on Niemeier roots, the glued invariant lattices, and the
Hesse pencil fibre table.

    python3 demos/invariant_lattices.py
"""

from leechlab import hesse, niemeier, quadform

rep = niemeier.a1_24_report()
for ex in rep.excluded:
    print(f"drop {ex.partition.parts}: {ex.reason}")
print("A1^24 survivors:", [p.parts for p in rep.survivors])
print("A2^12:", [p.parts for p in niemeier.partitions_a2_12()])
print()
for row in niemeier.verify_invariant_grams().rows:
    print(f"{row.case}: factors {row.factors}, det {row.det}")
    print(quadform.format_gram(row.gram), end="")
print()
end = quadform.endgame_solver()
print("nm^2 = 90:", end.solutions, "->", end.factors)
print()
print(hesse.base_change_fibers().to_csv(), end="")
print("Shioda-Tate bound:", hesse.shioda_tate_bound(hesse.base_change_fibers()))
