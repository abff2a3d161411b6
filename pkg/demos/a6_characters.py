"""A6: subgroups, the character table and the decomposition of the
invariant lattice, with the effect of dropping trace equations.

    python3 demos/a6_characters.py
"""

from leechlab import permchar

G = permchar.build_a6()
print(f"A6 has {len(G.subgroups)} subgroups; orders {sorted(G.subgroup_orders())}")
print("transitive set sizes up to 24:", sorted(i for i in permchar.subgroup_indices() if i <= 24))
print()
print(permchar.format_character_table(), end="")
print("orthogonality:", permchar.verify_character_table())
print("with the 5A/5B sign flipped:", permchar.verify_character_table(permchar.PRINTED_CHARACTER_TABLE))
print()
print("Lefschetz rank:", permchar.lefschetz_rank())
print("all classes:        ", permchar.solve_decomposition())
print("without 5A, 5B:     ", permchar.solve_decomposition(("1A", "2A", "3A", "3B", "4A")))
print("without 3A, 3B:     ", permchar.solve_decomposition(("1A", "2A", "4A", "5A", "5B")))
print("mu3 candidates:", permchar.mu3_candidates())
print("twisted trace:", permchar.twisted_trace((1, 2, 0), "3A").value)
