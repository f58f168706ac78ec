"""Follow w = 2143 through every stage of the computation.

Together with 1324, the word 2143 gives one of the two smallest Schubert
varieties that are singular at X_{w0}, which keeps every stage printable.
Run with ``python demos/01_worked_example_2143.py``.
"""

from schubertmult import Permutation, generic_matrix, multiplicity_with_trace

w = Permutation.from_word("2143")
record, trace = multiplicity_with_trace(w)

print("The chart matrix for n = 4:")
M = generic_matrix(4)
for row in M.entries:
    print("   ", "  ".join(f"{str(e):>4}" for e in row))

print("\nRank conditions r_ij(w):")
for row in trace.rank_matrix.r:
    print("   ", " ".join(map(str, row)))

# Each cell asks for the vanishing of the (r_ij + 1)-minors of a corner block.
print(f"\n{len(trace.generators)} distinct nonzero minors:")
for g in trace.generators:
    print("   ", g)

print(f"\nReduced Groebner basis ({len(trace.groebner_basis)} elements):")
for g in trace.groebner_basis:
    print("   ", g)

print("\nLead terms:", trace.initial_ideal)
print("After t = 1:", trace.eliminated_ideal)
print("Hilbert numerator:", trace.numerator)
print(f"\nlength {record.length}, dimension {record.dimension}, "
      f"multiplicity {record.multiplicity}")
