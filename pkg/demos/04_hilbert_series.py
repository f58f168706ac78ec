"""Dimension and degree of a monomial quotient, two ways.

The library reads them off the Hilbert series numerator. The oracle counts
standard monomials directly and takes finite differences. Both should agree
on any monomial ideal; here we try a handful by hand.
"""

from schubertmult import MonomialIdeal, PolyRing, dim_degree, numerator, standard_monomial_count
from schubertmult.hilbert import hilbert_function_oracle

R = PolyRing(3, with_t=False)   # variables z11, z12, z21
print("variables:", [v.name for v in R.variables])

examples = {
    "<z11>": [(1, 0, 0)],
    "<z11*z12>": [(1, 1, 0)],
    "<z11^2, z12^2, z21^2>": [(2, 0, 0), (0, 2, 0), (0, 0, 2)],
    "<z11*z12, z11*z21, z12*z21>": [(1, 1, 0), (1, 0, 1), (0, 1, 1)],
}
for label, gens in examples.items():
    I = MonomialIdeal(R, tuple(gens))
    dd = dim_degree(I)
    counts = [standard_monomial_count(I, d) for d in range(6)]
    print(f"{label:32} numerator {str(numerator(I)):26} dim {dd.dimension} deg {dd.degree}"
          f"   H(0..5) = {counts}")
    assert dd == hilbert_function_oracle(I)
