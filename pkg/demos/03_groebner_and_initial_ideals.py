"""The term order matters for the basis but not for the answer.

We compute the Groebner basis of the ideal for w = 14325 (n = 5) under the
two supported tie-breaks and compare sizes, lead-term ideals and the final
multiplicity. A Buchberger-criterion certificate is checked for both.
"""

from schubertmult import GREVLEX, LEX, Permutation, certify, multiplicity_with_trace

w = Permutation.from_word("14325")
for name, order in (("grevlex", GREVLEX), ("lex", LEX)):
    rec, tr = multiplicity_with_trace(w, order)
    G = tr.groebner_basis
    print(f"[{name}] {len(tr.generators)} generators -> {len(G)} basis elements "
          f"({G.stats.pairs} pairs, {G.stats.zero_reductions} zero reductions)")
    print(f"[{name}] initial ideal at t = 1: {tr.eliminated_ideal}")
    print(f"[{name}] certified: {certify(G, tr.generators)}")
    print(f"[{name}] multiplicity {rec.multiplicity}\n")
