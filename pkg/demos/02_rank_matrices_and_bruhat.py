"""Rank matrices encode Bruhat order; two patterns encode smoothness.

Here we list S_4 by length, check that Bruhat comparison via rank matrices
behaves as expected, and pick out the words containing 1324 or 2143.
"""

from collections import defaultdict

from schubertmult import (
    Permutation, bruhat_geq, contains_pattern, enumerate_perms, identity, is_pattern_smooth, length,
    longest, rank_matrix,
)

n = 4
by_length = defaultdict(list)
for w in enumerate_perms(n):
    by_length[length(w)].append(w.word)
for ell in sorted(by_length):
    print(f"length {ell}: {' '.join(by_length[ell])}")

e, w0 = identity(n), longest(n)
print("\nrank matrix of w0:")
for row in rank_matrix(w0).r:
    print("   ", " ".join(map(str, row)))

# Everything sits between the identity and w0.
assert all(bruhat_geq(w0, w) and bruhat_geq(w, e) for w in enumerate_perms(n))

# In S_4 the patterns only occur as themselves, so look one size up.
patterns = [Permutation.from_word(p) for p in ("1324", "2143")]
singular = [w for w in enumerate_perms(5) if not is_pattern_smooth(w)]
print(f"\n{len(singular)} of 120 words in S_5 contain 1324 or 2143, e.g.")
for w in singular[:8]:
    hits = [p.word for p in patterns if contains_pattern(w, p)]
    print(f"   {w.word}: {', '.join(hits)}")
