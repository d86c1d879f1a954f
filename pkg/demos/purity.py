"""
Purity of alternating matroids
==============================

A matroid is pure when every maximal separated collection has |Ind(M)|
members. Ranks 1, 2, 3 (and their duals) behave; C^{6,4} does not.
"""
from omsep import alternating
from omsep.separation import classify_type, is_collection_separated, sigma_of
from omsep.tilings import purity_check

for d in (2, 3):
    for n in range(d + 1, 7):
        res = purity_check(alternating(n, d))
        print(f"C^{{{n},{d}}}: pure={res.pure} |Ind|={res.ind} cliques seen={res.cliques}")

# %% the smallest impure alternating matroid
c64 = alternating(6, 4)
res = purity_check(c64)
print("C^{6,4} pure?", res.pure, "smallest maximal collection:", res.min_size, "of", res.ind)
print("the witness misses", res.ind - len(res.witness), "sets; first five:", ["".join(c64.names(s)) or "{}" for s in res.witness[:5]])

# %% a complete collection of three sets whose sign map is not Type III
model = alternating(6, 2).dual()  # this is C^{6,4} reoriented at 1, 3, 5
w = [model.mask(s) for s in ("", "1234", "3456")]
sigma = sigma_of(model, w)
print("separated:", is_collection_separated(model, w), " complete:", all(sigma),
      " type on the whole ground set:", classify_type(model, model.ground, sigma))
