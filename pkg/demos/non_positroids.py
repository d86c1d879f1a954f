"""
Rank-3 matroids on six points
=============================

There are 17 simple rank-3 oriented matroids on six elements up to
isomorphism. The positively orientable ones are pure; the others have a
small certificate: a separated collection that blocks every set orienting
one chosen circuit.
"""
from omsep import construct
from omsep.core import SignedSet, is_isomorphic
from omsep.tilings import bad_collection_certificate, purity_check

classes = construct.census_rank3_simple(6)
print(len(classes), "classes")
for k, m in enumerate(classes):
    pos = bool(construct.is_positively_orientable(m))
    res = purity_check(m)
    print(f"{k:2d}: positroid={pos!s:5s} pure={res.pure!s:5s} min clique {res.min_size} of {res.ind}")

# %% the certificates
for name, fig in construct.NON_POSITROID_FIGURES.items():
    m = construct.figure_matroid(name)
    c = SignedSet(m.mask(fig["circuit"][0]), m.mask(fig["circuit"][1]))
    cert = bad_collection_certificate(m, c, [m.mask(s) for s in fig["collection"]])
    match = next(i for i, other in enumerate(classes) if is_isomorphic(m, other))
    print(f"{name:11s} class {match:2d} certificate valid: {cert.valid}")
