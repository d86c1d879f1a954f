"""
Rhombus tilings from the rank-2 alternating matroid
===================================================

Maximal separated collections of C^{n,2} are the vertex sets of rhombus
tilings of a 2n-gon. We count them, check the tile properties on each and
draw a few.
"""
from pathlib import Path

from omsep import alternating
from omsep.cli import tiling_svg
from omsep.separation import collection_of
from omsep.tilings import enumerate_colocalizations, tiling_of, verify_tiling

# %% counts match the rhombus tiling numbers 2, 8, 62, 908
for n in range(3, 7):
    m = alternating(n, 2)
    sigmas = list(enumerate_colocalizations(m))
    print(f"C^{{{n},2}}: {len(sigmas)} colocalizations, |Ind| = {m.tutte_eval(2, 1)}")

# %% every collection carries a proper tiling
m = alternating(5, 2)
first = None
for sigma in enumerate_colocalizations(m):
    sets = collection_of(m, sigma)
    rep = verify_tiling(m, sets)
    assert rep.ok
    first = first or sets
print("all 62 tilings of the decagon pass the tile checks")

# %% the first few as pictures
out = Path("tilings_svg")
out.mkdir(exist_ok=True)
for k, sigma in zip(range(4), enumerate_colocalizations(m)):
    sets = collection_of(m, sigma)
    (out / f"decagon_{k}.svg").write_text(tiling_svg(m.n, sets, tiling_of(m.n, sets)))
print("wrote", sorted(p.name for p in out.iterdir()))
