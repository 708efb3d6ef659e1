"""
Central series and the p-dimension filtration
=============================================

Three descending chains: the lower central series, the derived series,
and (for p-groups) the dimension series whose layers feed the graded
Lie algebra.
"""

from grouplab import (
    PcPresentation,
    build_group,
    derived_series,
    dimension_series,
    fitting_height,
    lower_central_series,
    structure_predicates,
    verify_np_series,
)
from grouplab.corpus import load_corpus

# The Heisenberg group of order 27: two generators, center of order 3.
heis = build_group(PcPresentation(3, 3, commutators={(2, 1): ((3, 1),)}))

gamma = lower_central_series(heis)
print("lower central series orders:", gamma.orders())
print("derived series orders:     ", derived_series(heis).orders())

dims = dimension_series(heis)
print("dimension series orders:   ", dims.orders())

# The dimension series respects both defining containment families:
# brackets land deep enough, and p-th powers land p times deeper.
verdict = verify_np_series(heis, dims, 3)
print("bracket and power containments hold:", verdict.ok)

# For groups of mixed order the nilpotency ladder is measured instead by
# iterated maximal normal nilpotent subgroups.
corpus = load_corpus()
for name in ("D8pc", "S3", "A4", "S4"):
    G = corpus.groups[name]
    profile = structure_predicates(G)
    print(
        f"{name}: exponent {profile.exponent}, "
        f"nilpotent={profile.is_nilpotent}, "
        f"tower height {fitting_height(G)}"
    )
