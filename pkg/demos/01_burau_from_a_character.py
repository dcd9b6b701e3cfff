"""Feed a one-dimensional representation of wB_4 through the Long-Moody
construction and watch the Burau representation of wB_3 come out.

    python3 demos/01_burau_from_a_character.py
"""

from wrep import LMConfig, LaurentPoly, emit, lm_apply, make_catalog_rep, rep_diff, twist

t = LaurentPoly.var("t", ("t",))

# sigma_i -> t, tau_i -> 1 on wB_4
character = make_catalog_rep("onedim", 4, r=t)
print("input:", character.name, "dimension", character.dim)

# the standard action with the compatible morphism xi1
cfg = LMConfig.standard(3)
out = lm_apply(cfg, character)
print("LM output has dimension", out.dim)
print(emit(out.sigma[0], "text"))

# rescaling by t^-1 lands exactly on Burau
normalised = twist(t.inverse(), out)
print("differences from burau(3):", rep_diff(normalised, make_catalog_rep("burau", 3)))
print(emit(normalised, "latex"))
