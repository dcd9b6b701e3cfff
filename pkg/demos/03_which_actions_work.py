"""Survey the free-group actions: which extend to the welded braid group,
which are compatible with xi1 or the trivial morphism, and what the
one-dimensional input turns into.

    python3 demos/03_which_actions_work.py
"""

from wrep import ActionSpec, XiSpec, check_cond1, lm_one_dim_survey, wada_extends

for k in range(1, 8):
    ok, bad = wada_extends(k, 1, 3)
    why = "" if ok else f"  (fails {bad[0].lhs} = {bad[0].rhs})"
    print(f"Wada type {k}: extends to wB_3: {ok}{why}")

report = check_cond1(ActionSpec("wada2"), XiSpec("xi1", 3), 3)
print("\ntype 2 with xi1:", report.status, report.counterexample)

survey = lm_one_dim_survey(3)
print()
for key, entry in survey.details.items():
    if "matches" in entry:
        print(f"{key:22} -> {entry['matches'] or 'none of the catalog'}")
print("\nTYM produced anywhere:", survey.verdicts["tym_produced"])
