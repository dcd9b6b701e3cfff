"""Apply the construction to a twisted dual Burau representation and read
off its invariant subspace and quotient.

    python3 demos/02_iterating_once_more.py
"""

from wrep import emit, lm_iterate_dual_burau, lm_iteration_report

lm = lm_iterate_dual_burau(3)
print(f"q^-1 LM(q Bur*) on wB_3: {lm.dim} x {lm.dim}, variables {lm.vars}")

report = lm_iteration_report(3)
print(emit(report, "text"))

# the stored 12x12 matrices disagree in four places; the report says where,
# and that the stored pair fails the braid relation
for label, entries in report.details.get("fixture_mismatches", {}).items():
    for e in entries:
        print(f"{label}: {e}")
print("stored 12x12 pair violates:", report.details.get("printed_lm12_violates"))

# the same orientation of the tensor quotient shows up one size larger
print(lm_iteration_report(4).matched_candidate)
