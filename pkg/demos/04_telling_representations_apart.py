"""Conjugation invariants as certificates of non-equivalence, and the
non-split extension hiding inside the Burau representation.

    python3 demos/04_telling_representations_apart.py
"""

import json

from wrep import burau_extension_report, make_catalog_rep, rep_certificates

for a, b in (("burau", "tym"), ("tym", "dual_tym"), ("burau", "dual_burau")):
    cert = rep_certificates(make_catalog_rep(a, 4), make_catalog_rep(b, 4))
    print(f"{a} vs {b}: {cert.status}, separated by {cert.verdicts.get('separating_invariants')}")

ext = burau_extension_report(4)
print(json.dumps(ext.verdicts, indent=2))
print("obstruction:", ext.certificates)
