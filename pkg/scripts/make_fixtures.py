"""Regenerate the golden JSON fixtures from hand transcriptions of the
published 12x12 and 9x9 matrices (n = 3 iteration of the Long-Moody
construction on q·Bur*_{{4,t}}).

Run from the repository root:  python scripts/make_fixtures.py
"""

from pathlib import Path

from wrep.io import dump_fixture
from wrep.ring import MatrixLP

VARS = ("t", "q")
OUT = Path(__file__).resolve().parents[1] / "src" / "wrep" / "fixtures"

LM12_SIGMA1 = """
0 0 0 0 q*t q*(1-t) 0 0 0 0 0 0
0 0 0 0 0 q*(1-t) q*t 0 0 0 0 0
0 0 0 0 0 q 0 0 0 0 0 0
0 0 0 0 0 0 0 q 0 0 0 0
1 0 0 0 1-q*t q*t^-1*(1-t-t^2+t^3) q*t*(1-t) 0 0 0 0 0
0 1-t t 0 0 (1-q)*(1-t) t*(1-q) 0 0 0 0 0
0 1 0 0 0 1-q 0 0 0 0 0 0
0 0 0 1 0 0 0 1-q 0 0 0 0
0 0 0 0 0 0 0 0 1 0 0 0
0 0 0 0 0 0 0 0 0 1-t t 0
0 0 0 0 0 0 0 0 0 1 0 0
0 0 0 0 0 0 0 0 0 0 0 1
"""

LM12_SIGMA2 = """
1 0 0 0 0 0 0 0 0 0 0 0
0 1 0 0 0 0 0 0 0 0 0 0
0 0 1-t t 0 0 0 0 0 0 0 0
0 0 1 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 q*t 0 q*(1-t) 0
0 0 0 0 0 0 0 0 0 q 0 0
0 0 0 0 0 0 0 0 0 0 q*(1-t) q*t
0 0 0 0 0 0 0 0 0 0 q 0
0 0 0 0 1 0 0 0 1-q*t 0 q*t^-1*(1-t-t^2+t^3) q*t*(1-t)
0 0 0 0 0 1 0 0 0 1-q 0 0
0 0 0 0 0 0 1-t t 0 0 (1-q)*(1-t) t*(1-q)
0 0 0 0 0 0 1 0 0 0 1-q 0
"""

LM9_SIGMA1 = """
0 0 0 q*(1-t) q*t 0 0 0 0
0 0 0 q 0 0 0 0 0
0 0 0 0 0 q 0 0 0
1-t t 0 (1-q)*(1-t) t*(1-q) 0 0 0 0
1 0 0 1-q 0 0 0 0 0
0 0 1 0 0 1-q 0 0 0
0 0 0 0 0 0 1-t t 0
0 0 0 0 0 0 1 0 0
0 0 0 0 0 0 0 0 1
"""

LM9_SIGMA2 = """
1 0 0 0 0 0 0 0 0
0 1-t t 0 0 0 0 0 0
0 1 0 0 0 0 0 0 0
0 0 0 0 0 0 q 0 0
0 0 0 0 0 0 0 q*(1-t) q*t
0 0 0 0 0 0 0 q 0
0 0 0 1 0 0 1-q 0 0
0 0 0 0 1-t t 0 (1-q)*(1-t) t*(1-q)
0 0 0 0 1 0 0 1-q 0
"""

PROVENANCE = ("Transcribed from the published matrix of q^-1 LM_1(q Bur*_{{4,t}})({gen}), "
              "welded braid group wB_3, {what}; basis (x_k - 1) ⊗ e_m at index (k-1)*4+m.")


def parse(block: str) -> MatrixLP:
    return MatrixLP.parse([line.split() for line in block.strip().splitlines()], VARS)


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    items = [
        ("lm12_sigma1", LM12_SIGMA1, "sigma_1", "12x12 iterate"),
        ("lm12_sigma2", LM12_SIGMA2, "sigma_2", "12x12 iterate"),
        ("lm9_sigma1", LM9_SIGMA1, "sigma_1", "9x9 quotient by the span of e_1, e_5, e_9"),
        ("lm9_sigma2", LM9_SIGMA2, "sigma_2", "9x9 quotient by the span of e_1, e_5, e_9"),
    ]
    for stem, text, gen, what in items:
        path = OUT / f"{stem}.json"
        path.write_text(dump_fixture([parse(text)], PROVENANCE.format(gen=gen, what=what)), encoding="utf-8")
        print("wrote", path)


if __name__ == "__main__":
    main()
